#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cumulants.hpp"

namespace definetti {

/// Row of the partition/distribution tables: FULL lattice, EVEN blocks,
/// blocks of size <= 2 (shifted central law), pair blocks (centered central law).
enum class DistributionClassTag { IidGeneral, Symmetric, ShiftedCentral, CenteredCentral };

struct DistributionClass {
  CumulantKind kind = CumulantKind::Classical;
  DistributionClassTag tag = DistributionClassTag::IidGeneral;

  /// Block constraint of the D-family this class corresponds to.
  BlockConstraint block_constraint() const;
  friend bool operator==(const DistributionClass&, const DistributionClass&) = default;
};

std::string class_name(DistributionClassTag tag);

struct IndependenceReport {
  CumulantKind kind = CumulantKind::Classical;
  int max_order = 0;
  std::vector<std::pair<IndexWord, Rational>> offenders;
  bool passed() const { return offenders.empty(); }
};

/// Joint moments of independent variables: the joint cumulant of a constant word
/// (l, ..., l) is marginal l's cumulant of that order, every mixed cumulant is zero.
/// All marginals must be single-variable tables of one kind and order.
MomentFunctional build_independent_moments(const std::vector<CumulantTable>& marginals);

/// Flags every word with at least two distinct letters whose cumulant exceeds tol in
/// absolute value. tol = 0 is the exact test.
IndependenceReport test_mixed_vanishing(const MomentFunctional& moments, CumulantKind kind, const Rational& tol);

/// Most specific class of a single-variable cumulant table: CENTERED if every order
/// other than 2 vanishes, SHIFTED if orders >= 3 vanish, SYMMETRIC if odd orders vanish.
DistributionClass classify_distribution(const CumulantTable& cumulants, const Rational& tol);

}  // namespace definetti
