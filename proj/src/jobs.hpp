#pragma once

#include "serialization.hpp"

namespace definetti {

enum class Outcome { Pass = 0, Fail = 1, Inconclusive = 2 };

struct JobResult {
  Outcome outcome = Outcome::Pass;
  Json report;
};

Outcome outcome_of(algebra::Verdict v);

JobResult run_partitions(int k, FamilyTag family);
JobResult run_independence(const MomentFunctional& moments, CumulantKind kind, const Rational& tol);
JobResult run_classify(const CumulantTable& cumulants, const Rational& tol);
JobResult run_symmetry(const MomentFunctional& moments, const SymmetryConfig& config);
JobResult run_quantum_invariance(const MomentFunctional& moments, const algebra::RelationSchema& schema, int K,
                                 int degree_bound);

/// Dispatches a verification request (see dft_verify for the fields).
JobResult run_verify(const Json& request);

/// Largest k accepted by run_partitions for the full lattice.
constexpr int kMaxPartitionK = 14;

}  // namespace definetti
