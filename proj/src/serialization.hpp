#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "algebra/verify.hpp"
#include "independence.hpp"
#include "symmetry.hpp"

namespace definetti {

using Json = nlohmann::ordered_json;

/// A moment table (cumulant_kind empty) or a cumulant table of the given kind.
struct AnyTable {
  std::optional<CumulantKind> cumulant_kind;
  WordTable table;

  bool is_moment() const { return !cumulant_kind.has_value(); }
  MomentFunctional moments() const;
  CumulantTable cumulants() const;
  static AnyTable from(const MomentFunctional& m);
  static AnyTable from(const CumulantTable& c);
};

/// {"kind": "moment"|"classical"|"free"|"boolean", "n": int, "K": int,
///  "entries": [{"word": [1, 2], "num": "3", "den": "4"}, ...]}
/// Missing words are zero; the empty word is implicit (1 for moments). Throws InputError.
AnyTable table_from_json(const Json& j);
Json table_to_json(const AnyTable& t);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json partitions_json(int k, FamilyTag family, const std::vector<SetPartition>& parts);
Json independence_json(const IndependenceReport& r);
Json classification_json(const DistributionClass& c);
Json invariance_json(const InvarianceReport& r);
Json certificate_json(const algebra::Alphabet& a, const algebra::MembershipCertificate& c);
Json membership_json(const algebra::MembershipResult& m);
Json verification_json(const algebra::VerificationReport& r);
Json quantum_invariance_json(const QuantumInvarianceReport& r);

/// Symmetry job config: {"group", "n", "K", "samples", "seed", "tol": "p/q", "threads"}.
struct SymmetryConfig {
  GroupTag group;
  int K = 1;
  McConfig mc;
  bool seed_given = false;
};
SymmetryConfig symmetry_config_from_json(const Json& j);

}  // namespace definetti
