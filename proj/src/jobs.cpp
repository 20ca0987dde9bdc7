#include "jobs.hpp"

#include <cctype>

#include "errors.hpp"

namespace definetti {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("verify request is missing '") + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw InputError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

IndexWord word_from_json(const Json& v) {
  IndexWord w;
  if (v.is_array()) {
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw InputError("'j' letters must be integers");
      w.push_back(x.get<int>());
    }
    return w;
  }
  if (!v.is_string()) throw InputError("'j' must be an array or a string of letters");
  std::string token;
  for (char c : v.get<std::string>() + " ") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (!token.empty()) {
      w.push_back(std::stoi(token));
      token.clear();
    } else if (c != ' ' && c != ',' && c != '(' && c != ')') {
      throw InputError("cannot parse word '" + v.get<std::string>() + "'");
    }
  }
  return w;
}

}  // namespace

Outcome outcome_of(algebra::Verdict v) {
  switch (v) {
    case algebra::Verdict::Certified:
      return Outcome::Pass;
    case algebra::Verdict::Refuted:
      return Outcome::Fail;
    case algebra::Verdict::Inconclusive:
      return Outcome::Inconclusive;
  }
  return Outcome::Inconclusive;
}

JobResult run_partitions(int k, FamilyTag family) {
  if (k < 0) throw InputError("k must be nonnegative");
  if (k > kMaxPartitionK) {
    throw CapacityError("partition enumeration is capped at k <= " + std::to_string(kMaxPartitionK));
  }
  return {Outcome::Pass, partitions_json(k, family, enumerate_partitions(k, family))};
}

JobResult run_independence(const MomentFunctional& moments, CumulantKind kind, const Rational& tol) {
  IndependenceReport r = test_mixed_vanishing(moments, kind, tol);
  return {r.passed() ? Outcome::Pass : Outcome::Fail, independence_json(r)};
}

JobResult run_classify(const CumulantTable& cumulants, const Rational& tol) {
  return {Outcome::Pass, classification_json(classify_distribution(cumulants, tol))};
}

JobResult run_symmetry(const MomentFunctional& moments, const SymmetryConfig& config) {
  InvarianceReport r = config.group.enumerable() ? check_invariance_exact(moments, config.group, config.K)
                                                 : check_invariance_mc(moments, config.group, config.K, config.mc);
  return {r.passed ? Outcome::Pass : Outcome::Fail, invariance_json(r)};
}

JobResult run_quantum_invariance(const MomentFunctional& moments, const algebra::RelationSchema& schema, int K,
                                 int degree_bound) {
  QuantumInvarianceReport r = quantum_invariance_certificate(moments, schema, K, degree_bound);
  return {outcome_of(r.overall()), quantum_invariance_json(r)};
}

JobResult run_verify(const Json& request) {
  if (!request.is_object()) throw InputError("verify request must be a JSON object");
  const std::string lemma = require_string(request, "lemma");
  algebra::RelationSchema schema{algebra::RelationSchema::parse_name(require_string(request, "schema")),
                                 require_int(request, "n")};
  if (schema.n < 1) throw InputError("n must be at least 1");
  auto degree = [&] {
    int d = require_int(request, "D");
    if (d < 0) throw InputError("D must be nonnegative");
    return d;
  };
  algebra::VerificationReport r;
  if (lemma == "relations") {
    r = algebra::verify_relations(schema);
  } else if (lemma == "coproduct") {
    r = algebra::verify_coproduct(schema, degree());
  } else if (lemma == "vanishing") {
    SetPartition pi = SetPartition::parse(require_string(request, "pi"));
    IndexWord j = word_from_json(require(request, "j"));
    FamilyTag family = request.contains("family") ? FamilyTag::parse(require_string(request, "family"))
                                                  : algebra::paired_family(schema.name);
    r = algebra::verify_vanishing(schema, family, pi, j, degree());
  } else if (lemma == "vanishing_all") {
    r = algebra::verify_vanishing_all(schema, require_int(request, "max_k"), degree());
  } else if (lemma == "membership") {
    algebra::FormalSum target = algebra::parse_formal_sum(schema.alphabet(), require_string(request, "target"));
    r = algebra::verify_target(schema, target, degree());
  } else if (lemma == "quotient") {
    algebra::RelationSchema cover{algebra::RelationSchema::parse_name(require_string(request, "cover")), schema.n};
    r = algebra::verify_quotient(schema, cover, degree());
  } else {
    throw InputError("unknown lemma '" + lemma +
                     "' (expected relations, coproduct, vanishing, vanishing_all, membership or quotient)");
  }
  return {outcome_of(r.overall()), verification_json(r)};
}

}  // namespace definetti
