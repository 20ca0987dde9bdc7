#include "algebra/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "errors.hpp"
#include "word_table.hpp"

namespace definetti::algebra {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "certified";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

MembershipResult decide_membership(const FormalSum& target, const std::vector<FormalSum>& generators,
                                   int degree_bound) {
  MembershipResult out;
  out.target = target;
  out.certificate = ideal_membership(target, generators, degree_bound);
  if (out.certificate) {
    if (!certificate_reconstructs(*out.certificate, embedded_relations(generators, target.tensor_degree()))) {
      throw std::logic_error("membership certificate failed re-expansion for " + target.to_text());
    }
    out.verdict = Verdict::Certified;
    return out;
  }
  out.refutation = refute_membership(target, generators);
  out.verdict = out.refutation ? Verdict::Refuted : Verdict::Inconclusive;
  return out;
}

Verdict VerificationReport::overall() const {
  bool all = true;
  for (const auto& item : items) {
    if (item.result.verdict == Verdict::Refuted) return Verdict::Refuted;
    if (item.result.verdict != Verdict::Certified) all = false;
  }
  return all ? Verdict::Certified : Verdict::Inconclusive;
}

namespace {

VerificationReport start(std::string check, const RelationSchema& schema, int degree_bound) {
  VerificationReport r;
  r.check = std::move(check);
  r.schema = schema;
  r.degree_bound = degree_bound;
  r.generators = star_closure(instantiate_relations(schema));
  return r;
}

}  // namespace

VerificationReport verify_relations(const RelationSchema& schema) {
  VerificationReport r = start("relations", schema, 0);
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    const FormalSum& g = r.generators[i];
    MembershipResult m;
    m.target = g;
    m.verdict = Verdict::Certified;
    TensorWord empty{Word{}};
    m.certificate = MembershipCertificate{g, {{empty, i, empty, Rational(1)}}, g.degree()};
    r.degree_bound = std::max(r.degree_bound, g.degree());
    r.items.push_back({"relation " + std::to_string(i), std::move(m)});
  }
  return r;
}

VerificationReport verify_coproduct(const RelationSchema& schema, int degree_bound) {
  VerificationReport r = start("coproduct", schema, degree_bound);
  const auto defining = instantiate_relations(schema);
  for (std::size_t i = 0; i < defining.size(); ++i) {
    FormalSum target = delta_image(defining[i]);
    r.items.push_back({"delta(" + defining[i].to_text() + ")", decide_membership(target, r.generators, degree_bound)});
  }
  return r;
}

FamilyTag paired_family(SchemaName schema) {
  switch (schema) {
    case SchemaName::POrthogonal:
      return {Lattice::Interval, BlockConstraint::ExactlyTwo};
    case SchemaName::PMagic:
      return {Lattice::Interval, BlockConstraint::Any};
    case SchemaName::PCubic:
      return {Lattice::Interval, BlockConstraint::Even};
    case SchemaName::PBistochastic:
      return {Lattice::Interval, BlockConstraint::AtMostTwo};
    default:
      throw InputError("schema " + schema_name_text(schema) + " has no paired boolean partition family");
  }
}

FormalSum vanishing_target(const Alphabet& alphabet, const SetPartition& pi, const IndexWord& j) {
  const int k = static_cast<int>(j.size());
  if (pi.ground_size() != k) throw InputError("partition size differs from |j|");
  for (int letter : j)
    if (letter < 1 || letter > alphabet.n) throw InputError("letters of j must lie in 1..n");
  FormalSum target(alphabet, 1);
  for_each_word(alphabet.n, k, [&](const IndexWord& i) {
    if (!refines_kernel(pi, i)) return;
    Word w;
    for (int t = 0; t < k; ++t) w.push_back(alphabet.u(i[t], j[t]));
    w.push_back(alphabet.p());
    target.add_term({w}, 1);
  });
  if (refines_kernel(pi, j)) target.add_term({{alphabet.p()}}, -1);
  return target;
}

VerificationReport verify_vanishing(const RelationSchema& schema, FamilyTag family, const SetPartition& pi,
                                    const IndexWord& j, int degree_bound) {
  if (!schema.uses_p()) throw InputError("the vanishing lemma needs a P-schema");
  if (family.lattice != Lattice::Interval) throw InputError("the vanishing lemma uses the boolean (interval) families");
  if (!in_family(pi, family)) throw InputError("partition " + pi.to_text() + " is not in family " + family.name());
  VerificationReport r = start("vanishing", schema, degree_bound);
  FormalSum target = vanishing_target(schema.alphabet(), pi, j);
  r.items.push_back({"pi=" + pi.to_text() + " j=" + word_to_text(j), decide_membership(target, r.generators, degree_bound)});
  return r;
}

VerificationReport verify_vanishing_all(const RelationSchema& schema, int max_k, int degree_bound) {
  const FamilyTag family = paired_family(schema.name);
  VerificationReport r = start("vanishing", schema, degree_bound);
  for (int k = 1; k <= max_k; ++k) {
    for (const auto& pi : enumerate_partitions(k, family)) {
      for_each_word(schema.n, k, [&](const IndexWord& j) {
        FormalSum target = vanishing_target(schema.alphabet(), pi, j);
        r.items.push_back(
            {"pi=" + pi.to_text() + " j=" + word_to_text(j), decide_membership(target, r.generators, degree_bound)});
      });
    }
  }
  return r;
}

FormalSum substitute_p_by_one(const FormalSum& s) {
  FormalSum out(s.alphabet(), s.tensor_degree());
  const int p = s.alphabet().p();
  for (const auto& [w, c] : s.terms()) {
    TensorWord stripped = w;
    for (auto& f : stripped) f.erase(std::remove(f.begin(), f.end(), p), f.end());
    out.add_term(stripped, c);
  }
  return out;
}

VerificationReport verify_quotient(const RelationSchema& quotient, const RelationSchema& cover, int degree_bound) {
  if (quotient.n != cover.n) throw InputError("quotient check needs schemas of the same size n");
  VerificationReport r = start("quotient", quotient, degree_bound);
  r.check = "quotient " + quotient.name_text() + " of " + cover.name_text();
  const bool drop_p = cover.uses_p() && !quotient.uses_p();
  for (const auto& rel : instantiate_relations(cover)) {
    FormalSum target = drop_p ? substitute_p_by_one(rel) : rel;
    r.items.push_back({cover.name_text() + ": " + rel.to_text(), decide_membership(target, r.generators, degree_bound)});
  }
  return r;
}

VerificationReport verify_target(const RelationSchema& schema, const FormalSum& target, int degree_bound) {
  if (target.alphabet().n != schema.n) throw InputError("target and schema have different n");
  VerificationReport r = start("membership", schema, degree_bound);
  r.items.push_back({"target", decide_membership(target, r.generators, degree_bound)});
  return r;
}

}  // namespace definetti::algebra
