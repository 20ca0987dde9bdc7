#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/membership.hpp"
#include "algebra/relations.hpp"
#include "algebra/representation.hpp"
#include "partitions.hpp"

namespace definetti::algebra {

enum class Verdict { Certified, Refuted, Inconclusive };

std::string verdict_name(Verdict v);

struct MembershipResult {
  FormalSum target;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<MembershipCertificate> certificate;
  std::optional<Refutation> refutation;
};

/// Bounded-degree membership of target in the ideal generated by `generators`
/// (tensor degree 1, assumed star-closed), followed by character refutation when no
/// certificate exists. Certificates are re-expanded before being reported; a
/// certificate that fails re-expansion raises std::logic_error.
MembershipResult decide_membership(const FormalSum& target, const std::vector<FormalSum>& generators,
                                   int degree_bound);

struct VerificationItem {
  std::string label;
  MembershipResult result;
};

struct VerificationReport {
  std::string check;
  RelationSchema schema;
  int degree_bound = 0;
  /// Ideal generators: the schema relations followed by missing stars.
  std::vector<FormalSum> generators;
  std::vector<VerificationItem> items;

  /// Refuted if any item is refuted, Certified if all are, Inconclusive otherwise.
  Verdict overall() const;
  /// Generators in the indexing used by certificates of tensor degree t.
  std::vector<FormalSum> embedded(int tensor_degree) const { return embedded_relations(generators, tensor_degree); }
};

/// The schema's generating set with every relation trivially certified by itself.
VerificationReport verify_relations(const RelationSchema& schema);

/// For every defining relation r, certifies Δ(r) in I ⊗ F + F ⊗ I with factors of length <= D.
VerificationReport verify_coproduct(const RelationSchema& schema, int degree_bound);

/// The boolean family paired with a P-schema: P_ORTHOGONAL -> I_2, P_MAGIC -> I,
/// P_CUBIC -> I_h, P_BISTOCHASTIC -> I_b. Throws InputError for other schemas.
FamilyTag paired_family(SchemaName schema);

/// Target sum over i with pi <= ker i of u_{i,j} P, minus [pi <= ker j] P.
FormalSum vanishing_target(const Alphabet& alphabet, const SetPartition& pi, const IndexWord& j);

/// Certifies vanishing_target(pi, j) in the schema's ideal. pi must belong to `family`,
/// which must be an interval family; |pi| = |j| and letters of j lie in 1..n.
VerificationReport verify_vanishing(const RelationSchema& schema, FamilyTag family, const SetPartition& pi,
                                    const IndexWord& j, int degree_bound);

/// Every vanishing instance for the schema's paired family: all pi in the family of size
/// <= max_k and all j in [n]^k.
VerificationReport verify_vanishing_all(const RelationSchema& schema, int max_k, int degree_bound);

/// Quotient map check: the schema `quotient` is a quotient of `cover` when every defining
/// relation of `cover` lies in the ideal of `quotient`. If only the cover uses P, its
/// relations are read with P = 1. Both schemas must have the same n.
VerificationReport verify_quotient(const RelationSchema& quotient, const RelationSchema& cover, int degree_bound);

/// Membership of an arbitrary target in the schema's ideal.
VerificationReport verify_target(const RelationSchema& schema, const FormalSum& target, int degree_bound);

/// Drops every P letter (reads P as 1).
FormalSum substitute_p_by_one(const FormalSum& s);

}  // namespace definetti::algebra
