#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "algebra/formal_sum.hpp"

namespace definetti::algebra {

/// One summand coefficient * left * relation * right of a certificate. Words are tensor
/// words of the target's tensor degree; `relation` indexes embedded_relations().
struct CertificateTerm {
  TensorWord left;
  std::size_t relation = 0;
  TensorWord right;
  Rational coefficient;
};

struct MembershipCertificate {
  FormalSum target;
  std::vector<CertificateTerm> terms;
  int degree_bound = 0;
};

/// Ideal generators in tensor degree t: every relation placed in factor 0, then every
/// relation placed in factor 1, and so on (r ⊗ 1, then 1 ⊗ r for t = 2).
std::vector<FormalSum> embedded_relations(const std::vector<FormalSum>& relations, int tensor_degree);

/// Sum of coefficient * left * relation * right over the certificate.
FormalSum expand_certificate(const MembershipCertificate& cert, const std::vector<FormalSum>& embedded);

/// Re-expands the certificate and compares with its target exactly.
bool certificate_reconstructs(const MembershipCertificate& cert, const std::vector<FormalSum>& embedded);

/// Semi-echelon basis of I_D = span{w_L r w_R : |w_L| + deg r + |w_R| <= D} inside the
/// space of words of length <= D, with enough provenance to rewrite any reduction as a
/// combination of the spanning products.
class ReductionBasis {
 public:
  static constexpr std::size_t kMaxWords = 400'000;
  static constexpr std::size_t kMaxProducts = 1'500'000;

  ReductionBasis(const std::vector<FormalSum>& relations, int degree_bound);
  ~ReductionBasis();
  ReductionBasis(const ReductionBasis&) = delete;
  ReductionBasis& operator=(const ReductionBasis&) = delete;

  int degree_bound() const;
  std::size_t rank() const;
  std::size_t word_count() const;

  struct Reduction {
    /// Normal form: the unique representative supported on non-pivot words.
    FormalSum normal_form;
    /// s - normal_form written as sum of coefficient * w_L * r * w_R (tensor degree 1 terms).
    std::vector<CertificateTerm> difference;
  };

  /// Requires every word of s to have length <= degree_bound().
  Reduction reduce(const FormalSum& s) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Shared, cached basis for (relations, D); safe to call from several threads.
std::shared_ptr<const ReductionBasis> cached_basis(const std::vector<FormalSum>& relations, int degree_bound);

/// Decides target ∈ I_D ⊗ F^{⊗(t-1)} + ... + F^{⊗(t-1)} ⊗ I_D with each factor of length
/// at most D, where I is generated by `relations` (tensor degree 1). Returns a certificate
/// that re-expands to the target exactly, or nullopt (inconclusive).
std::optional<MembershipCertificate> ideal_membership(const FormalSum& target, const std::vector<FormalSum>& relations,
                                                      int degree_bound);

}  // namespace definetti::algebra
