#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra/verify.hpp"
#include "word_table.hpp"

namespace definetti {

enum class GroupFamily { Sym, Hyperoct, Bistoch, Orth };

struct GroupTag {
  GroupFamily family = GroupFamily::Sym;
  int n = 1;

  static GroupFamily parse_family(std::string_view text);
  std::string family_name() const;
  bool enumerable() const { return family == GroupFamily::Sym || family == GroupFamily::Hyperoct; }
};

/// Largest n accepted for exact enumeration.
constexpr int kMaxSymN = 6;
constexpr int kMaxHyperoctN = 4;

struct CoactionTerm {
  IndexWord word;
  /// (j_t, i_t) for the generator u_{j_t, i_t} at position t.
  std::vector<std::pair<int, int>> generators;
};

/// alpha(X_{i1} ... X_{ik}) = sum_j X_{j1} ... X_{jk} ⊗ u_{j1,i1} ... u_{jk,ik}; n^k terms
/// with j in lexicographic order.
std::vector<CoactionTerm> coaction_expand(const IndexWord& w, int n);

enum class InvarianceMode { Exact, MonteCarlo };

struct WordResidual {
  IndexWord word;
  /// EXACT: largest |residual| over the group. MONTE_CARLO: unused (0).
  Rational exact;
  /// MONTE_CARLO: sample mean and standard error of the residual.
  double mean = 0.0;
  double stderr_ = 0.0;
  bool passed = true;
};

struct InvarianceReport {
  GroupTag group;
  int max_order = 0;
  InvarianceMode mode = InvarianceMode::Exact;
  /// Letters beyond group.n are fixed by the extended matrix (k-th extension).
  int extension = 0;
  std::vector<WordResidual> residuals;
  bool passed = true;
  std::uint64_t seed = 0;
  int samples = 0;
  Rational tol;
  /// Words that failed, in length-lex order.
  std::vector<IndexWord> failures() const;
};

/// Exact check over every (signed) permutation matrix, acting on letters 1..group.n and
/// fixing the others. Requires mom.alphabet() >= group.n and K <= mom.max_order().
InvarianceReport check_invariance_exact(const MomentFunctional& mom, const GroupTag& group, int K);

struct McConfig {
  int samples = 10000;
  std::uint64_t seed = 0;
  Rational tol = 0;
  int threads = 1;
};

/// Monte Carlo check with Haar samples from O(n) or the bistochastic group. Results
/// depend only on (seed, samples), never on the thread count.
InvarianceReport check_invariance_mc(const MomentFunctional& mom, const GroupTag& group, int K, const McConfig& config);

/// Dispatches to the exact check for SYM/HYPEROCT and to Monte Carlo otherwise, for the
/// k-th extension E(n, k): mom must have exactly base_n + k letters.
InvarianceReport extend_and_check(const MomentFunctional& mom, GroupFamily family, int base_n, int k, int K,
                                  const McConfig& config);

/// Haar samples as row-major n x n arrays; exposed for testing.
std::vector<double> sample_haar_orthogonal(int n, std::uint64_t seed, std::uint64_t stream);
std::vector<double> sample_haar_bistochastic(int n, std::uint64_t seed, std::uint64_t stream);

struct QuantumWordResult {
  IndexWord word;
  algebra::MembershipResult result;
};

struct QuantumInvarianceReport {
  algebra::RelationSchema schema;
  int max_order = 0;
  int degree_bound = 0;
  std::vector<algebra::FormalSum> generators;
  std::vector<QuantumWordResult> words;
  algebra::Verdict overall() const;
};

/// Target for word w: sum_j mu(j) u_{j1,i1} ... u_{jk,ik} - mu(w) 1, with a trailing P
/// (and mu(w) P) for P-schemas.
algebra::FormalSum invariance_target(const MomentFunctional& mom, const algebra::RelationSchema& schema,
                                     const IndexWord& w);

/// Per-word bounded-degree certificates for words of length 1..K. mom.alphabet() must
/// equal schema.n.
QuantumInvarianceReport quantum_invariance_certificate(const MomentFunctional& mom,
                                                       const algebra::RelationSchema& schema, int K,
                                                       int degree_bound);

}  // namespace definetti
