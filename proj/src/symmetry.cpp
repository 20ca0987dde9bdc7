#include "symmetry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "errors.hpp"

namespace definetti {

namespace {

constexpr int kChunkSize = 256;

std::vector<IndexWord> words_up_to(int alphabet, int K) {
  std::vector<IndexWord> out;
  for (int k = 1; k <= K; ++k) for_each_word(alphabet, k, [&](const IndexWord& w) { out.push_back(w); });
  return out;
}

void check_common(const MomentFunctional& mom, const GroupTag& group, int K) {
  if (group.n < 1) throw InputError("group size n must be positive");
  if (mom.alphabet() < group.n) throw InputError("moment table has fewer letters than the group size n");
  if (K < 1 || K > mom.max_order()) throw InputError("K must lie in 1..max_order of the moment table");
}

/// Signed permutation: g(perm[i], i) = sign[i] for 0-based i.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;
};

std::vector<SignedPermutation> enumerate_group(const GroupTag& group) {
  const int n = group.n;
  const int cap = group.family == GroupFamily::Sym ? kMaxSymN : kMaxHyperoctN;
  if (n > cap) {
    throw CapacityError("exact " + group.family_name() + " enumeration supports n <= " + std::to_string(cap));
  }
  std::vector<SignedPermutation> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const int masks = group.family == GroupFamily::Hyperoct ? (1 << n) : 1;
  do {
    for (int mask = 0; mask < masks; ++mask) {
      SignedPermutation g{perm, std::vector<int>(static_cast<std::size_t>(n), 1)};
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) g.sign[static_cast<std::size_t>(i)] = -1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Eigen::MatrixXd haar_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

/// Orthonormal basis of the complement of the all-ones vector (Helmert columns).
Eigen::MatrixXd ones_complement_basis(int n) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n - 1);
  for (int c = 0; c < n - 1; ++c) {
    const double m = c + 1;
    const double norm = std::sqrt(m * (m + 1));
    for (int r = 0; r <= c; ++r) v(r, c) = 1.0 / norm;
    v(c + 1, c) = -m / norm;
  }
  return v;
}

Eigen::MatrixXd haar_bistochastic(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  if (n == 1) return g;
  Eigen::MatrixXd v = ones_complement_basis(n);
  return g + v * haar_orthogonal(n - 1, rng) * v.transpose();
}

std::vector<double> to_row_major(const Eigen::MatrixXd& m) {
  std::vector<double> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

/// Accumulates sum_j mu(j) prod_t g(j_t, i_t) for letters i_t <= n and j_t = i_t otherwise.
class ResidualEvaluator {
 public:
  ResidualEvaluator(const MomentFunctional& mom, int n) : n_(n), alphabet_(mom.alphabet()) {
    values_.reserve(mom.table.size());
    for (std::size_t i = 0; i < mom.table.size(); ++i) values_.push_back(mom.table[i].get_d());
    for (int k = 0; k <= mom.max_order(); ++k) offsets_.push_back(mom.table.begin_of(k));
  }

  double value(const IndexWord& w) const {
    std::size_t r = 0;
    for (int letter : w) r = r * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(letter - 1);
    return values_[offsets_[w.size()] + r];
  }

  /// Returns (transformed value, rounding scale: sum of |mu(j)| times the number of moved positions).
  std::pair<double, double> transform(const IndexWord& w, const Eigen::MatrixXd& g) const {
    double total = 0.0;
    double scale = 0.0;
    recurse(w, g, 0, 0, 1.0, 0, total, scale);
    return {total, scale};
  }

 private:
  void recurse(const IndexWord& w, const Eigen::MatrixXd& g, std::size_t pos, std::size_t rank, double coef,
               int moved, double& total, double& scale) const {
    if (pos == w.size()) {
      const double v = values_[offsets_[w.size()] + rank];
      total += coef * v;
      scale += std::abs(v) * std::max(moved, 1);
      return;
    }
    const int i = w[pos];
    const std::size_t base = rank * static_cast<std::size_t>(alphabet_);
    if (i > n_) {
      recurse(w, g, pos + 1, base + static_cast<std::size_t>(i - 1), coef, moved, total, scale);
      return;
    }
    for (int j = 1; j <= n_; ++j) {
      recurse(w, g, pos + 1, base + static_cast<std::size_t>(j - 1), coef * g(j - 1, i - 1), moved + 1, total,
              scale);
    }
  }

  int n_;
  int alphabet_;
  std::vector<double> values_;
  std::vector<std::size_t> offsets_;
};

}  // namespace

GroupFamily GroupTag::parse_family(std::string_view text) {
  std::string key;
  for (char c : text) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "sym" || key == "s") return GroupFamily::Sym;
  if (key == "hyperoct" || key == "h") return GroupFamily::Hyperoct;
  if (key == "bistoch" || key == "b") return GroupFamily::Bistoch;
  if (key == "orth" || key == "o") return GroupFamily::Orth;
  throw InputError("unknown group '" + std::string(text) + "' (expected sym, hyperoct, bistoch or orth)");
}

std::string GroupTag::family_name() const {
  switch (family) {
    case GroupFamily::Sym:
      return "sym";
    case GroupFamily::Hyperoct:
      return "hyperoct";
    case GroupFamily::Bistoch:
      return "bistoch";
    case GroupFamily::Orth:
      return "orth";
  }
  return "?";
}

std::vector<IndexWord> InvarianceReport::failures() const {
  std::vector<IndexWord> out;
  for (const auto& r : residuals)
    if (!r.passed) out.push_back(r.word);
  return out;
}

std::vector<CoactionTerm> coaction_expand(const IndexWord& w, int n) {
  for (int letter : w)
    if (letter < 1 || letter > n) throw InputError("word letters must lie in 1..n");
  if (w.empty()) return {CoactionTerm{}};
  std::vector<CoactionTerm> out;
  for_each_word(n, static_cast<int>(w.size()), [&](const IndexWord& j) {
    CoactionTerm t{j, {}};
    for (std::size_t p = 0; p < w.size(); ++p) t.generators.emplace_back(j[p], w[p]);
    out.push_back(std::move(t));
  });
  return out;
}

InvarianceReport check_invariance_exact(const MomentFunctional& mom, const GroupTag& group, int K) {
  if (!group.enumerable()) throw InputError("exact invariance is available for sym and hyperoct only");
  check_common(mom, group, K);
  const auto elements = enumerate_group(group);
  InvarianceReport report;
  report.group = group;
  report.max_order = K;
  report.mode = InvarianceMode::Exact;
  report.extension = mom.alphabet() - group.n;
  for (const auto& w : words_up_to(mom.alphabet(), K)) {
    WordResidual res{w, Rational(0), 0.0, 0.0, true};
    for (const auto& g : elements) {
      IndexWord image = w;
      int sign = 1;
      for (int& letter : image) {
        if (letter > group.n) continue;
        const auto i = static_cast<std::size_t>(letter - 1);
        sign *= g.sign[i];
        letter = g.perm[i] + 1;
      }
      Rational r = sign * mom(image) - mom(w);
      if (abs(r) > res.exact) res.exact = abs(r);
    }
    res.passed = sgn(res.exact) == 0;
    if (!res.passed) report.passed = false;
    report.residuals.push_back(std::move(res));
  }
  return report;
}

std::vector<double> sample_haar_orthogonal(int n, std::uint64_t seed, std::uint64_t stream) {
  auto rng = stream_rng(seed, stream);
  return to_row_major(haar_orthogonal(n, rng));
}

std::vector<double> sample_haar_bistochastic(int n, std::uint64_t seed, std::uint64_t stream) {
  auto rng = stream_rng(seed, stream);
  return to_row_major(haar_bistochastic(n, rng));
}

InvarianceReport check_invariance_mc(const MomentFunctional& mom, const GroupTag& group, int K, const McConfig& config) {
  if (group.enumerable()) throw InputError("Monte Carlo invariance is available for bistoch and orth only");
  check_common(mom, group, K);
  if (config.samples < 2) throw InputError("Monte Carlo needs at least 2 samples");
  if (sgn(config.tol) < 0) throw InputError("tolerance must be nonnegative");
  const int threads = std::max(1, config.threads);

  const auto words = words_up_to(mom.alphabet(), K);
  const ResidualEvaluator eval(mom, group.n);
  std::vector<double> base;
  for (const auto& w : words) base.push_back(eval.value(w));

  const int chunks = (config.samples + kChunkSize - 1) / kChunkSize;
  struct ChunkStats {
    std::vector<double> sum, sumsq, scale;
  };
  std::vector<ChunkStats> stats(static_cast<std::size_t>(chunks));
  auto run_chunk = [&](int c) {
    ChunkStats& s = stats[static_cast<std::size_t>(c)];
    s.sum.assign(words.size(), 0.0);
    s.sumsq.assign(words.size(), 0.0);
    s.scale.assign(words.size(), 0.0);
    auto rng = stream_rng(config.seed, static_cast<std::uint64_t>(c));
    const int count = std::min(kChunkSize, config.samples - c * kChunkSize);
    for (int t = 0; t < count; ++t) {
      Eigen::MatrixXd g =
          group.family == GroupFamily::Orth ? haar_orthogonal(group.n, rng) : haar_bistochastic(group.n, rng);
      for (std::size_t w = 0; w < words.size(); ++w) {
        auto [value, scale] = eval.transform(words[w], g);
        const double r = value - base[w];
        s.sum[w] += r;
        s.sumsq[w] += r * r;
        s.scale[w] = std::max(s.scale[w], scale + std::abs(base[w]));
      }
    }
  };
  if (threads == 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int c = t; c < chunks; c += threads) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  InvarianceReport report;
  report.group = group;
  report.max_order = K;
  report.mode = InvarianceMode::MonteCarlo;
  report.extension = mom.alphabet() - group.n;
  report.seed = config.seed;
  report.samples = config.samples;
  report.tol = config.tol;
  const double tol = config.tol.get_d();
  const double count = config.samples;
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t w = 0; w < words.size(); ++w) {
    double sum = 0.0, sumsq = 0.0, scale = 0.0;
    for (const auto& s : stats) {
      sum += s.sum[w];
      sumsq += s.sumsq[w];
      scale = std::max(scale, s.scale[w]);
    }
    const double mean = sum / count;
    const double var = std::max(0.0, (sumsq - sum * sum / count) / (count - 1.0));
    const double se = std::sqrt(var / count);
    WordResidual res{words[w], Rational(0), mean, se, true};
    res.passed = std::abs(mean) <= std::max(tol, 3.0 * se) + 64.0 * eps * scale;
    if (!res.passed) report.passed = false;
    report.residuals.push_back(std::move(res));
  }
  return report;
}

InvarianceReport extend_and_check(const MomentFunctional& mom, GroupFamily family, int base_n, int k, int K,
                                  const McConfig& config) {
  if (base_n < 1 || k < 0) throw InputError("extension needs base n >= 1 and k >= 0");
  if (mom.alphabet() != base_n + k) throw InputError("moment table must have exactly n + k letters");
  GroupTag group{family, base_n};
  return group.enumerable() ? check_invariance_exact(mom, group, K) : check_invariance_mc(mom, group, K, config);
}

algebra::Verdict QuantumInvarianceReport::overall() const {
  bool all = true;
  for (const auto& w : words) {
    if (w.result.verdict == algebra::Verdict::Refuted) return algebra::Verdict::Refuted;
    if (w.result.verdict != algebra::Verdict::Certified) all = false;
  }
  return all ? algebra::Verdict::Certified : algebra::Verdict::Inconclusive;
}

algebra::FormalSum invariance_target(const MomentFunctional& mom, const algebra::RelationSchema& schema,
                                     const IndexWord& w) {
  const algebra::Alphabet a = schema.alphabet();
  const bool with_p = schema.uses_p();
  algebra::FormalSum target(a, 1);
  for (const auto& term : coaction_expand(w, schema.n)) {
    const Rational& c = mom(term.word);
    if (sgn(c) == 0) continue;
    algebra::Word u;
    for (auto [j, i] : term.generators) u.push_back(a.u(j, i));
    if (with_p) u.push_back(a.p());
    target.add_term({u}, c);
  }
  algebra::Word unit;
  if (with_p) unit.push_back(a.p());
  target.add_term({unit}, -mom(w));
  return target;
}

QuantumInvarianceReport quantum_invariance_certificate(const MomentFunctional& mom,
                                                       const algebra::RelationSchema& schema, int K,
                                                       int degree_bound) {
  if (mom.alphabet() != schema.n) throw InputError("moment table must have exactly n letters for the schema");
  if (K < 1 || K > mom.max_order()) throw InputError("K must lie in 1..max_order of the moment table");
  QuantumInvarianceReport report;
  report.schema = schema;
  report.max_order = K;
  report.degree_bound = degree_bound;
  report.generators = algebra::star_closure(algebra::instantiate_relations(schema));
  for (const auto& w : words_up_to(mom.alphabet(), K)) {
    report.words.push_back({w, algebra::decide_membership(invariance_target(mom, schema, w), report.generators,
                                                          degree_bound)});
  }
  return report;
}

}  // namespace definetti
