#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "independence.hpp"
#include "oracles/oracles.hpp"
#include "symmetry.hpp"

using namespace definetti;

namespace {

MomentFunctional kernel_function(std::mt19937_64& rng, int n, int K, bool odd_vanish) {
  std::map<std::vector<int>, Rational> value;
  return MomentFunctional::from_function(n, K, [&](const IndexWord& w) {
    if (odd_vanish) {
      std::map<int, int> counts;
      for (int x : w) ++counts[x];
      for (auto [x, c] : counts)
        if (c % 2) return Rational(0);
    }
    auto [it, fresh] = value.emplace(oracle::kernel_labels(w), Rational(0));
    if (fresh) it->second = oracle::random_rational(rng);
    return it->second;
  });
}

MomentFunctional iid(CumulantKind kind, std::vector<Rational> by_order, int vars) {
  std::vector<CumulantTable> marg(vars, CumulantTable::single_variable(kind, by_order));
  return build_independent_moments(marg);
}

}  // namespace

TEST(Symmetry, CoactionExpansion) {
  auto one = coaction_expand({1}, 2);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].word, (IndexWord{1}));
  EXPECT_EQ(one[0].generators, (std::vector<std::pair<int, int>>{{1, 1}}));
  EXPECT_EQ(one[1].word, (IndexWord{2}));
  EXPECT_EQ(one[1].generators, (std::vector<std::pair<int, int>>{{2, 1}}));
  EXPECT_EQ(coaction_expand({1, 2}, 2).size(), 4u);
  EXPECT_EQ(coaction_expand({1, 2, 1}, 3).size(), 27u);
  EXPECT_EQ(coaction_expand({}, 3).size(), 1u);
  EXPECT_THROW(coaction_expand({3}, 2), std::exception);
}

TEST(Symmetry, ExactChecksMatchKernelOracle) {
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 3; ++n) {
    const int K = n == 3 ? 3 : 4;
    for (int trial = 0; trial < 6; ++trial) {
      MomentFunctional m = trial % 3 == 0   ? oracle::random_moments(rng, n, K)
                           : trial % 3 == 1 ? kernel_function(rng, n, K, false)
                                            : kernel_function(rng, n, K, true);
      const bool kd = oracle::kernel_dependent(m);
      const bool odd = oracle::odd_profile_vanishes(m);
      EXPECT_EQ(check_invariance_exact(m, {GroupFamily::Sym, n}, K).passed, kd);
      EXPECT_EQ(check_invariance_exact(m, {GroupFamily::Hyperoct, n}, K).passed, kd && odd);
    }
  }
}

TEST(Symmetry, NonExchangeableFailsAtTheOffendingWord) {
  MomentFunctional m(2, 2);
  m(std::vector<int>{1, 1}) = 1;
  m(std::vector<int>{2, 2}) = 2;
  InvarianceReport rep = check_invariance_exact(m, {GroupFamily::Sym, 2}, 2);
  EXPECT_FALSE(rep.passed);
  bool found = false;
  for (const auto& r : rep.residuals) {
    if (r.word == IndexWord{1, 1}) {
      found = true;
      EXPECT_FALSE(r.passed);
      EXPECT_EQ(r.exact, 1);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Symmetry, SignFlipKillsNonzeroMean) {
  MomentFunctional m(1, 1);
  m(std::vector<int>{1}) = 1;
  EXPECT_FALSE(check_invariance_exact(m, {GroupFamily::Hyperoct, 1}, 1).passed);
  EXPECT_TRUE(check_invariance_exact(m, {GroupFamily::Sym, 1}, 1).passed);
}

TEST(Symmetry, ExtensionLeavesExtraLettersFixed) {
  std::mt19937_64 rng(43);
  MomentFunctional exch = kernel_function(rng, 3, 3, false);
  EXPECT_TRUE(extend_and_check(exch, GroupFamily::Sym, 2, 1, 3, {}).passed);
  // Letter 3 has its own law; letters 1 and 2 are exchangeable among themselves.
  MomentFunctional mixed = MomentFunctional::from_function(3, 3, [](const IndexWord& w) {
    Rational v = 1;
    for (int x : w) v *= x == 3 ? 5 : 2;
    return v;
  });
  EXPECT_TRUE(extend_and_check(mixed, GroupFamily::Sym, 2, 1, 3, {}).passed);
  EXPECT_FALSE(extend_and_check(mixed, GroupFamily::Sym, 3, 0, 3, {}).passed);
  EXPECT_THROW(extend_and_check(mixed, GroupFamily::Sym, 2, 0, 3, {}), std::exception);
}

TEST(Symmetry, HaarSamplesLieInTheirGroups) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      auto o = sample_haar_orthogonal(n, 7, s);
      auto b = sample_haar_bistochastic(n, 7, s);
      for (int i = 0; i < n; ++i) {
        double row = 0.0, col = 0.0;
        for (int j = 0; j < n; ++j) {
          double dot_o = 0.0, dot_b = 0.0;
          for (int k = 0; k < n; ++k) {
            dot_o += o[i * n + k] * o[j * n + k];
            dot_b += b[i * n + k] * b[j * n + k];
          }
          EXPECT_NEAR(dot_o, i == j ? 1.0 : 0.0, 1e-12);
          EXPECT_NEAR(dot_b, i == j ? 1.0 : 0.0, 1e-12);
          row += b[i * n + j];
          col += b[j * n + i];
        }
        EXPECT_NEAR(row, 1.0, 1e-12);
        EXPECT_NEAR(col, 1.0, 1e-12);
      }
    }
  }
  EXPECT_EQ(sample_haar_orthogonal(3, 1, 2), sample_haar_orthogonal(3, 1, 2));
}

TEST(Symmetry, HaarOrthogonalFirstEntryHasUniformSphereMoments) {
  // For Haar O(n), E[g11^2] = 1/n.
  const int n = 3;
  double acc = 0.0;
  const int samples = 4000;
  for (int s = 0; s < samples; ++s) acc += std::pow(sample_haar_orthogonal(n, 3, s)[0], 2);
  EXPECT_NEAR(acc / samples, 1.0 / n, 0.02);
}

TEST(Symmetry, GaussianPassesOrthogonalAndCubicFails) {
  MomentFunctional gauss = iid(CumulantKind::Classical, {0, 1, 0, 0}, 3);
  McConfig cfg{10000, 12345, 0, 1};
  EXPECT_TRUE(check_invariance_mc(gauss, {GroupFamily::Orth, 3}, 4, cfg).passed);
  MomentFunctional skew = iid(CumulantKind::Classical, {0, 1, 1}, 2);
  EXPECT_FALSE(check_invariance_mc(skew, {GroupFamily::Orth, 2}, 3, cfg).passed);
}

TEST(Symmetry, BistochasticPreservesTheMean) {
  MomentFunctional shifted = iid(CumulantKind::Classical, {3, 1}, 2);
  McConfig cfg{2000, 5, 0, 1};
  EXPECT_TRUE(check_invariance_mc(shifted, {GroupFamily::Bistoch, 2}, 1, cfg).passed);
  EXPECT_FALSE(check_invariance_mc(shifted, {GroupFamily::Orth, 2}, 1, cfg).passed);
}

TEST(Symmetry, MonteCarloIsThreadIndependent) {
  MomentFunctional gauss = iid(CumulantKind::Classical, {0, 1, 0, 0}, 2);
  McConfig one{3000, 77, 0, 1};
  McConfig many{3000, 77, 0, 4};
  auto a = check_invariance_mc(gauss, {GroupFamily::Orth, 2}, 4, one);
  auto b = check_invariance_mc(gauss, {GroupFamily::Orth, 2}, 4, many);
  ASSERT_EQ(a.residuals.size(), b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i) {
    EXPECT_EQ(a.residuals[i].mean, b.residuals[i].mean);
    EXPECT_EQ(a.residuals[i].stderr_, b.residuals[i].stderr_);
  }
}

TEST(Symmetry, OrthogonalInvarianceImpliesTheSmallerGroups) {
  MomentFunctional gauss = iid(CumulantKind::Classical, {0, 2, 0, 0}, 2);
  McConfig cfg{4000, 9, 0, 2};
  ASSERT_TRUE(check_invariance_mc(gauss, {GroupFamily::Orth, 2}, 4, cfg).passed);
  EXPECT_TRUE(check_invariance_mc(gauss, {GroupFamily::Bistoch, 2}, 4, cfg).passed);
  EXPECT_TRUE(check_invariance_exact(gauss, {GroupFamily::Hyperoct, 2}, 4).passed);
  EXPECT_TRUE(check_invariance_exact(gauss, {GroupFamily::Sym, 2}, 4).passed);
}

TEST(Symmetry, InputValidation) {
  MomentFunctional m(2, 2);
  EXPECT_THROW(check_invariance_mc(m, {GroupFamily::Orth, 2}, 2, {1, 0, 0, 1}), std::exception);
  EXPECT_THROW(check_invariance_exact(m, {GroupFamily::Orth, 2}, 2), std::exception);
  EXPECT_THROW(check_invariance_exact(m, {GroupFamily::Sym, 3}, 2), std::exception);
  EXPECT_THROW(check_invariance_exact(m, {GroupFamily::Sym, 2}, 3), std::exception);
}

TEST(QuantumInvariance, ExchangeableMomentsAreMagicInvariant) {
  std::mt19937_64 rng(47);
  MomentFunctional exch = kernel_function(rng, 2, 2, false);
  algebra::RelationSchema magic{algebra::SchemaName::Magic, 2};
  auto rep = quantum_invariance_certificate(exch, magic, 2, 4);
  EXPECT_EQ(rep.overall(), algebra::Verdict::Certified);
  for (const auto& w : rep.words) {
    ASSERT_TRUE(w.result.certificate.has_value());
    EXPECT_TRUE(algebra::certificate_reconstructs(*w.result.certificate, algebra::embedded_relations(rep.generators, 1)));
  }
}

TEST(QuantumInvariance, NonExchangeableMomentsAreRefuted) {
  MomentFunctional m(2, 2);
  m(std::vector<int>{1}) = 1;
  m(std::vector<int>{2}) = 2;
  algebra::RelationSchema magic{algebra::SchemaName::Magic, 2};
  auto rep = quantum_invariance_certificate(m, magic, 2, 4);
  EXPECT_EQ(rep.overall(), algebra::Verdict::Refuted);
  bool refuted = false;
  for (const auto& w : rep.words) {
    if (w.result.verdict == algebra::Verdict::Refuted) {
      refuted = true;
      EXPECT_FALSE(definetti::is_zero(w.result.refutation->value));
    }
  }
  EXPECT_TRUE(refuted);
}

TEST(QuantumInvariance, BooleanIidMomentsArePMagicInvariantAtLowOrder) {
  std::mt19937_64 rng(53);
  std::vector<Rational> by_order{oracle::random_rational(rng), oracle::random_rational(rng)};
  MomentFunctional m = iid(CumulantKind::Boolean, by_order, 2);
  algebra::RelationSchema pmagic{algebra::SchemaName::PMagic, 2};
  EXPECT_EQ(quantum_invariance_certificate(m, pmagic, 2, 5).overall(), algebra::Verdict::Certified);
}
