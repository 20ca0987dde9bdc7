#include <gtest/gtest.h>

#include <map>

#include "independence.hpp"
#include "oracles/oracles.hpp"

using namespace definetti;

namespace {

CumulantTable single(std::mt19937_64& rng, CumulantKind kind, int K) {
  std::vector<Rational> by_order;
  for (int k = 1; k <= K; ++k) by_order.push_back(oracle::random_rational(rng));
  return CumulantTable::single_variable(kind, by_order);
}

}  // namespace

TEST(Independence, ClassicalJointMomentsFactorOverLetters) {
  std::mt19937_64 rng(17);
  std::vector<CumulantTable> marg{single(rng, CumulantKind::Classical, 5), single(rng, CumulantKind::Classical, 5)};
  std::vector<MomentFunctional> mm{moments_from_cumulants(marg[0]), moments_from_cumulants(marg[1])};
  MomentFunctional joint = build_independent_moments(marg);
  for (int len = 1; len <= 5; ++len) {
    oracle::words(2, len, [&](const std::vector<int>& w) {
      std::map<int, int> counts;
      for (int x : w) ++counts[x];
      Rational expected = 1;
      for (auto [x, c] : counts) expected *= mm[x - 1](std::vector<int>(c, 1));
      EXPECT_EQ(joint(w), expected);
    });
  }
}

TEST(Independence, BooleanJointMomentsFactorOverRuns) {
  std::mt19937_64 rng(19);
  std::vector<CumulantTable> marg{single(rng, CumulantKind::Boolean, 5), single(rng, CumulantKind::Boolean, 5),
                                  single(rng, CumulantKind::Boolean, 5)};
  std::vector<MomentFunctional> mm;
  for (const auto& c : marg) mm.push_back(moments_from_cumulants(c));
  MomentFunctional joint = build_independent_moments(marg);
  for (int len = 1; len <= 5; ++len) {
    oracle::words(3, len, [&](const std::vector<int>& w) {
      Rational expected = 1;
      std::size_t i = 0;
      while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        expected *= mm[w[i] - 1](std::vector<int>(j - i, 1));
        i = j;
      }
      EXPECT_EQ(joint(w), expected);
    });
  }
}

TEST(Independence, CenteredBooleanAlternatingWordVanishes) {
  auto x = CumulantTable::single_variable(CumulantKind::Boolean, {0, 2, 1});
  auto y = CumulantTable::single_variable(CumulantKind::Boolean, {0, 3, 5});
  MomentFunctional joint = build_independent_moments({x, y});
  EXPECT_EQ(joint(std::vector<int>{1, 2, 1}), 0);
}

TEST(Independence, GaussianAndSemicircularPairs) {
  auto gauss = CumulantTable::single_variable(CumulantKind::Classical, {0, 1, 0, 0});
  MomentFunctional g = build_independent_moments({gauss, gauss});
  EXPECT_EQ(g(std::vector<int>{1, 1, 2, 2}), 1);
  EXPECT_EQ(g(std::vector<int>{1, 2, 1, 2}), 1);
  auto semi = CumulantTable::single_variable(CumulantKind::Free, {0, 1, 0, 0});
  MomentFunctional s = build_independent_moments({semi, semi});
  EXPECT_EQ(s(std::vector<int>{1, 2, 1, 2}), 0);
  EXPECT_EQ(s(std::vector<int>{1, 1, 2, 2}), 1);
}

TEST(Independence, ConstructedFamiliesPassExactly) {
  std::mt19937_64 rng(23);
  for (CumulantKind kind : {CumulantKind::Classical, CumulantKind::Free, CumulantKind::Boolean}) {
    for (int vars = 1; vars <= 3; ++vars) {
      const int K = vars == 3 ? 5 : 6;
      std::vector<CumulantTable> marg;
      for (int v = 0; v < vars; ++v) marg.push_back(single(rng, kind, K));
      MomentFunctional joint = build_independent_moments(marg);
      IndependenceReport rep = test_mixed_vanishing(joint, kind, 0);
      EXPECT_TRUE(rep.passed()) << kind_name(kind) << " vars=" << vars;
      // Marginals are recovered on constant words.
      CumulantTable back = cumulants_from_moments(joint, kind);
      for (int v = 0; v < vars; ++v)
        for (int k = 1; k <= K; ++k)
          EXPECT_EQ(back(std::vector<int>(k, v + 1)), marg[v].table[static_cast<std::size_t>(k)]);
    }
  }
}

TEST(Independence, PerturbationIsDetected) {
  std::mt19937_64 rng(29);
  for (CumulantKind kind : {CumulantKind::Classical, CumulantKind::Free, CumulantKind::Boolean}) {
    MomentFunctional joint = build_independent_moments({single(rng, kind, 4), single(rng, kind, 4)});
    joint(std::vector<int>{1, 2, 2, 1}) += Rational(1, 1000);
    IndependenceReport rep = test_mixed_vanishing(joint, kind, 0);
    ASSERT_FALSE(rep.passed());
    EXPECT_EQ(rep.offenders.front().first, (IndexWord{1, 2, 2, 1}));
    EXPECT_EQ(rep.offenders.front().second, Rational(1, 1000));
    EXPECT_TRUE(test_mixed_vanishing(joint, kind, Rational(1, 1000)).passed());
  }
}

TEST(Independence, CorrelatedPairReportsOffender) {
  MomentFunctional m(2, 2);
  m(std::vector<int>{1, 2}) = 1;
  m(std::vector<int>{2, 1}) = 1;
  IndependenceReport rep = test_mixed_vanishing(m, CumulantKind::Classical, 0);
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(rep.offenders.front().first, (IndexWord{1, 2}));
  EXPECT_EQ(rep.offenders.front().second, 1);
}

TEST(Independence, SingleVariableIsVacuous) {
  std::mt19937_64 rng(31);
  for (CumulantKind kind : {CumulantKind::Classical, CumulantKind::Free, CumulantKind::Boolean}) {
    EXPECT_TRUE(test_mixed_vanishing(oracle::random_moments(rng, 1, 6), kind, 0).passed());
  }
}

TEST(Independence, Classification) {
  auto cls = [](CumulantKind kind, std::vector<Rational> v) {
    return classify_distribution(CumulantTable::single_variable(kind, v), 0);
  };
  EXPECT_EQ(cls(CumulantKind::Free, {0, 1, 0, 0}),
            (DistributionClass{CumulantKind::Free, DistributionClassTag::CenteredCentral}));
  EXPECT_EQ(cls(CumulantKind::Boolean, {1, 1, 0, 0}),
            (DistributionClass{CumulantKind::Boolean, DistributionClassTag::ShiftedCentral}));
  EXPECT_EQ(cls(CumulantKind::Classical, {0, 0, 0, 1}),
            (DistributionClass{CumulantKind::Classical, DistributionClassTag::Symmetric}));
  EXPECT_EQ(cls(CumulantKind::Classical, {0, 1, 1, 0}).tag, DistributionClassTag::IidGeneral);
  EXPECT_EQ(classify_distribution(CumulantTable::single_variable(CumulantKind::Free, {Rational(1, 100), 1}),
                                  Rational(1, 10))
                .tag,
            DistributionClassTag::CenteredCentral);
}

TEST(Independence, ClassMomentsAreSumsOverTheRestrictedFamily) {
  // The moments of a class member only see partitions whose blocks meet the class rule.
  std::mt19937_64 rng(37);
  for (CumulantKind kind : {CumulantKind::Classical, CumulantKind::Free, CumulantKind::Boolean}) {
    for (DistributionClassTag tag : {DistributionClassTag::Symmetric, DistributionClassTag::ShiftedCentral,
                                     DistributionClassTag::CenteredCentral}) {
      std::vector<Rational> by_order(6, 0);
      for (int k = 1; k <= 6; ++k) {
        bool allowed = tag == DistributionClassTag::Symmetric        ? k % 2 == 0
                       : tag == DistributionClassTag::ShiftedCentral ? k <= 2
                                                                     : k == 2;
        if (allowed) by_order[k - 1] = oracle::random_rational(rng);
      }
      CumulantTable c = CumulantTable::single_variable(kind, by_order);
      DistributionClass dc = classify_distribution(c, 0);
      MomentFunctional m = moments_from_cumulants(c);
      for (int k = 1; k <= 6; ++k) {
        Rational expected = 0;
        for (const auto& pi : enumerate_partitions(k, {lattice_of(kind), dc.block_constraint()})) {
          Rational prod = 1;
          for (const auto& b : pi.blocks()) prod *= by_order[b.size() - 1];
          expected += prod;
        }
        EXPECT_EQ(m(std::vector<int>(k, 1)), expected) << kind_name(kind) << " " << class_name(dc.tag);
      }
    }
  }
}
