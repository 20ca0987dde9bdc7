#include "independence.hpp"

#include <algorithm>

#include "errors.hpp"

namespace definetti {

BlockConstraint DistributionClass::block_constraint() const {
  switch (tag) {
    case DistributionClassTag::IidGeneral:
      return BlockConstraint::Any;
    case DistributionClassTag::Symmetric:
      return BlockConstraint::Even;
    case DistributionClassTag::ShiftedCentral:
      return BlockConstraint::AtMostTwo;
    case DistributionClassTag::CenteredCentral:
      return BlockConstraint::ExactlyTwo;
  }
  return BlockConstraint::Any;
}

std::string class_name(DistributionClassTag tag) {
  switch (tag) {
    case DistributionClassTag::IidGeneral:
      return "iid_general";
    case DistributionClassTag::Symmetric:
      return "symmetric";
    case DistributionClassTag::ShiftedCentral:
      return "shifted_central";
    case DistributionClassTag::CenteredCentral:
      return "centered_central";
  }
  return "?";
}

MomentFunctional build_independent_moments(const std::vector<CumulantTable>& marginals) {
  if (marginals.empty()) throw InputError("need at least one marginal");
  const CumulantKind kind = marginals.front().kind;
  const int order = marginals.front().max_order();
  for (const auto& m : marginals) {
    if (m.kind != kind) throw InputError("marginals mix cumulant kinds");
    if (m.max_order() != order) throw InputError("marginals have different orders");
    if (m.alphabet() != 1) throw InputError("marginals must be single-variable tables");
  }
  CumulantTable joint(kind, static_cast<int>(marginals.size()), order);
  for (int k = 1; k <= order; ++k) {
    for (std::size_t l = 0; l < marginals.size(); ++l) {
      IndexWord constant(static_cast<std::size_t>(k), static_cast<int>(l) + 1);
      joint(constant) = marginals[l].table[static_cast<std::size_t>(k)];
    }
  }
  return moments_from_cumulants(joint);
}

IndependenceReport test_mixed_vanishing(const MomentFunctional& moments, CumulantKind kind, const Rational& tol) {
  if (sgn(tol) < 0) throw InputError("tolerance must be nonnegative");
  IndependenceReport report;
  report.kind = kind;
  report.max_order = moments.max_order();
  CumulantTable cum = cumulants_from_moments(moments, kind);
  for (std::size_t idx = 1; idx < cum.table.size(); ++idx) {
    IndexWord w = cum.table.word_at(idx);
    bool mixed = std::any_of(w.begin(), w.end(), [&](int c) { return c != w.front(); });
    if (!mixed) continue;
    const Rational& v = cum.table[idx];
    if (abs(v) > tol) report.offenders.emplace_back(std::move(w), v);
  }
  return report;
}

DistributionClass classify_distribution(const CumulantTable& cumulants, const Rational& tol) {
  if (cumulants.alphabet() != 1) throw InputError("classification needs a single-variable table");
  if (sgn(tol) < 0) throw InputError("tolerance must be nonnegative");
  bool other_than_two = false;
  bool order_three_up = false;
  bool odd = false;
  for (int k = 1; k <= cumulants.max_order(); ++k) {
    if (abs(cumulants.table[static_cast<std::size_t>(k)]) <= tol) continue;
    if (k != 2) other_than_two = true;
    if (k >= 3) order_three_up = true;
    if (k % 2 == 1) odd = true;
  }
  DistributionClass out{cumulants.kind, DistributionClassTag::IidGeneral};
  if (!other_than_two) {
    out.tag = DistributionClassTag::CenteredCentral;
  } else if (!order_three_up) {
    out.tag = DistributionClassTag::ShiftedCentral;
  } else if (!odd) {
    out.tag = DistributionClassTag::Symmetric;
  }
  return out;
}

}  // namespace definetti
