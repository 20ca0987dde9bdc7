#include "cumulants.hpp"

#include "errors.hpp"

namespace definetti {

namespace {

// Lattice members for each order 0..K, computed once per transform.
std::vector<std::vector<SetPartition>> lattice_members(CumulantKind kind, int max_order) {
  std::vector<std::vector<SetPartition>> out;
  for (int k = 0; k <= max_order; ++k) out.push_back(enumerate_partitions(k, {lattice_of(kind), BlockConstraint::Any}));
  return out;
}

// Block product without the lattice check; callers guarantee membership.
Rational block_product(const WordTable& table, const SetPartition& pi, std::span<const int> word) {
  Rational product = 1;
  IndexWord sub;
  for (const auto& block : pi.blocks()) {
    sub.clear();
    for (int pos : block) sub.push_back(word[pos - 1]);
    const Rational& v = table.at(sub);
    if (is_zero(v)) return 0;
    product *= v;
  }
  return product;
}

}  // namespace

Rational eval_pi_scalar(const CumulantTable& table, const SetPartition& pi, std::span<const int> word) {
  if (static_cast<std::size_t>(pi.ground_size()) != word.size()) {
    throw InputError("eval_pi_scalar: partition size differs from word length");
  }
  if (!in_family(pi, {lattice_of(table.kind), BlockConstraint::Any})) {
    throw InputError("partition " + pi.to_text() + " is outside the " + kind_name(table.kind) + " lattice");
  }
  return block_product(table.table, pi, word);
}

MomentFunctional moments_from_cumulants(const CumulantTable& cumulants) {
  const WordTable& c = cumulants.table;
  MomentFunctional mu(c.alphabet(), c.max_order());
  auto members = lattice_members(cumulants.kind, c.max_order());
  for (int k = 1; k <= c.max_order(); ++k) {
    for (std::size_t idx = c.begin_of(k); idx < c.end_of(k); ++idx) {
      IndexWord w = c.word_at(idx);
      Rational sum = 0;
      for (const auto& pi : members[k]) sum += block_product(c, pi, w);
      mu.table[idx] = sum;
    }
  }
  return mu;
}

CumulantTable cumulants_from_moments(const MomentFunctional& moments, CumulantKind kind) {
  const WordTable& m = moments.table;
  CumulantTable cum(kind, m.alphabet(), m.max_order());
  auto members = lattice_members(kind, m.max_order());
  for (int k = 1; k <= m.max_order(); ++k) {
    for (std::size_t idx = m.begin_of(k); idx < m.end_of(k); ++idx) {
      IndexWord w = m.word_at(idx);
      Rational value = m[idx];
      for (const auto& pi : members[k]) {
        if (pi.block_count() == 1) continue;  // 1_k is the unknown being solved for
        value -= block_product(cum.table, pi, w);
      }
      cum.table[idx] = value;
    }
  }
  return cum;
}

}  // namespace definetti
