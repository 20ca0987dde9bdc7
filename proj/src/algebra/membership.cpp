#include "algebra/membership.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include "errors.hpp"

namespace definetti::algebra {

namespace {

using Column = std::uint32_t;
using SparseVector = std::vector<std::pair<Column, Rational>>;

/// Rank of words in length-lex order over an alphabet of size L, lengths 0..D.
class WordRanks {
 public:
  WordRanks(int letters, int max_length) : letters_(letters) {
    std::size_t count = 1;
    offsets_.push_back(0);
    for (int l = 0; l <= max_length; ++l) {
      offsets_.push_back(offsets_.back() + count);
      if (offsets_.back() > ReductionBasis::kMaxWords) {
        throw CapacityError("ideal membership: word space exceeds " + std::to_string(ReductionBasis::kMaxWords) +
                            " words; lower the degree bound");
      }
      count *= static_cast<std::size_t>(letters);
    }
  }

  std::size_t size() const { return offsets_.back(); }

  Column rank(const Word& w) const {
    std::size_t r = 0;
    for (int letter : w) r = r * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(letter);
    return static_cast<Column>(offsets_[w.size()] + r);
  }

  Word word(Column c) const {
    std::size_t len = 0;
    while (offsets_[len + 1] <= c) ++len;
    std::size_t r = c - offsets_[len];
    Word w(len);
    for (std::size_t p = len; p-- > 0;) {
      w[p] = static_cast<int>(r % static_cast<std::size_t>(letters_));
      r /= static_cast<std::size_t>(letters_);
    }
    return w;
  }

 private:
  int letters_;
  std::vector<std::size_t> offsets_;
};

struct Product {
  Word left;
  std::size_t relation;
  Word right;
};

struct Row {
  SparseVector entries;  // ascending columns, pivot (last) has coefficient 1
  std::size_t origin;    // product index
  Rational origin_scale;
  std::vector<std::pair<std::size_t, Rational>> used;  // earlier rows subtracted on insertion
};

void for_each_word_of_length(int letters, int length, const std::function<void(const Word&)>& visit) {
  Word w(static_cast<std::size_t>(length), 0);
  while (true) {
    visit(w);
    int p = length - 1;
    while (p >= 0 && w[static_cast<std::size_t>(p)] == letters - 1) {
      w[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) return;
    ++w[static_cast<std::size_t>(p)];
  }
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

struct ReductionBasis::Impl {
  Alphabet alphabet;
  int degree_bound;
  WordRanks ranks;
  std::vector<FormalSum> relations;
  std::vector<Product> products;
  std::vector<Row> rows;
  std::unordered_map<Column, std::size_t> pivot_row;

  Impl(const std::vector<FormalSum>& rels, int d)
      : alphabet(rels.empty() ? Alphabet{} : rels.front().alphabet()),
        degree_bound(d),
        ranks(alphabet.size(), d),
        relations(rels) {}

  void subtract_row(std::map<Column, Rational>& v, const Row& row, const Rational& factor) const {
    for (const auto& [c, x] : row.entries) {
      auto [it, inserted] = v.try_emplace(c, 0);
      it->second -= factor * x;
      if (sgn(it->second) == 0) v.erase(it);
    }
  }

  void insert_product(std::size_t product_index) {
    const Product& p = products[product_index];
    std::map<Column, Rational> v;
    for (const auto& [w, c] : relations[p.relation].terms()) {
      Column col = ranks.rank(concat(p.left, w[0], p.right));
      auto [it, inserted] = v.try_emplace(col, 0);
      it->second += c;
      if (sgn(it->second) == 0) v.erase(it);
    }
    std::vector<std::pair<std::size_t, Rational>> used;
    while (!v.empty()) {
      auto top = std::prev(v.end());
      auto found = pivot_row.find(top->first);
      if (found == pivot_row.end()) break;
      Rational factor = top->second;
      used.emplace_back(found->second, factor);
      subtract_row(v, rows[found->second], factor);
    }
    if (v.empty()) return;
    Rational lead = std::prev(v.end())->second;
    Row row;
    row.origin = product_index;
    row.origin_scale = 1 / lead;
    for (auto& [idx, f] : used) f /= lead;
    row.used = std::move(used);
    row.entries.reserve(v.size());
    for (auto& [c, x] : v) row.entries.emplace_back(c, x / lead);
    pivot_row.emplace(row.entries.back().first, rows.size());
    rows.push_back(std::move(row));
  }

  void build() {
    std::vector<int> degrees;
    for (const auto& r : relations) {
      if (r.tensor_degree() != 1) throw InputError("relations must have tensor degree 1");
      if (!(r.alphabet() == alphabet)) throw InputError("relations use different alphabets");
      degrees.push_back(r.degree());
    }
    for (int total = 0; total <= degree_bound; ++total) {
      for (std::size_t ri = 0; ri < relations.size(); ++ri) {
        if (relations[ri].is_zero()) continue;
        const int extra = total - degrees[ri];
        if (extra < 0) continue;
        for (int a = 0; a <= extra; ++a) {
          for_each_word_of_length(alphabet.size(), a, [&](const Word& left) {
            for_each_word_of_length(alphabet.size(), extra - a, [&](const Word& right) {
              products.push_back({left, ri, right});
              if (products.size() > kMaxProducts) {
                throw CapacityError("ideal membership: more than " + std::to_string(kMaxProducts) +
                                    " spanning products; lower the degree bound");
              }
            });
          });
        }
      }
    }
    for (std::size_t i = 0; i < products.size(); ++i) insert_product(i);
  }
};

ReductionBasis::ReductionBasis(const std::vector<FormalSum>& relations, int degree_bound) {
  if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
  if (relations.empty()) throw InputError("reduction basis needs at least one relation");
  impl_ = std::make_unique<Impl>(relations, degree_bound);
  impl_->build();
}

ReductionBasis::~ReductionBasis() = default;

int ReductionBasis::degree_bound() const { return impl_->degree_bound; }
std::size_t ReductionBasis::rank() const { return impl_->rows.size(); }
std::size_t ReductionBasis::word_count() const { return impl_->ranks.size(); }

ReductionBasis::Reduction ReductionBasis::reduce(const FormalSum& s) const {
  const Impl& im = *impl_;
  if (s.tensor_degree() != 1) throw InputError("reduce expects tensor degree 1");
  std::map<Column, Rational> v;
  for (const auto& [w, c] : s.terms()) {
    if (static_cast<int>(w[0].size()) > im.degree_bound) throw InputError("word longer than the degree bound");
    v.emplace(im.ranks.rank(w[0]), c);
  }
  std::map<std::size_t, Rational> lambda;
  std::map<Column, Rational> remainder;
  while (!v.empty()) {
    auto top = std::prev(v.end());
    auto found = im.pivot_row.find(top->first);
    if (found == im.pivot_row.end()) {
      remainder.insert(*top);
      v.erase(top);
      continue;
    }
    Rational factor = top->second;
    lambda[found->second] += factor;
    im.subtract_row(v, im.rows[found->second], factor);
  }

  Reduction out;
  out.normal_form = FormalSum(s.alphabet(), 1);
  for (const auto& [c, x] : remainder) out.normal_form.add_term({im.ranks.word(c)}, x);

  // row_r = origin_scale * product_origin - sum used_s * row_s, with s < r.
  std::map<std::size_t, Rational> product_coeff;
  while (!lambda.empty()) {
    auto top = std::prev(lambda.end());
    const std::size_t r = top->first;
    const Rational l = top->second;
    lambda.erase(top);
    if (sgn(l) == 0) continue;
    const Row& row = im.rows[r];
    product_coeff[row.origin] += l * row.origin_scale;
    for (const auto& [s_idx, m] : row.used) lambda[s_idx] -= l * m;
  }
  for (const auto& [pi, c] : product_coeff) {
    if (sgn(c) == 0) continue;
    const Product& p = im.products[pi];
    out.difference.push_back({TensorWord{p.left}, p.relation, TensorWord{p.right}, c});
  }
  return out;
}

std::shared_ptr<const ReductionBasis> cached_basis(const std::vector<FormalSum>& relations, int degree_bound) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const ReductionBasis>> cache;
  std::string key = std::to_string(degree_bound);
  for (const auto& r : relations) {
    key += '|';
    key += std::to_string(r.alphabet().n);
    key += ':';
    key += r.to_text();
  }
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const ReductionBasis>(relations, degree_bound);
  cache.emplace(key, basis);
  return basis;
}

std::vector<FormalSum> embedded_relations(const std::vector<FormalSum>& relations, int tensor_degree) {
  if (tensor_degree < 1) throw InputError("tensor degree must be at least 1");
  std::vector<FormalSum> out;
  for (int f = 0; f < tensor_degree; ++f) {
    for (const auto& r : relations) {
      FormalSum e = f == 0 ? r : FormalSum::unit(r.alphabet(), f);
      if (f > 0) e = tensor(e, r);
      if (tensor_degree - f - 1 > 0) e = tensor(e, FormalSum::unit(r.alphabet(), tensor_degree - f - 1));
      out.push_back(std::move(e));
    }
  }
  return out;
}

FormalSum expand_certificate(const MembershipCertificate& cert, const std::vector<FormalSum>& embedded) {
  const Alphabet a = cert.target.alphabet();
  const int t = cert.target.tensor_degree();
  FormalSum out(a, t);
  for (const auto& term : cert.terms) {
    if (term.relation >= embedded.size()) throw InputError("certificate references an unknown relation");
    const FormalSum& r = embedded[term.relation];
    for (const auto& [w, c] : r.terms()) {
      TensorWord full(static_cast<std::size_t>(t));
      for (std::size_t f = 0; f < full.size(); ++f) full[f] = concat(term.left[f], w[f], term.right[f]);
      out.add_term(full, term.coefficient * c);
    }
  }
  return out;
}

bool certificate_reconstructs(const MembershipCertificate& cert, const std::vector<FormalSum>& embedded) {
  return expand_certificate(cert, embedded) == cert.target;
}

std::optional<MembershipCertificate> ideal_membership(const FormalSum& target, const std::vector<FormalSum>& relations,
                                                      int degree_bound) {
  if (degree_bound < 0) throw InputError("degree bound must be nonnegative");
  for (const auto& r : relations) {
    if (!(r.alphabet() == target.alphabet())) throw InputError("target and relations use different alphabets");
  }
  MembershipCertificate cert{target, {}, degree_bound};
  if (target.is_zero()) return cert;
  if (relations.empty() || target.degree() > degree_bound) return std::nullopt;

  const Alphabet a = target.alphabet();
  const std::size_t t = static_cast<std::size_t>(target.tensor_degree());
  const std::size_t relation_count = relations.size();
  auto basis = cached_basis(relations, degree_bound);

  std::map<Word, ReductionBasis::Reduction, LengthLex> memo;
  auto reduction_of = [&](const Word& w) -> const ReductionBasis::Reduction& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, basis->reduce(FormalSum::monomial(a, w))).first;
    return it->second;
  };

  // a_1 ⊗ ... ⊗ a_t - N(a_1) ⊗ ... ⊗ N(a_t)
  //   = sum_f N(a_1) ⊗ ... ⊗ N(a_{f-1}) ⊗ (a_f - N(a_f)) ⊗ a_{f+1} ⊗ ... ⊗ a_t.
  FormalSum residual(a, static_cast<int>(t));
  std::map<std::tuple<TensorWord, std::size_t, TensorWord>, Rational> combined;
  for (const auto& [w, c] : target.terms()) {
    std::vector<std::pair<TensorWord, Rational>> prefix{{TensorWord{}, c}};
    for (std::size_t f = 0; f < t; ++f) {
      const auto& red = reduction_of(w[f]);
      for (const auto& [pre, pc] : prefix) {
        for (const auto& d : red.difference) {
          TensorWord left = pre;
          left.push_back(d.left[0]);
          TensorWord right(pre.size(), Word{});
          right.push_back(d.right[0]);
          for (std::size_t g = f + 1; g < t; ++g) {
            left.push_back(w[g]);
            right.emplace_back();
          }
          combined[{left, f * relation_count + d.relation, right}] += pc * d.coefficient;
        }
      }
      std::vector<std::pair<TensorWord, Rational>> next;
      for (const auto& [pre, pc] : prefix) {
        for (const auto& [nw, nc] : red.normal_form.terms()) {
          TensorWord ext = pre;
          ext.push_back(nw[0]);
          next.emplace_back(std::move(ext), pc * nc);
        }
      }
      prefix = std::move(next);
    }
    for (const auto& [full, pc] : prefix) residual.add_term(full, pc);
  }
  if (!residual.is_zero()) return std::nullopt;

  for (auto& [key, coeff] : combined) {
    if (sgn(coeff) == 0) continue;
    cert.terms.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), coeff});
  }
  return cert;
}

}  // namespace definetti::algebra
