#include "algebra/relations.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace definetti::algebra {

namespace {

struct SchemaInfo {
  SchemaName name;
  const char* text;
};

constexpr SchemaInfo kSchemas[] = {
    {SchemaName::Orthogonal, "orthogonal"},
    {SchemaName::Magic, "magic"},
    {SchemaName::Cubic, "cubic"},
    {SchemaName::Bistochastic, "bistochastic"},
    {SchemaName::MagicPrime, "magic-prime"},
    {SchemaName::BistochasticPrime, "bistochastic-prime"},
    {SchemaName::POrthogonal, "p-orthogonal"},
    {SchemaName::PMagic, "p-magic"},
    {SchemaName::PCubic, "p-cubic"},
    {SchemaName::PBistochastic, "p-bistochastic"},
    {SchemaName::PPrime, "p-prime"},
    {SchemaName::PMagicPrime, "p-magic-prime"},
    {SchemaName::PBistochasticPrime, "p-bistochastic-prime"},
};

class Builder {
 public:
  explicit Builder(int n) : a_{n} {}

  FormalSum word(std::initializer_list<int> letters, bool with_p) const {
    Word w(letters);
    if (with_p) w.push_back(a_.p());
    return FormalSum::monomial(a_, w);
  }
  FormalSum one(bool with_p) const {
    return with_p ? FormalSum::monomial(a_, {a_.p()}) : FormalSum::unit(a_);
  }

  void push(FormalSum r) {
    if (r.is_zero()) return;
    if (std::find(out_.begin(), out_.end(), r) != out_.end()) return;
    out_.push_back(std::move(r));
  }

  void orthogonality(bool with_p) {
    const int n = a_.n;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        FormalSum r(a_, 1);
        for (int k = 1; k <= n; ++k) r += word({a_.u(i, k), a_.u(j, k)}, with_p);
        if (i == j) r -= one(with_p);
        push(std::move(r));
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        FormalSum r(a_, 1);
        for (int k = 1; k <= n; ++k) r += word({a_.u(k, i), a_.u(k, j)}, with_p);
        if (i == j) r -= one(with_p);
        push(std::move(r));
      }
    }
  }

  void idempotents() {
    for (int i = 1; i <= a_.n; ++i)
      for (int j = 1; j <= a_.n; ++j) push(word({a_.u(i, j), a_.u(i, j)}, false) - word({a_.u(i, j)}, false));
  }

  void cubic(bool with_p) {
    const int n = a_.n;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (j != k) push(word({a_.u(i, j), a_.u(i, k)}, with_p));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (j != k) push(word({a_.u(j, i), a_.u(k, i)}, with_p));
  }

  FormalSum row_sum(int i, bool with_p) const {
    FormalSum r(a_, 1);
    for (int j = 1; j <= a_.n; ++j) r += word({a_.u(i, j)}, with_p);
    return r;
  }
  FormalSum column_sum(int i, bool with_p) const {
    FormalSum r(a_, 1);
    for (int j = 1; j <= a_.n; ++j) r += word({a_.u(j, i)}, with_p);
    return r;
  }

  void stochastic(bool with_p) {
    for (int i = 1; i <= a_.n; ++i) push(row_sum(i, with_p) - one(with_p));
    for (int i = 1; i <= a_.n; ++i) push(column_sum(i, with_p) - one(with_p));
  }

  void prime(bool with_p) {
    for (int i = 1; i <= a_.n; ++i)
      for (int k = 1; k <= a_.n; ++k) push(row_sum(i, with_p) - column_sum(k, with_p));
  }

  void projection_p() { push(word({a_.p(), a_.p()}, false) - word({a_.p()}, false)); }

  std::vector<FormalSum> take() { return std::move(out_); }

 private:
  Alphabet a_;
  std::vector<FormalSum> out_;
};

std::string normalize_name(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '_' || c == ' ') c = '-';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (!out.empty() && out.back() == '\'') {
    out.pop_back();
    out += "-prime";
  }
  return out;
}

}  // namespace

std::vector<SchemaName> all_schemas() {
  std::vector<SchemaName> out;
  for (const auto& s : kSchemas) out.push_back(s.name);
  return out;
}

std::string schema_name_text(SchemaName name) {
  for (const auto& s : kSchemas)
    if (s.name == name) return s.text;
  return "?";
}

SchemaName RelationSchema::parse_name(std::string_view text) {
  const std::string key = normalize_name(text);
  for (const auto& s : kSchemas)
    if (key == s.text) return s.name;
  throw InputError("unknown relation schema '" + std::string(text) + "'");
}

std::string RelationSchema::name_text() const { return schema_name_text(name); }

bool RelationSchema::uses_p() const { return name >= SchemaName::POrthogonal; }

std::vector<FormalSum> instantiate_relations(const RelationSchema& schema) {
  if (schema.n < 1) throw InputError("schema size n must be at least 1");
  Builder b(schema.n);
  switch (schema.name) {
    case SchemaName::Orthogonal:
      b.orthogonality(false);
      break;
    case SchemaName::Magic:
      b.orthogonality(false);
      b.idempotents();
      break;
    case SchemaName::Cubic:
      b.orthogonality(false);
      b.cubic(false);
      break;
    case SchemaName::Bistochastic:
      b.orthogonality(false);
      b.stochastic(false);
      break;
    case SchemaName::MagicPrime:
      b.orthogonality(false);
      b.cubic(false);
      b.prime(false);
      break;
    case SchemaName::BistochasticPrime:
      b.orthogonality(false);
      b.prime(false);
      break;
    case SchemaName::POrthogonal:
      b.orthogonality(true);
      b.projection_p();
      break;
    case SchemaName::PMagic:
      b.orthogonality(true);
      b.idempotents();
      b.projection_p();
      break;
    case SchemaName::PCubic:
      b.orthogonality(true);
      b.cubic(true);
      b.projection_p();
      break;
    case SchemaName::PBistochastic:
      b.orthogonality(true);
      b.stochastic(true);
      b.projection_p();
      break;
    case SchemaName::PPrime:
      b.prime(true);
      b.projection_p();
      break;
    case SchemaName::PMagicPrime:
      b.orthogonality(true);
      b.cubic(true);
      b.prime(true);
      b.projection_p();
      break;
    case SchemaName::PBistochasticPrime:
      b.orthogonality(true);
      b.prime(true);
      b.projection_p();
      break;
  }
  return b.take();
}

std::vector<FormalSum> star_closure(const std::vector<FormalSum>& relations) {
  std::vector<FormalSum> out = relations;
  for (const auto& r : relations) {
    FormalSum s = star(r);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

FormalSum delta_image(const FormalSum& s) {
  if (s.tensor_degree() != 1) throw InputError("coproduct image is defined on tensor degree 1");
  const Alphabet& a = s.alphabet();
  std::vector<FormalSum> images;
  for (int letter = 0; letter < a.size(); ++letter) {
    FormalSum img(a, 2);
    if (a.is_p(letter)) {
      img.add_term({{letter}, {letter}}, 1);
    } else {
      const int i = a.row(letter);
      const int j = a.col(letter);
      for (int k = 1; k <= a.n; ++k) img.add_term({{a.u(i, k)}, {a.u(k, j)}}, 1);
    }
    images.push_back(std::move(img));
  }
  FormalSum out(a, 2);
  for (const auto& [w, c] : s.terms()) {
    FormalSum term = FormalSum::unit(a, 2);
    for (int letter : w[0]) term = term * images[static_cast<std::size_t>(letter)];
    out += term * c;
  }
  return out;
}

std::vector<FormalSum> tensor_embed(const std::vector<FormalSum>& relations, TensorSide side) {
  std::vector<FormalSum> out;
  for (const auto& r : relations) {
    if (r.tensor_degree() != 1) throw InputError("tensor_embed expects tensor degree 1 relations");
    const FormalSum one = FormalSum::unit(r.alphabet());
    out.push_back(side == TensorSide::Left ? tensor(r, one) : tensor(one, r));
  }
  return out;
}

}  // namespace definetti::algebra
