#include "word_table.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace definetti {

CumulantKind parse_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "classical") return CumulantKind::Classical;
  if (s == "free") return CumulantKind::Free;
  if (s == "boolean") return CumulantKind::Boolean;
  throw InputError("unknown cumulant kind '" + std::string(name) + "'");
}

std::string kind_name(CumulantKind kind) {
  switch (kind) {
    case CumulantKind::Classical:
      return "classical";
    case CumulantKind::Free:
      return "free";
    case CumulantKind::Boolean:
      return "boolean";
  }
  return "?";
}

Lattice lattice_of(CumulantKind kind) {
  switch (kind) {
    case CumulantKind::Classical:
      return Lattice::All;
    case CumulantKind::Free:
      return Lattice::Noncrossing;
    case CumulantKind::Boolean:
      return Lattice::Interval;
  }
  return Lattice::All;
}

WordTable::WordTable(int alphabet, int max_order) : alphabet_(alphabet), max_order_(max_order) {
  if (alphabet < 1) throw InputError("alphabet size must be positive");
  if (max_order < 0) throw InputError("maximal order must be nonnegative");
  offsets_.assign(static_cast<std::size_t>(max_order) + 2, 0);
  powers_.assign(static_cast<std::size_t>(max_order) + 1, 1);
  for (int k = 1; k <= max_order; ++k) {
    powers_[k] = powers_[k - 1] * static_cast<std::size_t>(alphabet);
    if (powers_[k] > kMaxEntries) throw CapacityError("word table too large (n^K exceeds 2^22)");
  }
  for (int k = 0; k <= max_order; ++k) offsets_[k + 1] = offsets_[k] + powers_[k];
  values_.assign(offsets_.back(), Rational(0));
}

bool WordTable::contains(std::span<const int> word) const {
  if (static_cast<int>(word.size()) > max_order_) return false;
  return std::all_of(word.begin(), word.end(), [&](int c) { return c >= 1 && c <= alphabet_; });
}

std::size_t WordTable::index_of(std::span<const int> word) const {
  if (static_cast<int>(word.size()) > max_order_) {
    throw InputError("word " + word_to_text(word) + " longer than the table order");
  }
  std::size_t idx = 0;
  for (int c : word) {
    if (c < 1 || c > alphabet_) throw InputError("letter out of range in word " + word_to_text(word));
    idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(c - 1);
  }
  return offsets_[word.size()] + idx;
}

IndexWord WordTable::word_at(std::size_t index) const {
  int order = 0;
  while (order <= max_order_ && index >= offsets_[order + 1]) ++order;
  if (order > max_order_) throw InputError("word index out of range");
  std::size_t rel = index - offsets_[order];
  IndexWord w(static_cast<std::size_t>(order));
  for (int pos = order - 1; pos >= 0; --pos) {
    w[pos] = static_cast<int>(rel % static_cast<std::size_t>(alphabet_)) + 1;
    rel /= static_cast<std::size_t>(alphabet_);
  }
  return w;
}

MomentFunctional::MomentFunctional(int alphabet, int max_order) : table(alphabet, max_order) {
  table[0] = 1;
}

MomentFunctional MomentFunctional::from_function(int alphabet, int max_order,
                                                 const std::function<Rational(const IndexWord&)>& value) {
  MomentFunctional m(alphabet, max_order);
  for (std::size_t i = 1; i < m.table.size(); ++i) m.table[i] = value(m.table.word_at(i));
  return m;
}

CumulantTable::CumulantTable(CumulantKind k, int alphabet, int max_order)
    : kind(k), table(alphabet, max_order) {}

CumulantTable CumulantTable::single_variable(CumulantKind kind, const std::vector<Rational>& by_order) {
  CumulantTable t(kind, 1, static_cast<int>(by_order.size()));
  for (std::size_t k = 1; k <= by_order.size(); ++k) t.table[k] = by_order[k - 1];
  return t;
}

void for_each_word(int alphabet, int length, const std::function<void(const IndexWord&)>& visit) {
  IndexWord w(static_cast<std::size_t>(length), 1);
  while (true) {
    visit(w);
    int pos = length - 1;
    while (pos >= 0 && w[pos] == alphabet) {
      w[pos] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++w[pos];
  }
}

}  // namespace definetti
