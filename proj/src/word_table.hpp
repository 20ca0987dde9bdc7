#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partitions.hpp"
#include "rational.hpp"

namespace definetti {

enum class CumulantKind { Classical, Free, Boolean };

CumulantKind parse_kind(std::string_view name);
std::string kind_name(CumulantKind kind);
/// CLASSICAL <-> ALL, FREE <-> NONCROSSING, BOOLEAN <-> INTERVAL.
Lattice lattice_of(CumulantKind kind);

/// Dense table of rationals over every word of length <= max_order in letters 1..n.
/// Words are stored in length-then-lexicographic order; the empty word has index 0.
class WordTable {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 22;

  WordTable() = default;
  WordTable(int alphabet, int max_order);

  int alphabet() const { return alphabet_; }
  int max_order() const { return max_order_; }
  std::size_t size() const { return values_.size(); }

  std::size_t index_of(std::span<const int> word) const;
  IndexWord word_at(std::size_t index) const;
  /// Index range [begin, end) holding the words of length `order`.
  std::size_t begin_of(int order) const { return offsets_[order]; }
  std::size_t end_of(int order) const { return offsets_[order + 1]; }

  const Rational& at(std::span<const int> word) const { return values_[index_of(word)]; }
  Rational& at(std::span<const int> word) { return values_[index_of(word)]; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  Rational& operator[](std::size_t i) { return values_[i]; }

  bool contains(std::span<const int> word) const;

  friend bool operator==(const WordTable&, const WordTable&) = default;

 private:
  int alphabet_ = 0;
  int max_order_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> powers_;
  std::vector<Rational> values_;
};

/// Truncated joint-moment functional mu; mu(empty word) == 1.
struct MomentFunctional {
  WordTable table;

  MomentFunctional() = default;
  MomentFunctional(int alphabet, int max_order);

  int alphabet() const { return table.alphabet(); }
  int max_order() const { return table.max_order(); }
  const Rational& operator()(std::span<const int> word) const { return table.at(word); }
  Rational& operator()(std::span<const int> word) { return table.at(word); }

  /// Builds moments from a callback over words of length >= 1.
  static MomentFunctional from_function(int alphabet, int max_order,
                                        const std::function<Rational(const IndexWord&)>& value);

  friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;
};

/// Classical, free or boolean cumulants indexed by words; the empty word is unused (0).
struct CumulantTable {
  CumulantKind kind = CumulantKind::Classical;
  WordTable table;

  CumulantTable() = default;
  CumulantTable(CumulantKind kind, int alphabet, int max_order);

  int alphabet() const { return table.alphabet(); }
  int max_order() const { return table.max_order(); }
  const Rational& operator()(std::span<const int> word) const { return table.at(word); }
  Rational& operator()(std::span<const int> word) { return table.at(word); }

  /// Single-variable table with `by_order[k-1]` as the order-k cumulant.
  static CumulantTable single_variable(CumulantKind kind, const std::vector<Rational>& by_order);

  friend bool operator==(const CumulantTable&, const CumulantTable&) = default;
};

/// Visits every word of the given length over letters 1..n in lexicographic order.
void for_each_word(int alphabet, int length, const std::function<void(const IndexWord&)>& visit);

}  // namespace definetti
