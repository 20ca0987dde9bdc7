#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace definetti::algebra {

/// Letters of the free algebra on u_{i,j} (1 <= i,j <= n) and P. u_{i,j} is letter
/// (i-1)n + (j-1) and P is letter n^2, so letter order is u11 < u12 < ... < unn < P.
struct Alphabet {
  int n = 1;

  int size() const { return n * n + 1; }
  int u(int i, int j) const { return (i - 1) * n + (j - 1); }
  int p() const { return n * n; }
  bool is_p(int letter) const { return letter == n * n; }
  int row(int letter) const { return letter / n + 1; }
  int col(int letter) const { return letter % n + 1; }
  std::string letter_name(int letter) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using Word = std::vector<int>;
/// One word per tensor factor.
using TensorWord = std::vector<Word>;

/// Length first, then lexicographic by letter.
struct LengthLex {
  bool operator()(const Word& a, const Word& b) const;
  bool operator()(const TensorWord& a, const TensorWord& b) const;
};

std::string word_text(const Alphabet& alphabet, const Word& w);

/// Rational combination of t-fold tensor words, held canonically: zero coefficients are
/// dropped on every update and terms iterate in length-lex order.
class FormalSum {
 public:
  using Terms = std::map<TensorWord, Rational, LengthLex>;

  FormalSum() = default;
  FormalSum(Alphabet alphabet, int tensor_degree);

  static FormalSum monomial(Alphabet alphabet, const Word& w, const Rational& c = 1);
  static FormalSum tensor_monomial(Alphabet alphabet, const TensorWord& w, const Rational& c = 1);
  static FormalSum unit(Alphabet alphabet, int tensor_degree = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  int tensor_degree() const { return tensor_degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Longest word in any tensor factor.
  int degree() const;

  void add_term(const TensorWord& w, const Rational& c);
  Rational coefficient(const TensorWord& w) const;

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  FormalSum& operator*=(const Rational& c);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(FormalSum a, const Rational& c) { return a *= c; }
  friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
  /// Factorwise concatenation product.
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  /// Text form, e.g. "u(1,1)u(1,2)P - 1/2 * 1" or "u(1,1) ⊗ P".
  std::string to_text() const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Alphabet alphabet_;
  int tensor_degree_ = 1;
  Terms terms_;
};

/// Canonical form. Sums are stored canonically, so this only matters for values built
/// term by term through raw maps; kept for API completeness and idempotent.
FormalSum normalize(const FormalSum& s);

/// Reverses every word; coefficients are rational and stay fixed. Rejects tensor degree > 1.
FormalSum star(const FormalSum& s);

/// a ⊗ b; the result has tensor degree a.degree + b.degree.
FormalSum tensor(const FormalSum& a, const FormalSum& b);

/// Parses "c * u(i,j)u(k,l)P ⊗ ... + ...". Coefficients are optional rationals followed
/// by '*'; "1" is the empty word; "⊗", "(x)" and "@" separate tensor factors. A bare
/// rational c stands for c times the empty word. Throws InputError.
FormalSum parse_formal_sum(const Alphabet& alphabet, std::string_view text);

}  // namespace definetti::algebra
