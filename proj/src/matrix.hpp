#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace definetti {

/// Dense square matrix over the rationals; small dimensions only.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Rational(0)) {}
  RationalMatrix(std::size_t dim, std::initializer_list<Rational> row_major);

  static RationalMatrix identity(std::size_t dim);
  static RationalMatrix scalar(std::size_t dim, const Rational& value);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t dim() const { return dim_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  bool is_zero() const;
  bool commutes_with(const RationalMatrix& other) const { return (*this) * other == other * (*this); }

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Kronecker product a (x) b.
  friend RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

  std::string to_text() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

}  // namespace definetti
