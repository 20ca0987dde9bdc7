#include "matrix.hpp"

#include <algorithm>

#include "errors.hpp"

namespace definetti {

RationalMatrix::RationalMatrix(std::size_t dim, std::initializer_list<Rational> row_major)
    : dim_(dim), data_(row_major) {
  if (data_.size() != dim * dim) throw InputError("matrix initializer has the wrong number of entries");
}

RationalMatrix RationalMatrix::identity(std::size_t dim) { return scalar(dim, 1); }

RationalMatrix RationalMatrix::scalar(std::size_t dim, const Rational& value) {
  RationalMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (dim_ != other.dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (dim_ != other.dim_) throw InputError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.dim_ != b.dim_) throw InputError("matrix dimension mismatch");
  const std::size_t d = a.dim_;
  RationalMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t da = a.dim_;
  const std::size_t db = b.dim_;
  RationalMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

std::string RationalMatrix::to_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j) out += ' ';
      out += to_string((*this)(i, j));
    }
  }
  return out + "]";
}

}  // namespace definetti
