#pragma once

#include <functional>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "partitions.hpp"
#include "word_table.hpp"

namespace definetti {

/// One argument b_left * x_letter * b_right of a B-functional.
struct BArgument {
  RationalMatrix left;
  int letter = 1;
  RationalMatrix right;
};

/// Argument in right-absorbed form x_letter * b.
struct RightArgument {
  int letter = 1;
  RationalMatrix right;
};

/// A sequence of B-functionals rho^(k), k <= max_order, over B = d x d rational matrices.
///
/// Arguments are normalized before the kernel sees them: the left coefficient of the
/// first argument is pulled out of the functional and every other left coefficient is
/// absorbed into the previous argument's right coefficient. The bimodule identity
///   rho(b0 a1 b1, a2, ..., an bn) = b0 rho(a1, b1 a2, ..., an) bn
/// then holds whenever the kernel is right-linear in its last argument.
class BFunctionalSeq {
 public:
  using Kernel = std::function<RationalMatrix(std::span<const RightArgument>)>;

  BFunctionalSeq(std::size_t dimension, int max_order, bool commutative_base, Kernel kernel);

  /// rho(x_{i1} c1, ..., x_{ik} ck) = scalars[i] * A_{i1} c1 A_{i2} c2 ... A_{ik} ck,
  /// with A_l = letter_matrices[l - 1].
  static BFunctionalSeq from_word_table(const WordTable& scalars, std::vector<RationalMatrix> letter_matrices,
                                        bool commutative_base);

  std::size_t dimension() const { return dimension_; }
  int max_order() const { return max_order_; }
  bool commutative_base() const { return commutative_base_; }

  /// rho^(k)(args) with k = args.size().
  RationalMatrix evaluate(std::span<const BArgument> args) const;

 private:
  std::size_t dimension_;
  int max_order_;
  bool commutative_base_;
  Kernel kernel_;
};

enum class ExtractionOrder { Leftmost, Rightmost };

/// Nested evaluation of rho^(pi) for noncrossing pi: repeatedly replaces an interval block
/// V = (l+1..l+s) by rho^(s)(a_{l+1}, ..., a_{l+s}) multiplied onto a_l (or onto the left
/// of a_{l+s+1} when l = 0). Throws InputError for crossing pi.
RationalMatrix eval_pi_nested(const BFunctionalSeq& rho, const SetPartition& pi, std::span<const BArgument> args,
                              ExtractionOrder order = ExtractionOrder::Leftmost);

/// Block-product evaluation over a commutative base: product over blocks of
/// rho^(|V|)(a_V). Requires commutative_base() and rejects inputs whose block values or
/// coefficients fail a commutator check.
RationalMatrix eval_pi_product(const BFunctionalSeq& rho, const SetPartition& pi, std::span<const BArgument> args);

/// B-valued moment: sum over the lattice of `kind` of rho^(pi)(args). CLASSICAL uses the
/// block product (commutative base required); FREE and BOOLEAN use nested evaluation.
RationalMatrix operator_moment(const BFunctionalSeq& rho, CumulantKind kind, std::span<const BArgument> args);

}  // namespace definetti
