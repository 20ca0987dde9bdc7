#pragma once

#include <span>

#include "partitions.hpp"
#include "word_table.hpp"

namespace definetti {

/// Multiplicative evaluation: product over blocks V = (i1 < ... < is) of
/// table[(w_i1, ..., w_is)]. Throws InputError if pi is outside the lattice of
/// table.kind or its size differs from |w|.
Rational eval_pi_scalar(const CumulantTable& table, const SetPartition& pi, std::span<const int> word);

/// mu(w) = sum over pi in lattice(kind)(|w|) of eval_pi_scalar(cum, pi, w).
MomentFunctional moments_from_cumulants(const CumulantTable& cumulants);

/// Inverse of moments_from_cumulants, resolved in increasing order:
/// c(w) = mu(w) - sum over pi != 1_k of eval_pi_scalar(c, pi, w).
CumulantTable cumulants_from_moments(const MomentFunctional& moments, CumulantKind kind);

}  // namespace definetti
