#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/formal_sum.hpp"
#include "matrix.hpp"

namespace definetti::algebra {

/// Matrix for every letter of the alphabet (index = letter).
using Assignment = std::vector<RationalMatrix>;

/// Homomorphic evaluation; factor f of a tensor word is evaluated under assignments[f]
/// and factors are combined by Kronecker product. The empty word maps to the identity.
RationalMatrix eval_representation(const FormalSum& s, const std::vector<Assignment>& assignments);
RationalMatrix eval_representation(const FormalSum& s, const Assignment& assignment);

/// Scalar character u_{i,j} -> g(i,j), P -> p as an assignment of 1x1 matrices.
Assignment scalar_character(const Alphabet& alphabet, const RationalMatrix& g, const Rational& p);

struct Character {
  std::string label;
  Assignment assignment;
};

/// Scalar characters annihilating every relation: signed permutation matrices (n <= 4),
/// the reflections 2/n J - g through the all-ones direction, and u = 0; P ranges over
/// {1, 0} when the relations mention P.
std::vector<Character> admissible_characters(const Alphabet& alphabet, const std::vector<FormalSum>& relations);

struct Refutation {
  std::vector<std::string> labels;  // one per tensor factor
  Rational value;
};

/// Searches products of admissible characters (one per tensor factor) for a nonzero value
/// of the target. A hit proves the target lies outside the ideal.
std::optional<Refutation> refute_membership(const FormalSum& target, const std::vector<FormalSum>& relations);

}  // namespace definetti::algebra
