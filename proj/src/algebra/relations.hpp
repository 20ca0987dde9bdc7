#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algebra/formal_sum.hpp"

namespace definetti::algebra {

enum class SchemaName {
  Orthogonal,
  Magic,
  Cubic,
  Bistochastic,
  MagicPrime,
  BistochasticPrime,
  POrthogonal,
  PMagic,
  PCubic,
  PBistochastic,
  PPrime,
  PMagicPrime,
  PBistochasticPrime,
};

struct RelationSchema {
  SchemaName name = SchemaName::Orthogonal;
  int n = 1;

  /// Case-insensitive; '-' and '_' are interchangeable and a trailing "'" means prime,
  /// e.g. "p-magic", "P_CUBIC", "magic'", "bistochastic-prime". Throws InputError.
  static SchemaName parse_name(std::string_view text);
  std::string name_text() const;
  bool uses_p() const;
  Alphabet alphabet() const { return Alphabet{n}; }

  friend bool operator==(const RelationSchema&, const RelationSchema&) = default;
};

std::vector<SchemaName> all_schemas();
std::string schema_name_text(SchemaName name);

/// Defining relations of the schema at size n, each an element r with r = 0:
/// orthogonality sums (rows, then columns, identical sums listed once), the extra
/// family relations, then P^2 - P for P-schemas.
std::vector<FormalSum> instantiate_relations(const RelationSchema& schema);

/// The relation list followed by the star of every relation whose star is not already
/// listed, so the generated two-sided ideal is a *-ideal.
std::vector<FormalSum> star_closure(const std::vector<FormalSum>& relations);

/// Coproduct image: u_{i,j} -> sum_k u_{i,k} ⊗ u_{k,j}, P -> P ⊗ P, 1 -> 1 ⊗ 1.
FormalSum delta_image(const FormalSum& s);

enum class TensorSide { Left, Right };

/// r ⊗ 1 (LEFT) or 1 ⊗ r (RIGHT) for every relation.
std::vector<FormalSum> tensor_embed(const std::vector<FormalSum>& relations, TensorSide side);

}  // namespace definetti::algebra
