#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace definetti {

/// A word i = (i_1, ..., i_k) over the alphabet {1..n}; letters are 1-based.
using IndexWord = std::vector<int>;

enum class Lattice { All, Noncrossing, Interval };
enum class BlockConstraint { Any, Even, AtMostTwo, ExactlyTwo };

/// One of the twelve partition families: a lattice restricted by a block-size rule.
struct FamilyTag {
  Lattice lattice = Lattice::All;
  BlockConstraint blocks = BlockConstraint::Any;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

  /// Accepts "p", "all", "nc", "i", "interval" with an optional suffix "h", "b" or "2"
  /// (an underscore separator is allowed, e.g. "nc_2"). Throws InputError.
  static FamilyTag parse(std::string_view name);
  /// Short canonical name: "p", "p_h", "nc_2", "i_b", ...
  std::string name() const;
};

/// All twelve families in lattice-major order.
std::vector<FamilyTag> all_families();

/// A partition of {1..k}, always held in canonical form: blocks sorted by minimum,
/// elements ascending within each block. Canonical form is the only equality notion.
class SetPartition {
 public:
  SetPartition() = default;

  /// Validates and canonicalizes. Throws InputError if the blocks do not partition {1..k}.
  static SetPartition from_blocks(int ground_size, std::vector<std::vector<int>> blocks);
  /// Builds from a restricted-growth string (0-based labels, rgs[0] == 0).
  static SetPartition from_rgs(std::span<const int> rgs);
  /// Parses the text format "1 3|2"; the empty string is the empty partition.
  static SetPartition parse(std::string_view text);

  static SetPartition one_block(int k);
  static SetPartition discrete(int k);

  int ground_size() const { return ground_size_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// 0-based block label of each point; labels follow canonical block order.
  std::vector<int> labels() const;

  bool is_noncrossing() const;
  bool is_interval() const;

  std::string to_text() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int ground_size_ = 0;
  std::vector<std::vector<int>> blocks_;
};

bool in_family(const SetPartition& pi, FamilyTag family);

/// Members of D(k) in restricted-growth-string lexicographic order. k = 0 yields the
/// empty partition for every family. Practical limit: k <= 14 for the ALL lattice.
std::vector<SetPartition> enumerate_partitions(int k, FamilyTag family);

/// Streaming variant of enumerate_partitions with the same order.
void for_each_partition(int k, FamilyTag family, const std::function<void(const SetPartition&)>& visit);

/// ker(w): positions s, t share a block iff w_s == w_t.
SetPartition kernel(std::span<const int> word);

/// pi <= sigma in the refinement order. Throws InputError on ground-size mismatch.
bool refines(const SetPartition& pi, const SetPartition& sigma);

/// pi <= ker(w), evaluated without materializing the kernel.
bool refines_kernel(const SetPartition& pi, std::span<const int> word);

/// pi1 on the first k1 points followed by pi2 shifted by k1.
SetPartition concatenate(const SetPartition& first, const SetPartition& second);

std::string word_to_text(std::span<const int> word);

}  // namespace definetti
