#include "partitions.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace definetti {

namespace {

bool block_size_ok(std::size_t size, BlockConstraint c) {
  switch (c) {
    case BlockConstraint::Any:
      return true;
    case BlockConstraint::Even:
      return size % 2 == 0;
    case BlockConstraint::AtMostTwo:
      return size <= 2;
    case BlockConstraint::ExactlyTwo:
      return size == 2;
  }
  return false;
}

}  // namespace

FamilyTag FamilyTag::parse(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  FamilyTag tag;
  std::string_view rest;
  auto starts = [&](std::string_view prefix) {
    if (std::string_view(s).substr(0, prefix.size()) == prefix) {
      rest = std::string_view(s).substr(prefix.size());
      return true;
    }
    return false;
  };
  if (starts("interval")) {
    tag.lattice = Lattice::Interval;
  } else if (starts("all")) {
    tag.lattice = Lattice::All;
  } else if (starts("nc")) {
    tag.lattice = Lattice::Noncrossing;
  } else if (starts("p")) {
    tag.lattice = Lattice::All;
  } else if (starts("i")) {
    tag.lattice = Lattice::Interval;
  } else {
    throw InputError("unknown partition family '" + std::string(name) + "'");
  }
  if (!rest.empty() && (rest.front() == '_' || rest.front() == '-')) rest.remove_prefix(1);
  if (rest.empty()) {
    tag.blocks = BlockConstraint::Any;
  } else if (rest == "h") {
    tag.blocks = BlockConstraint::Even;
  } else if (rest == "b") {
    tag.blocks = BlockConstraint::AtMostTwo;
  } else if (rest == "2") {
    tag.blocks = BlockConstraint::ExactlyTwo;
  } else {
    throw InputError("unknown block constraint in family '" + std::string(name) + "'");
  }
  return tag;
}

std::string FamilyTag::name() const {
  std::string out;
  switch (lattice) {
    case Lattice::All:
      out = "p";
      break;
    case Lattice::Noncrossing:
      out = "nc";
      break;
    case Lattice::Interval:
      out = "i";
      break;
  }
  switch (blocks) {
    case BlockConstraint::Any:
      break;
    case BlockConstraint::Even:
      out += "_h";
      break;
    case BlockConstraint::AtMostTwo:
      out += "_b";
      break;
    case BlockConstraint::ExactlyTwo:
      out += "_2";
      break;
  }
  return out;
}

std::vector<FamilyTag> all_families() {
  std::vector<FamilyTag> out;
  for (Lattice l : {Lattice::All, Lattice::Noncrossing, Lattice::Interval}) {
    for (BlockConstraint b :
         {BlockConstraint::Any, BlockConstraint::Even, BlockConstraint::AtMostTwo, BlockConstraint::ExactlyTwo}) {
      out.push_back({l, b});
    }
  }
  return out;
}

SetPartition SetPartition::from_blocks(int ground_size, std::vector<std::vector<int>> blocks) {
  if (ground_size < 0) throw InputError("negative ground size");
  std::vector<char> seen(static_cast<std::size_t>(ground_size) + 1, 0);
  for (auto& block : blocks) {
    if (block.empty()) throw InputError("partition has an empty block");
    for (int x : block) {
      if (x < 1 || x > ground_size) throw InputError("partition element out of range");
      if (seen[x]) throw InputError("partition blocks are not disjoint");
      seen[x] = 1;
    }
    std::sort(block.begin(), block.end());
  }
  for (int x = 1; x <= ground_size; ++x) {
    if (!seen[x]) throw InputError("partition blocks do not cover {1.." + std::to_string(ground_size) + "}");
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.ground_size_ = ground_size;
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::from_rgs(std::span<const int> rgs) {
  SetPartition p;
  p.ground_size_ = static_cast<int>(rgs.size());
  for (std::size_t pos = 0; pos < rgs.size(); ++pos) {
    auto label = static_cast<std::size_t>(rgs[pos]);
    if (label > p.blocks_.size()) throw InputError("not a restricted-growth string");
    if (label == p.blocks_.size()) p.blocks_.emplace_back();
    p.blocks_[label].push_back(static_cast<int>(pos) + 1);
  }
  return p;
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int max_elem = 0;
  std::size_t count = 0;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) return SetPartition{};
  std::stringstream whole(s);
  std::string block_text;
  while (std::getline(whole, block_text, '|')) {
    std::stringstream bs(block_text);
    std::vector<int> block;
    std::string tok;
    while (bs >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InputError("malformed partition text '" + s + "'");
      }
      if (used != tok.size()) throw InputError("malformed partition text '" + s + "'");
      block.push_back(v);
      max_elem = std::max(max_elem, v);
      ++count;
    }
    blocks.push_back(std::move(block));
  }
  if (static_cast<std::size_t>(max_elem) != count) {
    throw InputError("partition text '" + s + "' does not cover {1..k}");
  }
  return from_blocks(max_elem, std::move(blocks));
}

SetPartition SetPartition::one_block(int k) {
  if (k == 0) return {};
  std::vector<int> all(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) all[i] = i + 1;
  return from_blocks(k, {all});
}

SetPartition SetPartition::discrete(int k) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({i});
  return from_blocks(k, std::move(blocks));
}

std::vector<int> SetPartition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(ground_size_));
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int x : blocks_[b]) out[x - 1] = static_cast<int>(b);
  }
  return out;
}

bool SetPartition::is_noncrossing() const {
  // Two blocks cross iff one has an element strictly inside a gap of the other and
  // another element outside that gap.
  for (std::size_t a = 0; a < blocks_.size(); ++a) {
    const auto& va = blocks_[a];
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      if (a == b) continue;
      const auto& vb = blocks_[b];
      for (std::size_t g = 0; g + 1 < va.size(); ++g) {
        int lo = va[g];
        int hi = va[g + 1];
        bool inside = false;
        bool outside = false;
        for (int x : vb) {
          if (x > lo && x < hi) {
            inside = true;
          } else {
            outside = true;
          }
        }
        if (inside && outside) return false;
      }
    }
  }
  return true;
}

bool SetPartition::is_interval() const {
  for (const auto& block : blocks_) {
    if (block.back() - block.front() + 1 != static_cast<int>(block.size())) return false;
  }
  return true;
}

std::string SetPartition::to_text() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

bool in_family(const SetPartition& pi, FamilyTag family) {
  for (const auto& block : pi.blocks()) {
    if (!block_size_ok(block.size(), family.blocks)) return false;
  }
  switch (family.lattice) {
    case Lattice::All:
      return true;
    case Lattice::Noncrossing:
      return pi.is_noncrossing();
    case Lattice::Interval:
      return pi.is_interval();
  }
  return false;
}

void for_each_partition(int k, FamilyTag family, const std::function<void(const SetPartition&)>& visit) {
  if (k < 0) throw InputError("negative partition size");
  if (k == 0) {
    visit(SetPartition{});
    return;
  }
  // Restricted-growth strings in lexicographic order: rgs[0] = 0,
  // rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);
  while (true) {
    SetPartition p = SetPartition::from_rgs(rgs);
    if (in_family(p, family)) visit(p);
    int i = k - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < k; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int k, FamilyTag family) {
  std::vector<SetPartition> out;
  for_each_partition(k, family, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

SetPartition kernel(std::span<const int> word) {
  std::vector<int> rgs(word.size());
  std::vector<int> seen_letters;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = std::find(seen_letters.begin(), seen_letters.end(), word[i]);
    rgs[i] = static_cast<int>(it - seen_letters.begin());
    if (it == seen_letters.end()) seen_letters.push_back(word[i]);
  }
  return SetPartition::from_rgs(rgs);
}

bool refines(const SetPartition& pi, const SetPartition& sigma) {
  if (pi.ground_size() != sigma.ground_size()) {
    throw InputError("refines: ground sizes differ");
  }
  auto label = sigma.labels();
  for (const auto& block : pi.blocks()) {
    for (int x : block) {
      if (label[x - 1] != label[block.front() - 1]) return false;
    }
  }
  return true;
}

bool refines_kernel(const SetPartition& pi, std::span<const int> word) {
  if (static_cast<std::size_t>(pi.ground_size()) != word.size()) {
    throw InputError("refines_kernel: word length differs from ground size");
  }
  for (const auto& block : pi.blocks()) {
    int letter = word[block.front() - 1];
    for (int x : block) {
      if (word[x - 1] != letter) return false;
    }
  }
  return true;
}

SetPartition concatenate(const SetPartition& first, const SetPartition& second) {
  auto blocks = first.blocks();
  for (auto block : second.blocks()) {
    for (int& x : block) x += first.ground_size();
    blocks.push_back(std::move(block));
  }
  return SetPartition::from_blocks(first.ground_size() + second.ground_size(), std::move(blocks));
}

std::string word_to_text(std::span<const int> word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out + ")";
}

}  // namespace definetti
