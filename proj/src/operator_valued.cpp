#include "operator_valued.hpp"

#include <algorithm>

#include "errors.hpp"

namespace definetti {

BFunctionalSeq::BFunctionalSeq(std::size_t dimension, int max_order, bool commutative_base, Kernel kernel)
    : dimension_(dimension), max_order_(max_order), commutative_base_(commutative_base), kernel_(std::move(kernel)) {
  if (dimension == 0) throw InputError("B-functional base dimension must be positive");
}

BFunctionalSeq BFunctionalSeq::from_word_table(const WordTable& scalars, std::vector<RationalMatrix> letter_matrices,
                                               bool commutative_base) {
  if (letter_matrices.size() != static_cast<std::size_t>(scalars.alphabet())) {
    throw InputError("need one matrix per letter");
  }
  const std::size_t d = letter_matrices.front().dim();
  for (const auto& m : letter_matrices) {
    if (m.dim() != d) throw InputError("letter matrices have different dimensions");
  }
  auto kernel = [scalars, letters = std::move(letter_matrices), d](std::span<const RightArgument> args) {
    IndexWord w;
    for (const auto& a : args) w.push_back(a.letter);
    RationalMatrix out = RationalMatrix::scalar(d, scalars.at(w));
    for (const auto& a : args) out = out * letters[a.letter - 1] * a.right;
    return out;
  };
  return BFunctionalSeq(d, scalars.max_order(), commutative_base, std::move(kernel));
}

RationalMatrix BFunctionalSeq::evaluate(std::span<const BArgument> args) const {
  if (args.empty()) throw InputError("B-functional needs at least one argument");
  if (static_cast<int>(args.size()) > max_order_) throw InputError("B-functional order exceeds max_order");
  std::vector<RightArgument> normalized;
  normalized.reserve(args.size());
  for (std::size_t t = 0; t < args.size(); ++t) {
    if (args[t].left.dim() != dimension_ || args[t].right.dim() != dimension_) {
      throw InputError("B-coefficient dimension mismatch");
    }
    RationalMatrix right = args[t].right;
    if (t + 1 < args.size()) right = right * args[t + 1].left;
    normalized.push_back({args[t].letter, std::move(right)});
  }
  return args.front().left * kernel_(normalized);
}

RationalMatrix eval_pi_nested(const BFunctionalSeq& rho, const SetPartition& pi, std::span<const BArgument> args,
                              ExtractionOrder order) {
  if (static_cast<std::size_t>(pi.ground_size()) != args.size()) {
    throw InputError("eval_pi_nested: partition size differs from argument count");
  }
  if (!pi.is_noncrossing()) {
    throw InputError("nested evaluation is undefined for the crossing partition " + pi.to_text());
  }
  if (args.empty()) return RationalMatrix::identity(rho.dimension());

  std::vector<BArgument> current(args.begin(), args.end());
  // Blocks as contiguous-position sets over the current (shrinking) argument list.
  std::vector<std::vector<int>> blocks = pi.blocks();
  for (auto& b : blocks)
    for (int& x : b) --x;

  while (true) {
    std::vector<std::size_t> interval_ids;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].back() - blocks[b].front() + 1 == static_cast<int>(blocks[b].size())) interval_ids.push_back(b);
    }
    // Every noncrossing partition has an interval block.
    std::size_t chosen = interval_ids.front();
    for (std::size_t id : interval_ids) {
      bool better = order == ExtractionOrder::Leftmost ? blocks[id].front() < blocks[chosen].front()
                                                       : blocks[id].front() > blocks[chosen].front();
      if (better) chosen = id;
    }
    const int start = blocks[chosen].front();
    const int size = static_cast<int>(blocks[chosen].size());
    RationalMatrix inner =
        rho.evaluate(std::span<const BArgument>(current.data() + start, static_cast<std::size_t>(size)));
    if (blocks.size() == 1) return inner;

    if (start > 0) {
      current[start - 1].right = current[start - 1].right * inner;
    } else {
      current[start + size].left = inner * current[start + size].left;
    }
    current.erase(current.begin() + start, current.begin() + start + size);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(chosen));
    for (auto& b : blocks)
      for (int& x : b)
        if (x > start) x -= size;
  }
}

RationalMatrix eval_pi_product(const BFunctionalSeq& rho, const SetPartition& pi, std::span<const BArgument> args) {
  if (!rho.commutative_base()) {
    throw InputError("block-product evaluation requires a commutative base");
  }
  if (static_cast<std::size_t>(pi.ground_size()) != args.size()) {
    throw InputError("eval_pi_product: partition size differs from argument count");
  }
  std::vector<RationalMatrix> sampled;
  for (const auto& a : args) {
    sampled.push_back(a.left);
    sampled.push_back(a.right);
  }
  RationalMatrix out = RationalMatrix::identity(rho.dimension());
  for (const auto& block : pi.blocks()) {
    std::vector<BArgument> sub;
    for (int pos : block) sub.push_back(args[pos - 1]);
    RationalMatrix value = rho.evaluate(sub);
    sampled.push_back(value);
    out = out * value;
  }
  for (std::size_t i = 0; i < sampled.size(); ++i) {
    for (std::size_t j = i + 1; j < sampled.size(); ++j) {
      if (!sampled[i].commutes_with(sampled[j])) {
        throw InputError("commutator check failed: base declared commutative is not");
      }
    }
  }
  return out;
}

RationalMatrix operator_moment(const BFunctionalSeq& rho, CumulantKind kind, std::span<const BArgument> args) {
  RationalMatrix sum(rho.dimension());
  const auto k = static_cast<int>(args.size());
  for_each_partition(k, {lattice_of(kind), BlockConstraint::Any}, [&](const SetPartition& pi) {
    if (kind == CumulantKind::Classical) {
      sum += eval_pi_product(rho, pi, args);
    } else {
      sum += eval_pi_nested(rho, pi, args);
    }
  });
  return sum;
}

}  // namespace definetti
