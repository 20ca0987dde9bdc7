#include "algebra/representation.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace definetti::algebra {

RationalMatrix eval_representation(const FormalSum& s, const std::vector<Assignment>& assignments) {
  const auto t = static_cast<std::size_t>(s.tensor_degree());
  if (assignments.size() != t) throw InputError("need one assignment per tensor factor");
  std::size_t total_dim = 1;
  std::vector<std::size_t> dims;
  for (const auto& asg : assignments) {
    if (asg.size() != static_cast<std::size_t>(s.alphabet().size())) {
      throw InputError("assignment must give a matrix for every letter");
    }
    const std::size_t d = asg.front().dim();
    for (const auto& m : asg)
      if (m.dim() != d) throw InputError("assignment matrices have different dimensions");
    dims.push_back(d);
    total_dim *= d;
  }
  RationalMatrix out(total_dim);
  for (const auto& [w, c] : s.terms()) {
    RationalMatrix term = RationalMatrix::identity(1);
    for (std::size_t f = 0; f < t; ++f) {
      RationalMatrix factor = RationalMatrix::identity(dims[f]);
      for (int letter : w[f]) factor = factor * assignments[f][static_cast<std::size_t>(letter)];
      term = kron(term, factor);
    }
    term *= c;
    out += term;
  }
  return out;
}

RationalMatrix eval_representation(const FormalSum& s, const Assignment& assignment) {
  return eval_representation(s, std::vector<Assignment>(static_cast<std::size_t>(s.tensor_degree()), assignment));
}

Assignment scalar_character(const Alphabet& alphabet, const RationalMatrix& g, const Rational& p) {
  if (g.dim() != static_cast<std::size_t>(alphabet.n)) throw InputError("character matrix has the wrong size");
  Assignment out;
  for (int letter = 0; letter < alphabet.size(); ++letter) {
    if (alphabet.is_p(letter)) {
      out.push_back(RationalMatrix::scalar(1, p));
    } else {
      out.push_back(RationalMatrix::scalar(
          1, g(static_cast<std::size_t>(alphabet.row(letter) - 1), static_cast<std::size_t>(alphabet.col(letter) - 1))));
    }
  }
  return out;
}

namespace {

bool mentions_p(const Alphabet& a, const std::vector<FormalSum>& relations) {
  for (const auto& r : relations)
    for (const auto& [w, c] : r.terms())
      for (const auto& f : w)
        if (std::find(f.begin(), f.end(), a.p()) != f.end()) return true;
  return false;
}

std::string perm_text(const std::vector<int>& perm, const std::vector<int>& signs) {
  std::string out = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) out += ' ';
    if (signs[i] < 0) out += '-';
    out += std::to_string(perm[i] + 1);
  }
  return out + "]";
}

/// Candidate matrices g with labels: g(i, perm[i]) = sign[i].
std::vector<std::pair<std::string, RationalMatrix>> candidate_matrices(int n) {
  std::vector<std::pair<std::string, RationalMatrix>> out;
  const auto d = static_cast<std::size_t>(n);
  out.emplace_back("zero", RationalMatrix(d));
  if (n > 6) {
    out.emplace_back("identity", RationalMatrix::identity(d));
    out.emplace_back("minus-identity", RationalMatrix::scalar(d, -1));
    return out;
  }
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  const int sign_patterns = n <= 4 ? (1 << n) : 1;
  do {
    for (int mask = 0; mask < sign_patterns; ++mask) {
      std::vector<int> signs(d);
      RationalMatrix g(d);
      for (std::size_t i = 0; i < d; ++i) {
        signs[i] = (mask >> i) & 1 ? -1 : 1;
        g(i, static_cast<std::size_t>(perm[i])) = signs[i];
      }
      out.emplace_back((mask ? "signed-permutation" : "permutation") + perm_text(perm, signs), g);
    }
    if (n >= 2) {
      RationalMatrix r(d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r(i, j) = Rational(2, n) - (perm[i] == static_cast<int>(j) ? 1 : 0);
      std::vector<int> plus(d, 1);
      out.emplace_back("reflection" + perm_text(perm, plus), r);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<Character> admissible_characters(const Alphabet& alphabet, const std::vector<FormalSum>& relations) {
  std::vector<Rational> p_values{1};
  if (mentions_p(alphabet, relations)) p_values.push_back(0);
  std::vector<Character> out;
  for (const auto& [label, g] : candidate_matrices(alphabet.n)) {
    for (const auto& p : p_values) {
      Assignment asg = scalar_character(alphabet, g, p);
      bool ok = std::all_of(relations.begin(), relations.end(),
                            [&](const FormalSum& r) { return eval_representation(r, asg).is_zero(); });
      if (!ok) continue;
      std::string full = label;
      if (p_values.size() > 1) full += sgn(p) ? ", P=1" : ", P=0";
      out.push_back({full, std::move(asg)});
    }
  }
  return out;
}

std::optional<Refutation> refute_membership(const FormalSum& target, const std::vector<FormalSum>& relations) {
  const auto characters = admissible_characters(target.alphabet(), relations);
  if (characters.empty()) return std::nullopt;
  const auto t = static_cast<std::size_t>(target.tensor_degree());
  auto scalar = [](const Assignment& asg, const Word& w) {
    Rational v = 1;
    for (int letter : w) {
      v *= asg[static_cast<std::size_t>(letter)](0, 0);
      if (sgn(v) == 0) break;
    }
    return v;
  };
  std::vector<std::size_t> choice(t, 0);
  while (true) {
    Rational value = 0;
    for (const auto& [w, c] : target.terms()) {
      Rational term = c;
      for (std::size_t f = 0; f < t && sgn(term) != 0; ++f) term *= scalar(characters[choice[f]].assignment, w[f]);
      value += term;
    }
    if (sgn(value) != 0) {
      Refutation r;
      for (std::size_t f = 0; f < t; ++f) r.labels.push_back(characters[choice[f]].label);
      r.value = value;
      return r;
    }
    std::size_t f = t;
    while (f > 0 && choice[f - 1] + 1 == characters.size()) choice[--f] = 0;
    if (f == 0) return std::nullopt;
    ++choice[f - 1];
  }
}

}  // namespace definetti::algebra
