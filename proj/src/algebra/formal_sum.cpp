#include "algebra/formal_sum.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"

namespace definetti::algebra {

std::string Alphabet::letter_name(int letter) const {
  if (is_p(letter)) return "P";
  return "u(" + std::to_string(row(letter)) + "," + std::to_string(col(letter)) + ")";
}

bool LengthLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool LengthLex::operator()(const TensorWord& a, const TensorWord& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t f = 0; f < a.size(); ++f) {
    if ((*this)(a[f], b[f])) return true;
    if ((*this)(b[f], a[f])) return false;
  }
  return false;
}

std::string word_text(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (int letter : w) out += alphabet.letter_name(letter);
  return out;
}

FormalSum::FormalSum(Alphabet alphabet, int tensor_degree) : alphabet_(alphabet), tensor_degree_(tensor_degree) {
  if (tensor_degree < 1) throw InputError("tensor degree must be at least 1");
}

FormalSum FormalSum::monomial(Alphabet alphabet, const Word& w, const Rational& c) {
  return tensor_monomial(alphabet, TensorWord{w}, c);
}

FormalSum FormalSum::tensor_monomial(Alphabet alphabet, const TensorWord& w, const Rational& c) {
  FormalSum s(alphabet, static_cast<int>(w.size()));
  s.add_term(w, c);
  return s;
}

FormalSum FormalSum::unit(Alphabet alphabet, int tensor_degree) {
  return tensor_monomial(alphabet, TensorWord(static_cast<std::size_t>(tensor_degree)), 1);
}

int FormalSum::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_)
    for (const auto& f : w) d = std::max(d, static_cast<int>(f.size()));
  return d;
}

void FormalSum::add_term(const TensorWord& w, const Rational& c) {
  if (static_cast<int>(w.size()) != tensor_degree_) throw InputError("tensor degree mismatch");
  for (const auto& f : w)
    for (int letter : f)
      if (letter < 0 || letter >= alphabet_.size()) throw InputError("letter outside the alphabet");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational FormalSum::coefficient(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.tensor_degree_ != tensor_degree_ || !(other.alphabet_ == alphabet_)) {
    throw InputError("adding formal sums over different spaces");
  }
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  if (other.tensor_degree_ != tensor_degree_ || !(other.alphabet_ == alphabet_)) {
    throw InputError("subtracting formal sums over different spaces");
  }
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  if (a.tensor_degree_ != b.tensor_degree_ || !(a.alphabet_ == b.alphabet_)) {
    throw InputError("multiplying formal sums over different spaces");
  }
  FormalSum out(a.alphabet_, a.tensor_degree_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      TensorWord w = wa;
      for (std::size_t f = 0; f < w.size(); ++f) w[f].insert(w[f].end(), wb[f].begin(), wb[f].end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string FormalSum::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + " * ";
    for (std::size_t f = 0; f < w.size(); ++f) {
      if (f) out += " ⊗ ";
      out += word_text(alphabet_, w[f]);
    }
  }
  return out;
}

FormalSum normalize(const FormalSum& s) {
  FormalSum out(s.alphabet(), s.tensor_degree());
  for (const auto& [w, c] : s.terms()) out.add_term(w, c);
  return out;
}

FormalSum star(const FormalSum& s) {
  if (s.tensor_degree() != 1) throw InputError("star is defined on tensor degree 1 only");
  FormalSum out(s.alphabet(), 1);
  for (const auto& [w, c] : s.terms()) {
    Word r(w[0].rbegin(), w[0].rend());
    out.add_term({r}, c);
  }
  return out;
}

FormalSum tensor(const FormalSum& a, const FormalSum& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("tensoring formal sums over different alphabets");
  FormalSum out(a.alphabet(), a.tensor_degree() + b.tensor_degree());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      TensorWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

namespace {

class SumParser {
 public:
  SumParser(const Alphabet& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  FormalSum parse() {
    struct RawTerm {
      Rational coef;
      TensorWord word;
      bool scalar_only;
    };
    std::vector<RawTerm> raw;
    skip_space();
    if (at_end()) throw InputError("empty formal sum");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      RawTerm t{Rational(1), {}, false};
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        std::string number = read_number();
        skip_space();
        if (peek() == '*') {
          ++pos_;
          t.coef = parse_rational(number);
          t.word = read_product();
        } else if (number == "1" && (at_end() || peek() == '+' || peek() == '-')) {
          t.scalar_only = true;
        } else if (number == "1") {
          pos_ = start;
          t.word = read_product();
        } else {
          t.coef = parse_rational(number);
          t.scalar_only = true;
        }
      } else {
        t.word = read_product();
      }
      if (negative) t.coef = -t.coef;
      raw.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    int degree = 0;
    for (const auto& t : raw) {
      if (t.scalar_only) continue;
      int d = static_cast<int>(t.word.size());
      if (degree != 0 && d != degree) throw InputError("terms have different tensor degrees");
      degree = d;
    }
    if (degree == 0) degree = 1;
    FormalSum out(alphabet_, degree);
    for (auto& t : raw) {
      if (t.scalar_only) t.word = TensorWord(static_cast<std::size_t>(degree));
      out.add_term(t.word, t.coef);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("formal sum parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string read_number() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (peek() == '/') {
      out += text_[pos_++];
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    }
    return out;
  }

  int read_int() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000) fail("index too large");
    }
    skip_space();
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool read_separator() {
    skip_space();
    if (text_.substr(pos_, 3) == "⊗") {
      pos_ += 3;
      return true;
    }
    if (text_.substr(pos_, 3) == "(x)") {
      pos_ += 3;
      return true;
    }
    if (peek() == '@') {
      ++pos_;
      return true;
    }
    return false;
  }

  Word read_factor() {
    skip_space();
    if (peek() == '1') {
      ++pos_;
      return {};
    }
    Word w;
    while (true) {
      skip_space();
      char c = peek();
      if (c == 'P') {
        ++pos_;
        w.push_back(alphabet_.p());
      } else if (c == 'u') {
        ++pos_;
        expect('(');
        int i = read_int();
        expect(',');
        int j = read_int();
        expect(')');
        if (i < 1 || i > alphabet_.n || j < 1 || j > alphabet_.n) fail("generator index outside 1..n");
        w.push_back(alphabet_.u(i, j));
      } else {
        break;
      }
    }
    if (w.empty()) fail("expected a word");
    return w;
  }

  TensorWord read_product() {
    TensorWord out{read_factor()};
    while (read_separator()) out.push_back(read_factor());
    return out;
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormalSum parse_formal_sum(const Alphabet& alphabet, std::string_view text) {
  return SumParser(alphabet, text).parse();
}

}  // namespace definetti::algebra
