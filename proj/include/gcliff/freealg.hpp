#pragma once

// The free algebra k<x,y>: words over {x, y} and noncommutative polynomials.

#include "gcliff/linalg.hpp"
#include "gcliff/scalars.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcliff {

enum class Letter : std::uint8_t { x = 0, y = 1 };

/// A word in x, y packed into the low `length` bits of a 64-bit integer; the
/// first letter sits in the most significant used bit, x = 0, y = 1.
class Word {
 public:
  static constexpr unsigned max_length = 62;

  constexpr Word() = default;
  constexpr Word(std::uint64_t bits, unsigned length) : bits_(bits), length_(static_cast<std::uint8_t>(length)) {}

  static Word letter(Letter l) { return Word(static_cast<std::uint64_t>(l), 1); }
  static Word x() { return letter(Letter::x); }
  static Word y() { return letter(Letter::y); }

  /// Parses "xyy"; "1" and "" give the empty word.
  static Word parse(std::string_view s) {
    if (s == "1") return Word();
    Word w;
    for (char c : s) {
      if (c == 'x') w = w * x();
      else if (c == 'y') w = w * y();
      else throw ParseError("bad letter '" + std::string(1, c) + "' in word");
    }
    return w;
  }

  constexpr unsigned degree() const { return length_; }
  constexpr unsigned length() const { return length_; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return length_ == 0; }

  Letter at(unsigned i) const { return static_cast<Letter>((bits_ >> (length_ - 1 - i)) & 1u); }

  /// Letters [pos, pos + len).
  Word sub(unsigned pos, unsigned len) const {
    if (len == 0) return Word();
    return Word((bits_ >> (length_ - pos - len)) & mask(len), len);
  }
  Word prefix(unsigned len) const { return sub(0, len); }
  Word suffix(unsigned len) const { return sub(length_ - len, len); }

  /// Leftmost position where `w` occurs, or -1.
  int find(Word w) const {
    if (w.length_ > length_) return -1;
    for (unsigned i = 0; i + w.length_ <= length_; ++i)
      if (sub(i, w.length_) == w) return static_cast<int>(i);
    return -1;
  }

  /// Count of letter y.
  unsigned y_count() const { return static_cast<unsigned>(__builtin_popcountll(bits_)); }

  std::string str() const {
    if (length_ == 0) return "1";
    std::string s;
    for (unsigned i = 0; i < length_; ++i) s += at(i) == Letter::x ? 'x' : 'y';
    return s;
  }

  friend Word operator*(Word a, Word b) {
    if (a.length_ + b.length_ > max_length) throw AlgebraError("word too long");
    return Word(b.length_ == 0 ? a.bits_ : (a.bits_ << b.length_) | b.bits_, a.length_ + b.length_);
  }

  friend constexpr bool operator==(Word, Word) = default;

  /// Storage order: graded, then lexicographic with x < y.
  friend constexpr bool operator<(Word a, Word b) {
    return a.length_ != b.length_ ? a.length_ < b.length_ : a.bits_ < b.bits_;
  }

 private:
  static constexpr std::uint64_t mask(unsigned len) { return len >= 64 ? ~0ull : ((1ull << len) - 1); }

  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

struct WordHash {
  std::size_t operator()(Word w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ull ^ w.length());
  }
};

/// Admissible monomial order: graded, ties broken lexicographically with the
/// chosen letter order.
enum class LetterOrder { x_less_y, x_greater_y };

struct WordOrder {
  LetterOrder letters = LetterOrder::x_less_y;

  bool operator()(Word a, Word b) const { return less(a, b); }
  bool less(Word a, Word b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return letters == LetterOrder::x_less_y ? a.bits() < b.bits() : a.bits() > b.bits();
  }
  std::string name() const { return letters == LetterOrder::x_less_y ? "deglex(x<y)" : "deglex(x>y)"; }
};

template <Field K>
class NcPoly {
 public:
  using value_type = typename K::value_type;
  using TermMap = std::map<Word, value_type>;

  explicit NcPoly(K field) : field_(std::move(field)) {}
  NcPoly(K field, Word w, value_type c) : field_(std::move(field)) { add_term(w, std::move(c)); }

  static NcPoly word(const K& k, Word w) { return NcPoly(k, w, k.one()); }
  static NcPoly word(const K& k, std::string_view w) { return NcPoly(k, Word::parse(w), k.one()); }
  static NcPoly constant(const K& k, value_type c) { return NcPoly(k, Word(), std::move(c)); }
  static NcPoly x(const K& k) { return word(k, Word::x()); }
  static NcPoly y(const K& k) { return word(k, Word::y()); }

  const K& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Degree; -1 stands for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.length()); }

  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.length() == terms_.rbegin()->first.length();
  }

  value_type coefficient(Word w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Word w, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  /// Leading word under `order`; the polynomial must be nonzero.
  std::pair<Word, value_type> leading(const WordOrder& order) const {
    if (order.letters == LetterOrder::x_less_y) return *terms_.rbegin();
    auto top = terms_.rbegin()->first.length();
    return *terms_.lower_bound(Word(0, top));
  }

  /// Homogeneous component of degree n.
  NcPoly component(unsigned n) const {
    NcPoly out(field_);
    for (auto it = terms_.lower_bound(Word(0, n)); it != terms_.end() && it->first.length() == n; ++it)
      out.terms_.insert(*it);
    return out;
  }

  NcPoly& operator+=(const NcPoly& o) {
    check_field(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    check_field(o);
    for (const auto& [w, c] : o.terms_) add_term(w, field_.neg(c));
    return *this;
  }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(const NcPoly& a) { return a.scaled(a.field_.neg(a.field_.one())); }

  NcPoly scaled(const value_type& c) const {
    NcPoly out(field_);
    if (field_.is_zero(c)) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, field_.mul(c, v));
    return out;
  }

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    a.check_field(b);
    const K& k = a.field_;
    NcPoly out(k);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, k.mul(ca, cb));
    return out;
  }

  /// u * this * v for words u, v.
  NcPoly sandwich(Word u, Word v) const {
    NcPoly out(field_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(u * w * v, c);
    return out;
  }

  NcPoly pow(unsigned e) const {
    NcPoly r = constant(field_, field_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Image under the substitution x -> X, y -> Y in a matrix algebra.
  Matrix<K> evaluate(const Matrix<K>& X, const Matrix<K>& Y) const {
    const auto n = X.rows();
    Matrix<K> acc(field_, n, n);
    for (const auto& [w, c] : terms_) {
      Matrix<K> m = Matrix<K>::identity(field_, n);
      for (unsigned i = 0; i < w.length(); ++i) m = m * (w.at(i) == Letter::x ? X : Y);
      acc = acc + m.scaled(c);
    }
    return acc;
  }

  /// Value under commuting scalars x -> a, y -> b.
  value_type evaluate(const value_type& a, const value_type& b) const {
    value_type acc = field_.zero();
    for (const auto& [w, c] : terms_) {
      auto ny = w.y_count();
      acc = field_.add(acc, field_.mul(c, field_.mul(field_.pow(a, w.length() - ny), field_.pow(b, ny))));
    }
    return acc;
  }

  /// "c1*w1 + c2*w2 + ..." in storage order; "0" for the zero polynomial.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += field_.to_string(c) + "*" + w.str();
    }
    return s;
  }

  /// Inverse of str(). Also accepts '-' separators, bare words and bare
  /// coefficients ("x^3" style exponents are not supported).
  static NcPoly parse(const K& k, std::string_view text) {
    NcPoly out(k);
    std::string_view rest = detail::trim(text);
    if (rest == "0") return out;
    bool negate = false;
    while (!rest.empty()) {
      rest = detail::trim(rest);
      while (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        if (rest.front() == '-') negate = !negate;
        rest.remove_prefix(1);
        rest = detail::trim(rest);
      }
      std::size_t end = 0;
      while (end < rest.size() && rest[end] != '+' && rest[end] != '-') ++end;
      std::string_view term = detail::trim(rest.substr(0, end));
      rest.remove_prefix(end);
      if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");
      value_type c = k.one();
      std::string_view w = term;
      if (auto star = term.find('*'); star != std::string_view::npos) {
        c = k.parse(detail::trim(term.substr(0, star)));
        w = detail::trim(term.substr(star + 1));
      } else if (term.front() >= '0' && term.front() <= '9' && term != "1") {
        c = k.parse(term);
        w = "1";
      }
      if (negate) c = k.neg(c);
      out.add_term(Word::parse(w), c);
      negate = false;
    }
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    if (!(a.field_ == b.field_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(w == it->first) || !a.field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_field(const NcPoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
  }

  K field_;
  TermMap terms_;
};

template <Field K>
NcPoly<K> commutator(const NcPoly<K>& p, const NcPoly<K>& q) {
  return p * q - q * p;
}

/// Defining relations of the generic Clifford algebra of binary cubic forms:
/// x^3y - yx^3, x^2y^2 + xyxy - yxyx - y^2x^2, xy^3 - y^3x.
template <Field K>
std::vector<NcPoly<K>> clifford_relations(const K& k) {
  auto w = [&](std::string_view s) { return NcPoly<K>::word(k, s); };
  return {
      w("xxxy") - w("yxxx"),
      w("xxyy") + w("xyxy") - w("yxyx") - w("yyxx"),
      w("xyyy") - w("yyyx"),
  };
}

/// Generators of the ideal I with k<x,y>/I the Clifford algebra of
/// f = a u^3 + 3b u^2 v + 3c u v^2 + d v^3.
template <Field K>
std::vector<NcPoly<K>> cubic_form_relations(const K& k, const typename K::value_type& a,
                                            const typename K::value_type& b, const typename K::value_type& c,
                                            const typename K::value_type& d) {
  auto w = [&](std::string_view s) { return NcPoly<K>::word(k, s); };
  auto cst = [&](const typename K::value_type& v) { return NcPoly<K>::constant(k, v); };
  auto three = k.from_int(3);
  return {
      w("xxx") - cst(a),
      w("yyy") - cst(d),
      w("xxy") + w("xyx") + w("yxx") - cst(k.mul(three, b)),
      w("yyx") + w("yxy") + w("xyy") - cst(k.mul(three, c)),
  };
}

}  // namespace gcliff
