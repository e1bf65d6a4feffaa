#pragma once

// Exact scalar fields: prime fields F_p (p != 2, 3) and arbitrary-precision
// rationals. Elements are plain values; all arithmetic goes through the field
// object so that an element never needs to carry its modulus.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gcliff {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct CharTwoOrThree : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct NoOmega : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct FieldMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct DivisionByZero : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct ParseError : AlgebraError {
  using AlgebraError::AlgebraError;
};

enum class FieldKind { prime, rational };

/// Description of a coefficient field, independent of the element type.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;
  bool has_omega = false;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline FieldSpec make_field(FieldKind kind, std::uint64_t p = 0) {
  if (kind == FieldKind::rational) return FieldSpec{FieldKind::rational, 0, false};
  if (p == 2 || p == 3)
    throw CharTwoOrThree("characteristic " + std::to_string(p) + " is excluded");
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 31)) throw NotPrime("modulus must be below 2^31");
  return FieldSpec{FieldKind::prime, p, p % 3 == 1};
}

/// Residue class in [0, p).
struct Residue {
  std::uint64_t value = 0;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

class PrimeField {
 public:
  using value_type = Residue;

  explicit PrimeField(std::uint64_t p) : PrimeField(make_field(FieldKind::prime, p)) {}
  explicit PrimeField(const FieldSpec& spec) : p_(spec.p), has_omega_(spec.has_omega) {
    if (spec.kind != FieldKind::prime) throw FieldMismatch("PrimeField needs a prime FieldSpec");
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  bool has_omega() const { return has_omega_; }
  FieldSpec spec() const { return FieldSpec{FieldKind::prime, p_, has_omega_}; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Residue zero() const { return {0}; }
  Residue one() const { return {1}; }
  Residue from_int(std::int64_t n) const {
    auto m = static_cast<std::int64_t>(p_);
    auto r = n % m;
    if (r < 0) r += m;
    return {static_cast<std::uint64_t>(r)};
  }
  Residue from_ratio(std::int64_t num, std::int64_t den) const {
    return div(from_int(num), from_int(den));
  }
  bool is_zero(Residue a) const { return a.value == 0; }
  bool is_one(Residue a) const { return a.value == 1; }
  bool equal(Residue a, Residue b) const { return a.value == b.value; }

  Residue add(Residue a, Residue b) const {
    auto s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Residue sub(Residue a, Residue b) const { return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value}; }
  Residue neg(Residue a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  Residue mul(Residue a, Residue b) const { return {(a.value * b.value) % p_}; }
  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Residue inv(Residue a) const {
    if (a.value == 0) throw DivisionByZero("inverse of zero in " + name());
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a.value);
    while (nr != 0) {
      auto q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return from_int(t);
  }
  Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

  /// Smallest residue w != 1 with w^3 = 1.
  Residue cube_root_unity() const {
    if (!has_omega_) throw NoOmega(name() + " has no primitive cube root of unity");
    for (std::uint64_t g = 2; g < p_; ++g) {
      Residue w = pow(Residue{g}, (p_ - 1) / 3);
      if (w.value != 1) {
        Residue w2 = mul(w, w);
        return w.value < w2.value ? w : w2;
      }
    }
    throw NoOmega(name() + ": cube root search failed");
  }

  /// Some square root of a, if one exists (Tonelli-Shanks).
  std::optional<Residue> sqrt(Residue a) const {
    if (a.value == 0) return Residue{0};
    if (pow(a, (p_ - 1) / 2).value != 1) return std::nullopt;
    std::uint64_t q = p_ - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    Residue z{2};
    while (pow(z, (p_ - 1) / 2).value == 1) z.value++;
    Residue c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    std::uint64_t m = s;
    while (t.value != 1) {
      std::uint64_t i = 0;
      Residue tt = t;
      while (tt.value != 1) tt = mul(tt, tt), ++i;
      Residue b = c;
      for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    Residue other = neg(r);
    return r.value <= other.value ? r : other;
  }

  std::string to_string(Residue a) const { return std::to_string(a.value); }
  Residue parse(std::string_view text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  bool has_omega_;
};

using Rational = boost::multiprecision::cpp_rational;

class RationalField {
 public:
  using value_type = Rational;

  RationalField() = default;
  explicit RationalField(const FieldSpec& spec) {
    if (spec.kind != FieldKind::rational) throw FieldMismatch("RationalField needs a rational FieldSpec");
  }

  std::uint64_t characteristic() const { return 0; }
  bool has_omega() const { return false; }
  FieldSpec spec() const { return FieldSpec{}; }
  std::string name() const { return "Q"; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t n) const { return Rational(n); }
  Rational from_ratio(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw DivisionByZero("zero denominator");
    return Rational(num) / Rational(den);
  }
  bool is_zero(const Rational& a) const { return a == 0; }
  bool is_one(const Rational& a) const { return a == 1; }
  bool equal(const Rational& a, const Rational& b) const { return a == b; }

  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in Q");
    return Rational(1) / a;
  }
  Rational div(const Rational& a, const Rational& b) const { return a * inv(b); }
  Rational pow(Rational a, std::uint64_t e) const {
    Rational r = 1;
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }

  Rational cube_root_unity() const { throw NoOmega("Q has no primitive cube root of unity"); }

  std::string to_string(const Rational& a) const {
    auto num = boost::multiprecision::numerator(a);
    auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  Rational parse(std::string_view text) const;

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Signed decimal integer, arbitrary length.
inline boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("empty integer");
  boost::multiprecision::cpp_int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw ParseError("bad digit in '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? -v : v;
}

}  // namespace detail

inline Residue PrimeField::parse(std::string_view text) const {
  auto slash = text.find('/');
  auto reduce = [&](std::string_view s) {
    boost::multiprecision::cpp_int v = detail::parse_integer(s);
    boost::multiprecision::cpp_int m = p_;
    v %= m;
    if (v < 0) v += m;
    return Residue{v.convert_to<std::uint64_t>()};
  };
  if (slash == std::string_view::npos) return reduce(text);
  return div(reduce(text.substr(0, slash)), reduce(text.substr(slash + 1)));
}

inline Rational RationalField::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  auto den = detail::parse_integer(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  return Rational(detail::parse_integer(text.substr(0, slash))) / Rational(den);
}

/// The operations every coefficient field provides.
template <class K>
concept Field = requires(const K& k, const typename K::value_type& a, std::int64_t n) {
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.from_int(n) } -> std::convertible_to<typename K::value_type>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.neg(a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
  { k.characteristic() } -> std::convertible_to<std::uint64_t>;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace gcliff
