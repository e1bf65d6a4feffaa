#pragma once

// Commutative side: the binary cubic discriminant, the hypersurface Delta = 0
// in z0..z3, its partial derivatives, the twisted cubic, and points of the
// center maxSpec(Z) = {(a,b,c,d,e,f) : e^2 = f^3 - 27 D(a,b,c,d)}.

#include "gcliff/scalars.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gcliff {

struct ZeroPoint : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Sparse commutative polynomial in a fixed number of variables.
template <Field K>
class CommPoly {
 public:
  using value_type = typename K::value_type;
  using Exponents = std::vector<unsigned>;

  CommPoly(K field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static CommPoly variable(const K& k, std::size_t nvars, std::size_t i) {
    CommPoly p(k, nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, k.one());
    return p;
  }
  static CommPoly constant(const K& k, std::size_t nvars, const value_type& c) {
    CommPoly p(k, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, value_type>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  CommPoly& operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CommPoly& operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
    return *this;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    const K& k = a.field_;
    CommPoly out(k, a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, k.mul(ca, cb));
      }
    return out;
  }
  CommPoly scaled(const value_type& c) const {
    CommPoly out(field_, nvars_);
    for (const auto& [e, v] : terms_) out.add_term(e, field_.mul(c, v));
    return out;
  }
  CommPoly pow(unsigned n) const {
    CommPoly r = constant(field_, nvars_, field_.one());
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Formal partial derivative in variable i.
  CommPoly derivative(std::size_t i) const {
    CommPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      --d[i];
      out.add_term(d, field_.mul(field_.from_int(e[i]), c));
    }
    return out;
  }

  value_type evaluate(const std::vector<value_type>& point) const {
    value_type acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      value_type t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i]) t = field_.mul(t, field_.pow(point[i], e[i]));
      acc = field_.add(acc, t);
    }
    return acc;
  }

  /// Composition: variable i replaced by images[i] (all in a common ring).
  CommPoly substitute(const std::vector<CommPoly>& images) const {
    std::size_t m = images.front().nvars_;
    CommPoly out(field_, m);
    for (const auto& [e, c] : terms_) {
      CommPoly t = constant(field_, m, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (e[i]) t = t * images[i].pow(e[i]);
      out += t;
    }
    return out;
  }

  /// Total degree of every term equals d.
  bool is_homogeneous(unsigned d) const {
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto v : e) s += v;
      if (s != d) return false;
    }
    return true;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += field_.to_string(it->second);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (it->first[i]) s += "*" + names[i] + (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    }
    return s;
  }

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !a.field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  K field_;
  std::size_t nvars_;
  std::map<Exponents, value_type> terms_;
};

/// f = a u^3 + 3b u^2 v + 3c u v^2 + d v^3.
template <Field K>
struct CubicForm {
  typename K::value_type a, b, c, d;
};

/// A point of maxSpec(Z): the values of z0..z5.
template <Field K>
struct CentralPoint {
  using value_type = typename K::value_type;
  value_type a, b, c, d, e, f;

  std::array<value_type, 6> coords() const { return {a, b, c, d, e, f}; }
  friend bool operator==(const CentralPoint&, const CentralPoint&) = default;
};

template <Field K>
CentralPoint<K> central_point_from_ints(const K& k, const std::array<std::int64_t, 6>& v) {
  return {k.from_int(v[0]), k.from_int(v[1]), k.from_int(v[2]), k.from_int(v[3]), k.from_int(v[4]), k.from_int(v[5])};
}

/// D = 1/4 (ad - bc)^2 - (ac - b^2)(bd - c^2).
template <Field K>
typename K::value_type discriminant_value(const K& k, const typename K::value_type& a, const typename K::value_type& b,
                                          const typename K::value_type& c, const typename K::value_type& d) {
  auto m03 = k.sub(k.mul(a, d), k.mul(b, c));
  auto m02 = k.sub(k.mul(a, c), k.mul(b, b));
  auto m13 = k.sub(k.mul(b, d), k.mul(c, c));
  return k.sub(k.mul(k.from_ratio(1, 4), k.mul(m03, m03)), k.mul(m02, m13));
}

template <Field K>
typename K::value_type discriminant_value(const K& k, const CubicForm<K>& f) {
  return discriminant_value(k, f.a, f.b, f.c, f.d);
}

/// e^2 = f^3 - 27 D(a,b,c,d).
template <Field K>
bool satisfies_center_relation(const K& k, const CentralPoint<K>& p) {
  auto rhs = k.sub(k.pow(p.f, 3), k.mul(k.from_int(27), discriminant_value(k, p.a, p.b, p.c, p.d)));
  return k.equal(k.mul(p.e, p.e), rhs);
}

/// Delta in the polynomial ring k[z0, z1, z2, z3].
template <Field K>
CommPoly<K> delta_polynomial(const K& k) {
  auto z = [&](std::size_t i) { return CommPoly<K>::variable(k, 4, i); };
  auto m03 = z(0) * z(3) - z(1) * z(2);
  auto m02 = z(0) * z(2) - z(1) * z(1);
  auto m13 = z(1) * z(3) - z(2) * z(2);
  return (m03 * m03).scaled(k.from_ratio(1, 4)) - m02 * m13;
}

/// The four partial derivatives of Delta, written out term by term.
template <Field K>
std::array<CommPoly<K>, 4> delta_partials(const K& k) {
  auto z = [&](std::size_t i) { return CommPoly<K>::variable(k, 4, i); };
  auto q = [&](std::int64_t n, std::int64_t d) { return k.from_ratio(n, d); };
  return {
      (z(1) * z(2) * z(3)).scaled(q(-3, 2)) + (z(0) * z(3) * z(3)).scaled(q(1, 2)) + z(2).pow(3),
      (z(0) * z(2) * z(3)).scaled(q(-3, 2)) + (z(1) * z(2) * z(2)).scaled(q(-3, 2)) +
          (z(1) * z(1) * z(3)).scaled(q(3, 1)),
      (z(0) * z(1) * z(3)).scaled(q(-3, 2)) + (z(1) * z(1) * z(2)).scaled(q(-3, 2)) +
          (z(0) * z(2) * z(2)).scaled(q(3, 1)),
      (z(0) * z(1) * z(2)).scaled(q(-3, 2)) + (z(0) * z(0) * z(3)).scaled(q(1, 2)) + z(1).pow(3),
  };
}

/// [x0 : x1] -> (x0^3, x0^2 x1, x0 x1^2, x1^3).
template <Field K>
std::array<typename K::value_type, 4> twisted_cubic_point(const K& k, const typename K::value_type& x0,
                                                          const typename K::value_type& x1) {
  if (k.is_zero(x0) && k.is_zero(x1)) throw ZeroPoint("(0,0) is not a point of P^1");
  return {k.pow(x0, 3), k.mul(k.mul(x0, x0), x1), k.mul(x0, k.mul(x1, x1)), k.pow(x1, 3)};
}

/// ad - bc = ac - b^2 = bd - c^2 = 0 (the affine cone over the twisted cubic).
template <Field K>
bool on_twisted_cubic(const K& k, const typename K::value_type& a, const typename K::value_type& b,
                      const typename K::value_type& c, const typename K::value_type& d) {
  return k.is_zero(k.sub(k.mul(a, d), k.mul(b, c))) && k.is_zero(k.sub(k.mul(a, c), k.mul(b, b))) &&
         k.is_zero(k.sub(k.mul(b, d), k.mul(c, c)));
}

template <Field K>
bool singular_locus_membership(const K& k, const CentralPoint<K>& p) {
  return k.is_zero(p.e) && k.is_zero(p.f) && on_twisted_cubic(k, p.a, p.b, p.c, p.d);
}

/// All (e, f) in F_p^2 on the fiber over (a, b, c, d), ordered by f then e.
inline std::vector<CentralPoint<PrimeField>> enumerate_center_fiber(const PrimeField& k, Residue a, Residue b,
                                                                    Residue c, Residue d) {
  std::vector<CentralPoint<PrimeField>> out;
  auto shift = k.mul(k.from_int(27), discriminant_value(k, a, b, c, d));
  for (std::uint64_t fv = 0; fv < k.modulus(); ++fv) {
    Residue f{fv};
    auto rhs = k.sub(k.pow(f, 3), shift);
    auto root = k.sqrt(rhs);
    if (!root) continue;
    out.push_back({a, b, c, d, *root, f});
    if (!k.is_zero(*root)) out.push_back({a, b, c, d, k.neg(*root), f});
  }
  return out;
}

}  // namespace gcliff
