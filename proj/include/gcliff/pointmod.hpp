#pragma once

// Point modules M(p0, p1, p2, ...) with x e_i = x_i e_{i+1}, y e_i = y_i e_{i+1}:
// the linear system for p3, periodicity, central characters and the
// invariants that decide the dimensions of simple quotients.

#include "gcliff/center.hpp"
#include "gcliff/commgeo.hpp"
#include "gcliff/linalg.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcliff {

struct KernelDimensionUnexpected : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct PeriodicityViolated : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Point of P^1, first nonzero coordinate scaled to 1.
template <Field K>
class ProjPoint {
 public:
  using value_type = typename K::value_type;

  ProjPoint(const K& k, value_type x, value_type y) {
    if (k.is_zero(x) && k.is_zero(y)) throw ZeroPoint("(0,0) is not a point of P^1");
    auto s = k.inv(k.is_zero(x) ? y : x);
    x_ = k.mul(s, x);
    y_ = k.mul(s, y);
  }

  const value_type& x() const { return x_; }
  const value_type& y() const { return y_; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  std::string str(const K& k) const { return k.to_string(x_) + ":" + k.to_string(y_); }

 private:
  value_type x_, y_;
};

template <Field K>
struct PointTriple {
  ProjPoint<K> p0, p1, p2;

  bool diagonal() const { return p0 == p1 && p1 == p2; }
};

/// All p + 1 points of P^1(F_p): (1, t) for t in F_p, then (0, 1).
inline std::vector<ProjPoint<PrimeField>> projective_line(const PrimeField& k) {
  std::vector<ProjPoint<PrimeField>> out;
  for (std::uint64_t t = 0; t < k.modulus(); ++t) out.emplace_back(k, k.one(), Residue{t});
  out.emplace_back(k, k.zero(), k.one());
  return out;
}

/// Coefficient matrix of the linear system in (x3, y3) forced by the relations on e_0.
template <Field K>
Matrix<K> step_matrix(const K& k, const PointTriple<K>& t) {
  const auto &x0 = t.p0.x(), &y0 = t.p0.y(), &x1 = t.p1.x(), &y1 = t.p1.y(), &x2 = t.p2.x(), &y2 = t.p2.y();
  auto m3 = [&](const auto& a, const auto& b, const auto& c) { return k.mul(a, k.mul(b, c)); };
  Matrix<K> m(k, 3, 2);
  m(0, 0) = m3(x1, x2, y0);
  m(0, 1) = k.neg(m3(x0, x1, x2));
  m(1, 0) = k.add(m3(x2, y0, y1), m3(x1, y0, y2));
  m(1, 1) = k.neg(k.add(m3(x0, x2, y1), m3(x1, x0, y2)));
  m(2, 0) = m3(y0, y1, y2);
  m(2, 1) = k.neg(m3(x0, y1, y2));
  return m;
}

/// The unique p3 allowed after (p0, p1, p2). Throws if the kernel is not a
/// line or if the line differs from p0.
template <Field K>
ProjPoint<K> solve_next(const K& k, const PointTriple<K>& t) {
  auto ker = kernel(step_matrix(k, t));
  if (ker.size() != 1)
    throw KernelDimensionUnexpected("step system has a kernel of dimension " + std::to_string(ker.size()));
  ProjPoint<K> next(k, ker[0][0], ker[0][1]);
  if (!(next == t.p0)) throw PeriodicityViolated("next point " + next.str(k) + " differs from p0 " + t.p0.str(k));
  return next;
}

/// True iff p_{i+3} = p_i wherever both exist.
template <Field K>
bool validate_point_sequence(const std::vector<ProjPoint<K>>& points) {
  if (points.size() < 4) throw std::invalid_argument("a point sequence needs at least 4 points");
  for (std::size_t i = 0; i + 3 < points.size(); ++i)
    if (!(points[i + 3] == points[i])) return false;
  return true;
}

/// Coefficient c with p e_i = c e_{i+d} for homogeneous p of degree d acting
/// on the module with points seq[j mod seq.size()].
template <Field K>
typename K::value_type act_on_point_module(const K& k, const NcPoly<K>& p, const std::vector<ProjPoint<K>>& seq,
                                           std::size_t i) {
  auto acc = k.zero();
  for (const auto& [w, c] : p.terms()) {
    auto t = c;
    // rightmost letter acts first
    for (std::size_t j = 0; j < w.length(); ++j) {
      const auto& pt = seq[(i + j) % seq.size()];
      t = k.mul(t, w.at(static_cast<unsigned>(w.length() - 1 - j)) == Letter::x ? pt.x() : pt.y());
    }
    acc = k.add(acc, t);
  }
  return acc;
}

/// Whether every defining relation of C kills e_0, e_1, e_2 in M(p0, p1, p2, p0, ...).
template <Field K>
bool relations_annihilate(const K& k, const PointTriple<K>& t) {
  std::vector<ProjPoint<K>> seq{t.p0, t.p1, t.p2};
  for (const auto& rel : clifford_relations(k))
    for (std::size_t i = 0; i < 3; ++i)
      if (!k.is_zero(act_on_point_module(k, rel, seq, i))) return false;
  return true;
}

/// (a^3, a^2 b, a b^2, b^3, 0, 0): the central character of M(p, p, p).
template <Field K>
CentralPoint<K> central_character_diagonal(const K& k, const ProjPoint<K>& p) {
  auto a = p.x(), b = p.y();
  return {k.pow(a, 3), k.mul(k.mul(a, a), b), k.mul(a, k.mul(b, b)), k.pow(b, 3), k.zero(), k.zero()};
}

template <Field K>
struct GammaInvariants {
  using value_type = typename K::value_type;
  value_type a, b, c, X, Y, Z, gamma;
};

template <Field K>
Matrix<K> abc_matrix(const K& k, const PointTriple<K>& t) {
  const auto &x0 = t.p0.x(), &y0 = t.p0.y(), &x1 = t.p1.x(), &y1 = t.p1.y(), &x2 = t.p2.x(), &y2 = t.p2.y();
  Matrix<K> m(k, 3, 3);
  m(0, 0) = k.mul(x2, y2), m(0, 1) = k.mul(x1, y1), m(0, 2) = k.mul(x0, y0);
  m(1, 0) = k.mul(x2, x2), m(1, 1) = k.mul(x1, x1), m(1, 2) = k.mul(x0, x0);
  m(2, 0) = k.mul(y2, y2), m(2, 1) = k.mul(y1, y1), m(2, 2) = k.mul(y0, y0);
  return m;
}

template <Field K>
GammaInvariants<K> gamma_invariants(const K& k, const PointTriple<K>& t) {
  const auto &x0 = t.p0.x(), &y0 = t.p0.y(), &x1 = t.p1.x(), &y1 = t.p1.y(), &x2 = t.p2.x(), &y2 = t.p2.y();
  auto sq = [&](const auto& v) { return k.mul(v, v); };
  auto m01 = sq(k.sub(k.mul(x1, y0), k.mul(x0, y1)));
  auto m02 = sq(k.sub(k.mul(x2, y0), k.mul(x0, y2)));
  auto m12 = sq(k.sub(k.mul(x2, y1), k.mul(x1, y2)));
  GammaInvariants<K> g;
  g.a = k.add(k.add(k.mul(k.mul(x2, y2), m01), k.mul(k.mul(x1, y1), m02)), k.mul(k.mul(x0, y0), m12));
  g.b = k.add(k.add(k.mul(sq(x0), m12), k.mul(sq(x1), m02)), k.mul(sq(x2), m01));
  g.c = k.add(k.add(k.mul(sq(y0), m12), k.mul(sq(y1), m02)), k.mul(sq(y2), m01));
  g.X = m01;
  g.Y = m02;
  g.Z = m12;
  g.gamma = det(abc_matrix(k, t));
  return g;
}

/// Possible dimensions of a simple quotient of M(p0, p1, p2); 0 stands for trivial.
template <Field K>
std::set<unsigned> predict_simple_quotient(const PointTriple<K>& t) {
  if (t.diagonal()) return {1};
  return {0, 3};
}

/// Whether a = b = c = 0, i.e. (X, Y, Z) solves the abc system. For
/// non-diagonal triples this must fail.
template <Field K>
bool abc_system_admits_solution(const K& k, const PointTriple<K>& t) {
  auto g = gamma_invariants(k, t);
  return k.is_zero(g.a) && k.is_zero(g.b) && k.is_zero(g.c);
}

/// gamma^2 - XYZ as a polynomial in x0, y0, x1, y1, x2, y2.
template <Field K>
CommPoly<K> gamma_identity_residual(const K& k) {
  auto v = [&](std::size_t i) { return CommPoly<K>::variable(k, 6, i); };
  auto x0 = v(0), y0 = v(1), x1 = v(2), y1 = v(3), x2 = v(4), y2 = v(5);
  std::vector<std::vector<CommPoly<K>>> m{{x2 * y2, x1 * y1, x0 * y0}, {x2 * x2, x1 * x1, x0 * x0},
                                          {y2 * y2, y1 * y1, y0 * y0}};
  auto gamma = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  auto X = (x1 * y0 - x0 * y1).pow(2);
  auto Y = (x2 * y0 - x0 * y2).pow(2);
  auto Z = (x2 * y1 - x1 * y2).pow(2);
  return gamma * gamma - X * Y * Z;
}

}  // namespace gcliff
