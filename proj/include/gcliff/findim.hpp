#pragma once

// Finite-dimensional algebras given by structure constants, and the central
// quotients C/mC built by completing the Clifford relations of a cubic form
// together with z4 - e and z5 - f.

#include "gcliff/center.hpp"
#include "gcliff/commgeo.hpp"
#include "gcliff/linalg.hpp"
#include "gcliff/rewrite.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace gcliff {

struct NotFiniteDimensional : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct ZeroAlgebra : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct NotScalar : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Associative unital algebra with a chosen basis. Elements are coordinate
/// vectors; product(i, j) is the coordinate vector of basis_i * basis_j.
template <Field K>
class FinDimAlgebra {
 public:
  using value_type = typename K::value_type;
  using Vector = std::vector<value_type>;

  FinDimAlgebra(K field, std::vector<std::string> labels, std::vector<Vector> table, Vector unit)
      : field_(std::move(field)), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    const auto n = labels_.size();
    if (table_.size() != n * n || unit_.size() != n) throw DimensionMismatch("structure constants shape");
    basis_traces_.assign(n, field_.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) basis_traces_[i] = field_.add(basis_traces_[i], product(i, j)[j]);
  }

  const K& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Vector& unit() const { return unit_; }

  Vector zero() const { return Vector(dim(), field_.zero()); }
  Vector basis_vector(std::size_t i) const {
    Vector v = zero();
    v[i] = field_.one();
    return v;
  }

  Vector multiply(std::span<const value_type> a, std::span<const value_type> b) const {
    Vector out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (field_.is_zero(b[j])) continue;
        auto c = field_.mul(a[i], b[j]);
        const auto& p = product(i, j);
        for (std::size_t l = 0; l < dim(); ++l)
          if (!field_.is_zero(p[l])) out[l] = field_.add(out[l], field_.mul(c, p[l]));
      }
    }
    return out;
  }

  Vector add(std::span<const value_type> a, std::span<const value_type> b) const {
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = field_.add(out[i], b[i]);
    return out;
  }
  Vector scale(const value_type& c, std::span<const value_type> a) const {
    Vector out(a.begin(), a.end());
    for (auto& v : out) v = field_.mul(c, v);
    return out;
  }
  Vector power(Vector a, std::uint64_t e) const {
    Vector r = unit_;
    while (e) {
      if (e & 1) r = multiply(r, a);
      e >>= 1;
      if (e) a = multiply(a, a);
    }
    return r;
  }

  /// Matrix of left multiplication by a; column j is a * basis_j.
  Matrix<K> left_matrix(std::span<const value_type> a) const {
    Matrix<K> m(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto col = multiply(a, basis_vector(j));
      for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Regular trace, tr(L_a).
  value_type trace(std::span<const value_type> a) const {
    value_type t = field_.zero();
    for (std::size_t i = 0; i < dim(); ++i)
      if (!field_.is_zero(a[i])) t = field_.add(t, field_.mul(a[i], basis_traces_[i]));
    return t;
  }

  bool check_unit_law() const {
    for (std::size_t i = 0; i < dim(); ++i) {
      auto b = basis_vector(i);
      if (multiply(unit_, b) != b || multiply(b, unit_) != b) return false;
    }
    return true;
  }

  /// All triples when dim^3 <= max_triples, otherwise max_triples seeded samples.
  bool check_associativity(std::size_t max_triples = 20000, std::uint64_t seed = 0) const {
    const auto n = dim();
    auto check = [&](std::size_t i, std::size_t j, std::size_t l) {
      auto bi = basis_vector(i), bj = basis_vector(j), bl = basis_vector(l);
      return multiply(multiply(bi, bj), bl) == multiply(bi, multiply(bj, bl));
    };
    if (n * n * n <= max_triples) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t l = 0; l < n; ++l)
            if (!check(i, j, l)) return false;
      return true;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < max_triples; ++t)
      if (!check(rng() % n, rng() % n, rng() % n)) return false;
    return true;
  }

 private:
  K field_;
  std::vector<std::string> labels_;
  std::vector<Vector> table_;
  Vector unit_;
  Vector basis_traces_;
};

/// C/mC with its presentation.
template <Field K>
struct Quotient {
  CentralPoint<K> point;
  RewriteSystem<K> system;
  std::vector<Word> basis;
  FinDimAlgebra<K> algebra;

  std::size_t dim() const { return basis.size(); }

  /// Coordinates of the image of a free-algebra element.
  std::vector<typename K::value_type> coordinates(const NcPoly<K>& p) const {
    const K& k = system.field();
    std::vector<typename K::value_type> v(basis.size(), k.zero());
    auto nf = normal_form(system, p);
    for (const auto& [w, c] : nf.terms()) {
      auto it = std::lower_bound(basis.begin(), basis.end(), w, system.order());
      if (it == basis.end() || !(*it == w)) throw AlgebraError("normal word " + w.str() + " outside the basis");
      v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
  }
};

inline constexpr unsigned kQuotientDegreeBound = 16;

/// Relations presenting C/mC: the four cubic-form generators plus z4 - e, z5 - f.
template <Field K>
std::vector<NcPoly<K>> quotient_relations(const K& k, const CentralPoint<K>& pt) {
  auto rels = cubic_form_relations(k, pt.a, pt.b, pt.c, pt.d);
  auto z = central_elements(k);
  rels.push_back(z.z4 - NcPoly<K>::constant(k, pt.e));
  rels.push_back(z.z5 - NcPoly<K>::constant(k, pt.f));
  return rels;
}

template <Field K>
Quotient<K> build_quotient(const K& k, const CentralPoint<K>& pt, unsigned degree_bound = kQuotientDegreeBound,
                           WordOrder order = WordOrder{LetterOrder::x_greater_y}) {
  CompletionOptions options{order, degree_bound, 5000};
  auto system = complete(k, quotient_relations(k, pt), options);
  if (system.is_trivial()) throw ZeroAlgebra("1 lies in the ideal: the point is not on the center variety");
  if (!system.is_complete())
    throw BudgetExceeded("overlaps above degree " + std::to_string(degree_bound) + " left unresolved");

  auto levels = normal_words_by_degree(system, 2 * degree_bound + 1);
  if (!levels.back().empty())
    throw NotFiniteDimensional("normal words persist in degree " + std::to_string(levels.size() - 1));
  std::vector<Word> basis;
  for (const auto& level : levels) basis.insert(basis.end(), level.begin(), level.end());

  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  const auto n = basis.size();
  NormalFormCache<K> nf(system);
  std::vector<std::vector<typename K::value_type>> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename K::value_type> v(n, k.zero());
      for (const auto& [w, c] : nf.of_word(basis[i] * basis[j]).terms()) v[index.at(w)] = c;
      table.push_back(std::move(v));
    }
  std::vector<std::string> labels;
  for (auto w : basis) labels.push_back(w.str());
  std::vector<typename K::value_type> unit(n, k.zero());
  unit[index.at(Word())] = k.one();
  FinDimAlgebra<K> algebra(k, std::move(labels), std::move(table), std::move(unit));
  return Quotient<K>{pt, std::move(system), std::move(basis), std::move(algebra)};
}

/// Left-multiplication matrices of x and y.
template <Field K>
std::pair<Matrix<K>, Matrix<K>> generator_matrices(const Quotient<K>& q) {
  const K& k = q.system.field();
  return {q.algebra.left_matrix(q.coordinates(NcPoly<K>::x(k))),
          q.algebra.left_matrix(q.coordinates(NcPoly<K>::y(k)))};
}

/// Images of z0..z5 in C/mC, each of which must be a scalar multiple of 1.
template <Field K>
std::array<typename K::value_type, 6> reduce_center_images(const Quotient<K>& q, const CenterElements<K>& z) {
  const K& k = q.system.field();
  std::array<typename K::value_type, 6> out{};
  auto zs = z.all();
  for (std::size_t i = 0; i < 6; ++i) {
    auto v = q.coordinates(*zs[i]);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!(q.basis[j] == Word()) && !k.is_zero(v[j]))
        throw NotScalar("z" + std::to_string(i) + " is not a scalar in the quotient");
    out[i] = v[0];
  }
  return out;
}

}  // namespace gcliff
