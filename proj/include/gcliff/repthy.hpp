#pragma once

// Structure of finite-dimensional algebras over F_p: trace forms, the
// Jacobson radical, Wedderburn blocks, and brute-force searches for low
// dimensional representations of the generic Clifford algebra.

#include "gcliff/center.hpp"
#include "gcliff/commgeo.hpp"
#include "gcliff/findim.hpp"
#include "gcliff/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gcliff {

struct CharacteristicTooSmall : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct SplitFailure : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct FieldTooLarge : AlgebraError {
  using AlgebraError::AlgebraError;
};

template <Field K>
using Vec = std::vector<typename K::value_type>;

template <Field K>
typename K::value_type trace(const FinDimAlgebra<K>& a, std::span<const typename K::value_type> element) {
  return a.trace(element);
}

/// [tr(y_i y_j)]
template <Field K>
Matrix<K> gram_matrix(const FinDimAlgebra<K>& a, const std::vector<Vec<K>>& elements) {
  Matrix<K> g(a.field(), elements.size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) g(i, j) = a.trace(a.multiply(elements[i], elements[j]));
  return g;
}

/// [tr(y_i y'_j)]
template <Field K>
Matrix<K> pairing_matrix(const FinDimAlgebra<K>& a, const std::vector<Vec<K>>& left,
                         const std::vector<Vec<K>>& right) {
  Matrix<K> g(a.field(), left.size(), right.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) g(i, j) = a.trace(a.multiply(left[i], right[j]));
  return g;
}

template <Field K>
std::vector<Vec<K>> standard_basis(const FinDimAlgebra<K>& a) {
  std::vector<Vec<K>> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a.basis_vector(i));
  return out;
}

template <Field K>
Matrix<K> full_gram_matrix(const FinDimAlgebra<K>& a) {
  return gram_matrix(a, standard_basis(a));
}

/// Whether the span of `ideal` (a two-sided ideal) is nilpotent.
template <Field K>
bool is_nilpotent_ideal(const FinDimAlgebra<K>& a, const std::vector<Vec<K>>& ideal) {
  std::vector<Vec<K>> power = ideal;
  for (std::size_t step = 0; step <= a.dim() && !power.empty(); ++step) {
    // span of power * ideal
    std::vector<Vec<K>> products;
    for (const auto& u : power)
      for (const auto& v : ideal) products.push_back(a.multiply(u, v));
    if (products.empty()) break;
    Matrix<K> m(a.field(), products.size(), a.dim());
    for (std::size_t i = 0; i < products.size(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = products[i][j];
    auto r = rref(m);
    power.clear();
    for (std::size_t i = 0; i < r.rank; ++i) {
      auto row = r.reduced.row(i);
      power.emplace_back(row.begin(), row.end());
    }
  }
  return power.empty();
}

/// Jacobson radical as the kernel of the trace form. The kernel always
/// contains the radical; it equals it when char = 0 or char > dim, and in
/// general exactly when it is nilpotent, which is checked otherwise.
template <Field K>
std::vector<Vec<K>> radical(const FinDimAlgebra<K>& a) {
  auto basis = kernel(full_gram_matrix(a));
  const auto p = a.field().characteristic();
  if (p != 0 && p <= a.dim() && !is_nilpotent_ideal(a, basis))
    throw CharacteristicTooSmall("trace-form kernel is not nilpotent in characteristic " + std::to_string(p) +
                                 " (dim " + std::to_string(a.dim()) + ")");
  return basis;
}

/// Center: elements commuting with every basis element.
template <Field K>
std::vector<Vec<K>> algebra_center(const FinDimAlgebra<K>& a) {
  const auto n = a.dim();
  Matrix<K> m(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    // column j: b_j b_i - b_i b_j
    for (std::size_t j = 0; j < n; ++j) {
      const auto& left = a.product(j, i);
      const auto& right = a.product(i, j);
      for (std::size_t l = 0; l < n; ++l) m(i * n + l, j) = a.field().sub(left[l], right[l]);
    }
  }
  return kernel(m);
}

/// A / I for a two-sided ideal I, with the projection from A-coordinates.
template <Field K>
struct QuotientMap {
  FinDimAlgebra<K> algebra;
  std::vector<std::size_t> complement;  ///< A-basis indices whose images form the quotient basis
  Matrix<K> ideal_rref;                 ///< ideal basis in reduced echelon form
  std::vector<std::size_t> ideal_pivots;

  Vec<K> project(std::span<const typename K::value_type> v) const {
    const K& k = algebra.field();
    Vec<K> w(v.begin(), v.end());
    for (std::size_t i = 0; i < ideal_pivots.size(); ++i) {
      auto c = w[ideal_pivots[i]];
      if (k.is_zero(c)) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = k.sub(w[j], k.mul(c, ideal_rref(i, j)));
    }
    Vec<K> out;
    for (auto j : complement) out.push_back(w[j]);
    return out;
  }
};

template <Field K>
QuotientMap<K> quotient_by_ideal(const FinDimAlgebra<K>& a, const std::vector<Vec<K>>& ideal) {
  const K& k = a.field();
  const auto n = a.dim();
  Matrix<K> m(k, ideal.size(), n);
  for (std::size_t i = 0; i < ideal.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ideal[i][j];
  auto r = rref(m);
  std::vector<bool> pivot(n, false);
  for (auto c : r.pivot_columns) pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) complement.push_back(j);

  Matrix<K> reduced(k, r.rank, n);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) reduced(i, j) = r.reduced(i, j);
  QuotientMap<K> qm{FinDimAlgebra<K>(k, {"1"}, {Vec<K>{k.one()}}, Vec<K>{k.one()}), complement, reduced,
                    r.pivot_columns};

  std::vector<std::string> labels;
  for (auto j : complement) labels.push_back(a.labels()[j]);
  std::vector<Vec<K>> table;
  for (auto i : complement)
    for (auto j : complement) table.push_back(qm.project(a.product(i, j)));
  qm.algebra = FinDimAlgebra<K>(k, labels, table, qm.project(a.unit()));
  return qm;
}

/// Simple component: n x n matrices over F_{p^k}.
struct Block {
  unsigned n = 0;
  unsigned k = 0;
  friend auto operator<=>(const Block&, const Block&) = default;
};

struct BlockStructure {
  std::vector<Block> blocks;
  std::size_t radical_dim = 0;

  /// Irreducible representation dimensions over the algebraic closure.
  std::vector<unsigned> irrep_dims() const {
    std::vector<unsigned> out;
    for (auto b : blocks)
      for (unsigned i = 0; i < b.k; ++i) out.push_back(b.n);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::size_t sum_squares() const {
    std::size_t s = 0;
    for (auto d : irrep_dims()) s += std::size_t{d} * d;
    return s;
  }
  std::size_t semisimple_dim() const {
    std::size_t s = 0;
    for (auto b : blocks) s += std::size_t{b.n} * b.n * b.k;
    return s;
  }
};

struct Wedderburn {
  BlockStructure structure;
  QuotientMap<PrimeField> semisimple;
  std::vector<Vec<PrimeField>> idempotents;  ///< central primitive idempotents of A/rad
};

namespace detail {

inline std::size_t span_rank(const PrimeField& k, const std::vector<Vec<PrimeField>>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  Matrix<PrimeField> m(k, vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  return rank(m);
}

inline unsigned exact_sqrt(std::size_t v) {
  unsigned r = 0;
  while (std::size_t{r + 1} * (r + 1) <= v) ++r;
  if (std::size_t{r} * r != v) throw AlgebraError("block dimension " + std::to_string(v) + " is not k * n^2");
  return r;
}

}  // namespace detail

/// Splits A/rad into simple blocks. Central primitive idempotents come from
/// the Frobenius-fixed part of the center (a product of copies of F_p),
/// separated by a seeded random element and Lagrange interpolation.
inline Wedderburn wedderburn_decomposition(const FinDimAlgebra<PrimeField>& a, std::uint64_t seed = 0,
                                           unsigned retries = 64) {
  const PrimeField& k = a.field();
  auto rad = radical(a);
  auto qm = quotient_by_ideal(a, rad);
  const auto& s = qm.algebra;
  const auto n = s.dim();
  Wedderburn out{BlockStructure{{}, rad.size()}, qm, {}};
  if (n == 0) return out;

  auto center = algebra_center(s);
  const auto zdim = center.size();
  // Frobenius z -> z^p on the center, in center coordinates.
  Matrix<PrimeField> basis_cols(k, n, zdim);
  for (std::size_t j = 0; j < zdim; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_cols(i, j) = center[j][i];
  Matrix<PrimeField> frob(k, zdim, zdim);
  for (std::size_t j = 0; j < zdim; ++j) {
    auto img = s.power(center[j], k.modulus());
    auto coords = solve(basis_cols, std::span<const Residue>(img));
    if (!coords) throw AlgebraError("Frobenius image left the center");
    for (std::size_t i = 0; i < zdim; ++i) frob(i, j) = (*coords)[i];
  }
  auto fixed_coords = kernel(frob - Matrix<PrimeField>::identity(k, zdim));
  std::vector<Vec<PrimeField>> fixed;
  for (const auto& c : fixed_coords) {
    Vec<PrimeField> v(n, k.zero());
    for (std::size_t j = 0; j < zdim; ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] = k.add(v[i], k.mul(c[j], center[j][i]));
    fixed.push_back(std::move(v));
  }
  const auto nblocks = fixed.size();

  std::vector<Vec<PrimeField>> idempotents;
  if (nblocks == 1) {
    idempotents.push_back(s.unit());
  } else {
    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt <= retries && idempotents.empty(); ++attempt) {
      Vec<PrimeField> b(n, k.zero());
      for (const auto& f : fixed) b = s.add(b, s.scale(Residue{rng() % k.modulus()}, f));
      // b is semisimple with eigenvalues in F_p; find them by evaluation.
      std::vector<Residue> roots;
      for (std::uint64_t lv = 0; lv < k.modulus() && roots.size() < nblocks; ++lv) {
        // b - lambda is a zero divisor iff lambda is an eigenvalue
        Vec<PrimeField> shifted = s.add(b, s.scale(k.neg(Residue{lv}), s.unit()));
        if (rank(s.left_matrix(shifted)) < n) roots.push_back(Residue{lv});
      }
      if (roots.size() < nblocks) continue;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Vec<PrimeField> e = s.unit();
        for (std::size_t j = 0; j < roots.size(); ++j) {
          if (i == j) continue;
          auto num = s.add(b, s.scale(k.neg(roots[j]), s.unit()));
          e = s.scale(k.inv(k.sub(roots[i], roots[j])), s.multiply(e, num));
        }
        idempotents.push_back(std::move(e));
      }
    }
    if (idempotents.empty()) throw SplitFailure("no separating central element after " + std::to_string(retries) + " tries");
  }

  for (const auto& e : idempotents) {
    std::vector<Vec<PrimeField>> block_vecs, center_vecs;
    for (std::size_t i = 0; i < n; ++i) block_vecs.push_back(s.multiply(e, s.basis_vector(i)));
    for (const auto& z : center) center_vecs.push_back(s.multiply(e, z));
    auto bdim = detail::span_rank(k, block_vecs, n);
    auto kdeg = detail::span_rank(k, center_vecs, n);
    out.structure.blocks.push_back(Block{detail::exact_sqrt(bdim / kdeg), static_cast<unsigned>(kdeg)});
  }
  std::vector<std::size_t> order(idempotents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return out.structure.blocks[x] < out.structure.blocks[y]; });
  std::vector<Block> sorted_blocks;
  for (auto i : order) {
    sorted_blocks.push_back(out.structure.blocks[i]);
    out.idempotents.push_back(idempotents[i]);
  }
  out.structure.blocks = std::move(sorted_blocks);
  if (out.structure.radical_dim + out.structure.semisimple_dim() != a.dim())
    throw AlgebraError("block dimensions do not add up");
  return out;
}

inline BlockStructure wedderburn_blocks(const FinDimAlgebra<PrimeField>& a, std::uint64_t seed = 0) {
  return wedderburn_decomposition(a, seed).structure;
}

/// For each Wedderburn block of a quotient, whether the images of x and y
/// restricted to (A/rad) e satisfy the cubic-form relations.
inline std::vector<bool> blockwise_relation_check(const Quotient<PrimeField>& q, const Wedderburn& w) {
  const PrimeField& k = q.system.field();
  const auto& s = w.semisimple.algebra;
  auto xs = w.semisimple.project(q.coordinates(NcPoly<PrimeField>::x(k)));
  auto ys = w.semisimple.project(q.coordinates(NcPoly<PrimeField>::y(k)));
  auto rels = cubic_form_relations(k, q.point.a, q.point.b, q.point.c, q.point.d);
  std::vector<bool> out;
  for (const auto& e : w.idempotents) {
    // basis of the left ideal S e
    std::vector<Vec<PrimeField>> gens;
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(s.multiply(s.basis_vector(i), e));
    Matrix<PrimeField> g(k, gens.size(), s.dim());
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) g(i, j) = gens[i][j];
    auto r = rref(g);
    const auto d = r.rank;
    Matrix<PrimeField> cols(k, s.dim(), d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < s.dim(); ++j) cols(j, i) = r.reduced(i, j);
    auto restrict_to = [&](const Vec<PrimeField>& a) {
      Matrix<PrimeField> m(k, d, d);
      for (std::size_t j = 0; j < d; ++j) {
        Vec<PrimeField> v(s.dim());
        for (std::size_t t = 0; t < s.dim(); ++t) v[t] = cols(t, j);
        auto img = s.multiply(a, v);
        auto c = solve(cols, std::span<const Residue>(img));
        if (!c) throw AlgebraError("left ideal not invariant");
        for (std::size_t i = 0; i < d; ++i) m(i, j) = (*c)[i];
      }
      return m;
    };
    auto X = restrict_to(xs), Y = restrict_to(ys);
    bool ok = true;
    for (const auto& rel : rels) ok = ok && rel.evaluate(X, Y).is_zero();
    out.push_back(ok);
  }
  return out;
}

/// 2x2 matrix over F_p in row-major order.
struct Mat2 {
  Residue a, b, c, d;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Dim2SearchResult {
  std::vector<std::pair<Mat2, Mat2>> irreducible_pairs;
  std::size_t x_forms = 0;
  std::size_t candidates = 0;
  std::size_t relation_solutions = 0;
  std::size_t reducible_solutions = 0;
};

namespace detail {

struct Mat2Ops {
  const PrimeField& k;
  Mat2 mul(const Mat2& x, const Mat2& y) const {
    return {k.add(k.mul(x.a, y.a), k.mul(x.b, y.c)), k.add(k.mul(x.a, y.b), k.mul(x.b, y.d)),
            k.add(k.mul(x.c, y.a), k.mul(x.d, y.c)), k.add(k.mul(x.c, y.b), k.mul(x.d, y.d))};
  }
  Mat2 add(const Mat2& x, const Mat2& y) const { return {k.add(x.a, y.a), k.add(x.b, y.b), k.add(x.c, y.c), k.add(x.d, y.d)}; }
  Mat2 sub(const Mat2& x, const Mat2& y) const { return {k.sub(x.a, y.a), k.sub(x.b, y.b), k.sub(x.c, y.c), k.sub(x.d, y.d)}; }
  static bool is_zero(const Mat2& m) { return m.a.value == 0 && m.b.value == 0 && m.c.value == 0 && m.d.value == 0; }

  bool satisfies_clifford(const Mat2& x, const Mat2& y) const {
    Mat2 x2 = mul(x, x), y2 = mul(y, y), x3 = mul(x2, x), y3 = mul(y2, y);
    if (!is_zero(sub(mul(x3, y), mul(y, x3)))) return false;
    if (!is_zero(sub(mul(x, y3), mul(y3, x)))) return false;
    Mat2 xy = mul(x, y), yx = mul(y, x);
    Mat2 r = sub(add(mul(x2, y2), mul(xy, xy)), add(mul(yx, yx), mul(y2, x2)));
    return is_zero(r);
  }

  // x, y generate all of M_2 (absolute irreducibility).
  bool generates_full_algebra(const Mat2& x, const Mat2& y) const {
    std::vector<Mat2> span{{k.one(), k.zero(), k.zero(), k.one()}};
    std::vector<Mat2> frontier = span;
    auto independent_rank = [&](const std::vector<Mat2>& ms) {
      Matrix<PrimeField> m(k, ms.size(), 4);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        m(i, 0) = ms[i].a, m(i, 1) = ms[i].b, m(i, 2) = ms[i].c, m(i, 3) = ms[i].d;
      }
      return rank(m);
    };
    while (!frontier.empty() && span.size() < 4) {
      std::vector<Mat2> next;
      for (const auto& f : frontier)
        for (const auto& g : {x, y}) {
          auto cand = span;
          cand.push_back(mul(f, g));
          if (independent_rank(cand) > span.size()) {
            span.push_back(cand.back());
            next.push_back(cand.back());
          }
        }
      frontier = std::move(next);
    }
    return span.size() == 4;
  }
};

}  // namespace detail

/// Irreducible 2-dimensional representations x -> X, y -> Y of C over F_p.
/// X runs over conjugacy representatives with X^3 scalar and X non-scalar:
/// diag(alpha, alpha w) for alpha != 0, and the nilpotent Jordan block. Y runs
/// over all of M_2(F_p).
inline Dim2SearchResult search_irreps_dim2(const PrimeField& k, std::uint64_t max_prime = 31) {
  if (k.modulus() > max_prime) throw FieldTooLarge(k.name() + " is too large for a p^4 sweep");
  auto omega = k.cube_root_unity();
  detail::Mat2Ops ops{k};
  std::vector<Mat2> xs;
  for (std::uint64_t a = 1; a < k.modulus(); ++a) xs.push_back({Residue{a}, k.zero(), k.zero(), k.mul(Residue{a}, omega)});
  xs.push_back({k.zero(), k.one(), k.zero(), k.zero()});

  Dim2SearchResult out;
  out.x_forms = xs.size();
  const auto p = k.modulus();
  for (const auto& x : xs)
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b)
        for (std::uint64_t c = 0; c < p; ++c)
          for (std::uint64_t d = 0; d < p; ++d) {
            Mat2 y{Residue{a}, Residue{b}, Residue{c}, Residue{d}};
            ++out.candidates;
            if (!ops.satisfies_clifford(x, y)) continue;
            ++out.relation_solutions;
            if (ops.generates_full_algebra(x, y)) out.irreducible_pairs.emplace_back(x, y);
            else ++out.reducible_solutions;
          }
  return out;
}

/// One-dimensional representations x -> a, y -> b whose central character is
/// the given point, sorted by (a, b).
inline std::vector<std::pair<Residue, Residue>> search_irreps_dim1(const PrimeField& k,
                                                                   const CentralPoint<PrimeField>& pt) {
  auto z = central_elements(k);
  auto zs = z.all();
  auto coords = pt.coords();
  std::vector<Residue> as, bs;
  for (std::uint64_t v = 0; v < k.modulus(); ++v) {
    if (k.pow(Residue{v}, 3) == pt.a) as.push_back(Residue{v});
    if (k.pow(Residue{v}, 3) == pt.d) bs.push_back(Residue{v});
  }
  std::vector<std::pair<Residue, Residue>> out;
  for (auto a : as)
    for (auto b : bs) {
      bool match = true;
      for (std::size_t i = 0; i < 6 && match; ++i) match = zs[i]->evaluate(a, b) == coords[i];
      if (match) out.emplace_back(a, b);
    }
  return out;
}

}  // namespace gcliff
