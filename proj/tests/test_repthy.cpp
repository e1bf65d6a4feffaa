#include "gcliff/repthy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gcliff;

namespace {

CentralPoint<PrimeField> pt(const PrimeField& k, std::array<std::int64_t, 6> v) { return central_point_from_ints(k, v); }

CentralPoint<PrimeField> first_on_fiber(const PrimeField& k, int a, int b, int c, int d) {
  return enumerate_center_fiber(k, k.from_int(a), k.from_int(b), k.from_int(c), k.from_int(d)).front();
}

FinDimAlgebra<PrimeField> one_dim(const PrimeField& k) { return FinDimAlgebra<PrimeField>(k, {"1"}, {{k.one()}}, {k.one()}); }

/// k[t]/(t^n).
FinDimAlgebra<PrimeField> truncated_polynomials(const PrimeField& k, std::size_t n) {
  std::vector<std::vector<Residue>> table;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Residue> v(n, k.zero());
      if (i + j < n) v[i + j] = k.one();
      table.push_back(v);
    }
  std::vector<Residue> unit(n, k.zero());
  unit[0] = k.one();
  return FinDimAlgebra<PrimeField>(k, labels, table, unit);
}

/// F_p x F_p x ... (n copies).
FinDimAlgebra<PrimeField> diagonal_algebra(const PrimeField& k, std::size_t n) {
  std::vector<std::vector<Residue>> table;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Residue> v(n, k.zero());
      if (i == j) v[i] = k.one();
      table.push_back(v);
    }
  return FinDimAlgebra<PrimeField>(k, labels, table, std::vector<Residue>(n, k.one()));
}

}  // namespace

TEST(Trace, UnitAndCyclicity) {
  PrimeField k(13);
  auto q = build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0}));
  EXPECT_EQ(q.algebra.trace(q.algebra.unit()), k.from_int(static_cast<std::int64_t>(q.dim())));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Residue> a(q.dim()), b(q.dim());
    for (auto& v : a) v = Residue{rng() % 13};
    for (auto& v : b) v = Residue{rng() % 13};
    EXPECT_EQ(q.algebra.trace(q.algebra.multiply(a, b)), q.algebra.trace(q.algebra.multiply(b, a)));
    EXPECT_EQ(q.algebra.trace(a), q.algebra.left_matrix(a).trace());
  }
}

TEST(Trace, GeneratorIsTracelessAtFermatPoint) {
  PrimeField k(13);
  auto q = build_quotient(k, first_on_fiber(k, 1, 0, 0, 1));
  EXPECT_EQ(q.algebra.trace(q.coordinates(NcPoly<PrimeField>::x(k))), k.zero());
}

TEST(Gram, Ranks) {
  PrimeField k(13);
  auto az = build_quotient(k, first_on_fiber(k, 1, 0, 0, 1));
  EXPECT_EQ(rank(full_gram_matrix(az.algebra)), 9u);
  auto sing = build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0}));
  EXPECT_EQ(rank(full_gram_matrix(sing.algebra)), 3u);
  auto g = gram_matrix(az.algebra, {az.algebra.zero()});
  EXPECT_EQ(g.rows(), 1u);
  EXPECT_TRUE(g.is_zero());
}

TEST(Radical, SmallAlgebras) {
  PrimeField k(13);
  EXPECT_TRUE(radical(one_dim(k)).empty());
  EXPECT_EQ(radical(truncated_polynomials(k, 4)).size(), 3u);
  EXPECT_TRUE(radical(diagonal_algebra(k, 3)).empty());
}

TEST(Radical, CharacteristicAtMostDimension) {
  // F_7[t]/(t^7 - 1) = F_7[s]/(s^7) with s = t - 1 is local; its trace form
  // vanishes identically (trace of 1 is 7 = 0), so the kernel is everything
  // and is not nilpotent.
  PrimeField k(7);
  std::vector<std::vector<Residue>> table;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < 7; ++i) labels.push_back("t" + std::to_string(i));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      std::vector<Residue> v(7, k.zero());
      v[(i + j) % 7] = k.one();
      table.push_back(v);
    }
  std::vector<Residue> unit(7, k.zero());
  unit[0] = k.one();
  FinDimAlgebra<PrimeField> group_algebra(k, labels, table, unit);
  EXPECT_THROW(radical(group_algebra), CharacteristicTooSmall);
  // truncated polynomials with dim > p: trace-form kernel is the (nilpotent) radical
  EXPECT_EQ(radical(truncated_polynomials(k, 9)).size(), 8u);
}

TEST(Radical, IsNilpotentIdealAtSingularPoints) {
  PrimeField k(13);
  for (auto p : {pt(k, {1, 1, 1, 1, 0, 0}), pt(k, {0, 0, 0, 0, 0, 0})}) {
    auto q = build_quotient(k, p);
    auto rad = radical(q.algebra);
    EXPECT_TRUE(is_nilpotent_ideal(q.algebra, rad));
    // two-sided: products with basis vectors stay in the span
    Matrix<PrimeField> span(k, rad.size(), q.dim());
    for (std::size_t i = 0; i < rad.size(); ++i)
      for (std::size_t j = 0; j < q.dim(); ++j) span(i, j) = rad[i][j];
    auto r = rank(span);
    for (const auto& v : rad)
      for (std::size_t b = 0; b < q.dim(); ++b) {
        for (auto prod : {q.algebra.multiply(v, q.algebra.basis_vector(b)), q.algebra.multiply(q.algebra.basis_vector(b), v)}) {
          Matrix<PrimeField> ext(k, rad.size() + 1, q.dim());
          for (std::size_t i = 0; i < rad.size(); ++i)
            for (std::size_t j = 0; j < q.dim(); ++j) ext(i, j) = rad[i][j];
          for (std::size_t j = 0; j < q.dim(); ++j) ext(rad.size(), j) = prod[j];
          EXPECT_EQ(rank(ext), r);
        }
      }
  }
}

TEST(Wedderburn, AzumayaPoints) {
  for (std::uint64_t p : {13, 31}) {
    PrimeField k(p);
    auto q = build_quotient(k, first_on_fiber(k, 1, 0, 0, 1));
    auto b = wedderburn_blocks(q.algebra);
    EXPECT_EQ(b.radical_dim, 0u);
    EXPECT_EQ(b.blocks, std::vector<Block>{(Block{3, 1})});
    EXPECT_EQ(b.sum_squares(), 9u);
  }
}

TEST(Wedderburn, SingularPoints) {
  PrimeField k(13);
  auto q = build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0}));
  auto w = wedderburn_decomposition(q.algebra);
  EXPECT_EQ(w.structure.blocks, (std::vector<Block>{{1, 1}, {1, 1}, {1, 1}}));
  EXPECT_EQ(w.structure.radical_dim, 12u);
  EXPECT_EQ(w.structure.irrep_dims(), (std::vector<unsigned>{1, 1, 1}));
  for (bool ok : blockwise_relation_check(q, w)) EXPECT_TRUE(ok);
  auto origin = wedderburn_blocks(build_quotient(k, pt(k, {0, 0, 0, 0, 0, 0})).algebra);
  EXPECT_EQ(origin.blocks, std::vector<Block>{(Block{1, 1})});
  EXPECT_EQ(origin.radical_dim, 16u);
}

TEST(Wedderburn, SplitsProductsAndIsSeedIndependent) {
  PrimeField k(13);
  auto a = diagonal_algebra(k, 5);
  for (std::uint64_t seed : {0, 1, 2, 99}) {
    auto b = wedderburn_blocks(a, seed);
    EXPECT_EQ(b.blocks.size(), 5u);
    EXPECT_EQ(b.semisimple_dim(), 5u);
  }
  auto t = wedderburn_blocks(truncated_polynomials(k, 5));
  EXPECT_EQ(t.blocks, std::vector<Block>{(Block{1, 1})});
  EXPECT_EQ(t.radical_dim, 4u);
}

TEST(Wedderburn, FieldExtensionBlock) {
  // F_13[t]/(t^2 - 2): 2 is not a square mod 13, so this is F_169, one block (1, 2).
  PrimeField k(13);
  std::vector<std::vector<Residue>> table{{{1}, {0}}, {{0}, {1}}, {{0}, {1}}, {{2}, {0}}};
  FinDimAlgebra<PrimeField> f169(k, {"1", "t"}, table, {{1}, {0}});
  auto b = wedderburn_blocks(f169);
  EXPECT_EQ(b.blocks, std::vector<Block>{(Block{1, 2})});
  EXPECT_EQ(b.irrep_dims(), (std::vector<unsigned>{1, 1}));
}

TEST(SearchDim2, NoIrreduciblePairs) {
  for (std::uint64_t p : {7, 13}) {
    PrimeField k(p);
    auto r = search_irreps_dim2(k);
    EXPECT_TRUE(r.irreducible_pairs.empty()) << p;
    EXPECT_GT(r.reducible_solutions, 0u);
    EXPECT_EQ(r.relation_solutions, r.reducible_solutions);
  }
  EXPECT_THROW(search_irreps_dim2(PrimeField(37)), FieldTooLarge);
}

TEST(SearchDim1, Points) {
  PrimeField k(13);
  auto reps = search_irreps_dim1(k, pt(k, {1, 1, 1, 1, 0, 0}));
  std::vector<std::pair<Residue, Residue>> expected{{{1}, {1}}, {{3}, {3}}, {{9}, {9}}};
  EXPECT_EQ(reps, expected);
  EXPECT_TRUE(search_irreps_dim1(k, first_on_fiber(k, 1, 0, 0, 1)).empty());
  auto origin = search_irreps_dim1(k, pt(k, {0, 0, 0, 0, 0, 0}));
  ASSERT_EQ(origin.size(), 1u);
  EXPECT_EQ(origin[0], (std::pair<Residue, Residue>{{0}, {0}}));
}
