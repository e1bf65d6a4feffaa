#include "gcliff/disc.hpp"

#include <gtest/gtest.h>

using namespace gcliff;

namespace {

CentralPoint<PrimeField> pt(const PrimeField& k, std::array<std::int64_t, 6> v) { return central_point_from_ints(k, v); }

}  // namespace

TEST(VEll, AzumayaPoint) {
  PrimeField k(13);
  auto p = enumerate_center_fiber(k, k.one(), k.zero(), k.zero(), k.one()).front();
  auto a = analyze_point(k, p);
  EXPECT_EQ(a.dim, 9u);
  EXPECT_EQ(a.gram_rank, 9u);
  for (std::size_t ell = 1; ell <= 12; ++ell) EXPECT_EQ(v_ell_membership(a, ell).member, ell >= 10) << ell;
  EXPECT_THROW(v_ell_membership(a, 0), std::invalid_argument);
}

TEST(VEll, TwistedCubicPoint) {
  PrimeField k(13);
  auto a = analyze_point(k, pt(k, {1, 2, 4, 8, 0, 0}));
  EXPECT_EQ(a.dim, 15u);
  EXPECT_EQ(a.gram_rank, 3u);
  EXPECT_EQ(a.sum_squares(), 3u);
  for (std::size_t ell = 1; ell <= 12; ++ell) EXPECT_EQ(v_ell_membership(a, ell).member, ell >= 4) << ell;
  for (bool ok : a.block_relations) EXPECT_TRUE(ok);
}

TEST(VEll, ConePointHasOneSimpleModule) {
  PrimeField k(13);
  auto a = analyze_point(k, pt(k, {0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(a.sum_squares(), 1u);
  EXPECT_EQ(a.gram_rank, 1u);
  EXPECT_FALSE(v_ell_membership(a, 1).member);
  EXPECT_TRUE(v_ell_membership(a, 2).member);
  EXPECT_TRUE(v_ell_membership(a, 3).member);
}

TEST(ModifiedGram, MatchesRank) {
  PrimeField k(13);
  auto az = build_quotient(k, enumerate_center_fiber(k, k.one(), k.zero(), k.zero(), k.one()).front());
  auto sing = build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0}));
  for (std::size_t ell = 1; ell <= 9; ++ell) EXPECT_TRUE(modified_gram_check_with_retry(az.algebra, ell, 8, 1, true));
  EXPECT_FALSE(modified_gram_check(az.algebra, 10, 8, 1));
  for (std::size_t ell = 1; ell <= 3; ++ell) EXPECT_TRUE(modified_gram_check_with_retry(sing.algebra, ell, 8, 1, true));
  for (std::size_t ell = 4; ell <= 6; ++ell) EXPECT_FALSE(modified_gram_check(sing.algebra, ell, 8, 1));
  EXPECT_THROW(modified_gram_check(az.algebra, 0, 1, 0), std::invalid_argument);
}

TEST(ModifiedGram, BilinearFormAgreesWithDirectTraces) {
  PrimeField k(13);
  auto q = build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0}));
  auto g = full_gram_matrix(q.algebra);
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j)
      EXPECT_EQ(g(i, j), q.algebra.trace(q.algebra.product(i, j)));
}

TEST(Sampling, StrataAreWhatTheyClaim) {
  PrimeField k(31);
  auto pts = sample_points(k, 4, 4, 4, 7);
  ASSERT_EQ(pts.size(), 12u);
  for (const auto& s : pts) {
    const auto& p = s.point;
    EXPECT_TRUE(satisfies_center_relation(k, p));
    auto d = discriminant_value(k, p.a, p.b, p.c, p.d);
    switch (s.stratum) {
      case Stratum::azumaya: EXPECT_FALSE(k.is_zero(d)); break;
      case Stratum::twisted_cubic: EXPECT_TRUE(singular_locus_membership(k, p)); break;
      case Stratum::discriminant_zero:
        EXPECT_TRUE(k.is_zero(d));
        EXPECT_FALSE(singular_locus_membership(k, p));
        break;
    }
  }
  auto again = sample_points(k, 4, 4, 4, 7);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].point, again[i].point);
}

TEST(Sampling, DoubleRootCubicHasZeroDiscriminant) {
  PrimeField k(13);
  for (std::uint64_t a = 0; a < 13; a += 3)
    for (std::uint64_t g = 1; g < 13; g += 4) {
      auto f = double_root_cubic(k, Residue{a}, Residue{1}, Residue{g}, Residue{2});
      EXPECT_TRUE(k.is_zero(discriminant_value(k, f[0], f[1], f[2], f[3])));
    }
}

TEST(Sampling, TrichotomyOverSample) {
  PrimeField k(13);
  auto s = sample_locus(k, 3, 3, 3, 0);
  for (std::size_t ell : {1, 2, 3, 4, 7, 9, 10, 12})
    for (const auto& [stratum, c] : s.counts(ell))
      EXPECT_EQ(c.first, expected_member(stratum, ell) ? c.second : 0u) << stratum_name(stratum) << " " << ell;
}
