#include "gcliff/findim.hpp"

#include <gtest/gtest.h>

using namespace gcliff;

using P = NcPoly<PrimeField>;

namespace {

CentralPoint<PrimeField> pt(const PrimeField& k, std::array<std::int64_t, 6> v) { return central_point_from_ints(k, v); }

/// The point of the fiber over (a, b, c, d) with the smallest f, then e.
CentralPoint<PrimeField> first_on_fiber(const PrimeField& k, int a, int b, int c, int d) {
  return enumerate_center_fiber(k, k.from_int(a), k.from_int(b), k.from_int(c), k.from_int(d)).front();
}

}  // namespace

TEST(FinDimAlgebra, TwoByTwoMatrices) {
  PrimeField k(13);
  // basis e11, e12, e21, e22
  std::vector<std::vector<Residue>> table;
  auto e = [&](int idx) {
    std::vector<Residue> v(4, k.zero());
    if (idx >= 0) v[static_cast<std::size_t>(idx)] = k.one();
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int r1 = i / 2, c1 = i % 2, r2 = j / 2, c2 = j % 2;
      table.push_back(c1 == r2 ? e(r1 * 2 + c2) : e(-1));
    }
  FinDimAlgebra<PrimeField> m2(k, {"e11", "e12", "e21", "e22"}, table, {{1}, {0}, {0}, {1}});
  EXPECT_TRUE(m2.check_unit_law());
  EXPECT_TRUE(m2.check_associativity());
  EXPECT_EQ(m2.trace(m2.unit()), k.from_int(4));
  EXPECT_EQ(m2.trace(m2.basis_vector(1)), k.zero());
  EXPECT_EQ(m2.trace(m2.basis_vector(0)), k.from_int(2));
  EXPECT_THROW(FinDimAlgebra<PrimeField>(k, {"a"}, {}, {{1}}), DimensionMismatch);
}

TEST(BuildQuotient, AzumayaPointsHaveDimensionNine) {
  PrimeField k(13);
  for (const auto& p : enumerate_center_fiber(k, k.one(), k.zero(), k.zero(), k.one())) {
    auto q = build_quotient(k, p);
    EXPECT_EQ(q.dim(), 9u);
    EXPECT_TRUE(q.system.is_complete());
  }
  EXPECT_EQ(build_quotient(k, first_on_fiber(k, 2, 5, 7, 3)).dim(), 9u);
}

TEST(BuildQuotient, SingularAndSpecialPoints) {
  PrimeField k(13);
  EXPECT_EQ(build_quotient(k, pt(k, {1, 1, 1, 1, 0, 0})).dim(), 15u);
  EXPECT_EQ(build_quotient(k, pt(k, {0, 0, 0, 1, 0, 0})).dim(), 15u);
  EXPECT_EQ(build_quotient(k, pt(k, {1, 2, 4, 8, 0, 0})).dim(), 15u);
  EXPECT_EQ(build_quotient(k, pt(k, {0, 0, 0, 0, 0, 0})).dim(), 17u);
  // D = 0 off the cubic is still a smooth point of the center
  EXPECT_EQ(build_quotient(k, pt(k, {0, 1, 0, 0, 1, 1})).dim(), 9u);
}

TEST(BuildQuotient, InconsistentPointIsZero) {
  PrimeField k(13);
  EXPECT_THROW(build_quotient(k, pt(k, {1, 0, 0, 1, 0, 0})), ZeroAlgebra);
  EXPECT_THROW(build_quotient(k, pt(k, {0, 1, 0, 0, 0, 1})), ZeroAlgebra);
}

TEST(BuildQuotient, StructureConstantsAreAnAlgebra) {
  PrimeField k(13);
  for (auto p : {pt(k, {1, 1, 1, 1, 0, 0}), first_on_fiber(k, 1, 0, 0, 1), pt(k, {0, 0, 0, 0, 0, 0})}) {
    auto q = build_quotient(k, p);
    EXPECT_TRUE(q.algebra.check_unit_law());
    EXPECT_TRUE(q.algebra.check_associativity(5000));
    EXPECT_EQ(q.basis.front(), Word());
  }
}

TEST(GeneratorMatrices, SatisfyCubicFormRelations) {
  PrimeField k(31);
  auto p = first_on_fiber(k, 2, 3, 5, 7);
  auto q = build_quotient(k, p);
  auto [X, Y] = generator_matrices(q);
  auto I = Matrix<PrimeField>::identity(k, q.dim());
  EXPECT_EQ(X * X * X, I.scaled(p.a));
  EXPECT_EQ(Y * Y * Y, I.scaled(p.d));
  EXPECT_EQ(X * X * Y + X * Y * X + Y * X * X, I.scaled(k.mul(k.from_int(3), p.b)));
  EXPECT_EQ(Y * Y * X + Y * X * Y + X * Y * Y, I.scaled(k.mul(k.from_int(3), p.c)));
  auto z = central_elements(k);
  auto Z5 = z.z5.evaluate(X, Y);
  EXPECT_EQ(Z5 * X, X * Z5);
  EXPECT_EQ(Z5 * Y, Y * Z5);
  EXPECT_EQ(Z5, I.scaled(p.f));
  EXPECT_EQ(z.z4.evaluate(X, Y), I.scaled(p.e));
}

TEST(ReduceCenterImages, RecoverThePoint) {
  PrimeField k(13);
  for (auto p : {first_on_fiber(k, 1, 0, 0, 1), pt(k, {1, 1, 1, 1, 0, 0}), first_on_fiber(k, 4, 1, 9, 2)}) {
    auto q = build_quotient(k, p);
    auto images = reduce_center_images(q, central_elements(k));
    EXPECT_EQ(images, p.coords());
  }
}

TEST(ReduceCenterImages, NonCentralIsRejected) {
  PrimeField k(13);
  auto q = build_quotient(k, first_on_fiber(k, 1, 0, 0, 1));
  auto z = central_elements(k);
  z.z1 = P::x(k);
  EXPECT_THROW(reduce_center_images(q, z), NotScalar);
}

TEST(BuildQuotient, TooSmallBoundIsReported) {
  PrimeField k(13);
  EXPECT_THROW(build_quotient(k, first_on_fiber(k, 1, 0, 0, 1), 6), BudgetExceeded);
}
