#include "gcliff/rewrite.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include <random>

using namespace gcliff;

using P = NcPoly<PrimeField>;

namespace {

const WordOrder kXgtY{LetterOrder::x_greater_y};
const WordOrder kXltY{LetterOrder::x_less_y};

RewriteSystem<PrimeField> c_system(const PrimeField& k, WordOrder order = kXgtY, unsigned bound = 13) {
  return complete(k, clifford_relations(k), CompletionOptions{order, bound, 5000});
}

/// Coefficients of 1/((1-t)^2 (1-t^2) (1-t^3)^2) by series multiplication.
std::vector<std::size_t> hilbert_series_coefficients(unsigned n) {
  std::vector<std::size_t> s(n + 1, 0);
  s[0] = 1;
  for (unsigned step : {1u, 1u, 2u, 3u, 3u})
    for (unsigned i = step; i <= n; ++i) s[i] += s[i - step];
  return s;
}

P random_poly(const PrimeField& k, std::mt19937_64& rng, unsigned max_len, int terms) {
  P p(k);
  for (int t = 0; t < terms; ++t) {
    unsigned len = rng() % (max_len + 1);
    p.add_term(Word(rng() & ((1ull << len) - 1), len), Residue{rng() % k.modulus()});
  }
  return p;
}

}  // namespace

TEST(HilbertOracle, KnownValues) {
  const std::vector<std::size_t> expected{1, 2, 4, 8, 13, 20, 31, 44, 61, 84, 111, 144, 186, 234};
  for (unsigned n = 0; n < expected.size(); ++n) EXPECT_EQ(hilbert_oracle(n), expected[n]) << n;
  auto series = hilbert_series_coefficients(30);
  for (unsigned n = 0; n <= 30; ++n) EXPECT_EQ(hilbert_oracle(n), series[n]) << n;
}

TEST(Complete, CliffordGradedDimensions) {
  PrimeField k(13);
  for (auto order : {kXgtY, kXltY}) {
    auto sys = c_system(k, order);
    ASSERT_TRUE(sys.is_complete()) << order.name();
    EXPECT_EQ(graded_dimension(sys, 0), 1u);
    EXPECT_EQ(graded_dimension(sys, 3), 8u);
    EXPECT_EQ(graded_dimension(sys, 4), 13u);
    for (unsigned n = 0; n <= 13; ++n) EXPECT_EQ(graded_dimension(sys, n), hilbert_oracle(n)) << order.name() << " " << n;
  }
}

TEST(Complete, CliffordFiniteBasisUnderXGreaterY) {
  PrimeField k(13);
  auto sys = c_system(k);
  EXPECT_EQ(sys.rules().size(), 5u);
  EXPECT_EQ(sys.confluent_to(), Word::max_length);
  // complete, so counts hold far beyond the completion bound
  for (unsigned n = 14; n <= 20; ++n) EXPECT_EQ(graded_dimension(sys, n), hilbert_oracle(n));
  for (unsigned n = 0; n <= 12; ++n) {
    auto got = basis_words(sys, n), want = monomial_basis_words(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << n;
  }
}

TEST(Complete, SameResultOverSeveralPrimes) {
  for (std::uint64_t p : {7, 13, 31, 10009}) {
    PrimeField k(p);
    auto sys = c_system(k);
    EXPECT_TRUE(sys.is_complete());
    for (unsigned n = 0; n <= 13; ++n) EXPECT_EQ(graded_dimension(sys, n), hilbert_oracle(n));
  }
}

TEST(Complete, Commutative) {
  PrimeField k(13);
  auto sys = complete(k, {P::word(k, "xy") - P::word(k, "yx")}, CompletionOptions{kXgtY, 6, 100});
  ASSERT_EQ(sys.rules().size(), 1u);
  EXPECT_EQ(sys.rules()[0].lead, Word::parse("xy"));
  auto words = basis_words(sys, 5);
  EXPECT_EQ(words.size(), 6u);
  for (auto w : words) EXPECT_EQ(w.find(Word::parse("xy")), -1);
}

TEST(Complete, EmptyRelations) {
  PrimeField k(13);
  auto sys = complete(k, {}, CompletionOptions{kXgtY, 6, 100});
  EXPECT_TRUE(sys.rules().empty());
  for (unsigned n = 0; n <= 6; ++n) EXPECT_EQ(graded_dimension(sys, n), std::size_t{1} << n);
}

TEST(Complete, TruncationIsReported) {
  PrimeField k(13);
  auto sys = c_system(k, kXgtY, 5);
  EXPECT_FALSE(sys.is_complete());
  EXPECT_EQ(sys.confluent_to(), 5u);
  EXPECT_GT(sys.stats().overlaps_skipped, 0u);
  EXPECT_NO_THROW(basis_words(sys, 5));
  EXPECT_THROW(basis_words(sys, 6), DegreeOutOfRange);
  EXPECT_TRUE(audit_ambiguities(sys, 5).unresolved.empty());
  EXPECT_THROW(audit_ambiguities(sys, 13), DegreeOutOfRange);
}

TEST(Complete, Errors) {
  PrimeField k(13);
  EXPECT_THROW(complete(k, {P(k)}), AlgebraError);
  EXPECT_THROW(complete(k, clifford_relations(k), CompletionOptions{kXgtY, 3, 100}), DegreeOutOfRange);
  EXPECT_THROW(complete(k, clifford_relations(k), CompletionOptions{kXgtY, 13, 2}), BudgetExceeded);
  PrimeField other(7);
  EXPECT_THROW(complete(k, clifford_relations(other)), FieldMismatch);
}

TEST(Complete, TrivialIdeal) {
  PrimeField k(13);
  auto sys = complete(k, {P::x(k) - P::constant(k, k.one()), P::x(k)}, CompletionOptions{kXgtY, 4, 100});
  EXPECT_TRUE(sys.is_trivial());
  EXPECT_TRUE(normal_form(sys, P::word(k, "yy")).is_zero());
}

TEST(Audit, CliffordSystemResolves) {
  PrimeField k(13);
  for (auto order : {kXgtY, kXltY}) {
    auto sys = c_system(k, order);
    auto audit = audit_ambiguities(sys, 13);
    EXPECT_TRUE(audit.unresolved.empty()) << order.name();
    EXPECT_GT(audit.overlaps_checked, 0u);
  }
}

TEST(NormalForm, KnownReductions) {
  PrimeField k(13);
  auto sys = c_system(k);
  EXPECT_EQ(normal_form(sys, P::word(k, "xxxy")), P::word(k, "yxxx"));
  EXPECT_TRUE(normal_form(sys, commutator(P::word(k, "xxx"), P::y(k))).is_zero());
  EXPECT_TRUE(normal_form(sys, P(k)).is_zero());
  for (unsigned n = 0; n <= 9; ++n)
    for (auto w : monomial_basis_words(n)) EXPECT_EQ(normal_form(sys, P::word(k, w)), P::word(k, w));
  for (const auto& r : clifford_relations(k)) EXPECT_TRUE(normal_form(sys, r).is_zero());
}

TEST(NormalForm, LeadsAndTailsAreOrdered) {
  PrimeField k(31);
  for (auto order : {kXgtY, kXltY}) {
    auto sys = c_system(k, order);
    for (const auto& r : sys.rules()) {
      for (const auto& [w, c] : r.tail.terms()) EXPECT_TRUE(order(w, r.lead));
      for (const auto& other : sys.rules())
        if (!(other.lead == r.lead)) EXPECT_EQ(r.lead.find(other.lead), -1);
    }
  }
}

TEST(NormalForm, PropertiesOnRandomPolynomials) {
  PrimeField k(13);
  auto sys = c_system(k);
  std::mt19937_64 rng(11);
  NormalFormCache<PrimeField> nf(sys);
  for (int t = 0; t < 60; ++t) {
    auto a = random_poly(k, rng, 7, 4), b = random_poly(k, rng, 7, 4);
    auto na = nf(a), nb = nf(b);
    EXPECT_EQ(nf(na), na);
    EXPECT_EQ(nf(a + b), na + nb);
    EXPECT_EQ(nf(a * b), nf(na * nb));
    for (const auto& [w, c] : na.terms()) EXPECT_TRUE(sys.is_normal(w));
    // every commuting pair of scalars is a representation of C
    auto s = Residue{rng() % 13}, u = Residue{rng() % 13};
    EXPECT_EQ(a.evaluate(s, u), na.evaluate(s, u));
  }
}

TEST(NormalForm, CacheCheckRange) {
  PrimeField k(13);
  auto sys = c_system(k, kXgtY, 6);
  NormalFormCache<PrimeField> nf(sys);
  EXPECT_NO_THROW(nf(P::word(k, "xyxyxy")));
  EXPECT_THROW(nf(P::word(k, "xyxyxyx")), DegreeOutOfRange);
}
