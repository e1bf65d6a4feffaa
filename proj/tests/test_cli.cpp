#include "commands.hpp"

#include <gtest/gtest.h>

using namespace gcliff;
using namespace gcliff::cli;

namespace {

RunConfig config(std::uint64_t p = 13) {
  RunConfig cfg;
  cfg.prime = p;
  return cfg;
}

}  // namespace

TEST(Cli, FieldNeedsCubeRoot) {
  EXPECT_NO_THROW(field_of(config(7)));
  EXPECT_THROW(field_of(config(11)), UsageError);
  EXPECT_THROW(field_of(config(15)), NotPrime);
}

TEST(Cli, Parsing) {
  PrimeField k(13);
  auto p = parse_point(k, "1,2,3,4", false);
  EXPECT_EQ(p, central_point_from_ints(k, {1, 2, 3, 4, 0, 0}));
  EXPECT_THROW(parse_point(k, "1,2,3,4", true), UsageError);
  EXPECT_THROW(parse_point(k, "1,2,3", false), UsageError);
  EXPECT_THROW(parse_point(k, "1,2,q,4", false), ParseError);
  auto t = parse_triple(k, "1:0,2:4,0:3");
  EXPECT_EQ(t.p1, ProjPoint<PrimeField>(k, Residue{1}, Residue{2}));
  EXPECT_EQ(t.p2, ProjPoint<PrimeField>(k, Residue{0}, Residue{1}));
  EXPECT_THROW(parse_triple(k, "1:0,2:4"), UsageError);
  EXPECT_THROW(parse_triple(k, "1:0,2,0:3"), UsageError);
  EXPECT_THROW(parse_triple(k, "1:0,0:0,0:3"), ZeroPoint);
}

TEST(Cli, HilbertAndNormalForm) {
  auto h = hilbert(config(), 6);
  EXPECT_TRUE(h.ok);
  auto dump = h.result.dump();
  EXPECT_NE(dump.find("\"dimension\":31"), std::string::npos);
  EXPECT_TRUE(nf(config(), "yxxx").ok);
}

TEST(Cli, ChecksPass) {
  EXPECT_TRUE(center_check(config()).ok);
  EXPECT_TRUE(relation_check(config()).ok);
  EXPECT_TRUE(singular_check(config(), "1,1,1,1").ok);
  EXPECT_TRUE(irreps(config(), "1,1,1,1,0,0").ok);
  EXPECT_TRUE(point_module(config(7), "1:0,0:1,1:1").ok);
}

TEST(Cli, QuotientReport) {
  auto o = quotient(config(), "1,1,1,1,0,0", "");
  EXPECT_TRUE(o.ok);
  EXPECT_EQ(o.result.at("dimension"), 15);
  EXPECT_THROW(quotient(config(), "1,0,0,1,0,0", ""), UsageError);
}

TEST(Cli, DiscLocusIsDeterministic) {
  auto a = disc_locus(config(), 4, 2);
  auto b = disc_locus(config(), 4, 2);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.result.dump(), b.result.dump());
  EXPECT_EQ(a.result.at("cone_point").at("member"), true);
  EXPECT_THROW(disc_locus(config(), 0, 2), UsageError);
}

TEST(Cli, Envelope) {
  auto doc = report::envelope("nf", report::field_json(PrimeField(13)), {{"x", 1}});
  EXPECT_EQ(doc.at("schema"), report::kSchemaVersion);
  EXPECT_EQ(doc.at("field").at("modulus"), 13);
  EXPECT_EQ(doc.at("result").at("x"), 1);
  EXPECT_EQ(report::field_json(RationalField()).at("kind"), "rational");
}
