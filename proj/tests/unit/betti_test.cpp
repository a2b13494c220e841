#include <gtest/gtest.h>

#include "liecoh/betti.hpp"
#include "liecoh/catalog.hpp"
#include "liecoh/error.hpp"
#include "oracles.hpp"
#include "random_pairs.hpp"

using namespace liecoh;

namespace {

const CorollaryCheck& flag(const BettiReport& r, const std::string& name) {
  for (const auto& c : r.corollary_flags)
    if (c.name == name) return c;
  throw std::runtime_error("missing flag " + name);
}

using B = std::vector<std::size_t>;

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(12, 6), 924u);
}

TEST(Method, RoundTrip) {
  for (Method m : {Method::formula, Method::koszul, Method::ce}) EXPECT_EQ(parse_method(to_string(m)), m);
  EXPECT_THROW(parse_method("magic"), ParseError);
}

TEST(BettiLow, CatalogValues) {
  EXPECT_EQ(betti_low(catalog_build("sphere:3")).betti, (B{1, 0, 0, 1, 0}));
  EXPECT_EQ(betti_low(catalog_build("sphere:4")).betti, (B{1, 0, 0, 0, 1}));
  EXPECT_EQ(betti_low(catalog_build("flag_su3")).betti, (B{1, 0, 2, 0, 2}));
  EXPECT_EQ(betti_low(catalog_build("example_4_7")).betti, (B{1, 2, 1, 0, 0}));
  EXPECT_EQ(betti_low(catalog_build("example_4_7_h0")).betti, (B{1, 2, 2, 2, 1}));
  EXPECT_EQ(betti_low(catalog_build("torus:3+su:2")).betti, (B{1, 3, 3, 2, 3}));
}

TEST(BettiLow, PointQuotient) {
  for (const char* entry : {"su:3", "u:2", "torus:2"}) {
    HomogeneousPair p = catalog_build(entry);
    p.h_basis = Matrix::identity(p.dim_g());
    EXPECT_EQ(betti_low(p).betti, (B{1, 0, 0, 0, 0})) << entry;
  }
}

TEST(BettiLow, Intermediates) {
  const BettiReport r = betti_low(catalog_build("example_4_7"));
  ASSERT_TRUE(r.intermediates.has_value());
  EXPECT_EQ(r.intermediates->l, 2u);
  EXPECT_EQ(r.intermediates->r, 1u);
  EXPECT_EQ(r.intermediates->r0, 2u);
  EXPECT_EQ(r.intermediates->dim_a_fixed, 0u);
  EXPECT_EQ(r.generator_count, 1u);
  EXPECT_EQ(r.method, Method::formula);
}

TEST(BettiLow, InvalidPairThrows) {
  HomogeneousPair p = catalog_build("su:2");
  p.h_basis = Matrix{{1, 0}, {0, 1}, {0, 0}};
  EXPECT_THROW(betti_low(p), ValidationError);
}

TEST(BettiLow, LowDegreesOfGroups) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::size_t>>>> groups{
      {"su:2", {{"su", 2}}}, {"su:3", {{"su", 3}}}, {"u:3", {{"u", 3}}}, {"sp:2", {{"sp", 2}}},
      {"so:4", {{"so", 4}}}, {"so:6", {{"so", 6}}}, {"torus:4", {{"torus", 4}}}, {"torus:2+su:2+su:2", {{"torus", 2}, {"su", 2}, {"su", 2}}}};
  for (const auto& [entry, factors] : groups) {
    auto want = reference::group_poincare(factors);
    want.resize(5, 0);
    EXPECT_EQ(betti_low(catalog_build(entry)).betti, want) << entry;
  }
}

TEST(BettiLow, BinomialTails) {
  // r0 < 3 contributes nothing from ∧³, r0 < 4 nothing from ∧⁴.
  const BettiReport r = betti_low(catalog_build("torus:2+su:2"));
  EXPECT_EQ(r.betti[3], 1u);
  EXPECT_EQ(r.betti[4], 2u);
}

TEST(CorollaryChecks, Examples) {
  const BettiReport s4 = betti_low(catalog_build("sphere:4"));
  EXPECT_EQ(flag(s4, "simple_ambient_vanishing_b3").status, CheckStatus::pass);
  const BettiReport fl = betti_low(catalog_build("flag_su3"));
  EXPECT_EQ(flag(fl, "toral_difference").status, CheckStatus::pass);
  EXPECT_NE(flag(fl, "toral_difference").detail.find("expected 2"), std::string::npos);
  const BettiReport t = betti_low(catalog_build("example_4_7_h0"));
  for (const char* name : {"semisimple_ambient_identities", "simple_ambient_vanishing_b3", "toral_difference",
                           "semisimple_difference_ideal_count", "fourth_degree_upper_bound"})
    EXPECT_EQ(flag(t, name).status, CheckStatus::skipped) << name;
}

TEST(CorollaryChecks, NoFailuresOnSuite) {
  for (const auto& p : reference::random_suite(30)) {
    const BettiReport r = betti_low(p);
    for (const auto& c : r.corollary_flags) EXPECT_NE(c.status, CheckStatus::fail) << p.name << " " << c.name << " " << c.detail;
  }
}
