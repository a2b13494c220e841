#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "liecoh/catalog.hpp"
#include "liecoh/error.hpp"
#include "liecoh/io.hpp"

using namespace liecoh;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(PairJson, RoundTripPreservesEverything) {
  for (const char* entry : {"example_4_7", "flag_su3", "sphere:3", "torus:2+su:2"}) {
    const HomogeneousPair p = catalog_build(entry);
    const json doc = to_json(p);
    const HomogeneousPair q = pair_from_json(json::parse(doc.dump()));
    EXPECT_EQ(q.name, p.name);
    EXPECT_EQ(q.dim_g(), p.dim_g());
    EXPECT_EQ(q.algebra.center_dim(), p.algebra.center_dim());
    EXPECT_EQ(q.h_basis, p.h_basis);
    ASSERT_EQ(q.generators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i) EXPECT_EQ(q.generators[i], p.generators[i]);
    for (std::size_t i = 0; i < p.dim_g(); ++i) EXPECT_EQ(q.algebra.ad(i), p.algebra.ad(i));
    EXPECT_EQ(to_json(q), doc);
  }
}

TEST(PairJson, ShorthandFactorsAndRationals) {
  const json doc = json::parse(R"({
    "algebra": {"center_dim": 1, "factors": [{"type": "u", "n": 2}, {"type": "su", "n": 2}]},
    "subalgebra": {"basis": [["1/2", 0, 0, 0, 0, 0, 0, 0]]},
    "component_generators": []
  })");
  const HomogeneousPair p = pair_from_json(doc);
  EXPECT_EQ(p.algebra.center_dim(), 2u);
  EXPECT_EQ(p.dim_g(), 8u);
  EXPECT_EQ(p.h_basis(0, 0), Rational(1, 2));
  EXPECT_TRUE(validate_pair(p).ok());
  EXPECT_EQ(betti_low(p).betti[1], 1u);
}

TEST(PairJson, ExplicitConstants) {
  const json doc = json::parse(R"j({
    "name": "su2",
    "algebra": {"center_dim": 0, "factors": [{"name": "su(2)", "dim": 3,
      "structure_constants": [[0, 1, 2, "2"], [1, 2, 0, 2], [2, 0, 1, 2]]}]}
  })j");
  const HomogeneousPair p = pair_from_json(doc);
  EXPECT_EQ(p.name, "su2");
  EXPECT_EQ(p.dim_h(), 0u);
  EXPECT_EQ(killing_gram(p.algebra), Matrix::identity(3) * Rational(-8));
}

TEST(PairJson, SchemaErrors) {
  EXPECT_THROW(pair_from_json(json::array()), ParseError);
  EXPECT_THROW(pair_from_json(json::parse(R"({"subalgebra": {"basis": []}})")), ParseError);
  EXPECT_THROW(pair_from_json(json::parse(
                   R"({"algebra": {"center_dim": 0, "factors": [{"dim": 3, "structure_constants": [[0, 1, 3, 1]]}]}})")),
               ParseError);
  EXPECT_THROW(pair_from_json(json::parse(
                   R"({"algebra": {"center_dim": 0, "factors": [{"dim": 3, "structure_constants": [[0, 1, 2, "1/0"]]}]}})")),
               ParseError);
  EXPECT_THROW(pair_from_json(json::parse(R"({"algebra": {"center_dim": -1}})")), ParseError);
  EXPECT_THROW(pair_from_json(json::parse(R"({"algebra": {"center_dim": 1}, "subalgebra": {"basis": [[1], [1, 2]]}})")),
               ParseError);
  EXPECT_THROW(pair_from_json(json::parse(R"({"algebra": {"center_dim": 0, "factors": [{"type": "e", "n": 8}]}})")),
               UnknownCatalogEntry);
}

TEST(LoadPair, FilesAndErrors) {
  EXPECT_THROW(load_pair("/nonexistent/pair.json"), IoError);
  EXPECT_THROW(load_pair(temp_file("liecoh_bad.json", "{not json")), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "liecoh_sphere4.json";
  HomogeneousPair p = catalog_build("sphere:4");
  p.name.clear();
  write_json(path, to_json(p));
  const HomogeneousPair q = load_pair(path);
  EXPECT_EQ(q.name, "liecoh_sphere4");
  EXPECT_EQ(betti_low(q).betti, betti_low(p).betti);
  EXPECT_THROW(write_json("/nonexistent/dir/out.json", json::object()), IoError);
}

TEST(ReportJson, StableKeysAndRationalStrings) {
  const json j = to_json(betti_low(catalog_build("flag_su3")));
  EXPECT_EQ(j.at("betti"), json::parse("[1,0,2,0,2]"));
  EXPECT_EQ(j.at("method"), "formula");
  EXPECT_EQ(j.at("intermediates").at("dim_C"), 2);
  // nlohmann::json objects iterate in sorted key order.
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  const json pj = to_json(catalog_build("example_4_7"));
  EXPECT_TRUE(pj.at("subalgebra").at("basis")[0][0].is_string());
}

TEST(ReportTable, ShowsBettiRow) {
  const std::string table = format_table(betti_low(catalog_build("sphere:4")));
  EXPECT_NE(table.find("betti      1   0   0   0   1"), std::string::npos) << table;
  const std::string explained = format_table(betti_low(catalog_build("sphere:4")), true);
  EXPECT_NE(explained.find("skipped"), std::string::npos);
}

TEST(ValidationJson, CarriesWitness) {
  ValidationReport r;
  r.fail("jacobi", "bad", {0, 1, 2});
  const json j = to_json(r);
  EXPECT_FALSE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("failures")[0].at("witness"), json::parse("[0,1,2]"));
}
