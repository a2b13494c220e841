#include "liecoh/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "liecoh/catalog.hpp"
#include "liecoh/error.hpp"

namespace liecoh {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(where + ": expected a nonnegative integer");
  return v.get<std::size_t>();
}

Rational as_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw ParseError(where + ": expected a rational as a string \"p/q\" or an integer");
}

// Rows of equal length; returns (rows, length).
std::vector<Vector> as_vectors(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of vectors");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) throw ParseError(w + ": expected an array");
    Vector row;
    for (std::size_t j = 0; j < v[i].size(); ++j) row.push_back(as_rational(v[i][j], w + "[" + std::to_string(j) + "]"));
    if (!out.empty() && row.size() != out.front().size()) throw ParseError(w + ": ragged rows");
    out.push_back(std::move(row));
  }
  return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json matrix_rows_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(Vector(m.row(r).begin(), m.row(r).end())));
  return out;
}

struct PendingFactor {
  std::string name;
  std::size_t dim;
  std::vector<StructureConstant> local;
};

}  // namespace

HomogeneousPair pair_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("pair file: top level must be an object");
  const json& alg = field(doc, "algebra", "pair");
  const std::size_t base_center = as_index(field(alg, "center_dim", "algebra"), "algebra.center_dim");

  // Shorthand factors are resolved to catalog algebras; their center and
  // simple parts are merged into the global layout below.
  std::vector<LieAlgebra> shorthand;
  std::vector<PendingFactor> factors;
  std::vector<std::pair<std::size_t, std::size_t>> factor_source;  // (shorthand index or npos, factor index)
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t extra_center = 0;

  const json empty = json::array();
  const json& flist = alg.contains("factors") ? alg.at("factors") : empty;
  if (!flist.is_array()) throw ParseError("algebra.factors: expected an array");
  for (std::size_t f = 0; f < flist.size(); ++f) {
    const std::string where = "algebra.factors[" + std::to_string(f) + "]";
    const json& fj = flist[f];
    if (!fj.is_object()) throw ParseError(where + ": expected an object");
    if (fj.contains("type")) {
      if (!fj.at("type").is_string()) throw ParseError(where + ".type: expected a string");
      LieAlgebra a = catalog_algebra(fj.at("type").get<std::string>(), as_index(field(fj, "n", where), where + ".n"));
      extra_center += a.center_dim();
      for (std::size_t i = 0; i < a.factor_count(); ++i) {
        factors.push_back({a.factors()[i].name, a.factors()[i].dim, {}});
        factor_source.emplace_back(shorthand.size(), i);
      }
      shorthand.push_back(std::move(a));
      continue;
    }
    PendingFactor pf;
    pf.name = fj.contains("name") && fj.at("name").is_string() ? fj.at("name").get<std::string>()
                                                               : "factor" + std::to_string(f);
    pf.dim = as_index(field(fj, "dim", where), where + ".dim");
    const json& sc = fj.contains("structure_constants") ? fj.at("structure_constants") : empty;
    if (!sc.is_array()) throw ParseError(where + ".structure_constants: expected an array");
    for (std::size_t t = 0; t < sc.size(); ++t) {
      const std::string w = where + ".structure_constants[" + std::to_string(t) + "]";
      if (!sc[t].is_array() || sc[t].size() != 4) throw ParseError(w + ": expected [i, j, k, value]");
      StructureConstant c{as_index(sc[t][0], w), as_index(sc[t][1], w), as_index(sc[t][2], w),
                          as_rational(sc[t][3], w)};
      if (c.i >= pf.dim || c.j >= pf.dim || c.k >= pf.dim)
        throw ParseError(w + ": index out of range for a factor of dimension " + std::to_string(pf.dim));
      pf.local.push_back(std::move(c));
    }
    factors.push_back(std::move(pf));
    factor_source.emplace_back(npos, 0);
  }

  const std::size_t center = base_center + extra_center;
  std::vector<FactorSpec> factor_list;
  std::vector<StructureConstant> constants;
  std::size_t offset = center;
  std::vector<std::size_t> factor_offset;
  for (const auto& pf : factors) {
    factor_list.push_back({pf.name, pf.dim});
    factor_offset.push_back(offset);
    offset += pf.dim;
  }
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (factor_source[f].first == npos) {
      for (const auto& c : factors[f].local)
        constants.push_back({factor_offset[f] + c.i, factor_offset[f] + c.j, factor_offset[f] + c.k, c.value});
    }
  }
  // Map each shorthand algebra's basis into the global one.
  std::size_t center_cursor = base_center;
  for (std::size_t s = 0; s < shorthand.size(); ++s) {
    const LieAlgebra& a = shorthand[s];
    std::vector<std::size_t> map(a.dim());
    for (std::size_t i = 0; i < a.center_dim(); ++i) map[i] = center_cursor + i;
    center_cursor += a.center_dim();
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (factor_source[f].first != s) continue;
      const FactorBlock& fb = a.factors()[factor_source[f].second];
      for (std::size_t i = 0; i < fb.dim; ++i) map[fb.offset + i] = factor_offset[f] + i;
    }
    for (const auto& c : a.constants()) constants.push_back({map[c.i], map[c.j], map[c.k], c.value});
  }

  HomogeneousPair pair;
  pair.algebra = LieAlgebra(center, std::move(factor_list), constants);
  const std::size_t n = pair.algebra.dim();
  if (doc.contains("name") && doc.at("name").is_string()) pair.name = doc.at("name").get<std::string>();

  pair.h_basis = Matrix(n, 0);
  if (doc.contains("subalgebra")) {
    const auto vectors = as_vectors(field(doc.at("subalgebra"), "basis", "subalgebra"), "subalgebra.basis");
    if (!vectors.empty()) pair.h_basis = Matrix::from_columns(vectors, vectors.front().size());
  }
  if (doc.contains("component_generators")) {
    const json& gens = doc.at("component_generators");
    if (!gens.is_array()) throw ParseError("component_generators: expected an array of matrices");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = "component_generators[" + std::to_string(g) + "]";
      const auto rows = as_vectors(gens[g], where);
      pair.generators.push_back(Matrix::from_rows(rows, rows.empty() ? 0 : rows.front().size()));
    }
  }
  return pair;
}

HomogeneousPair load_pair(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
  HomogeneousPair pair = pair_from_json(doc);
  if (pair.name.empty()) pair.name = path.stem().string();
  return pair;
}

json to_json(const HomogeneousPair& pair) {
  const LieAlgebra& alg = pair.algebra;
  json factors = json::array();
  const auto constants = alg.constants();
  for (const auto& fb : alg.factors()) {
    json sc = json::array();
    for (const auto& c : constants)
      if (fb.contains(c.i))
        sc.push_back({c.i - fb.offset, c.j - fb.offset, c.k - fb.offset, rational_json(c.value)});
    factors.push_back({{"name", fb.name}, {"dim", fb.dim}, {"structure_constants", std::move(sc)}});
  }
  json basis = json::array();
  for (std::size_t c = 0; c < pair.h_basis.cols(); ++c) basis.push_back(vector_json(pair.h_basis.column(c)));
  json gens = json::array();
  for (const auto& g : pair.generators) gens.push_back(matrix_rows_json(g));
  json out = {{"algebra", {{"center_dim", alg.center_dim()}, {"factors", std::move(factors)}}},
              {"subalgebra", {{"basis", std::move(basis)}}},
              {"component_generators", std::move(gens)}};
  if (!pair.name.empty()) out["name"] = pair.name;
  return out;
}

json to_json(const BettiReport& report) {
  json out = {{"method", to_string(report.method)},
              {"pair", report.pair_name},
              {"dim_g", report.dim_g},
              {"dim_h", report.dim_h},
              {"generators", report.generator_count},
              {"betti", report.betti}};
  if (report.intermediates) {
    const Intermediates& in = *report.intermediates;
    out["intermediates"] = {{"l", in.l},
                            {"r", in.r},
                            {"r0", in.r0},
                            {"dim_a_fixed", in.dim_a_fixed},
                            {"dim_N", in.dim_N},
                            {"dim_C", in.dim_C},
                            {"rank_psi", in.rank_psi},
                            {"dim_S2_hgg_inv", in.dim_S2_hgg_inv}};
  }
  if (!report.corollary_flags.empty()) {
    json flags = json::array();
    for (const auto& c : report.corollary_flags)
      flags.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    out["corollary_flags"] = std::move(flags);
  }
  if (!report.slices.empty()) {
    json slices = json::array();
    for (const auto& s : report.slices) {
      json summands = json::array();
      for (const auto& [name, dim] : s.summands) summands.push_back({{"name", name}, {"dim", dim}});
      json js = {{"degree", s.degree}, {"summands", std::move(summands)}, {"total_dim", s.total_dim}};
      if (s.rank) js["rank"] = *s.rank;
      slices.push_back(std::move(js));
    }
    out["slices"] = std::move(slices);
  }
  if (report.method == Method::ce) {
    out["certified"] = report.certified;
    if (report.prime) out["prime"] = *report.prime;
  }
  return out;
}

json to_json(const ValidationReport& report) {
  auto issues = [](const std::vector<ValidationIssue>& list) {
    json out = json::array();
    for (const auto& i : list) out.push_back({{"check", i.check}, {"message", i.message}, {"witness", i.witness}});
    return out;
  };
  return {{"ok", report.ok()}, {"failures", issues(report.failures)}, {"warnings", issues(report.warnings)}};
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string format_table(const BettiReport& report, bool explain) {
  std::ostringstream os;
  os << "pair     " << (report.pair_name.empty() ? "-" : report.pair_name) << '\n';
  os << "method   " << to_string(report.method) << '\n';
  os << "dims     g=" << report.dim_g << " h=" << report.dim_h << " g/h=" << report.dim_quotient()
     << " generators=" << report.generator_count << '\n';
  os << "degree  ";
  for (std::size_t k = 0; k < report.betti.size(); ++k) os << std::setw(4) << k;
  os << "\nbetti   ";
  for (auto b : report.betti) os << std::setw(4) << b;
  os << '\n';
  if (report.intermediates) {
    const Intermediates& in = *report.intermediates;
    os << "l=" << in.l << " r=" << in.r << " r0=" << in.r0 << " dim_a_fixed=" << in.dim_a_fixed
       << " dim_N=" << in.dim_N << " dim_C=" << in.dim_C << " rank_psi=" << in.rank_psi
       << " dim_S2_hgg_inv=" << in.dim_S2_hgg_inv << '\n';
  }
  for (const auto& c : report.corollary_flags) {
    if (c.status == CheckStatus::skipped && !explain) continue;
    os << "check " << std::left << std::setw(34) << c.name << std::right << ' ' << to_string(c.status);
    if (explain || c.status == CheckStatus::fail) os << "  (" << c.detail << ')';
    os << '\n';
  }
  if (explain) {
    for (const auto& s : report.slices) {
      os << "degree " << s.degree << ": dim " << s.total_dim;
      if (s.rank) os << ", rank of differential " << *s.rank;
      os << '\n';
      for (const auto& [name, dim] : s.summands) os << "    " << name << ": " << dim << '\n';
    }
  }
  return os.str();
}

}  // namespace liecoh
