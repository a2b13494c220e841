// liecoh: Betti numbers of compact homogeneous spaces from Lie algebra data.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/catalog.hpp"
#include "liecoh/ce.hpp"
#include "liecoh/error.hpp"
#include "liecoh/io.hpp"
#include "liecoh/koszul.hpp"
#include "liecoh/verify.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kInvalid = 2, kDisagree = 3, kInternal = 4 };

struct Flags {
  bool json = false;
  bool explain = false;
  bool certify = false;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> size_cap;
  std::uint64_t seed = 0x5eedULL;
};

liecoh::CeOptions ce_options(const Flags& f) {
  liecoh::CeOptions o;
  o.max_degree = f.max_degree;
  if (f.size_cap) o.size_cap = *f.size_cap;
  o.engine = liecoh::RankEngine(f.certify ? liecoh::RankEngine::Mode::certified : liecoh::RankEngine::Mode::modular,
                                f.seed);
  return o;
}

void print_warnings(const liecoh::HomogeneousPair& pair) {
  for (const auto& w : liecoh::validate_pair(pair).warnings) std::cerr << "warning: " << w.message << '\n';
}

void emit(const Flags& f, const liecoh::BettiReport& report) {
  if (f.json)
    std::cout << liecoh::to_json(report).dump(2) << '\n';
  else
    std::cout << liecoh::format_table(report, f.explain);
}

int cmd_compute(const std::string& path, const Flags& f) {
  const auto pair = liecoh::load_pair(path);
  print_warnings(pair);
  emit(f, liecoh::betti_low(pair));
  return kOk;
}

int cmd_oracle(const std::string& path, const std::string& method, const Flags& f) {
  const auto pair = liecoh::load_pair(path);
  print_warnings(pair);
  switch (liecoh::parse_method(method)) {
    case liecoh::Method::formula: emit(f, liecoh::betti_low(pair)); break;
    case liecoh::Method::koszul: emit(f, liecoh::betti_koszul(pair)); break;
    case liecoh::Method::ce: emit(f, liecoh::betti_ce(pair, ce_options(f))); break;
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& methods, bool skip_ce, const Flags& f) {
  const auto pair = liecoh::load_pair(path);
  print_warnings(pair);
  liecoh::VerifyOptions o;
  if (!methods.empty()) {
    o.methods.clear();
    std::stringstream ss(methods);
    for (std::string m; std::getline(ss, m, ',');) o.methods.push_back(liecoh::parse_method(m));
  }
  o.skip_ce = skip_ce;
  o.certify = f.certify;
  o.seed = f.seed;
  if (f.size_cap) o.size_cap = *f.size_cap;
  o.max_degree = f.max_degree;
  const auto result = liecoh::run_verify(pair, o);
  if (f.json)
    std::cout << liecoh::to_json(result).dump(2) << '\n';
  else
    std::cout << liecoh::format_table(result, f.explain);
  return result.pass ? kOk : kDisagree;
}

int cmd_catalog_list(const Flags& f) {
  const auto entries = liecoh::catalog_list();
  if (f.json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) out.push_back({{"name", e.name}, {"params", e.params}, {"description", e.description}});
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  for (const auto& e : entries) {
    std::string head = e.name + (e.params.empty() ? "" : "  [" + e.params + "]");
    std::cout << std::left << std::setw(32) << head << e.description << '\n';
  }
  return kOk;
}

int cmd_catalog_emit(const std::string& name, const std::string& output) {
  const auto doc = liecoh::to_json(liecoh::catalog_build(name));
  if (output.empty())
    std::cout << doc.dump(2) << '\n';
  else
    liecoh::write_json(output, doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers b0..b4 of compact homogeneous spaces G/H"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&flags](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "Print JSON instead of a table");
    sub->add_flag("--explain", flags.explain, "Show intermediate dimensions, ranks and skipped checks");
    sub->add_option("--max-degree", flags.max_degree, "Highest degree computed by the CE oracle");
    sub->add_option("--size-cap", flags.size_cap, "Largest dim g/h accepted by the CE oracle (default 14)");
    sub->add_flag("--certify", flags.certify, "Certify modular ranks with exact rational ranks");
    sub->add_option("--seed", flags.seed, "Seed for the modular-rank prime");
  };

  std::string path, method, methods, catalog_name, output;
  bool skip_ce = false;

  auto* compute = app.add_subcommand("compute", "Betti numbers b0..b4 from the closed formulas");
  compute->add_option("file", path, "Pair JSON file")->required();
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Cross-check formula, Koszul and Chevalley-Eilenberg results");
  verify->add_option("file", path, "Pair JSON file")->required();
  verify->add_flag("--skip-ce", skip_ce, "Do not run the Chevalley-Eilenberg oracle");
  verify->add_option("--methods", methods, "Comma separated subset of formula,koszul,ce");
  add_common(verify);

  auto* oracle = app.add_subcommand("oracle", "Run a single method");
  oracle->add_option("--method", method, "formula, koszul or ce")->required();
  oracle->add_option("file", path, "Pair JSON file")->required();
  add_common(oracle);

  auto* catalog = app.add_subcommand("catalog", "Built-in algebras and pairs");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  list->add_flag("--json", flags.json, "Print JSON");
  auto* emit_cmd = catalog->add_subcommand("emit", "Write a catalog pair as JSON");
  emit_cmd->add_option("name", catalog_name, "Entry such as sphere:4 or su:2+torus:3")->required();
  emit_cmd->add_option("-o,--output", output, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*compute) return cmd_compute(path, flags);
    if (*verify) return cmd_verify(path, methods, skip_ce, flags);
    if (*oracle) return cmd_oracle(path, method, flags);
    if (*list) return cmd_catalog_list(flags);
    if (*emit_cmd) return cmd_catalog_emit(catalog_name, output);
  } catch (const liecoh::ValidationError& e) {
    std::cerr << "validation failed:\n" << e.report().summary();
    if (flags.json) std::cout << liecoh::to_json(e.report()).dump(2) << '\n';
    return kInvalid;
  } catch (const liecoh::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const liecoh::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const liecoh::UnknownCatalogEntry& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const liecoh::SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --size-cap or LIECOH_SIZE_CAP)\n";
    return kInput;
  } catch (const liecoh::Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
