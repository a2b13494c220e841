#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "liecoh/betti.hpp"
#include "liecoh/ce.hpp"
#include "liecoh/pair.hpp"

namespace liecoh {

struct VerifyOptions {
  std::vector<Method> methods{Method::formula, Method::koszul, Method::ce};
  bool skip_ce = false;
  bool certify = false;
  std::uint64_t seed = 0x5eedULL;
  std::size_t size_cap = default_size_cap();
  std::optional<std::size_t> max_degree;
};

struct VerifyResult {
  std::vector<BettiReport> reports;
  std::map<std::size_t, bool> agreement;  // degree -> all methods agree
  std::map<std::string, double> elapsed_seconds;
  std::vector<std::string> notes;
  bool pass = false;
};

/// Runs the requested methods concurrently and compares degrees 0..4. A
/// modular CE run that disagrees is repeated with certified ranks before the
/// result is reported. CE is skipped (with a note) above the size cap.
VerifyResult run_verify(const HomogeneousPair& pair, const VerifyOptions& options = {});

nlohmann::json to_json(const VerifyResult& result);
std::string format_table(const VerifyResult& result, bool explain = false);

}  // namespace liecoh
