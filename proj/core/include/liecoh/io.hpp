#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "liecoh/betti.hpp"
#include "liecoh/pair.hpp"
#include "liecoh/validation.hpp"

namespace liecoh {

/// Reads the pair schema:
///   {"name": optional string,
///    "algebra": {"center_dim": l, "factors": [...]},
///    "subalgebra": {"basis": [[...], ...]},
///    "component_generators": [[[...], ...], ...]}
/// A factor is either {"name", "dim", "structure_constants": [[i, j, k, c]]}
/// with 0-based indices local to the factor, or {"type": su|so|sp|u|torus,
/// "n"}. The basis of g lists the center_dim center coordinates, then the
/// center coordinates contributed by shorthand factors, then every simple
/// factor in input order. Rationals are strings "p/q" or integers.
/// Throws ParseError on schema violations.
HomogeneousPair pair_from_json(const nlohmann::json& doc);

/// Throws IoError if the file cannot be read, ParseError if it is not valid.
HomogeneousPair load_pair(const std::filesystem::path& path);

/// Explicit-constant form of the pair, readable by pair_from_json.
nlohmann::json to_json(const HomogeneousPair& pair);
nlohmann::json to_json(const BettiReport& report);
nlohmann::json to_json(const ValidationReport& report);

/// Writes JSON with two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

std::string format_table(const BettiReport& report, bool explain = false);

}  // namespace liecoh
