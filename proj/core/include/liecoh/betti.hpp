#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/pair.hpp"

namespace liecoh {

enum class Method { formula, koszul, ce };

std::string to_string(Method method);
/// Throws ParseError on an unknown name.
Method parse_method(const std::string& name);

struct Intermediates {
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t r0 = 0;
  std::size_t dim_a_fixed = 0;
  std::size_t dim_N = 0;
  std::size_t dim_C = 0;
  std::size_t rank_psi = 0;
  std::size_t dim_S2_hgg_inv = 0;
};

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

struct CorollaryCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

/// Dimension bookkeeping for one degree of an oracle complex.
struct SliceInfo {
  std::size_t degree = 0;
  std::vector<std::pair<std::string, std::size_t>> summands;
  std::size_t total_dim = 0;
  std::optional<std::size_t> rank;  // rank of the differential leaving this degree
};

struct BettiReport {
  Method method = Method::formula;
  std::string pair_name;
  std::size_t dim_g = 0;
  std::size_t dim_h = 0;
  std::size_t generator_count = 0;
  std::vector<std::size_t> betti;
  std::optional<Intermediates> intermediates;
  std::vector<CorollaryCheck> corollary_flags;
  std::vector<SliceInfo> slices;
  std::optional<std::uint64_t> prime;  // modular rank prime, ce only
  bool certified = false;

  std::size_t dim_quotient() const { return dim_g - dim_h; }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// b0..b4 from the closed formulas, with corollary_flags filled in.
BettiReport betti_low(const HomogeneousPair& pair);

/// Consistency identities and inequalities evaluated on a formula report.
/// Identities that do not apply are reported as skipped.
std::vector<CorollaryCheck> corollary_checks(const HomogeneousPair& pair, const BettiReport& report);

}  // namespace liecoh
