#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecoh/betti.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/pair.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

inline constexpr std::size_t kDefaultSizeCap = 14;

/// kDefaultSizeCap unless LIECOH_SIZE_CAP holds a positive integer.
std::size_t default_size_cap();

struct CeOptions {
  std::optional<std::size_t> max_degree;  // defaults to max(dim g/h, 4)
  std::size_t size_cap = default_size_cap();
  RankEngine engine{RankEngine::Mode::modular};
};

/// h-invariant, generator-invariant horizontal forms on g with the
/// Chevalley-Eilenberg differential. Forms are written in the basis of
/// wedges of the annihilator basis (WedgeBasis(dim g/h, k)); cochain_bases[k]
/// holds one basis form per row and deltas[k] holds δ of each of those rows.
struct RelativeComplex {
  Subspace horizontal_annihilator;  // ann(h) in g*, coordinates dual to e_i
  std::size_t horizontal_dim = 0;
  std::vector<SparseMatrix> cochain_bases;
  std::vector<SparseMatrix> deltas;
  std::vector<std::size_t> delta_ranks;

  std::size_t dim(std::size_t k) const { return cochain_bases.at(k).rows(); }
};

/// Builds degrees 0..min(max_degree, dim g/h). Throws SizeCapExceeded when
/// dim g/h exceeds options.size_cap, InternalError("invariance projection
/// inconsistent") if δ leaves the invariant subcomplex or δ∘δ != 0.
RelativeComplex relative_complex(const HomogeneousPair& pair, std::size_t max_degree, const CeOptions& options = {});

/// Betti numbers b_0..b_max_degree; degrees above dim g/h are zero.
BettiReport betti_ce(const HomogeneousPair& pair, const CeOptions& options = {});

/// b_k = b_{dim_quotient - k} for every k; false if the report is too short.
bool poincare_check(const BettiReport& report, std::size_t dim_quotient);

}  // namespace liecoh
