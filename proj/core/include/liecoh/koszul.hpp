#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/betti.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/pair.hpp"

namespace liecoh {

/// Dense trilinear form on an n-dimensional space.
struct TrilinearForm {
  std::size_t n = 0;
  std::vector<Rational> values;

  explicit TrilinearForm(std::size_t dim = 0) : n(dim), values(dim * dim * dim) {}
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return values[(i * n + j) * n + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return values[(i * n + j) * n + k]; }
};

/// ρ(η)(x, y, z) = η([x, y], z). Throws NotInvariant("eta not invariant") if
/// the result is not alternating.
TrilinearForm cartan_rho(const LieAlgebra& alg, const Matrix& eta);

/// P¹ = annihilator of [g,g] in g* (columns are coefficient vectors of the
/// center coordinate functionals) and the r forms ρ(B̃_i) spanning P³.
struct PrimitiveBasis {
  Matrix p1_basis;
  std::vector<TrilinearForm> rho_forms;

  std::size_t p1_dim() const { return p1_basis.cols(); }
  std::size_t p3_dim() const { return rho_forms.size(); }
};

PrimitiveBasis primitive_basis(const LieAlgebra& alg);

struct ChainComplexSlice {
  std::size_t degree = 0;
  std::vector<std::pair<std::string, std::size_t>> summand_dims;
  std::size_t total_dim = 0;
  std::optional<Matrix> differential;  // total_dim of next slice x total_dim
};

/// Slices of degrees 1..5 of S(h*)^H ⊗ ∧P_g with the transgression
/// τ(ρ(B̃_i)) = B̃_i; the degree-5 slice holds only the summands reached by ∇⁴.
/// Throws InternalError if consecutive differentials do not compose to zero.
std::vector<ChainComplexSlice> build_complex(const HomogeneousPair& pair);

BettiReport betti_koszul(const HomogeneousPair& pair);

}  // namespace liecoh
