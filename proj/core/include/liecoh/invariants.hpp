#pragma once

#include <cstddef>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/pair.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

/// Invariant symmetric bilinear forms on a carrier subspace V ⊆ h, each stored
/// as a symmetric dim V x dim V matrix in the carrier's basis. The psi fields
/// are filled only by psi_analysis.
struct InvariantFormSpace {
  Subspace carrier;
  std::vector<Matrix> form_basis;
  Matrix psi_matrix;  // forms x r, column i = coordinates of the restricted B̃_i
  std::size_t rank_psi = 0;
  std::size_t dim_N = 0;
  std::size_t dim_C = 0;

  std::size_t dim() const { return form_basis.size(); }
};

/// Matrix of map restricted to space, in the basis of space. Throws
/// NotInvariant if map does not preserve space.
Matrix restrict_to(const Matrix& map, const Subspace& space);

/// Common fixed vectors of the actions inside space.
Subspace fixed_vectors(const Subspace& space, const std::vector<Matrix>& actions);

/// Linear forms on the carrier annihilated by ad(h) and fixed by every
/// generator; columns are coefficient vectors in the carrier basis.
Matrix invariant_linear_forms(const HomogeneousPair& pair, const Subspace& carrier);

InvariantFormSpace invariant_sym_forms(const HomogeneousPair& pair, const Subspace& carrier);

/// Restriction of B̃_1..B̃_r to h ∩ [g,g] against the invariant forms there.
/// The pair must be valid.
InvariantFormSpace psi_analysis(const HomogeneousPair& pair);

/// α ∨ β = αβ^T + βα^T.
Matrix sym_product(const Vector& alpha, const Vector& beta);

/// Number of orbits of the generators on the simple ideals of a semisimple
/// generator-invariant subalgebra s. Throws SplittingFailed when the adjoint
/// commutant of s cannot be diagonalized over Q.
std::size_t minimal_ideal_count(const HomogeneousPair& pair, const Subspace& s);

/// The simple ideals of s found by the same splitting, in g coordinates.
std::vector<Subspace> simple_ideals(const LieAlgebra& alg, const Subspace& s);

}  // namespace liecoh
