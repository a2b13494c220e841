#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/subspace.hpp"
#include "liecoh/validation.hpp"

namespace liecoh {

/// (g, h, generators of the component group acting on g). The columns of
/// h_basis span h; each generator is the n x n matrix of Ad(gamma) on g.
struct HomogeneousPair {
  LieAlgebra algebra;
  Matrix h_basis;
  std::vector<Matrix> generators;
  std::string name;

  std::size_t dim_g() const { return algebra.dim(); }
  std::size_t dim_h() const { return h_basis.cols(); }
  Subspace subalgebra() const { return Subspace::span(h_basis); }
  bool connected() const { return generators.empty(); }
};

inline constexpr std::size_t kDefaultGeneratorOrderBound = 256;

/// Checks every HomogeneousPair invariant (including the algebra's). Generator
/// orders above order_bound only produce a warning.
ValidationReport validate_pair(const HomogeneousPair& pair, std::size_t order_bound = kDefaultGeneratorOrderBound);

/// Throws ValidationError when validate_pair fails.
void require_valid(const HomogeneousPair& pair);

/// Subspaces of g attached to the pair, all relative to the canonical inner
/// product (-Killing on [g,g], identity on the center):
///   a = z(h) ∩ [g,g], b = (h ∩ [g,g])^⊥ ∩ h,
///   a_fixed = common fixed vectors of the generators on a,
///   a_moved = span{γv - v}, r0 = dim g / ([g,g] + h).
struct PairDecomposition {
  Subspace h;
  Subspace hcapgg;
  Subspace hh;
  Subspace zh;
  Subspace a;
  Subspace b;
  Subspace a_fixed;
  Subspace a_moved;
  std::size_t r0 = 0;
};

/// Assumes a validated pair. Throws InternalError if any decomposition identity
/// (h = a ⊕ [h,h] ⊕ b, z(h) = a ⊕ b, a = a_fixed ⊕ a_moved, generators trivial
/// on b, r0 = l - dim b) fails.
PairDecomposition decompose(const HomogeneousPair& pair);

/// Pair (g1 ⊕ g2, h1 ⊕ h2) with each generator extended by the identity.
HomogeneousPair direct_sum(const HomogeneousPair& a, const HomogeneousPair& b);

/// The pair (g, 0).
HomogeneousPair group_pair(LieAlgebra alg, std::string name = {});

}  // namespace liecoh
