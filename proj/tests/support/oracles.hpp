#pragma once

// Reference computations used to cross-check the library. They share no code
// with the library's elimination or cochain builders.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"
#include "liecoh/pair.hpp"

namespace liecoh::reference {

/// Textbook Gaussian elimination with rational pivots.
std::size_t naive_rank(const Matrix& m);

/// Basis of the null space as columns, by naive elimination.
Matrix naive_null_space(const Matrix& m);

/// Killing form from the structure constants, summed term by term.
Matrix brute_killing(const LieAlgebra& alg);

/// Number of (i, j, k, m) with a nonzero Jacobiator coefficient.
std::size_t jacobi_residual(const LieAlgebra& alg);

/// Number of nonzero entries of ad(x)^T B + B ad(x) over the basis of g.
std::size_t invariance_residual(const LieAlgebra& alg, const Matrix& form);

/// Betti numbers b_0..max_degree of the basic subcomplex of ∧g* (forms killed
/// by i(h) and L(h), fixed by every generator), with dense matrices on the
/// full exterior algebra. Only practical for dim g <= 8.
std::vector<std::size_t> brute_force_betti(const HomogeneousPair& pair, std::size_t max_degree);

/// Coefficients of a polynomial in t, lowest degree first.
using Poly = std::vector<std::size_t>;
Poly poly_mul(const Poly& a, const Poly& b);

/// Poincaré polynomial of a compact connected group, from the classical
/// exponents; factors are ("su", n), ("so", n), ("sp", n), ("u", n), ("torus", l).
Poly group_poincare(const std::vector<std::pair<std::string, std::size_t>>& factors);

/// 1 + t^n.
Poly sphere_poincare(std::size_t n);

}  // namespace liecoh::reference
