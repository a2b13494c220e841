#include <gtest/gtest.h>

#include "liecoh/catalog.hpp"
#include "liecoh/complex_matrix.hpp"
#include "liecoh/error.hpp"
#include "liecoh/invariants.hpp"
#include "random_pairs.hpp"

using namespace liecoh;

namespace {

HomogeneousPair whole(const std::string& entry) {
  HomogeneousPair p = catalog_build(entry);
  p.h_basis = Matrix::identity(p.dim_g());
  return p;
}

// so(5) / so(4) with a generator of SO(5) acting on R^4 with determinant -1.
HomogeneousPair sphere4_with_swap() {
  HomogeneousPair p = catalog_build("sphere:4");
  const MatrixRealization real = catalog_realization("so", 5);
  ComplexMatrix d(5);
  for (std::size_t i = 0; i < 5; ++i) d(i, i) = {i == 0 || i == 4 ? -1 : 1, 0};
  p.generators.push_back(adjoint_action(real, d));
  return p;
}

}  // namespace

TEST(FixedVectors, Examples) {
  const Subspace line = Subspace::full(1);
  EXPECT_EQ(fixed_vectors(line, {Matrix{{-1}}}).dim(), 0u);
  EXPECT_EQ(fixed_vectors(Subspace::full(3), {}).dim(), 3u);
  EXPECT_EQ(fixed_vectors(Subspace::full(2), {Matrix{{0, -1}, {1, 0}}}).dim(), 0u);
}

TEST(RestrictTo, RejectsNonInvariantSpace) {
  EXPECT_EQ(restrict_to(Matrix{{2, 0}, {0, 3}}, Subspace::coordinate(2, 1, 1)), (Matrix{{3}}));
  EXPECT_THROW(restrict_to(Matrix{{0, 1}, {1, 0}}, Subspace::coordinate(2, 1, 1)), NotInvariant);
}

TEST(SymForms, Su2IsKillingLine) {
  const HomogeneousPair p = whole("su:2");
  const InvariantFormSpace s = invariant_sym_forms(p, p.subalgebra());
  ASSERT_EQ(s.dim(), 1u);
  const Matrix& f = s.form_basis[0];
  // Proportional to the identity, like the Killing form -8 I.
  EXPECT_EQ(f(0, 1), 0);
  EXPECT_EQ(f(0, 0), f(1, 1));
  EXPECT_EQ(f(1, 1), f(2, 2));
}

TEST(SymForms, AbelianAndReflected) {
  const HomogeneousPair t = whole("torus:2");
  EXPECT_EQ(invariant_sym_forms(t, t.subalgebra()).dim(), 3u);
  const HomogeneousPair e = catalog_build("example_4_7");
  EXPECT_EQ(invariant_sym_forms(e, e.subalgebra()).dim(), 1u);
  EXPECT_EQ(invariant_linear_forms(e, e.subalgebra()).cols(), 0u);
  const HomogeneousPair e0 = catalog_build("example_4_7_h0");
  EXPECT_EQ(invariant_linear_forms(e0, e0.subalgebra()).cols(), 1u);
}

TEST(SymProduct, Symmetric) {
  const Matrix m = sym_product(Vector{1, 2}, Vector{3, 0});
  EXPECT_EQ(m, (Matrix{{6, 6}, {6, 0}}));
}

TEST(Psi, DiagonalSo3InSo4) {
  const auto s = psi_analysis(catalog_build("sphere:3"));
  EXPECT_EQ(s.rank_psi, 1u);
  EXPECT_EQ(s.dim_N, 1u);
  EXPECT_EQ(s.dim_C, 0u);
}

TEST(Psi, So4InSo5) {
  const auto s = psi_analysis(catalog_build("sphere:4"));
  EXPECT_EQ(s.rank_psi, 1u);
  EXPECT_EQ(s.dim_N, 0u);
  EXPECT_EQ(s.dim_C, 1u);
}

TEST(Psi, FlagManifold) {
  const auto s = psi_analysis(catalog_build("flag_su3"));
  EXPECT_EQ(s.rank_psi, 1u);
  EXPECT_EQ(s.dim_N, 0u);
  EXPECT_EQ(s.dim_C, 2u);
}

TEST(Psi, SwapGeneratorShrinksCodomain) {
  const auto s = psi_analysis(sphere4_with_swap());
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.rank_psi, 1u);
  EXPECT_EQ(s.dim_C, 0u);
}

TEST(MinimalIdeals, Examples) {
  const HomogeneousPair plain = catalog_build("sphere:4");
  EXPECT_EQ(minimal_ideal_count(plain, plain.subalgebra()), 2u);
  const HomogeneousPair swapped = sphere4_with_swap();
  ASSERT_TRUE(validate_pair(swapped).ok()) << validate_pair(swapped).summary();
  EXPECT_EQ(minimal_ideal_count(swapped, swapped.subalgebra()), 1u);
  const HomogeneousPair su3 = catalog_build("su:3");
  EXPECT_EQ(minimal_ideal_count(su3, Subspace::full(8)), 1u);
  EXPECT_EQ(simple_ideals(plain.algebra, plain.subalgebra()).size(), 2u);
}

TEST(MinimalIdeals, CountsFormsOnConnectedSubalgebras) {
  // dim S²(h*)^h = dim S²(z(h)*) + number of simple ideals of [h,h].
  auto check = [](const HomogeneousPair& p) {
    if (!p.connected()) return;
    const auto cd = center_and_derived(p.algebra, p.subalgebra());
    const std::size_t z = cd.center.dim();
    std::size_t ideals = 0;
    try {
      ideals = cd.derived.dim() == 0 ? 0 : minimal_ideal_count(p, cd.derived);
    } catch (const SplittingFailed&) {
      return;
    }
    EXPECT_EQ(invariant_sym_forms(p, p.subalgebra()).dim(), z * (z + 1) / 2 + ideals) << p.name;
  };
  for (const char* entry : {"sphere:3", "sphere:4", "flag_su3", "stiefel:5,2", "example_4_7_h0"})
    check(catalog_build(entry));
  for (const auto& p : reference::random_suite(30)) check(p);
}
