#include <gtest/gtest.h>

#include "liecoh/catalog.hpp"
#include "liecoh/error.hpp"
#include "liecoh/koszul.hpp"
#include "random_pairs.hpp"

using namespace liecoh;

namespace {

std::vector<std::size_t> dims(const std::vector<ChainComplexSlice>& slices, std::size_t upto) {
  std::vector<std::size_t> out;
  for (const auto& s : slices)
    if (s.degree >= 1 && s.degree <= upto) out.push_back(s.total_dim);
  return out;
}

void expect_complex(const HomogeneousPair& p) {
  const auto slices = build_complex(p);
  for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
    if (!slices[i].differential || !slices[i + 1].differential) continue;
    EXPECT_TRUE((*slices[i + 1].differential * *slices[i].differential).is_zero()) << p.name << " degree " << i;
  }
}

}  // namespace

TEST(CartanRho, Su2KillingValue) {
  const LieAlgebra a = catalog_algebra("su", 2);
  const TrilinearForm rho = cartan_rho(a, killing_gram(a));
  EXPECT_EQ(rho(0, 1, 2), -16);
  EXPECT_EQ(rho(1, 0, 2), 16);
  EXPECT_EQ(rho(2, 0, 1), -16);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) EXPECT_EQ(rho(x, x, y), 0);
}

TEST(CartanRho, AbelianVanishesAndNonInvariantThrows) {
  const LieAlgebra ab = LieAlgebra::abelian(3);
  const TrilinearForm rho = cartan_rho(ab, Matrix::identity(3));
  for (const auto& v : rho.values) EXPECT_EQ(v, 0);
  const LieAlgebra su2 = catalog_algebra("su", 2);
  EXPECT_THROW(cartan_rho(su2, Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), NotInvariant);
}

TEST(PrimitiveBasis, Dimensions) {
  const PrimitiveBasis pb = primitive_basis(catalog_build("torus:2+su:2+su:3").algebra);
  EXPECT_EQ(pb.p1_dim(), 2u);
  EXPECT_EQ(pb.p3_dim(), 2u);
}

TEST(BuildComplex, SliceDimensions) {
  EXPECT_EQ(dims(build_complex(catalog_build("su:2")), 4), (std::vector<std::size_t>{0, 0, 1, 0}));
  EXPECT_EQ(dims(build_complex(catalog_build("torus:3")), 4), (std::vector<std::size_t>{3, 3, 1, 0}));
  const auto ex = build_complex(catalog_build("example_4_7"));
  EXPECT_EQ(dims(ex, 2)[1], 1u);
  const auto ex0 = build_complex(catalog_build("example_4_7_h0"));
  EXPECT_EQ(dims(ex0, 2)[1], 2u);
}

TEST(BuildComplex, DifferentialsCompose) {
  for (const char* entry : {"sphere:3", "sphere:4", "flag_su3", "example_4_7", "example_4_7_h0", "stiefel:5,2"})
    expect_complex(catalog_build(entry));
  for (const auto& p : reference::random_suite(30)) expect_complex(p);
}

TEST(BettiKoszul, Examples) {
  const BettiReport su2 = betti_koszul(catalog_build("su:2"));
  EXPECT_EQ(su2.method, Method::koszul);
  EXPECT_EQ(su2.betti[3], 1u);
  EXPECT_EQ(su2.betti[4], 0u);
  EXPECT_EQ(betti_koszul(catalog_build("sphere:4")).betti, (std::vector<std::size_t>{1, 0, 0, 0, 1}));
  EXPECT_EQ(betti_koszul(catalog_build("flag_su3")).betti, betti_low(catalog_build("flag_su3")).betti);
}
