#include "liecoh/koszul.hpp"

#include "liecoh/error.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/invariants.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

TrilinearForm cartan_rho(const LieAlgebra& alg, const Matrix& eta) {
  const std::size_t n = alg.dim();
  if (eta.rows() != n || eta.cols() != n) throw DimensionMismatch("cartan_rho: eta must be n x n");
  TrilinearForm out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& ad = alg.ad(i);
      for (std::size_t k = 0; k < n; ++k) {
        if (ad(k, j) == 0) continue;
        for (std::size_t z = 0; z < n; ++z) out(i, j, z) += ad(k, j) * eta(k, z);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = out(i, j, k);
        if (v != -out(j, i, k) || v != -out(i, k, j)) throw NotInvariant("eta not invariant");
      }
  return out;
}

PrimitiveBasis primitive_basis(const LieAlgebra& alg) {
  PrimitiveBasis out;
  out.p1_basis = Matrix(alg.dim(), alg.center_dim());
  for (std::size_t a = 0; a < alg.center_dim(); ++a) out.p1_basis(a, a) = 1;
  for (std::size_t i = 0; i < alg.factor_count(); ++i) out.rho_forms.push_back(cartan_rho(alg, btilde(alg, i)));
  return out;
}

namespace {

Vector flatten_sym(const Matrix& f) {
  Vector v;
  for (std::size_t a = 0; a < f.rows(); ++a)
    for (std::size_t b = a; b < f.cols(); ++b) v.push_back(f(a, b));
  return v;
}

// Coordinates of vectors in the column basis of `basis`; empty bases accept only zero.
class Coordinates {
 public:
  explicit Coordinates(Matrix basis) : basis_(std::move(basis)) {}
  std::size_t dim() const { return basis_.cols(); }
  Vector operator()(const Vector& v, const char* what) const {
    if (basis_.cols() == 0) {
      if (!is_zero(v)) throw InternalError(std::string("Koszul complex: ") + what + " is not invariant");
      return {};
    }
    auto x = solve(basis_, Matrix::column_vector(v));
    if (!x) throw InternalError(std::string("Koszul complex: ") + what + " is not invariant");
    return x->column(0);
  }

 private:
  Matrix basis_;
};

void add_column(Matrix& d, std::size_t col, std::size_t row_offset, const Vector& coords, std::size_t stride = 1,
                std::size_t slot = 0, const Rational& scale = 1) {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) d(row_offset + i * stride + slot, col) += scale * coords[i];
}

}  // namespace

std::vector<ChainComplexSlice> build_complex(const HomogeneousPair& pair) {
  require_valid(pair);
  const LieAlgebra& alg = pair.algebra;
  const Subspace h = pair.subalgebra();
  const std::size_t m = pair.dim_h();
  const std::size_t l = alg.center_dim();
  const std::size_t r = alg.factor_count();

  const Matrix phi_basis = invariant_linear_forms(pair, h);
  const InvariantFormSpace s2 = invariant_sym_forms(pair, h);
  const std::size_t p = phi_basis.cols();
  const std::size_t q = s2.dim();

  std::vector<Vector> flat_s2;
  for (const auto& f : s2.form_basis) flat_s2.push_back(flatten_sym(f));
  const std::size_t sym_len = m * (m + 1) / 2;
  const Coordinates phi_coords(phi_basis);
  const Coordinates s2_coords(Matrix::from_columns(flat_s2, sym_len));

  // Restrictions to h, written in the basis h.basis() = pair.h_basis.
  const Matrix& hb = h.basis();
  std::vector<Vector> f_restricted(l), f_phi(l);
  for (std::size_t a = 0; a < l; ++a) {
    f_restricted[a] = Vector(hb.row(a).begin(), hb.row(a).end());
    f_phi[a] = phi_coords(f_restricted[a], "restricted center functional");
  }
  std::vector<Vector> btilde_s2(r);
  for (std::size_t i = 0; i < r; ++i)
    btilde_s2[i] = s2_coords(flatten_sym(hb.transpose() * btilde(alg, i) * hb), "restricted factor Killing form");
  // ψ_j ∨ f_a|h in S² coordinates.
  std::vector<std::vector<Vector>> psi_vee_f(p, std::vector<Vector>(l));
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t a = 0; a < l; ++a)
      psi_vee_f[j][a] = s2_coords(flatten_sym(sym_product(phi_basis.column(j), f_restricted[a])), "product form");

  const WedgeBasis w2(l, 2), w3(l, 3), w4(l, 4);

  // Offsets of the summands of each degree.
  const std::size_t c1 = l;
  const std::size_t c2_w2 = p, c2 = p + w2.size();
  const std::size_t c3_p3 = p * l, c3_w3 = c3_p3 + r, c3 = c3_w3 + w3.size();
  const std::size_t c4_phi_w2 = q, c4_p3_p1 = q + p * w2.size(), c4_w4 = c4_p3_p1 + r * l,
                    c4 = c4_w4 + w4.size();
  const std::size_t c5_s2_p1 = 0, c5_phi_p3 = q * l, c5_phi_w3 = c5_phi_p3 + p * r, c5 = c5_phi_w3 + p * w3.size();

  // ∇¹(f) = f|h ⊗ 1.
  Matrix d1(c2, c1);
  for (std::size_t a = 0; a < l; ++a) add_column(d1, a, 0, f_phi[a]);

  // ∇²(ψ ⊗ 1) = 0, ∇²(f_a ∧ f_b) = f_a|h ⊗ f_b - f_b|h ⊗ f_a.
  Matrix d2(c3, c2);
  for (std::size_t w = 0; w < w2.size(); ++w) {
    const auto e = elements(w2.mask(w));
    add_column(d2, c2_w2 + w, 0, f_phi[e[0]], l, e[1]);
    add_column(d2, c2_w2 + w, 0, f_phi[e[1]], l, e[0], -1);
  }

  // ∇³(ψ ⊗ f) = ψ ∨ f|h ⊗ 1, ∇³(ρ(B̃_i)) = B̃_i|h ⊗ 1,
  // ∇³(f_a ∧ f_b ∧ f_c) = f_a|h ⊗ f_b∧f_c - f_b|h ⊗ f_a∧f_c + f_c|h ⊗ f_a∧f_b.
  Matrix d3(c4, c3);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t a = 0; a < l; ++a) add_column(d3, j * l + a, 0, psi_vee_f[j][a]);
  for (std::size_t i = 0; i < r; ++i) add_column(d3, c3_p3 + i, 0, btilde_s2[i]);
  for (std::size_t w = 0; w < w3.size(); ++w) {
    const std::uint32_t mask = w3.mask(w);
    const auto e = elements(mask);
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t rest = w2.index(mask & ~(std::uint32_t{1} << e[t]));
      add_column(d3, c3_w3 + w, c4_phi_w2, f_phi[e[t]], w2.size(), rest, t % 2 ? -1 : 1);
    }
  }

  // ∇⁴(S² ⊗ 1) = 0, ∇⁴(ψ ⊗ f_a∧f_b) = ψ∨f_a|h ⊗ f_b - ψ∨f_b|h ⊗ f_a,
  // ∇⁴(ρ(B̃_i) ∧ f) = B̃_i|h ⊗ f - f|h ⊗ ρ(B̃_i),
  // ∇⁴(f_a∧f_b∧f_c∧f_d) = Σ_t (-1)^t f_t|h ⊗ (remaining triple).
  Matrix d4(c5, c4);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t w = 0; w < w2.size(); ++w) {
      const auto e = elements(w2.mask(w));
      const std::size_t col = c4_phi_w2 + j * w2.size() + w;
      add_column(d4, col, c5_s2_p1, psi_vee_f[j][e[0]], l, e[1]);
      add_column(d4, col, c5_s2_p1, psi_vee_f[j][e[1]], l, e[0], -1);
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < l; ++a) {
      const std::size_t col = c4_p3_p1 + i * l + a;
      add_column(d4, col, c5_s2_p1, btilde_s2[i], l, a);
      add_column(d4, col, c5_phi_p3, f_phi[a], r, i, -1);
    }
  for (std::size_t w = 0; w < w4.size(); ++w) {
    const std::uint32_t mask = w4.mask(w);
    const auto e = elements(mask);
    for (std::size_t t = 0; t < 4; ++t) {
      const std::size_t rest = w3.index(mask & ~(std::uint32_t{1} << e[t]));
      add_column(d4, c4_w4 + w, c5_phi_w3, f_phi[e[t]], w3.size(), rest, t % 2 ? -1 : 1);
    }
  }

  if (!(d2 * d1).is_zero() || !(d3 * d2).is_zero() || !(d4 * d3).is_zero())
    throw InternalError("Koszul differentials do not compose to zero");

  std::vector<ChainComplexSlice> slices(5);
  slices[0] = {1, {{"1 ⊗ P¹", l}}, c1, d1};
  slices[1] = {2, {{"(h*)^H ⊗ 1", p}, {"1 ⊗ ∧²P¹", w2.size()}}, c2, d2};
  slices[2] = {3, {{"(h*)^H ⊗ P¹", p * l}, {"1 ⊗ P³", r}, {"1 ⊗ ∧³P¹", w3.size()}}, c3, d3};
  slices[3] = {4,
               {{"S²(h*)^H ⊗ 1", q}, {"(h*)^H ⊗ ∧²P¹", p * w2.size()}, {"1 ⊗ P³∧P¹", r * l}, {"1 ⊗ ∧⁴P¹", w4.size()}},
               c4,
               d4};
  slices[4] = {5, {{"S²(h*)^H ⊗ P¹", q * l}, {"(h*)^H ⊗ P³", p * r}, {"(h*)^H ⊗ ∧³P¹", p * w3.size()}}, c5, std::nullopt};
  return slices;
}

BettiReport betti_koszul(const HomogeneousPair& pair) {
  const auto slices = build_complex(pair);
  BettiReport report;
  report.method = Method::koszul;
  report.pair_name = pair.name;
  report.dim_g = pair.dim_g();
  report.dim_h = pair.dim_h();
  report.generator_count = pair.generators.size();

  std::vector<std::size_t> ranks(5, 0);
  for (std::size_t k = 0; k < 4; ++k) ranks[k + 1] = rank(*slices[k].differential);
  report.betti = {1};
  for (std::size_t k = 1; k <= 4; ++k) report.betti.push_back(slices[k - 1].total_dim - ranks[k] - ranks[k - 1]);
  for (std::size_t k = 0; k < 5; ++k) {
    SliceInfo info{slices[k].degree, slices[k].summand_dims, slices[k].total_dim, std::nullopt};
    if (k < 4) info.rank = ranks[k + 1];
    report.slices.push_back(std::move(info));
  }
  return report;
}

}  // namespace liecoh
