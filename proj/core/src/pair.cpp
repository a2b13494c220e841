#include "liecoh/pair.hpp"

#include "liecoh/invariants.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

void check_generator(const HomogeneousPair& pair, std::size_t index, const Matrix& gamma, const Subspace& h,
                     const Matrix& gram, std::size_t order_bound, ValidationReport& report) {
  const LieAlgebra& alg = pair.algebra;
  const std::size_t n = alg.dim();
  const std::string tag = "generator " + std::to_string(index);
  if (gamma.rows() != n || gamma.cols() != n) {
    report.fail("generator_shape", tag + " is not " + std::to_string(n) + "x" + std::to_string(n), {index});
    return;
  }
  if (rank(gamma) != n) {
    report.fail("generator_invertible", tag + " is singular", {index});
    return;
  }

  for (std::size_t i = 0; i < alg.center_dim(); ++i) {
    if (gamma.column(i) != unit_vector(n, i)) {
      report.fail("generator_fixes_center", tag + ": generator must fix z(g) pointwise", {index, i});
      break;
    }
  }

  for (std::size_t f = 0; f < alg.factor_count(); ++f) {
    const Subspace block = alg.factor_subspace(f);
    if (!block.contains(image(gamma, block))) {
      report.fail("generator_preserves_factors", tag + ": generator must preserve each simple factor", {index, f});
      break;
    }
  }

  bool automorphism = true;
  for (std::size_t i = 0; i < n && automorphism; ++i) {
    const Vector gi = gamma.column(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = gamma.apply(alg.ad(i).column(j));
      const Vector rhs = alg.bracket(gi, gamma.column(j));
      if (lhs != rhs) {
        report.fail("generator_automorphism", tag + " is not a Lie algebra automorphism", {index, i, j});
        automorphism = false;
        break;
      }
    }
  }

  if (!h.contains(image(gamma, h))) {
    report.fail("generator_preserves_subalgebra", tag + " does not map h onto itself", {index});
  }

  if (automorphism && gamma.transpose() * gram * gamma != gram) {
    report.fail("generator_preserves_inner_product", tag + " does not preserve the invariant inner product", {index});
  }

  const Matrix id = Matrix::identity(n);
  Matrix power = gamma;
  bool finite = false;
  for (std::size_t k = 1; k <= order_bound; ++k) {
    if (power == id) {
      finite = true;
      break;
    }
    power = power * gamma;
  }
  if (!finite) {
    report.warn("generator_order", tag + " has order exceeding " + std::to_string(order_bound) +
                                       "; the component group must be finite", {index});
  }
}

}  // namespace

ValidationReport validate_pair(const HomogeneousPair& pair, std::size_t order_bound) {
  ValidationReport report = validate(pair.algebra);
  const std::size_t n = pair.algebra.dim();
  if (pair.h_basis.rows() != n) {
    report.fail("subalgebra_shape", "subalgebra basis vectors must have length " + std::to_string(n));
    return report;
  }
  if (rank(pair.h_basis) != pair.h_basis.cols()) {
    report.fail("subalgebra_independent", "subalgebra basis columns are linearly dependent");
  }
  const Subspace h = pair.subalgebra();
  if (!report.ok()) return report;

  if (!is_bracket_closed(pair.algebra, h)) {
    report.fail("subalgebra_closed", "not a subalgebra: h is not closed under the bracket");
    return report;
  }
  try {
    center_and_derived(pair.algebra, h);
  } catch (const NotReductive& e) {
    report.fail("subalgebra_reductive", e.what());
  }

  const Matrix gram = invariant_inner_product(pair.algebra);
  for (std::size_t g = 0; g < pair.generators.size(); ++g) {
    check_generator(pair, g, pair.generators[g], h, gram, order_bound, report);
  }
  return report;
}

void require_valid(const HomogeneousPair& pair) {
  ValidationReport report = validate_pair(pair);
  if (!report.ok()) throw ValidationError(std::move(report));
}

PairDecomposition decompose(const HomogeneousPair& pair) {
  const LieAlgebra& alg = pair.algebra;
  const std::size_t n = alg.dim();
  PairDecomposition d;
  d.h = pair.subalgebra();
  const Subspace gg = alg.derived();
  d.hcapgg = intersect(d.h, gg);
  auto cd = center_and_derived(alg, d.h);
  d.zh = std::move(cd.center);
  d.hh = std::move(cd.derived);
  d.a = intersect(d.zh, gg);
  const Matrix gram = invariant_inner_product(alg);
  d.b = intersect(orth_complement(d.hcapgg, gram), d.h);
  d.a_fixed = fixed_vectors(d.a, pair.generators);

  Matrix moved(n, 0);
  for (const auto& gamma : pair.generators) moved = hstack(moved, gamma * d.a.basis() - d.a.basis());
  d.a_moved = Subspace::span(moved);
  d.r0 = n - sum(gg, d.h).dim();

  auto require = [](bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("pair decomposition identity failed: ") + what);
  };
  require(d.a.dim() + d.hh.dim() + d.b.dim() == d.h.dim() && sum(sum(d.a, d.hh), d.b) == d.h, "h = a + [h,h] + b");
  require(d.a.dim() + d.b.dim() == d.zh.dim() && sum(d.a, d.b) == d.zh, "z(h) = a + b");
  require(d.a_fixed.dim() + d.a_moved.dim() == d.a.dim() && intersect(d.a_fixed, d.a_moved).is_zero(),
          "a = a^H + (H-1)a");
  for (const auto& gamma : pair.generators) require(gamma * d.b.basis() == d.b.basis(), "generators act trivially on b");
  require(d.r0 + d.b.dim() == alg.center_dim(), "r0 = l - dim b");
  return d;
}

HomogeneousPair direct_sum(const HomogeneousPair& a, const HomogeneousPair& b) {
  DirectSum ds = direct_sum(a.algebra, b.algebra);
  HomogeneousPair out;
  out.h_basis = hstack(ds.embed_first * a.h_basis, ds.embed_second * b.h_basis);
  const Matrix pa = ds.embed_first, pb = ds.embed_second;
  // gamma ⊕ 1 in the combined basis: P_a gamma P_a^T + P_b P_b^T.
  for (const auto& g : a.generators) out.generators.push_back(pa * g * pa.transpose() + pb * pb.transpose());
  for (const auto& g : b.generators) out.generators.push_back(pa * pa.transpose() + pb * g * pb.transpose());
  out.algebra = std::move(ds.algebra);
  out.name = a.name.empty() || b.name.empty() ? a.name + b.name : a.name + "+" + b.name;
  return out;
}

HomogeneousPair group_pair(LieAlgebra alg, std::string name) {
  HomogeneousPair p;
  p.h_basis = Matrix(alg.dim(), 0);
  p.algebra = std::move(alg);
  p.name = std::move(name);
  return p;
}

}  // namespace liecoh
