#include "liecoh/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/linalg.hpp"

namespace liecoh {

bool ValidationReport::failed(const std::string& check) const {
  return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.check == check; });
}

void ValidationReport::fail(std::string check, std::string message, std::vector<std::size_t> witness) {
  failures.push_back({std::move(check), std::move(message), std::move(witness)});
}

void ValidationReport::warn(std::string check, std::string message, std::vector<std::size_t> witness) {
  warnings.push_back({std::move(check), std::move(message), std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  auto emit = [&](const char* kind, const ValidationIssue& issue) {
    os << kind << " [" << issue.check << "] " << issue.message;
    if (!issue.witness.empty()) {
      os << " (witness";
      for (auto w : issue.witness) os << ' ' << w;
      os << ')';
    }
    os << '\n';
  };
  for (const auto& f : failures) emit("FAIL", f);
  for (const auto& w : warnings) emit("WARN", w);
  return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("validation failed:\n" + report.summary()), report_(std::move(report)) {}

LieAlgebra::LieAlgebra(std::size_t center_dim, std::vector<FactorSpec> factors,
                       const std::vector<StructureConstant>& constants)
    : center_dim_(center_dim) {
  std::size_t offset = center_dim;
  for (auto& f : factors) {
    factors_.push_back({std::move(f.name), offset, f.dim});
    offset += f.dim;
  }
  dim_ = offset;
  ad_.assign(dim_, Matrix(dim_, dim_));

  std::vector<bool> seen(dim_ * dim_ * dim_, false);
  for (const auto& sc : constants) {
    if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_) {
      throw DimensionMismatch("structure constant index out of range for dimension " + std::to_string(dim_));
    }
    if (sc.i == sc.j) {
      if (sgn(sc.value) != 0) {
        issues_.push_back({"antisymmetry", "nonzero [e_i, e_i] component", {sc.i, sc.j, sc.k}});
      }
      continue;
    }
    const std::size_t lo = std::min(sc.i, sc.j);
    const std::size_t hi = std::max(sc.i, sc.j);
    const Rational v = sc.i < sc.j ? sc.value : Rational(-sc.value);
    const std::size_t slot = (lo * dim_ + hi) * dim_ + sc.k;
    if (seen[slot] && ad_[lo](sc.k, hi) != v) {
      issues_.push_back({"antisymmetry", "conflicting values for c(i,j,k) and c(j,i,k)", {lo, hi, sc.k}});
      continue;
    }
    seen[slot] = true;
    ad_[lo](sc.k, hi) = v;
    ad_[hi](sc.k, lo) = -v;
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}, {}); }

std::optional<std::size_t> LieAlgebra::factor_of(std::size_t index) const {
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (factors_[f].contains(index)) return f;
  return std::nullopt;
}

std::vector<StructureConstant> LieAlgebra::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(ad_[i](k, j)) != 0) out.push_back({i, j, k, ad_[i](k, j)});
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("ad: vector length differs from algebra dimension");
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) != 0) m += ad_[i] * x[i];
  }
  return m;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket: vector length differs from algebra dimension");
  Vector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = ad_[i](k, j);
        if (sgn(c) != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Subspace LieAlgebra::factor_subspace(std::size_t factor) const {
  if (factor >= factors_.size()) throw IndexOutOfRange("factor index " + std::to_string(factor) + " out of range");
  return Subspace::coordinate(dim_, factors_[factor].offset, factors_[factor].dim);
}

Matrix killing_gram(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      const Matrix& a = alg.ad(i);
      const Matrix& b = alg.ad(j);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(a(r, c)) != 0 && sgn(b(c, r)) != 0) t += a(r, c) * b(c, r);
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

Matrix btilde(const LieAlgebra& alg, std::size_t factor) {
  if (factor >= alg.factor_count()) {
    throw IndexOutOfRange("btilde: factor index " + std::to_string(factor) + " out of range (r = " +
                          std::to_string(alg.factor_count()) + ")");
  }
  const auto& block = alg.factors()[factor];
  const Matrix killing = killing_gram(alg);
  Matrix out(alg.dim(), alg.dim());
  for (std::size_t i = block.offset; i < block.offset + block.dim; ++i)
    for (std::size_t j = block.offset; j < block.offset + block.dim; ++j) out(i, j) = killing(i, j);
  return out;
}

Matrix invariant_inner_product(const LieAlgebra& alg) {
  Matrix gram = killing_gram(alg) * Rational(-1);
  for (std::size_t i = 0; i < alg.center_dim(); ++i) gram(i, i) = 1;
  return gram;
}

namespace {

// Columns: [b_i, b_j] for i < j over the basis of s.
Matrix pairwise_brackets(const LieAlgebra& alg, const Subspace& s) {
  std::vector<Vector> cols;
  const Matrix& b = s.basis();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j) cols.push_back(alg.bracket(b.column(i), b.column(j)));
  return Matrix::from_columns(cols, alg.dim());
}

}  // namespace

bool is_bracket_closed(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace ambient dimension differs from algebra dimension");
  const Matrix br = pairwise_brackets(alg, s);
  return s.contains(Subspace::span(br));
}

CenterAndDerived center_and_derived(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("subspace ambient dimension differs from algebra dimension");
  const Matrix br = pairwise_brackets(alg, s);
  Subspace derived = Subspace::span(br);
  if (!s.contains(derived)) throw NotSubalgebra("not a subalgebra: subspace is not closed under the bracket");

  const Matrix& b = s.basis();
  Matrix constraints(0, s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) constraints = vstack(constraints, alg.ad(b.column(j)) * b);
  Subspace center = s.is_zero() ? Subspace(alg.dim()) : Subspace::span(b * null_space(constraints));

  if (center.dim() + derived.dim() != s.dim() || !intersect(center, derived).is_zero()) {
    throw NotReductive("subalgebra not reductive in the compact sense: dim z(s) = " + std::to_string(center.dim()) +
                       ", dim [s,s] = " + std::to_string(derived.dim()) + ", dim s = " + std::to_string(s.dim()));
  }
  return {std::move(center), std::move(derived)};
}

Subspace ideal_closure(const LieAlgebra& alg, const Subspace& s) {
  Subspace current = s;
  for (;;) {
    Matrix gens = current.basis();
    for (std::size_t i = 0; i < alg.dim(); ++i) gens = hstack(gens, alg.ad(i) * current.basis());
    Subspace next = Subspace::span(gens);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport report;
  const std::size_t n = alg.dim();
  const std::size_t l = alg.center_dim();

  for (const auto& issue : alg.construction_issues()) report.fail(issue.check, issue.message, issue.witness);

  // Jacobi on every basis triple i < j < k.
  {
    std::size_t violations = 0;
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const Vector jk = alg.ad(j).column(k);
          const Vector ki = alg.ad(k).column(i);
          const Vector ij = alg.ad(i).column(j);
          Vector r = alg.ad(i).apply(jk);
          const Vector r2 = alg.ad(j).apply(ki);
          const Vector r3 = alg.ad(k).apply(ij);
          for (std::size_t t = 0; t < n; ++t) r[t] += r2[t] + r3[t];
          if (!is_zero(r)) {
            if (violations++ == 0) first = {i, j, k};
          }
        }
    if (violations) {
      report.fail("jacobi",
                  "Jacobi identity fails on " + std::to_string(violations) + " basis triple(s); first at (" +
                      std::to_string(first[0]) + ", " + std::to_string(first[1]) + ", " + std::to_string(first[2]) + ")",
                  first);
    }
  }

  // Bracket support: center commutes, factors are ideals, distinct factors commute.
  {
    bool center_bad = false, cross_bad = false, ideal_bad = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(alg.constant(i, j, k)) == 0) continue;
          if (i < l || j < l) {
            if (!center_bad) report.fail("center_commutes", "bracket involving a center index is nonzero", {i, j, k});
            center_bad = true;
            continue;
          }
          const auto fi = alg.factor_of(i), fj = alg.factor_of(j), fk = alg.factor_of(k);
          if (fi != fj) {
            if (!cross_bad) report.fail("cross_factor", "brackets between distinct declared factors must vanish", {i, j, k});
            cross_bad = true;
          } else if (fk != fi) {
            if (!ideal_bad) report.fail("factor_ideal", "bracket of a factor leaves the factor", {i, j, k});
            ideal_bad = true;
          }
        }
  }

  const Matrix killing = killing_gram(alg);
  for (std::size_t f = 0; f < alg.factor_count(); ++f) {
    const auto& block = alg.factors()[f];
    Matrix neg = killing.block(block.offset, block.offset, block.dim, block.dim) * Rational(-1);
    if (!is_positive_definite(neg)) {
      report.fail("killing_negative_definite",
                  "Killing form is not negative definite on factor '" + block.name + "'", {f});
    }
  }

  // Simplicity only makes sense once the factor blocks are ideals.
  if (!report.failed("factor_ideal") && !report.failed("cross_factor") && !report.failed("center_commutes")) {
    for (std::size_t f = 0; f < alg.factor_count(); ++f) {
      const auto& block = alg.factors()[f];
      for (std::size_t v = block.offset; v < block.offset + block.dim; ++v) {
        const Subspace closure = ideal_closure(alg, Subspace::coordinate(n, v, 1));
        if (closure.dim() != block.dim) {
          report.fail("factor_simple",
                      "factor '" + block.name + "' is not simple: ideal generated by e_" + std::to_string(v) +
                          " has dimension " + std::to_string(closure.dim()) + " of " + std::to_string(block.dim),
                      {f, v});
          break;
        }
      }
    }
  }
  return report;
}

DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  const std::size_t la = a.center_dim(), lb = b.center_dim();
  // New index of each old index.
  std::vector<std::size_t> map_a(na), map_b(nb);
  for (std::size_t i = 0; i < la; ++i) map_a[i] = i;
  for (std::size_t i = 0; i < lb; ++i) map_b[i] = la + i;
  for (std::size_t i = la; i < na; ++i) map_a[i] = lb + i;
  for (std::size_t i = lb; i < nb; ++i) map_b[i] = na + i;

  std::vector<FactorSpec> factors;
  for (const auto& f : a.factors()) factors.push_back({f.name, f.dim});
  for (const auto& f : b.factors()) factors.push_back({f.name, f.dim});

  std::vector<StructureConstant> constants;
  for (const auto& c : a.constants()) constants.push_back({map_a[c.i], map_a[c.j], map_a[c.k], c.value});
  for (const auto& c : b.constants()) constants.push_back({map_b[c.i], map_b[c.j], map_b[c.k], c.value});

  DirectSum out{LieAlgebra(la + lb, std::move(factors), constants), Matrix(na + nb, na), Matrix(na + nb, nb)};
  for (std::size_t i = 0; i < na; ++i) out.embed_first(map_a[i], i) = 1;
  for (std::size_t i = 0; i < nb; ++i) out.embed_second(map_b[i], i) = 1;
  return out;
}

}  // namespace liecoh
