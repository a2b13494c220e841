#include "liecoh/subspace.hpp"

#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

Matrix reduced_column_echelon(const Matrix& basis) {
  const Rref r = rref(basis.transpose());
  return r.reduced.block(0, 0, r.pivots.size(), basis.rows()).transpose();
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(ambient_dim, 0), canonical_(ambient_dim, 0) {}

Subspace::Subspace(std::size_t ambient_dim, Matrix independent_basis)
    : ambient_dim_(ambient_dim), basis_(std::move(independent_basis)), canonical_(reduced_column_echelon(basis_)) {}

Subspace Subspace::span(const Matrix& vectors) {
  const auto cols = independent_columns(vectors);
  return Subspace(vectors.rows(), vectors.select_columns(cols));
}

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

Subspace Subspace::coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count) {
  if (first + count > ambient_dim) throw DimensionMismatch("coordinate subspace out of range");
  Matrix b(ambient_dim, count);
  for (std::size_t i = 0; i < count; ++i) b(first + i, i) = 1;
  return Subspace(ambient_dim, std::move(b));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  if (is_zero()) return liecoh::is_zero(v);
  return solve(basis_, Matrix::column_vector(v)).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("subspaces live in different ambient spaces");
  if (other.is_zero()) return true;
  if (is_zero()) return false;
  return solve(basis_, other.basis_).has_value();
}

Matrix Subspace::coordinates(const Matrix& vectors) const {
  if (vectors.rows() != ambient_dim_) throw DimensionMismatch("vector length differs from ambient dimension");
  if (is_zero()) {
    if (!vectors.is_zero()) throw NotInvariant("vector outside the zero subspace");
    return Matrix(0, vectors.cols());
  }
  auto x = solve(basis_, vectors);
  if (!x) throw NotInvariant("vector outside the subspace");
  return *x;
}

Subspace kernel_basis(const Matrix& m) { return Subspace::span(null_space(m)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimension mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim());
  const Matrix k = null_space(hstack(a.basis(), b.basis() * Rational(-1)));
  const Matrix ka = k.block(0, 0, a.dim(), k.cols());
  return Subspace::span(a.basis() * ka);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum: ambient dimension mismatch");
  return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace orth_complement(const Subspace& s, const Matrix& gram) {
  if (gram.rows() != s.ambient_dim() || gram.cols() != s.ambient_dim())
    throw DimensionMismatch("orth_complement: gram size differs from ambient dimension");
  if (!is_positive_definite(gram)) throw NotPositiveDefinite("orth_complement: gram is not symmetric positive definite");
  if (s.is_zero()) return Subspace::full(s.ambient_dim());
  return kernel_basis(s.basis().transpose() * gram);
}

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw DimensionMismatch("image: map domain differs from ambient dimension");
  return Subspace::span(map * s.basis());
}

}  // namespace liecoh
