#include "liecoh/complex_matrix.hpp"

#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = {1, 0};
  return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t j, std::size_t k, Complex value) {
  ComplexMatrix m(n);
  m(j, k) = std::move(value);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conj().transpose(); }

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].conj();
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) throw DimensionMismatch("complex matrix sum size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] + rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.n_ != n_) throw DimensionMismatch("complex matrix difference size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = data_[i] - rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(const Complex& s) {
  for (auto& x : data_) x = x * s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("complex matrix product size mismatch");
  const std::size_t n = a.n_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) = out(i, j) + x * b(k, j);
    }
  return out;
}

Matrix ComplexMatrix::realify() const {
  Matrix out(2 * n_, 2 * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Complex& x = (*this)(i, j);
      out(i, j) = x.re;
      out(i, n_ + j) = -x.im;
      out(n_ + i, j) = x.im;
      out(n_ + i, n_ + j) = x.re;
    }
  return out;
}

ComplexMatrix ComplexMatrix::from_realified(const Matrix& m) {
  const std::size_t n = m.rows() / 2;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = {m(i, j), m(n + i, j)};
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix inverse(const ComplexMatrix& m) { return ComplexMatrix::from_realified(inverse(m.realify())); }

ComplexMatrix embed(const ComplexMatrix& a, std::size_t n, std::size_t offset) {
  if (offset + a.size() > n) throw DimensionMismatch("embed: block does not fit");
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(offset + i, offset + j) = a(i, j);
  return out;
}

ComplexMatrix cayley(const ComplexMatrix& a) {
  const ComplexMatrix id = ComplexMatrix::identity(a.size());
  return (id - a) * inverse(id + a);
}

std::vector<ComplexMatrix> MatrixRealization::basis() const {
  std::vector<ComplexMatrix> out = center;
  for (const auto& f : factors) out.insert(out.end(), f.second.begin(), f.second.end());
  return out;
}

std::size_t MatrixRealization::dim() const {
  std::size_t d = center.size();
  for (const auto& f : factors) d += f.second.size();
  return d;
}

namespace {

Vector flatten(const ComplexMatrix& x) {
  Vector v;
  v.reserve(2 * x.size() * x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      v.push_back(x(i, j).re);
      v.push_back(x(i, j).im);
    }
  return v;
}

}  // namespace

Matrix coordinates(const MatrixRealization& real, const std::vector<ComplexMatrix>& elements) {
  const std::size_t len = 2 * real.matrix_size * real.matrix_size;
  std::vector<Vector> basis_cols, target_cols;
  for (const auto& b : real.basis()) basis_cols.push_back(flatten(b));
  for (const auto& e : elements) {
    if (e.size() != real.matrix_size) throw DimensionMismatch("coordinates: matrix size mismatch");
    target_cols.push_back(flatten(e));
  }
  if (elements.empty()) return Matrix(real.dim(), 0);
  if (basis_cols.empty()) {
    for (const auto& t : target_cols)
      if (!is_zero(t)) throw NotInvariant("matrix outside the realized algebra");
    return Matrix(0, elements.size());
  }
  auto x = solve(Matrix::from_columns(basis_cols, len), Matrix::from_columns(target_cols, len));
  if (!x) throw NotInvariant("matrix outside the realized algebra");
  return *x;
}

LieAlgebra to_algebra(const MatrixRealization& real) {
  const auto basis = real.basis();
  const std::size_t n = basis.size();
  std::vector<ComplexMatrix> brackets;
  std::vector<FactorSpec> factor_list;
  std::size_t offset = real.center.size();
  for (const auto& [name, fb] : real.factors) {
    factor_list.push_back({name, fb.size()});
    for (std::size_t i = 0; i < fb.size(); ++i)
      for (std::size_t j = i + 1; j < fb.size(); ++j) {
        brackets.push_back(commutator(fb[i], fb[j]));
      }
    offset += fb.size();
  }
  Matrix coords;
  try {
    coords = coordinates(real, brackets);
  } catch (const NotInvariant&) {
    throw InternalError("matrix realization is not closed under the commutator");
  }
  if (n > 0 && rank(coordinates(real, basis)) != n) throw InternalError("matrix realization basis is dependent");

  offset = real.center.size();
  std::size_t pair_index = 0;
  std::vector<StructureConstant> local;
  for (std::size_t f = 0; f < real.factors.size(); ++f) {
    const std::size_t d = real.factors[f].second.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j, ++pair_index)
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& c = coords(k, pair_index);
          if (sgn(c) == 0) continue;
          if (k < offset || k >= offset + d) throw InternalError("matrix realization factor is not an ideal");
          local.push_back({i + offset, j + offset, k, c});
        }
    offset += d;
  }
  return LieAlgebra(real.center.size(), factor_list, local);
}

Matrix adjoint_action(const MatrixRealization& real, const ComplexMatrix& u) {
  const ComplexMatrix u_inv = inverse(u);
  std::vector<ComplexMatrix> images;
  for (const auto& b : real.basis()) images.push_back(u * b * u_inv);
  return coordinates(real, images);
}

}  // namespace liecoh
