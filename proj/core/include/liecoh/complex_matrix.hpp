#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

/// Gaussian rational a + b i.
struct Complex {
  Rational re;
  Rational im;

  friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
  friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const Complex& x, const Complex& y) { return x.re == y.re && x.im == y.im; }
  Complex conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

/// Square matrix over Q(i).
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}
  static ComplexMatrix identity(std::size_t n);
  /// E_jk scaled by value.
  static ComplexMatrix unit(std::size_t n, std::size_t j, std::size_t k, Complex value = {1, 0});

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  ComplexMatrix adjoint() const;  // conjugate transpose
  ComplexMatrix conj() const;
  ComplexMatrix transpose() const;
  bool is_zero() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(const Complex& s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, const Complex& s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  /// [[Re, -Im], [Im, Re]].
  Matrix realify() const;
  static ComplexMatrix from_realified(const Matrix& m);

 private:
  std::size_t n_;
  std::vector<Complex> data_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& m);
/// Block-diagonal embedding of a into the top-left of an n x n matrix.
ComplexMatrix embed(const ComplexMatrix& a, std::size_t n, std::size_t offset = 0);

/// (I - a)(I + a)^{-1}; unitary with rational entries for anti-Hermitian a.
ComplexMatrix cayley(const ComplexMatrix& a);

/// A real Lie algebra of complex matrices: a basis of the center followed by
/// a basis of each simple factor. Brackets are matrix commutators.
struct MatrixRealization {
  std::size_t matrix_size = 0;
  std::vector<ComplexMatrix> center;
  std::vector<std::pair<std::string, std::vector<ComplexMatrix>>> factors;

  std::vector<ComplexMatrix> basis() const;
  std::size_t dim() const;
};

/// Structure constants in the realization's basis. Throws InternalError if
/// the span is not closed or the basis is dependent.
LieAlgebra to_algebra(const MatrixRealization& real);

/// Real coordinates (one column per element) of matrices in the span of the
/// realization basis; throws NotInvariant for elements outside it.
Matrix coordinates(const MatrixRealization& real, const std::vector<ComplexMatrix>& elements);

/// Matrix of X -> u X u^{-1} on the realization basis.
Matrix adjoint_action(const MatrixRealization& real, const ComplexMatrix& u);

}  // namespace liecoh
