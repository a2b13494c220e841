#pragma once

#include <cstddef>

#include "liecoh/matrix.hpp"

namespace liecoh {

/// A linear subspace of Q^n, held as a basis (independent columns) together
/// with its reduced column echelon form. Equality compares canonical forms.
class Subspace {
 public:
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Span of the columns of vectors; dependent columns are dropped.
  static Subspace span(const Matrix& vectors);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the given coordinate axes.
  static Subspace coordinate(std::size_t ambient_dim, std::size_t first, std::size_t count);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix& basis() const { return basis_; }
  const Matrix& canonical() const { return canonical_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of each column of vectors in basis(); throws NotInvariant if
  /// a column lies outside the subspace.
  Matrix coordinates(const Matrix& vectors) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.canonical_ == b.canonical_;
  }

 private:
  Subspace(std::size_t ambient_dim, Matrix independent_basis);

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  Matrix canonical_;
};

Subspace kernel_basis(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// {v : gram(v, s) = 0}; gram must be symmetric positive definite.
Subspace orth_complement(const Subspace& s, const Matrix& gram);
/// map(s) for a linear map with map.cols() == s.ambient_dim().
Subspace image(const Matrix& map, const Subspace& s);

}  // namespace liecoh
