#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/matrix.hpp"
#include "liecoh/subspace.hpp"
#include "liecoh/validation.hpp"

namespace liecoh {

/// [e_i, e_j] has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Rational value;
};

/// A declared simple ideal occupying basis indices [offset, offset + dim).
struct FactorBlock {
  std::string name;
  std::size_t offset;
  std::size_t dim;

  bool contains(std::size_t index) const { return index >= offset && index < offset + dim; }
};

struct FactorSpec {
  std::string name;
  std::size_t dim;
};

/// A compact reductive Lie algebra with basis e_0..e_{n-1}: indices below
/// center_dim span the center, the remaining indices are partitioned into the
/// declared simple factors in order.
///
/// Only the i < j half of the structure constants is stored; the other half
/// follows by antisymmetry. Conflicting or diagonal input entries are kept as
/// construction issues and surface through validate().
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t center_dim, std::vector<FactorSpec> factors, const std::vector<StructureConstant>& constants);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t center_dim() const { return center_dim_; }
  const std::vector<FactorBlock>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  std::optional<std::size_t> factor_of(std::size_t index) const;

  /// Nonzero constants with i < j, sorted by (i, j, k).
  std::vector<StructureConstant> constants() const;
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return ad_[i](k, j); }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  const Matrix& ad(std::size_t i) const { return ad_.at(i); }
  Matrix ad(const Vector& x) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// [g, g], the span of the factor indices.
  Subspace derived() const { return Subspace::coordinate(dim_, center_dim_, dim_ - center_dim_); }
  Subspace center() const { return Subspace::coordinate(dim_, 0, center_dim_); }
  Subspace factor_subspace(std::size_t factor) const;

  const std::vector<ValidationIssue>& construction_issues() const { return issues_; }

 private:
  std::size_t dim_ = 0;
  std::size_t center_dim_ = 0;
  std::vector<FactorBlock> factors_;
  std::vector<Matrix> ad_;
  std::vector<ValidationIssue> issues_;
};

/// Killing form K(x, y) = trace(ad x ad y).
Matrix killing_gram(const LieAlgebra& alg);

/// Killing form of the given factor (0-based), extended by zero to all of g.
Matrix btilde(const LieAlgebra& alg, std::size_t factor);

/// -Killing on the factors plus the identity on center coordinates.
Matrix invariant_inner_product(const LieAlgebra& alg);

struct CenterAndDerived {
  Subspace center;
  Subspace derived;
};

bool is_bracket_closed(const LieAlgebra& alg, const Subspace& s);

/// z(s) and [s, s] for a bracket-closed s. Throws NotSubalgebra if s is not
/// closed and NotReductive if z(s) + [s, s] is not a direct sum equal to s.
CenterAndDerived center_and_derived(const LieAlgebra& alg, const Subspace& s);

/// Smallest subspace containing s that is stable under ad(e_i) for every i.
Subspace ideal_closure(const LieAlgebra& alg, const Subspace& s);

/// Checks every LieAlgebra invariant; never throws on invalid data.
ValidationReport validate(const LieAlgebra& alg);

struct DirectSum {
  LieAlgebra algebra;
  Matrix embed_first;   // n x n_first, basis permutation into the sum
  Matrix embed_second;  // n x n_second
};

/// Direct sum with the combined center first, then the factors of a, then
/// the factors of b.
DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecoh
