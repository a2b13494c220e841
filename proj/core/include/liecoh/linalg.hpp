#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "liecoh/matrix.hpp"

namespace liecoh {

/// Row-sparse rational matrix; each row holds (column, value) pairs sorted by
/// column with no stored zeros.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
  explicit SparseMatrix(const Matrix& dense);
  /// Rows must be sorted by column and free of zeros.
  static SparseMatrix from_rows(std::vector<Row> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds value at (r, c), merging with any existing entry.
  void add(std::size_t r, std::size_t c, const Rational& value);
  void append_row(Row row);
  const Row& row(std::size_t r) const { return rows_[r]; }
  std::size_t nonzeros() const;

  Matrix to_dense() const;
  Matrix operator*(const Matrix& rhs) const;

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const Matrix& m);
/// Exact rank over Q by sparse Gauss-Jordan elimination.
std::size_t rank(const SparseMatrix& m);

/// Rank of the row-wise integer-cleared matrix reduced modulo p. Never exceeds
/// the rational rank.
std::size_t rank_mod_p(const Matrix& m, std::uint64_t p);
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, increasing
};

/// Reduced row echelon form. Rows beyond pivots.size() are zero.
Rref rref(const Matrix& m);
Rref rref(const SparseMatrix& m);

/// Nonzero rows of the reduced row echelon form, kept sparse.
struct SparseRref {
  SparseMatrix rows;
  std::vector<std::size_t> pivots;
};
SparseRref sparse_rref(const SparseMatrix& m);

/// Basis of {x : m x = 0}, one column per free variable of rref(m).
Matrix null_space(const Matrix& m);
Matrix null_space(const SparseMatrix& m);

/// Unique X with a X = b, where a has independent columns; nullopt if some
/// column of b is outside the column span of a.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws DimensionMismatch if singular.
Matrix inverse(const Matrix& m);

/// Exact symmetric positive definiteness test (LDL^T pivots all positive).
bool is_positive_definite(const Matrix& gram);

/// Independent columns of m chosen greedily left to right.
std::vector<std::size_t> independent_columns(const Matrix& m);

bool is_probable_prime(std::uint64_t n);
/// Uniformly chosen prime in (2^30, 2^31).
std::uint64_t random_prime(std::mt19937_64& rng);

/// Rank computation policy used by the cochain-complex oracles.
///
/// In modular mode a single prime above 2^30 is drawn from the seeded
/// generator at construction. In certified mode both ranks are computed; the
/// rational result wins and any discrepancy is counted and logged to stderr.
class RankEngine {
 public:
  enum class Mode { exact, modular, certified };

  explicit RankEngine(Mode mode = Mode::exact, std::uint64_t seed = 0x5eedULL);

  Mode mode() const { return mode_; }
  std::uint64_t prime() const { return prime_; }
  std::size_t rank(const Matrix& m) const;
  std::size_t rank(const SparseMatrix& m) const;
  std::size_t discrepancies() const { return discrepancies_->load(); }

 private:
  Mode mode_;
  std::uint64_t prime_;
  std::shared_ptr<std::atomic<std::size_t>> discrepancies_;
};

}  // namespace liecoh
