#include "liecoh/linalg.hpp"

#include <algorithm>
#include <iostream>
#include <limits>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

using Row = SparseMatrix::Row;
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

const Rational* find_entry(const Row& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target <- target - factor * source
void subtract_scaled(Row& target, const Rational& factor, const Row& source) {
  Row out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->first < s->first)) {
      out.push_back(std::move(*t));
      ++t;
    } else if (t == target.end() || s->first < t->first) {
      out.emplace_back(s->first, -factor * s->second);
      ++s;
    } else {
      Rational v = t->second - factor * s->second;
      if (sgn(v) != 0) out.emplace_back(t->first, std::move(v));
      ++t;
      ++s;
    }
  }
  target = std::move(out);
}

struct Reduction {
  std::vector<Row> pivot_rows;  // normalized, Gauss-Jordan reduced, ordered by pivot
  std::vector<std::size_t> pivots;
};

Reduction reduce(std::vector<Row> rows, std::size_t ncols) {
  std::vector<bool> used(rows.size(), false);
  std::vector<std::size_t> order;
  Reduction red;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t best = npos;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty() || rows[i].front().first > c) continue;
      if (find_entry(rows[i], c) && (best == npos || rows[i].size() < rows[best].size())) best = i;
    }
    if (best == npos) continue;
    const Rational inv = 1 / *find_entry(rows[best], c);
    for (auto& e : rows[best]) e.second *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best) continue;
      if (const Rational* v = find_entry(rows[i], c)) {
        const Rational factor = *v;
        subtract_scaled(rows[i], factor, rows[best]);
      }
    }
    used[best] = true;
    order.push_back(best);
    red.pivots.push_back(c);
  }
  red.pivot_rows.reserve(order.size());
  for (std::size_t i : order) red.pivot_rows.push_back(std::move(rows[i]));
  return red;
}

std::vector<Row> dense_rows(const Matrix& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) rows[r].emplace_back(c, m(r, c));
  return rows;
}

std::vector<Row> sparse_rows(const SparseMatrix& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

Rref to_rref(const Reduction& red, std::size_t nrows, std::size_t ncols) {
  Rref out{Matrix(nrows, ncols), red.pivots};
  for (std::size_t i = 0; i < red.pivot_rows.size(); ++i)
    for (const auto& [c, v] : red.pivot_rows[i]) out.reduced(i, c) = v;
  return out;
}

Matrix kernel_from(const Reduction& red, std::size_t ncols) {
  std::vector<std::size_t> free_index(ncols, npos);
  std::size_t nfree = 0;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (p < red.pivots.size() && red.pivots[p] == c) {
        ++p;
      } else {
        free_index[c] = nfree++;
      }
    }
  }
  Matrix k(ncols, nfree);
  for (std::size_t c = 0; c < ncols; ++c)
    if (free_index[c] != npos) k(c, free_index[c]) = 1;
  for (std::size_t i = 0; i < red.pivot_rows.size(); ++i) {
    for (const auto& [c, v] : red.pivot_rows[i]) {
      if (c != red.pivots[i]) k(red.pivots[i], free_index[c]) = -v;
    }
  }
  return k;
}

// Scales each row by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const Matrix& m) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      Integer q = l / m(r, c).get_den();
      a[r][c] = m(r, c).get_num() * q;
    }
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

SparseMatrix::SparseMatrix(const Matrix& dense) : cols_(dense.cols()), rows_(dense_rows(dense)) {}

SparseMatrix SparseMatrix::from_rows(std::vector<Row> rows, std::size_t cols) {
  SparseMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void SparseMatrix::append_row(Row row) {
  if (!row.empty() && row.back().first >= cols_) throw DimensionMismatch("sparse row entry out of range");
  rows_.push_back(std::move(row));
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_.size() || c >= cols_) throw DimensionMismatch("sparse entry out of range");
  if (sgn(value) == 0) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (sgn(it->second) == 0) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) m(r, c) = v;
  return m;
}

Matrix SparseMatrix::operator*(const Matrix& rhs) const {
  if (rhs.rows() != cols_) throw DimensionMismatch("sparse product shape mismatch");
  Matrix out(rows_.size(), rhs.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [k, a] : rows_[r]) {
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (sgn(rhs(k, j)) != 0) out(r, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = npos;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(a[i][col]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv == npos) continue;
    std::swap(a[piv], a[r]);
    const Integer& p = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        tmp = p * a[i][j];
        if (sgn(f) != 0) tmp -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t rank_mod_p(const Matrix& m, std::uint64_t p) {
  const auto ints = integer_rows(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(ints[r][c].get_mpz_t(), p);

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = npos;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv == npos) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = pow_mod(a[r][col], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][col], inv, p);
      for (std::size_t j = col; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        a[i][j] = (a[i][j] + p - mul_mod(f, a[r][j], p)) % p;
      }
    }
    ++r;
  }
  return r;
}

Rref rref(const Matrix& m) { return to_rref(reduce(dense_rows(m), m.cols()), m.rows(), m.cols()); }

std::size_t rank(const SparseMatrix& m) { return reduce(sparse_rows(m), m.cols()).pivots.size(); }

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;
  // Pivot rows keyed by leading column, each normalized to leading entry 1.
  std::vector<ModRow> pivot_of(m.cols());
  std::vector<bool> has_pivot(m.cols(), false);
  std::size_t rank = 0;
  Integer l, q;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Row& src = m.row(r);
    l = 1;
    for (const auto& [c, v] : src)
      if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    ModRow row;
    for (const auto& [c, v] : src) {
      q = l / v.get_den();
      q *= v.get_num();
      const std::uint64_t x = mpz_fdiv_ui(q.get_mpz_t(), p);
      if (x) row.emplace_back(c, x);
    }
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      if (!has_pivot[lead]) {
        const std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
        for (auto& e : row) e.second = mul_mod(e.second, inv, p);
        pivot_of[lead] = std::move(row);
        has_pivot[lead] = true;
        ++rank;
        break;
      }
      const std::uint64_t f = row.front().second;
      const ModRow& piv = pivot_of[lead];
      ModRow out;
      out.reserve(row.size() + piv.size());
      auto a = row.begin();
      auto b = piv.begin();
      while (a != row.end() || b != piv.end()) {
        if (b == piv.end() || (a != row.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          out.emplace_back(b->first, (p - mul_mod(f, b->second, p)) % p);
          ++b;
        } else {
          const std::uint64_t x = (a->second + p - mul_mod(f, b->second, p)) % p;
          if (x) out.emplace_back(a->first, x);
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
  }
  return rank;
}

SparseRref sparse_rref(const SparseMatrix& m) {
  Reduction red = reduce(sparse_rows(m), m.cols());
  return {SparseMatrix::from_rows(std::move(red.pivot_rows), m.cols()), std::move(red.pivots)};
}

Rref rref(const SparseMatrix& m) { return to_rref(reduce(sparse_rows(m), m.cols()), m.rows(), m.cols()); }

Matrix null_space(const Matrix& m) { return kernel_from(reduce(dense_rows(m), m.cols()), m.cols()); }

Matrix null_space(const SparseMatrix& m) { return kernel_from(reduce(sparse_rows(m), m.cols()), m.cols()); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
  const std::size_t k = a.cols();
  const Reduction red = reduce(dense_rows(hstack(a, b)), k + b.cols());
  std::size_t in_a = 0;
  for (std::size_t p : red.pivots) {
    if (p >= k) return std::nullopt;
    ++in_a;
  }
  if (in_a != k) throw DimensionMismatch("solve: coefficient columns are dependent");
  Matrix x(k, b.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& [c, v] : red.pivot_rows[i])
      if (c >= k) x(i, c - k) = v;
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  if (rank(m) != m.rows()) throw DimensionMismatch("inverse of singular matrix");
  return *solve(m, Matrix::identity(m.rows()));
}

bool is_positive_definite(const Matrix& gram) {
  if (!gram.is_symmetric()) return false;
  Matrix a = gram;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return reduce(dense_rows(m), m.cols()).pivots; }

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist((1ULL << 30) + 1, (1ULL << 31) - 1);
  for (;;) {
    const std::uint64_t candidate = dist(rng) | 1ULL;
    if (is_probable_prime(candidate)) return candidate;
  }
}

RankEngine::RankEngine(Mode mode, std::uint64_t seed)
    : mode_(mode), prime_(0), discrepancies_(std::make_shared<std::atomic<std::size_t>>(0)) {
  std::mt19937_64 rng(seed);
  prime_ = random_prime(rng);
}

namespace {

template <typename M>
std::size_t engine_rank(RankEngine::Mode mode, std::uint64_t prime, std::atomic<std::size_t>& discrepancies,
                        const M& m) {
  switch (mode) {
    case RankEngine::Mode::exact:
      return rank(m);
    case RankEngine::Mode::modular:
      return rank_mod_p(m, prime);
    case RankEngine::Mode::certified: {
      const std::size_t exact = rank(m);
      const std::size_t modular = rank_mod_p(m, prime);
      if (exact != modular) {
        discrepancies.fetch_add(1);
        std::clog << "liecoh: rank mod " << prime << " = " << modular << " differs from rational rank " << exact
                  << " on a " << m.rows() << "x" << m.cols() << " matrix; using rational rank\n";
      }
      return exact;
    }
  }
  return rank(m);
}

}  // namespace

std::size_t RankEngine::rank(const Matrix& m) const { return engine_rank(mode_, prime_, *discrepancies_, m); }

std::size_t RankEngine::rank(const SparseMatrix& m) const { return engine_rank(mode_, prime_, *discrepancies_, m); }

}  // namespace liecoh
