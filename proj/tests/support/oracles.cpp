#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace liecoh::reference {

namespace {

struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivots;
};

Echelon eliminate(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

class Subsets {
 public:
  Subsets(std::size_t n, std::size_t k) {
    std::vector<std::size_t> cur;
    build(n, k, 0, cur);
    for (std::size_t i = 0; i < list_.size(); ++i) pos_[list_[i]] = i;
  }
  std::size_t size() const { return list_.size(); }
  const std::vector<std::size_t>& at(std::size_t i) const { return list_[i]; }
  std::size_t index(const std::vector<std::size_t>& sorted) const { return pos_.at(sorted); }

 private:
  void build(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur) {
    if (cur.size() == k) {
      list_.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      build(n, k, i + 1, cur);
      cur.pop_back();
    }
  }
  std::vector<std::vector<std::size_t>> list_;
  std::map<std::vector<std::size_t>, std::size_t> pos_;
};

// Adds coef * e^{idx} (unsorted) to row r of out, columns indexed by sub.
void add_wedge(Matrix& out, std::size_t r, const Subsets& sub, std::vector<std::size_t> idx, const Rational& coef) {
  const int s = sort_sign(idx);
  if (s == 0) return;
  out(r, sub.index(idx)) += s > 0 ? coef : Rational(-coef);
}

// Matrices act on coefficient vectors indexed by k-subsets. A k-form ω is
// stored by its values ω(e_S).

// d: ∧^k -> ∧^{k+1}. Row S' of the result = (dω)(e_S').
Matrix differential(const LieAlgebra& alg, std::size_t k) {
  const std::size_t n = alg.dim();
  const Subsets src(n, k), dst(n, k + 1);
  Matrix d(dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r) {
    const auto& s = dst.at(r);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != i && t != j) rest.push_back(s[t]);
        const bool odd = (i + j) % 2 == 1;
        for (std::size_t m = 0; m < n; ++m) {
          const Rational& c = alg.constant(s[i], s[j], m);
          if (c == 0) continue;
          std::vector<std::size_t> idx{m};
          idx.insert(idx.end(), rest.begin(), rest.end());
          add_wedge(d, r, src, idx, odd ? Rational(-c) : c);
        }
      }
  }
  return d;
}

// i(x): ∧^k -> ∧^{k-1}.
Matrix interior(const Vector& x, std::size_t n, std::size_t k) {
  const Subsets src(n, k), dst(n, k - 1);
  Matrix out(dst.size(), src.size());
  for (std::size_t r = 0; r < dst.size(); ++r)
    for (std::size_t a = 0; a < n; ++a) {
      if (x[a] == 0) continue;
      std::vector<std::size_t> idx{a};
      idx.insert(idx.end(), dst.at(r).begin(), dst.at(r).end());
      add_wedge(out, r, src, idx, x[a]);
    }
  return out;
}

// L(x): ∧^k -> ∧^k, (L(x)ω)(v_1..v_k) = -Σ ω(.., [x, v_i], ..).
Matrix lie_derivative(const LieAlgebra& alg, const Vector& x, std::size_t k) {
  const std::size_t n = alg.dim();
  const Subsets sub(n, k);
  const Matrix adx = alg.ad(x);
  Matrix out(sub.size(), sub.size());
  for (std::size_t r = 0; r < sub.size(); ++r)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t m = 0; m < n; ++m) {
        const Rational& c = adx(m, sub.at(r)[i]);
        if (c == 0) continue;
        std::vector<std::size_t> idx = sub.at(r);
        idx[i] = m;
        add_wedge(out, r, sub, idx, Rational(-c));
      }
  return out;
}

Rational det(Matrix m) {
  Rational out = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      out = -out;
    }
    out *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return out;
}

// γ*: (γ*ω)(e_S) = Σ_T det(γ[T, S]) ω(e_T).
Matrix pullback(const Matrix& gamma, std::size_t k) {
  const Subsets sub(gamma.rows(), k);
  Matrix out(sub.size(), sub.size());
  for (std::size_t r = 0; r < sub.size(); ++r)
    for (std::size_t c = 0; c < sub.size(); ++c) {
      Matrix minor(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) minor(a, b) = gamma(sub.at(c)[a], sub.at(r)[b]);
      out(r, c) = k == 0 ? Rational(1) : det(minor);
    }
  return out;
}

}  // namespace

std::size_t naive_rank(const Matrix& m) { return eliminate(m).pivots.size(); }

Matrix naive_null_space(const Matrix& m) {
  const Echelon e = eliminate(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m(r, f);
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(cols, m.cols());
}

Matrix brute_killing(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) k(i, j) += alg.constant(i, a, b) * alg.constant(j, b, a);
  return k;
}

std::size_t jacobi_residual(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational s = 0;
          for (std::size_t p = 0; p < n; ++p) {
            s += alg.constant(j, k, p) * alg.constant(i, p, m);
            s += alg.constant(k, i, p) * alg.constant(j, p, m);
            s += alg.constant(i, j, p) * alg.constant(k, p, m);
          }
          if (s != 0) ++bad;
        }
  return bad;
}

std::size_t invariance_residual(const LieAlgebra& alg, const Matrix& form) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Matrix& a = alg.ad(i);
    const Matrix r = a.transpose() * form + form * a;
    for (std::size_t x = 0; x < r.rows(); ++x)
      for (std::size_t y = 0; y < r.cols(); ++y)
        if (r(x, y) != 0) ++bad;
  }
  return bad;
}

std::vector<std::size_t> brute_force_betti(const HomogeneousPair& pair, std::size_t max_degree) {
  const LieAlgebra& alg = pair.algebra;
  const std::size_t n = alg.dim();
  if (n > 10) throw std::invalid_argument("brute_force_betti: dim g too large");
  const std::size_t top = std::min(max_degree + 1, n);

  // basic[k]: columns spanning the basic k-forms.
  std::vector<Matrix> basic;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t dim = Subsets(n, k).size();
    Matrix constraints(0, dim);
    for (std::size_t c = 0; c < pair.dim_h(); ++c) {
      const Vector x = pair.h_basis.column(c);
      if (k > 0) constraints = vstack(constraints, interior(x, n, k));
      constraints = vstack(constraints, lie_derivative(alg, x, k));
    }
    for (const auto& g : pair.generators) constraints = vstack(constraints, pullback(g, k) - Matrix::identity(dim));
    basic.push_back(constraints.rows() == 0 ? Matrix::identity(dim) : naive_null_space(constraints));
  }

  std::vector<std::size_t> d_rank(top + 1, 0);
  for (std::size_t k = 0; k < top; ++k) {
    if (basic[k].cols() == 0) continue;
    d_rank[k] = naive_rank(differential(alg, k) * basic[k]);
  }
  std::vector<std::size_t> betti(max_degree + 1, 0);
  for (std::size_t k = 0; k <= std::min(max_degree, n); ++k) {
    const std::size_t below = k == 0 ? 0 : d_rank[k - 1];
    const std::size_t out = k < top ? d_rank[k] : 0;
    betti[k] = basic[k].cols() - out - below;
  }
  return betti;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly sphere_poincare(std::size_t n) {
  Poly p(n + 1, 0);
  p[0] = 1;
  p[n] += 1;
  return p;
}

Poly group_poincare(const std::vector<std::pair<std::string, std::size_t>>& factors) {
  Poly out{1};
  auto odd_sphere = [&](std::size_t d) { out = poly_mul(out, sphere_poincare(d)); };
  for (const auto& [type, n] : factors) {
    if (type == "torus") {
      for (std::size_t i = 0; i < n; ++i) odd_sphere(1);
    } else if (type == "su" || type == "u") {
      if (type == "u") odd_sphere(1);
      for (std::size_t d = 2; d <= n; ++d) odd_sphere(2 * d - 1);
    } else if (type == "sp") {
      for (std::size_t d = 1; d <= n; ++d) odd_sphere(4 * d - 1);
    } else if (type == "so") {
      const std::size_t rank = n / 2;
      for (std::size_t d = 1; d < (n % 2 == 1 ? rank + 1 : rank); ++d) odd_sphere(4 * d - 1);
      if (n % 2 == 0 && n >= 2) odd_sphere(n - 1);
    } else {
      throw std::invalid_argument("group_poincare: unknown type " + type);
    }
  }
  return out;
}

}  // namespace liecoh::reference
