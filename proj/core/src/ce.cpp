#include "liecoh/ce.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "liecoh/error.hpp"
#include "liecoh/exterior.hpp"

namespace liecoh {

std::size_t default_size_cap() {
  if (const char* env = std::getenv("LIECOH_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSizeCap;
}

namespace {

using Row = SparseMatrix::Row;

// Dense scratch vector that remembers which slots were touched.
class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : values_(size), touched_flag_(size, false) {}

  void add(std::size_t index, const Rational& v) {
    if (!touched_flag_[index]) {
      touched_flag_[index] = true;
      touched_.push_back(index);
    }
    values_[index] += v;
  }

  Row take() {
    std::sort(touched_.begin(), touched_.end());
    Row out;
    for (std::size_t i : touched_) {
      if (sgn(values_[i]) != 0) out.emplace_back(i, values_[i]);
      values_[i] = 0;
      touched_flag_[i] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<Rational> values_;
  std::vector<bool> touched_flag_;
  std::vector<std::size_t> touched_;
};

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix out(m.cols(), m.rows());
  std::vector<Row> rows(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) rows[c].emplace_back(r, v);
  return SparseMatrix::from_rows(std::move(rows), m.rows());
}

// Rows of coeffs^T * basis: new row j = Σ_i coeffs(i, j) basis_i.
SparseMatrix combine(const SparseMatrix& basis, const Matrix& coeffs, Accumulator& acc) {
  SparseMatrix out(0, basis.cols());
  for (std::size_t j = 0; j < coeffs.cols(); ++j) {
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
      const Rational& c = coeffs(i, j);
      if (sgn(c) == 0) continue;
      for (const auto& [col, v] : basis.row(i)) acc.add(col, c * v);
    }
    out.append_row(acc.take());
  }
  return out;
}

SparseMatrix identity_rows(std::size_t n) {
  SparseMatrix out(0, n);
  for (std::size_t i = 0; i < n; ++i) out.append_row({{i, Rational(1)}});
  return out;
}

Rational determinant(Matrix a) {
  const std::size_t k = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && sgn(a(piv, c)) == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < k; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < k; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

class Builder {
 public:
  explicit Builder(const HomogeneousPair& pair) {
    const std::size_t n = pair.dim_g();
    m_ = pair.dim_h();
    q_ = n - m_;

    Matrix candidates = hstack(pair.h_basis, Matrix::identity(n));
    const auto cols = independent_columns(candidates);
    q_basis_ = candidates.select_columns(cols);
    p_ = inverse(q_basis_);

    for (std::size_t j = 0; j < m_; ++j) {
      const Matrix full = p_ * pair.algebra.ad(pair.h_basis.column(j)) * q_basis_;
      theta_.push_back(full.block(m_, m_, q_, q_));
    }
    for (const auto& g : pair.generators) pullbacks_.push_back((p_ * g * q_basis_).block(m_, m_, q_, q_));

    // dε^u = -Σ_{a<b} ε^u([q_a, q_b]) ε^a ∧ ε^b, horizontal part only.
    d1_.resize(q_);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = a + 1; b < q_; ++b) {
        const Vector br = p_.apply(pair.algebra.bracket(q_basis_.column(m_ + a), q_basis_.column(m_ + b)));
        const std::uint32_t ab = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
        for (std::size_t u = 0; u < q_; ++u)
          if (sgn(br[m_ + u]) != 0) d1_[u].emplace_back(ab, -br[m_ + u]);
      }
  }

  std::size_t horizontal_dim() const { return q_; }

  Subspace annihilator() const { return Subspace::span(p_.block(m_, 0, q_, p_.cols()).transpose()); }

  SparseMatrix invariant_forms(std::size_t k) {
    const WedgeBasis wb(q_, k);
    Accumulator acc(wb.size());
    SparseMatrix v = identity_rows(wb.size());
    for (const auto& theta : theta_) {
      if (v.rows() == 0) break;
      SparseMatrix images(0, wb.size());
      for (std::size_t i = 0; i < v.rows(); ++i) {
        for (const auto& [idx, c] : v.row(i)) apply_theta(theta, wb, wb.mask(idx), c, acc);
        images.append_row(acc.take());
      }
      v = combine(v, null_space(transpose(images)), acc);
    }
    for (const auto& g : pullbacks_) {
      if (v.rows() == 0) break;
      const SparseRref red = sparse_rref(v);
      const SparseMatrix& basis = red.rows;
      const std::size_t d = basis.rows();
      Matrix action(d, d);  // column j: γ* of basis row j at the pivot monomials
      std::unordered_map<std::uint64_t, Rational> minors;
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [idx, c] : basis.row(j))
          for (std::size_t i = 0; i < d; ++i) {
            const std::uint32_t s = wb.mask(idx), t = wb.mask(red.pivots[i]);
            const std::uint64_t key = (std::uint64_t{s} << 32) | t;
            auto it = minors.find(key);
            if (it == minors.end()) it = minors.emplace(key, minor(g, s, t)).first;
            if (sgn(it->second) != 0) action(i, j) += c * it->second;
          }
      v = combine(basis, null_space(action - Matrix::identity(d)), acc);
    }
    return sparse_rref(v).rows;
  }

  SparseMatrix delta(const SparseMatrix& forms, std::size_t k) const {
    const WedgeBasis from(q_, k), to(q_, k + 1);
    Accumulator acc(to.size());
    SparseMatrix out(0, to.size());
    for (std::size_t i = 0; i < forms.rows(); ++i) {
      for (const auto& [idx, c] : forms.row(i)) {
        const std::uint32_t mask = from.mask(idx);
        std::size_t position = 0;
        for (std::uint32_t rest_bits = mask; rest_bits; rest_bits &= rest_bits - 1, ++position) {
          const std::size_t u = static_cast<std::size_t>(std::countr_zero(rest_bits));
          const std::uint32_t rest = mask & ~(std::uint32_t{1} << u);
          for (const auto& [ab, coeff] : d1_[u]) {
            if (ab & rest) continue;
            const std::size_t a = static_cast<std::size_t>(std::countr_zero(ab));
            const std::size_t b = static_cast<std::size_t>(31 - std::countl_zero(ab));
            int sign = (position % 2) ? -1 : 1;
            sign *= insertion_sign(rest, b) * insertion_sign(rest | (std::uint32_t{1} << b), a);
            acc.add(to.index(rest | ab), sign * coeff * c);
          }
        }
      }
      out.append_row(acc.take());
    }
    return out;
  }

 private:
  void apply_theta(const Matrix& theta, const WedgeBasis& wb, std::uint32_t mask, const Rational& c,
                   Accumulator& acc) const {
    std::size_t pos_i = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1, ++pos_i) {
      const std::size_t s = static_cast<std::size_t>(std::countr_zero(bits));
      const std::uint32_t rest = mask & ~(std::uint32_t{1} << s);
      for (std::size_t t = 0; t < q_; ++t) {
        const Rational& x = theta(s, t);
        if (sgn(x) == 0) continue;
        if (t == s) {
          acc.add(wb.index(mask), -x * c);
          continue;
        }
        if (rest & (std::uint32_t{1} << t)) continue;
        const std::size_t pos_t = static_cast<std::size_t>(std::popcount(rest & ((std::uint32_t{1} << t) - 1)));
        const int sign = ((pos_i + pos_t) % 2) ? -1 : 1;
        acc.add(wb.index(rest | (std::uint32_t{1} << t)), sign * -x * c);
      }
    }
  }

  static Rational minor(const Matrix& g, std::uint32_t rows, std::uint32_t cols) {
    const auto r = elements(rows), c = elements(cols);
    Matrix sub(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) sub(i, j) = g(r[i], c[j]);
    return determinant(std::move(sub));
  }

  std::size_t m_ = 0;
  std::size_t q_ = 0;
  Matrix q_basis_;
  Matrix p_;
  std::vector<Matrix> theta_;
  std::vector<Matrix> pullbacks_;
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> d1_;
};

void check_size(const HomogeneousPair& pair, const CeOptions& options) {
  const std::size_t q = pair.dim_g() - pair.dim_h();
  if (q > options.size_cap)
    throw SizeCapExceeded("relative complex has horizontal dimension " + std::to_string(q) + " above the size cap " +
                          std::to_string(options.size_cap));
}

}  // namespace

RelativeComplex relative_complex(const HomogeneousPair& pair, std::size_t max_degree, const CeOptions& options) {
  check_size(pair, options);
  require_valid(pair);
  Builder builder(pair);
  const std::size_t q = builder.horizontal_dim();
  const std::size_t top = std::min(max_degree, q);
  const std::size_t last = std::min(top + 1, q);

  RelativeComplex out;
  out.horizontal_annihilator = builder.annihilator();
  out.horizontal_dim = q;
  for (std::size_t k = 0; k <= last; ++k) out.cochain_bases.push_back(builder.invariant_forms(k));
  for (std::size_t k = 0; k <= top; ++k) {
    out.deltas.push_back(builder.delta(out.cochain_bases[k], k));
    out.delta_ranks.push_back(options.engine.rank(out.deltas[k]));
  }

  for (std::size_t k = 0; k <= top; ++k) {
    if (k + 1 > last) break;
    const SparseMatrix& next = out.cochain_bases[k + 1];
    SparseMatrix stacked = next;
    for (std::size_t i = 0; i < out.deltas[k].rows(); ++i) stacked.append_row(out.deltas[k].row(i));
    if (options.engine.rank(stacked) > next.rows())
      throw InternalError("invariance projection inconsistent: δ leaves the invariant subcomplex in degree " +
                          std::to_string(k));
    if (k + 1 < q) {
      const SparseMatrix dd = builder.delta(out.deltas[k], k + 1);
      for (std::size_t i = 0; i < dd.rows(); ++i)
        if (!dd.row(i).empty()) throw InternalError("invariance projection inconsistent: δ∘δ != 0");
    }
  }
  return out;
}

BettiReport betti_ce(const HomogeneousPair& pair, const CeOptions& options) {
  check_size(pair, options);
  const std::size_t q = pair.dim_g() - pair.dim_h();
  const std::size_t requested = options.max_degree.value_or(std::max<std::size_t>(q, 4));
  const RelativeComplex cx = relative_complex(pair, requested, options);

  BettiReport report;
  report.method = Method::ce;
  report.pair_name = pair.name;
  report.dim_g = pair.dim_g();
  report.dim_h = pair.dim_h();
  report.generator_count = pair.generators.size();
  if (options.engine.mode() != RankEngine::Mode::exact) report.prime = options.engine.prime();
  report.certified = options.engine.mode() != RankEngine::Mode::modular;

  for (std::size_t k = 0; k <= requested; ++k) {
    if (k > q) {
      report.betti.push_back(0);
      continue;
    }
    const std::size_t in = k == 0 ? 0 : cx.delta_ranks[k - 1];
    report.betti.push_back(cx.dim(k) - cx.delta_ranks[k] - in);
    report.slices.push_back({k, {{"invariant horizontal forms", cx.dim(k)}}, cx.dim(k), cx.delta_ranks[k]});
  }
  return report;
}

bool poincare_check(const BettiReport& report, std::size_t dim_quotient) {
  if (report.betti.size() < dim_quotient + 1) return false;
  for (std::size_t k = 0; k <= dim_quotient; ++k)
    if (report.betti[k] != report.betti[dim_quotient - k]) return false;
  return true;
}

}  // namespace liecoh
