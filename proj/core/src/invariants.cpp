#include "liecoh/invariants.hpp"

#include <numeric>
#include <set>

#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

// Upper-triangle indexing of symmetric d x d matrices.
struct SymIndex {
  std::size_t d;
  std::size_t count() const { return d * (d + 1) / 2; }
  std::size_t operator()(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  }
};

std::vector<std::pair<std::size_t, std::size_t>> sym_pairs(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) out.emplace_back(a, b);
  return out;
}

Vector flatten_sym(const Matrix& f) {
  Vector v;
  for (std::size_t a = 0; a < f.rows(); ++a)
    for (std::size_t b = a; b < f.cols(); ++b) v.push_back(f(a, b));
  return v;
}

Matrix unflatten_sym(const Vector& v, std::size_t d) {
  Matrix f(d, d);
  std::size_t k = 0;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b, ++k) f(a, b) = f(b, a) = v[k];
  return f;
}

std::vector<Matrix> h_actions_on(const HomogeneousPair& pair, const Subspace& carrier) {
  std::vector<Matrix> out;
  const Matrix& hb = pair.h_basis;
  for (std::size_t c = 0; c < hb.cols(); ++c) out.push_back(restrict_to(pair.algebra.ad(hb.column(c)), carrier));
  return out;
}

std::vector<Matrix> generator_actions_on(const HomogeneousPair& pair, const Subspace& carrier) {
  std::vector<Matrix> out;
  for (const auto& g : pair.generators) out.push_back(restrict_to(g, carrier));
  return out;
}

// Monic minimal polynomial coefficients c_0..c_{k-1}, c_k = 1.
Vector minimal_polynomial(const Matrix& t) {
  const std::size_t d = t.rows();
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    Vector flat;
    flat.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) flat.push_back(p(i, j));
    if (!powers.empty()) {
      auto x = solve(Matrix::from_columns(powers, d * d), Matrix::column_vector(flat));
      if (x) {
        Vector c(k + 1);
        for (std::size_t i = 0; i < k; ++i) c[i] = -(*x)(i, 0);
        c[k] = 1;
        return c;
      }
    }
    powers.push_back(std::move(flat));
    p = p * t;
  }
  throw InternalError("minimal polynomial degree exceeds matrix size");
}

std::vector<Integer> divisors(Integer n) {
  static const Integer limit("1000000000000");
  if (n < 0) n = -n;
  if (n > limit) throw SplittingFailed("splitting failed: polynomial coefficients too large for rational root search");
  std::vector<Integer> out;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  return out;
}

Rational evaluate(const Vector& poly, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

std::vector<Rational> distinct_rational_roots(Vector poly) {
  std::vector<Rational> roots;
  if (poly.size() > 1 && poly[0] == 0) {
    roots.push_back(0);
    poly.erase(poly.begin());
  }
  if (poly.size() <= 1) return roots;
  Integer den = 1;
  for (const auto& c : poly) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> ints;
  for (const auto& c : poly) ints.push_back(Integer(c * den));
  std::set<Rational> found;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational x(sign * p, q);
        x.canonicalize();
        if (evaluate(poly, x) == 0) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Matrix restrict_to(const Matrix& map, const Subspace& space) {
  if (map.rows() != space.ambient_dim() || map.cols() != space.ambient_dim())
    throw DimensionMismatch("restrict_to: map size differs from ambient dimension");
  return space.coordinates(map * space.basis());
}

Subspace fixed_vectors(const Subspace& space, const std::vector<Matrix>& actions) {
  if (actions.empty() || space.is_zero()) return space;
  const std::size_t d = space.dim();
  Matrix system(0, d);
  for (const auto& a : actions) system = vstack(system, restrict_to(a, space) - Matrix::identity(d));
  return Subspace::span(space.basis() * null_space(system));
}

Matrix invariant_linear_forms(const HomogeneousPair& pair, const Subspace& carrier) {
  const std::size_t d = carrier.dim();
  Matrix system(0, d);
  for (const auto& a : h_actions_on(pair, carrier)) system = vstack(system, a.transpose());
  for (const auto& g : generator_actions_on(pair, carrier)) system = vstack(system, g.transpose() - Matrix::identity(d));
  if (d == 0) return Matrix(0, 0);
  return null_space(system);
}

InvariantFormSpace invariant_sym_forms(const HomogeneousPair& pair, const Subspace& carrier) {
  InvariantFormSpace out{carrier, {}, {}, 0, 0, 0};
  const std::size_t d = carrier.dim();
  if (d == 0) return out;
  const SymIndex idx{d};
  const auto vars = sym_pairs(d);
  const auto h_actions = h_actions_on(pair, carrier);
  const auto g_actions = generator_actions_on(pair, carrier);

  SparseMatrix system((h_actions.size() + g_actions.size()) * idx.count(), idx.count());
  std::size_t offset = 0;
  // A^T S + S A = 0 for each a in h.
  for (const auto& a : h_actions) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto [p, q] = vars[v];
      auto term = [&](std::size_t i, std::size_t j, const Rational& x) {
        if (i <= j && x != 0) system.add(offset + idx(i, j), v, x);
      };
      for (std::size_t i = 0; i < d; ++i) {
        term(i, q, a(p, i));
        term(p, i, a(q, i));
        if (p != q) {
          term(i, p, a(q, i));
          term(q, i, a(p, i));
        }
      }
    }
    offset += idx.count();
  }
  // A^T S A - S = 0 for each generator.
  for (const auto& a : g_actions) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto [p, q] = vars[v];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          Rational x = a(p, i) * a(q, j);
          if (p != q) x += a(q, i) * a(p, j);
          if (i == p && j == q) x -= 1;
          if (x != 0) system.add(offset + idx(i, j), v, x);
        }
    }
    offset += idx.count();
  }

  const Matrix kernel = null_space(system);
  for (std::size_t c = 0; c < kernel.cols(); ++c) out.form_basis.push_back(unflatten_sym(kernel.column(c), d));
  return out;
}

InvariantFormSpace psi_analysis(const HomogeneousPair& pair) {
  const LieAlgebra& alg = pair.algebra;
  const Subspace carrier = intersect(pair.subalgebra(), alg.derived());
  InvariantFormSpace out = invariant_sym_forms(pair, carrier);
  const std::size_t r = alg.factor_count();
  const std::size_t k = out.dim();
  out.psi_matrix = Matrix(k, r);

  std::vector<Vector> flat_forms;
  for (const auto& f : out.form_basis) flat_forms.push_back(flatten_sym(f));
  const std::size_t nvar = carrier.dim() * (carrier.dim() + 1) / 2;
  const Matrix forms = Matrix::from_columns(flat_forms, nvar);
  const Matrix& v = carrier.basis();
  for (std::size_t i = 0; i < r; ++i) {
    const Vector restricted = flatten_sym(v.transpose() * btilde(alg, i) * v);
    if (k == 0) {
      if (!is_zero(restricted)) throw InternalError("restricted factor Killing form is not invariant");
      continue;
    }
    auto coords = solve(forms, Matrix::column_vector(restricted));
    if (!coords) throw InternalError("restricted factor Killing form is not invariant");
    for (std::size_t j = 0; j < k; ++j) out.psi_matrix(j, i) = (*coords)(j, 0);
  }
  out.rank_psi = rank(out.psi_matrix);
  out.dim_N = r - out.rank_psi;
  out.dim_C = k - out.rank_psi;
  return out;
}

Matrix sym_product(const Vector& alpha, const Vector& beta) {
  if (alpha.size() != beta.size()) throw DimensionMismatch("sym_product: length mismatch");
  const std::size_t d = alpha.size();
  Matrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = alpha[i] * beta[j] + beta[i] * alpha[j];
  return out;
}

std::vector<Subspace> simple_ideals(const LieAlgebra& alg, const Subspace& s) {
  const std::size_t d = s.dim();
  if (d == 0) return {};
  const Matrix& sb = s.basis();
  std::vector<Matrix> ads;
  for (std::size_t c = 0; c < d; ++c) ads.push_back(restrict_to(alg.ad(sb.column(c)), s));

  Matrix killing(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix prod = ads[i] * ads[j];
      for (std::size_t t = 0; t < d; ++t) killing(i, j) += prod(t, t);
    }
  if (rank(killing) != d) throw NotReductive("minimal_ideal_count: subalgebra is not semisimple");

  // Commutant {T : T A = A T for every ad}; unknown T(i, k) is variable i*d + k.
  SparseMatrix system(ads.size() * d * d, d * d);
  std::size_t offset = 0;
  for (const auto& a : ads) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          if (a(k, j) != 0) system.add(offset + i * d + j, i * d + k, a(k, j));
          if (a(i, k) != 0) system.add(offset + i * d + j, k * d + j, -a(i, k));
        }
    offset += d * d;
  }
  const Matrix commutant = null_space(system);

  std::vector<Subspace> pieces{Subspace::full(d)};
  for (std::size_t c = 0; c < commutant.cols(); ++c) {
    Matrix t(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) t(i, k) = commutant(i * d + k, c);
    std::vector<Subspace> next;
    for (const auto& w : pieces) {
      const Matrix tw = restrict_to(t, w);
      const Vector poly = minimal_polynomial(tw);
      if (poly.size() == 2) {
        next.push_back(w);
        continue;
      }
      const auto roots = distinct_rational_roots(poly);
      if (roots.size() != poly.size() - 1)
        throw SplittingFailed("splitting failed: commutant minimal polynomial does not split into distinct rational factors");
      std::size_t total = 0;
      for (const auto& lambda : roots) {
        const Matrix eig = null_space(tw - lambda * Matrix::identity(w.dim()));
        total += eig.cols();
        next.push_back(Subspace::span(w.basis() * eig));
      }
      if (total != w.dim()) throw SplittingFailed("splitting failed: eigenspaces do not fill the subspace");
    }
    pieces = std::move(next);
  }

  std::vector<Subspace> ideals;
  for (const auto& w : pieces) ideals.push_back(Subspace::span(sb * w.basis()));
  return ideals;
}

std::size_t minimal_ideal_count(const HomogeneousPair& pair, const Subspace& s) {
  for (const auto& g : pair.generators)
    if (!(image(g, s) == s)) throw NotInvariant("minimal_ideal_count: generator does not preserve the subalgebra");
  const auto ideals = simple_ideals(pair.algebra, s);
  std::vector<std::size_t> parent(ideals.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : pair.generators) {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const Subspace img = image(g, ideals[i]);
      std::size_t j = 0;
      while (j < ideals.size() && !(ideals[j] == img)) ++j;
      if (j == ideals.size()) throw InternalError("generator does not permute the simple ideals");
      parent[find_root(parent, i)] = find_root(parent, j);
    }
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < ideals.size(); ++i) orbits += find_root(parent, i) == i;
  return orbits;
}

}  // namespace liecoh
