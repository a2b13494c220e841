#include "liecoh/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

const Complex kOne{1, 0};
const Complex kI{0, 1};

ComplexMatrix so_generator(std::size_t n, std::size_t j, std::size_t k) {
  return ComplexMatrix::unit(n, j, k) - ComplexMatrix::unit(n, k, j);
}

// i(E_jj - E_{j+1,j+1}), then E_jk - E_kj and i(E_jk + E_kj) for j < k.
std::vector<ComplexMatrix> su_basis(std::size_t n) {
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j + 1 < n; ++j)
    out.push_back(ComplexMatrix::unit(n, j, j, kI) - ComplexMatrix::unit(n, j + 1, j + 1, kI));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(so_generator(n, j, k));
      out.push_back(ComplexMatrix::unit(n, j, k, kI) + ComplexMatrix::unit(n, k, j, kI));
    }
  return out;
}

std::vector<ComplexMatrix> so_basis(std::size_t n) {
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) out.push_back(so_generator(n, j, k));
  return out;
}

// [[A, -conj(B)], [B, conj(A)]] with A in u(n) and B complex symmetric.
std::vector<ComplexMatrix> sp_basis(std::size_t n) {
  const std::size_t size = 2 * n;
  auto block = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix x(size);
    const ComplexMatrix ac = a.conj(), bc = b.conj();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        x(i, j) = a(i, j);
        x(i, n + j) = Complex{} - bc(i, j);
        x(n + i, j) = b(i, j);
        x(n + i, n + j) = ac(i, j);
      }
    return x;
  };
  const ComplexMatrix zero(n);
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(block(ComplexMatrix::unit(n, j, j, kI), zero));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(block(so_generator(n, j, k), zero));
      out.push_back(block(ComplexMatrix::unit(n, j, k, kI) + ComplexMatrix::unit(n, k, j, kI), zero));
    }
  for (std::size_t j = 0; j < n; ++j) {
    out.push_back(block(zero, ComplexMatrix::unit(n, j, j, kOne)));
    out.push_back(block(zero, ComplexMatrix::unit(n, j, j, kI)));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      out.push_back(block(zero, ComplexMatrix::unit(n, j, k, kOne) + ComplexMatrix::unit(n, k, j, kOne)));
      out.push_back(block(zero, ComplexMatrix::unit(n, j, k, kI) + ComplexMatrix::unit(n, k, j, kI)));
    }
  return out;
}

std::string name_with(const std::string& type, std::size_t n) { return type + "(" + std::to_string(n) + ")"; }

[[noreturn]] void out_of_range(const std::string& what) { throw ParseError("catalog parameter out of range: " + what); }

}  // namespace

MatrixRealization catalog_realization(const std::string& type, std::size_t n) {
  MatrixRealization real;
  if (type == "su") {
    if (n < 2) out_of_range("su:n needs n >= 2");
    real.matrix_size = n;
    real.factors.push_back({name_with("su", n), su_basis(n)});
  } else if (type == "u") {
    if (n < 1) out_of_range("u:n needs n >= 1");
    real.matrix_size = n;
    ComplexMatrix center(n);
    for (std::size_t i = 0; i < n; ++i) center(i, i) = kI;
    real.center.push_back(center);
    if (n >= 2) real.factors.push_back({name_with("su", n), su_basis(n)});
  } else if (type == "so") {
    if (n < 2) out_of_range("so:n needs n >= 2");
    real.matrix_size = n;
    if (n == 2) {
      real.center.push_back(so_generator(2, 0, 1));
    } else if (n == 4) {
      // Self-dual and anti-self-dual 2-forms.
      auto m = [](std::size_t j, std::size_t k) { return so_generator(4, j, k); };
      real.factors.push_back({"so(4)+", {m(0, 1) + m(2, 3), m(0, 2) - m(1, 3), m(0, 3) + m(1, 2)}});
      real.factors.push_back({"so(4)-", {m(0, 1) - m(2, 3), m(0, 2) + m(1, 3), m(0, 3) - m(1, 2)}});
    } else {
      real.factors.push_back({name_with("so", n), so_basis(n)});
    }
  } else if (type == "sp") {
    if (n < 1) out_of_range("sp:n needs n >= 1");
    real.matrix_size = 2 * n;
    real.factors.push_back({name_with("sp", n), sp_basis(n)});
  } else if (type == "torus") {
    if (n < 1) out_of_range("torus:l needs l >= 1");
    real.matrix_size = n;
    for (std::size_t i = 0; i < n; ++i) real.center.push_back(ComplexMatrix::unit(n, i, i, kI));
  } else {
    throw UnknownCatalogEntry("unknown algebra type '" + type + "' (expected su, so, sp, u or torus)");
  }
  return real;
}

LieAlgebra catalog_algebra(const std::string& type, std::size_t n) { return to_algebra(catalog_realization(type, n)); }

namespace {

HomogeneousPair realized_pair(const MatrixRealization& real, const std::vector<ComplexMatrix>& h,
                              const std::vector<ComplexMatrix>& component_reps, std::string name) {
  HomogeneousPair p;
  p.algebra = to_algebra(real);
  p.h_basis = coordinates(real, h);
  for (const auto& u : component_reps) p.generators.push_back(adjoint_action(real, u));
  p.name = std::move(name);
  return p;
}

// so(n) / so(n - k), the subgroup acting on the first n - k coordinates.
HomogeneousPair stiefel(std::size_t n, std::size_t k, std::string name) {
  if (n < 2 || k < 1 || k > n) out_of_range("stiefel:n,k needs n >= 2 and 1 <= k <= n");
  const MatrixRealization real = catalog_realization("so", n);
  std::vector<ComplexMatrix> h;
  for (const auto& x : so_basis(n - k)) h.push_back(embed(x, n));
  return realized_pair(real, h, {}, std::move(name));
}

HomogeneousPair example_4_7(bool with_generator) {
  const MatrixRealization u2 = catalog_realization("u", 2);
  ComplexMatrix reflection = ComplexMatrix::identity(2);
  reflection(1, 1) = {-1, 0};
  std::vector<ComplexMatrix> reps;
  if (with_generator) reps.push_back(reflection);
  const HomogeneousPair first = realized_pair(u2, {so_generator(2, 0, 1)}, reps, "");
  HomogeneousPair out = direct_sum(first, group_pair(catalog_algebra("torus", 1)));
  out.name = with_generator ? "example_4_7" : "example_4_7_h0";
  return out;
}

struct Builder {
  std::string params;
  std::string description;
  std::size_t arity;  // number of integer parameters
  std::function<HomogeneousPair(const std::vector<std::size_t>&, const std::string&)> build;
};

HomogeneousPair group(const std::string& type, std::size_t n, const std::string& name) {
  return group_pair(catalog_algebra(type, n), name);
}

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table = {
      {"example_4_7",
       {"", "(u(2) ⊕ R) / so(2) with the reflection diag(1,-1) as component generator", 0,
        [](const auto&, const auto&) { return example_4_7(true); }}},
      {"example_4_7_h0",
       {"", "(u(2) ⊕ R) / so(2), identity component only", 0,
        [](const auto&, const auto&) { return example_4_7(false); }}},
      {"flag_su3",
       {"", "su(3) / diagonal maximal torus", 0,
        [](const auto&, const std::string& name) {
          const MatrixRealization real = catalog_realization("su", 3);
          const auto b = su_basis(3);
          return realized_pair(real, {b[0], b[1]}, {}, name);
        }}},
      {"so", {"n >= 2", "group so(n), h = 0; so(4) is split into two factors", 1,
              [](const auto& p, const std::string& name) { return group("so", p[0], name); }}},
      {"sp", {"n >= 1", "group sp(n), h = 0", 1,
              [](const auto& p, const std::string& name) { return group("sp", p[0], name); }}},
      {"sphere", {"n >= 2", "so(n+1) / so(n)", 1,
                  [](const auto& p, const std::string& name) {
                    if (p[0] < 2) out_of_range("sphere:n needs n >= 2");
                    return stiefel(p[0] + 1, 1, name);
                  }}},
      {"stiefel", {"n >= 2, 1 <= k <= n", "so(n) / so(n-k)", 2,
                   [](const auto& p, const std::string& name) { return stiefel(p[0], p[1], name); }}},
      {"su", {"n >= 2", "group su(n), h = 0", 1,
              [](const auto& p, const std::string& name) { return group("su", p[0], name); }}},
      {"torus", {"l >= 1", "abelian group of dimension l, h = 0", 1,
                 [](const auto& p, const std::string& name) { return group("torus", p[0], name); }}},
      {"u", {"n >= 1", "group u(n), h = 0", 1,
             [](const auto& p, const std::string& name) { return group("u", p[0], name); }}},
  };
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

HomogeneousPair build_component(const std::string& text) {
  const std::string entry = trim(text);
  const auto colon = entry.find(':');
  const std::string name = entry.substr(0, colon);
  const auto it = builders().find(name);
  if (it == builders().end()) throw UnknownCatalogEntry("unknown catalog entry '" + name + "'");

  std::vector<std::size_t> params;
  if (colon != std::string::npos) {
    std::string rest = entry.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string tok = trim(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("malformed catalog parameter '" + tok + "' in '" + entry + "'");
      params.push_back(value);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (params.size() != it->second.arity)
    throw ParseError("catalog entry '" + name + "' takes " + std::to_string(it->second.arity) + " parameter(s)");
  return it->second.build(params, entry);
}

}  // namespace

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;
  for (const auto& [name, b] : builders()) out.push_back({name, b.params, b.description});
  return out;
}

HomogeneousPair catalog_build(const std::string& entry) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto plus = entry.find('+', start);
    parts.push_back(entry.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  HomogeneousPair out = build_component(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) out = direct_sum(out, build_component(parts[i]));
  out.name = trim(entry);
  return out;
}

}  // namespace liecoh
