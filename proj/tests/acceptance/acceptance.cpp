// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "liecoh/betti.hpp"
#include "liecoh/catalog.hpp"
#include "liecoh/ce.hpp"
#include "liecoh/error.hpp"
#include "liecoh/invariants.hpp"
#include "liecoh/koszul.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/verify.hpp"
#include "oracles.hpp"
#include "random_pairs.hpp"

using namespace liecoh;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

std::vector<std::size_t> low(const BettiReport& r) {
  return {r.betti.begin(), r.betti.begin() + std::min<std::size_t>(5, r.betti.size())};
}

const BettiReport* find(const VerifyResult& v, Method m) {
  for (const auto& r : v.reports)
    if (r.method == m) return &r;
  return nullptr;
}

// Verify with all three methods; every method must be present and agree.
VerifyResult verify_all(const HomogeneousPair& pair, Outcome& out) {
  VerifyResult v = run_verify(pair);
  out.require(v.pass, pair.name + ": methods disagree");
  for (Method m : {Method::formula, Method::koszul, Method::ce})
    out.require(find(v, m) != nullptr, pair.name + ": " + to_string(m) + " not run");
  return v;
}

void criterion_spheres(Outcome& out) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto pair = catalog_build("sphere:" + std::to_string(n));
    const auto v = verify_all(pair, out);
    for (const auto& r : v.reports) {
      const auto b = low(r);
      std::vector<std::size_t> want(5, 0);
      want[0] = 1;
      if (n <= 4) want[n] = 1;
      out.require(b == want, pair.name + " " + to_string(r.method) + " gave " + join(b));
    }
  }
  if (out.pass) out.detail << "sphere:2..6 agree on b0..b4 across formula, koszul, ce";
}

void criterion_example(Outcome& out) {
  const auto with = verify_all(catalog_build("example_4_7"), out);
  const auto without = verify_all(catalog_build("example_4_7_h0"), out);
  for (const auto& r : with.reports)
    out.require(r.betti[3] == 0 && r.betti[4] == 0, "example_4_7 " + to_string(r.method) + " gave " + join(low(r)));
  for (const auto& r : without.reports)
    out.require(r.betti[3] == 2 && r.betti[4] == 1, "example_4_7_h0 " + to_string(r.method) + " gave " + join(low(r)));
  if (out.pass) out.detail << "b3,b4 = 0,0 with generator and 2,1 without";
}

void criterion_groups(Outcome& out) {
  for (const char* entry : {"su:2", "su:3", "su:2+su:2", "torus:3+su:2"}) {
    const auto pair = catalog_build(entry);
    const std::size_t l = pair.algebra.center_dim();
    const std::size_t want = pair.algebra.factor_count() + binomial(l, 3);
    const auto v = verify_all(pair, out);
    for (const auto& r : v.reports)
      out.require(r.betti[3] == want, std::string(entry) + " " + to_string(r.method) + " b3=" +
                                          std::to_string(r.betti[3]) + " expected " + std::to_string(want));
  }
  if (out.pass) out.detail << "b3 = #[g,g] + C(l,3) for su:2, su:3, su:2+su:2, torus:3+su:2";
}

void criterion_flag(Outcome& out) {
  const auto pair = catalog_build("flag_su3");
  const auto v = verify_all(pair, out);
  const BettiReport* ce = find(v, Method::ce);
  if (!ce) return;
  const std::vector<std::size_t> want{1, 0, 2, 0, 2, 0, 1};
  out.require(ce->betti == want, "ce vector " + join(ce->betti));
  const std::size_t dh = pair.dim_h();
  const std::size_t predicted = dh * (dh + 1) / 2 - pair.algebra.factor_count();
  for (const auto& r : v.reports)
    out.require(r.betti[4] - r.betti[3] == predicted, to_string(r.method) + " b4-b3 != " + std::to_string(predicted));
  out.require(poincare_check(*ce, pair.dim_g() - pair.dim_h()), "poincare check failed");
  if (out.pass) out.detail << "ce vector " << join(ce->betti) << ", b4-b3 = " << predicted << ", poincare ok";
}

// δ∘δ = 0 on the invariant subcomplex, checked through coordinates.
bool ce_squares_to_zero(const RelativeComplex& c) {
  for (std::size_t k = 0; k + 1 < c.deltas.size(); ++k) {
    if (c.dim(k) == 0 || c.dim(k + 1) == 0) continue;
    const Matrix basis = c.cochain_bases[k + 1].to_dense();
    const Matrix image = c.deltas[k].to_dense();
    const auto coords = solve(basis.transpose(), image.transpose());
    if (!coords) return false;
    if (!(coords->transpose() * c.deltas[k + 1].to_dense()).is_zero()) return false;
  }
  return true;
}

std::size_t residuals(const HomogeneousPair& pair) {
  std::size_t bad = reference::jacobi_residual(pair.algebra);
  for (std::size_t f = 0; f < pair.algebra.factor_count(); ++f)
    bad += reference::invariance_residual(pair.algebra, btilde(pair.algebra, f));
  const InvariantFormSpace forms = psi_analysis(pair);
  for (const auto& form : forms.form_basis) {
    for (std::size_t c = 0; c < pair.dim_h(); ++c) {
      const Matrix adx = restrict_to(pair.algebra.ad(pair.h_basis.column(c)), forms.carrier);
      if (!(adx.transpose() * form + form * adx).is_zero()) ++bad;
    }
    for (const auto& g : pair.generators) {
      const Matrix gr = restrict_to(g, forms.carrier);
      if (!(gr.transpose() * form * gr == form)) ++bad;
    }
  }
  return bad;
}

std::vector<HomogeneousPair> suite() { return reference::random_suite(30); }

std::vector<HomogeneousPair> catalog_suite() {
  std::vector<HomogeneousPair> out;
  for (const char* s : {"sphere:2", "sphere:3", "sphere:4", "sphere:5", "example_4_7", "example_4_7_h0", "flag_su3",
                        "su:2", "su:3", "su:2+su:2", "torus:3+su:2", "stiefel:4,2", "stiefel:5,2", "u:2", "sp:2"})
    out.push_back(catalog_build(s));
  return out;
}

void criterion_property(Outcome& out) {
  std::size_t count = 0, with_gens = 0;
  for (const auto& pair : suite()) {
    ++count;
    if (!pair.connected()) ++with_gens;
    try {
      require_valid(pair);
      verify_all(pair, out);
      const auto slices = build_complex(pair);
      for (std::size_t i = 0; i + 1 < slices.size(); ++i)
        if (slices[i].differential && slices[i + 1].differential)
          out.require((*slices[i + 1].differential * *slices[i].differential).is_zero(), pair.name + ": ∇∘∇ != 0");
      const std::size_t q = pair.dim_g() - pair.dim_h();
      const auto c = relative_complex(pair, std::max<std::size_t>(q, 4));
      out.require(ce_squares_to_zero(c), pair.name + ": δ∘δ != 0");
      out.require(residuals(pair) == 0, pair.name + ": nonzero Jacobi/invariance residual");
    } catch (const Error& e) {
      out.require(false, pair.name + ": " + e.what());
    }
  }
  out.require(count >= 25, "fewer than 25 pairs");
  if (out.pass) out.detail << count << " random pairs (" << with_gens << " with generators) agree; residuals zero";
}

void criterion_bounds(Outcome& out) {
  std::size_t evaluated = 0, pairs = 0;
  auto all = suite();
  for (auto& p : catalog_suite()) all.push_back(std::move(p));
  for (const auto& pair : all) {
    ++pairs;
    const BettiReport r = betti_low(pair);
    for (const auto& flag : r.corollary_flags) {
      if (flag.status == CheckStatus::skipped) continue;
      ++evaluated;
      out.require(flag.status == CheckStatus::pass, pair.name + ": " + flag.name + " " + flag.detail);
    }
  }
  if (out.pass) out.detail << evaluated << " identities and bounds hold on " << pairs << " pairs";
}

void criterion_poincare(Outcome& out) {
  std::size_t checked = 0;
  auto all = suite();
  for (auto& p : catalog_suite()) all.push_back(std::move(p));
  for (const auto& pair : all) {
    const std::size_t q = pair.dim_g() - pair.dim_h();
    if (!pair.connected() || q > 9) continue;
    ++checked;
    const BettiReport r = betti_ce(pair);
    out.require(poincare_check(r, q), pair.name + ": " + join(r.betti));
  }
  if (out.pass) out.detail << checked << " connected pairs satisfy b_k = b_{n-m-k}";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"spheres", criterion_spheres},
      {"example_4_7", criterion_example},
      {"group_case", criterion_groups},
      {"flag_manifold", criterion_flag},
      {"triple_oracle_property_suite", criterion_property},
      {"bound_suite", criterion_bounds},
      {"poincare_duality", criterion_poincare},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!out.pass) ++failures;
    std::printf("[%s] %zu %s (%.1fs): %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                out.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
