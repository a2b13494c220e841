#include "liecoh/betti.hpp"

#include <sstream>

#include "liecoh/error.hpp"
#include "liecoh/invariants.hpp"

namespace liecoh {

std::string to_string(Method method) {
  switch (method) {
    case Method::formula: return "formula";
    case Method::koszul: return "koszul";
    case Method::ce: return "ce";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "formula") return Method::formula;
  if (name == "koszul") return Method::koszul;
  if (name == "ce") return Method::ce;
  throw ParseError("unknown method '" + name + "' (expected formula, koszul or ce)");
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

BettiReport betti_low(const HomogeneousPair& pair) {
  require_valid(pair);
  const PairDecomposition d = decompose(pair);
  const InvariantFormSpace psi = psi_analysis(pair);

  Intermediates in;
  in.l = pair.algebra.center_dim();
  in.r = pair.algebra.factor_count();
  in.r0 = d.r0;
  in.dim_a_fixed = d.a_fixed.dim();
  in.dim_N = psi.dim_N;
  in.dim_C = psi.dim_C;
  in.rank_psi = psi.rank_psi;
  in.dim_S2_hgg_inv = psi.dim();

  const std::uint64_t r0 = in.r0, af = in.dim_a_fixed;
  BettiReport report;
  report.method = Method::formula;
  report.pair_name = pair.name;
  report.dim_g = pair.dim_g();
  report.dim_h = pair.dim_h();
  report.generator_count = pair.generators.size();
  report.betti = {
      1,
      r0,
      af + binomial(r0, 2),
      af * r0 + in.dim_N + binomial(r0, 3),
      af * binomial(r0, 2) + in.dim_N * r0 + in.dim_C + binomial(r0, 4),
  };
  report.intermediates = in;
  report.corollary_flags = corollary_checks(pair, report);
  return report;
}

namespace {

CorollaryCheck make_check(std::string name, bool ok, const std::string& detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, detail};
}

CorollaryCheck skip(std::string name, std::string why) { return {std::move(name), CheckStatus::skipped, std::move(why)}; }

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

std::vector<CorollaryCheck> corollary_checks(const HomogeneousPair& pair, const BettiReport& report) {
  if (!report.intermediates || report.betti.size() < 5)
    throw InternalError("corollary_checks needs a formula report with degrees 0..4");
  const Intermediates& in = *report.intermediates;
  const LieAlgebra& alg = pair.algebra;
  const PairDecomposition d = decompose(pair);
  const long long b3 = static_cast<long long>(report.betti[3]);
  const long long b4 = static_cast<long long>(report.betti[4]);
  const long long r = static_cast<long long>(in.r);
  const long long dim_n = static_cast<long long>(in.dim_N);
  const std::size_t m = pair.dim_h();
  const bool semisimple_h = d.hh == d.h;

  std::size_t meeting = 0, supporting = 0;
  for (std::size_t f = 0; f < alg.factor_count(); ++f) {
    const Subspace block = alg.factor_subspace(f);
    const FactorBlock& fb = alg.factors()[f];
    if (!d.hcapgg.basis().block(fb.offset, 0, fb.dim, d.hcapgg.dim()).is_zero()) ++supporting;
    if (!intersect(d.hcapgg, block).is_zero()) ++meeting;
  }
  const bool support_detected = meeting == supporting;

  // Counts that need the simple-ideal splitting of [h,h]; absent when it fails.
  std::optional<std::size_t> hh_orbits;
  std::string splitting_error;
  try {
    hh_orbits = minimal_ideal_count(pair, d.hh);
  } catch (const SplittingFailed& e) {
    splitting_error = e.what();
  }
  const std::size_t zh_forms = invariant_sym_forms(pair, d.zh).dim();

  std::vector<CorollaryCheck> out;

  if (in.l == 0) {
    const bool ok = b3 == dim_n && b4 == static_cast<long long>(in.dim_C) &&
                    b4 - b3 == static_cast<long long>(in.dim_S2_hgg_inv) - r;
    out.push_back(make_check("semisimple_ambient_identities", ok,
                             str("b3=", b3, " dim_N=", dim_n, " b4=", b4, " dim_C=", in.dim_C,
                                 " forms-r=", static_cast<long long>(in.dim_S2_hgg_inv) - r)));
  } else {
    out.push_back(skip("semisimple_ambient_identities", "g has a center"));
  }

  if (in.l == 0 && in.r == 1 && m > 0) {
    out.push_back(make_check("simple_ambient_vanishing_b3", b3 == 0, str("b3=", b3)));
  } else {
    out.push_back(skip("simple_ambient_vanishing_b3", "g is not simple or h = 0"));
  }

  if (support_detected) {
    const long long s = static_cast<long long>(meeting);
    out.push_back(make_check("factor_support_kernel", dim_n == r - s, str("dim_N=", dim_n, " r-s=", r - s)));
  } else {
    out.push_back(skip("factor_support_kernel", "h ∩ [g,g] projects onto a factor it does not meet"));
  }

  if (support_detected && semisimple_h && m > 0) {
    const long long s = static_cast<long long>(meeting);
    const long long l = static_cast<long long>(in.l);
    const long long want3 = r - s + static_cast<long long>(binomial(in.l, 3));
    if (hh_orbits) {
      const long long want4 =
          l * (r - s) + static_cast<long long>(*hh_orbits) - s + static_cast<long long>(binomial(in.l, 4));
      out.push_back(make_check("semisimple_subalgebra_values", b3 == want3 && b4 == want4,
                               str("b3=", b3, " expected ", want3, ", b4=", b4, " expected ", want4)));
    } else {
      out.push_back(make_check("semisimple_subalgebra_values", b3 == want3,
                               str("b3=", b3, " expected ", want3, "; b4 not checked: ", splitting_error)));
    }
  } else {
    out.push_back(skip("semisimple_subalgebra_values", "h is not semisimple or its factor support is not detected"));
  }

  if (in.l == 0 && m > 0 && d.zh == d.h && pair.connected()) {
    const long long want = static_cast<long long>(m * (m + 1) / 2) - r;
    out.push_back(make_check("toral_difference", b4 - b3 == want, str("b4-b3=", b4 - b3, " expected ", want)));
  } else {
    out.push_back(skip("toral_difference", "requires semisimple g and connected toral h"));
  }

  if (in.l == 0 && m > 0 && semisimple_h) {
    if (hh_orbits) {
      const long long want = static_cast<long long>(*hh_orbits) - r;
      out.push_back(make_check("semisimple_difference_ideal_count", b4 - b3 == want,
                               str("b4-b3=", b4 - b3, " expected ", want)));
    } else {
      out.push_back(skip("semisimple_difference_ideal_count", splitting_error));
    }
  } else {
    out.push_back(skip("semisimple_difference_ideal_count", "requires semisimple g and semisimple h"));
  }

  if (hh_orbits) {
    const std::size_t total = invariant_sym_forms(pair, d.h).dim();
    out.push_back(make_check("invariant_form_count", total == zh_forms + *hh_orbits,
                             str("forms on h=", total, " forms on z(h)=", zh_forms, " ideal orbits=", *hh_orbits)));
  } else {
    out.push_back(skip("invariant_form_count", splitting_error));
  }

  if (in.l == 0 && m > 0 && hh_orbits) {
    const long long bound = static_cast<long long>(zh_forms + *hh_orbits) - 1;
    out.push_back(make_check("fourth_degree_upper_bound", b4 <= bound, str("b4=", b4, " bound ", bound)));
  } else {
    out.push_back(skip("fourth_degree_upper_bound", "requires semisimple g, h != 0 and a successful splitting"));
  }

  if (!d.hcapgg.is_zero()) {
    out.push_back(make_check("kernel_upper_bound", dim_n <= r - 1, str("dim_N=", dim_n, " r-1=", r - 1)));
  } else {
    out.push_back(skip("kernel_upper_bound", "h ∩ [g,g] = 0"));
  }

  out.push_back(make_check("kernel_bound_meeting_factors", dim_n <= r - static_cast<long long>(meeting),
                           str("dim_N=", dim_n, " r-k=", r - static_cast<long long>(meeting))));
  out.push_back(make_check("kernel_lower_bound_support", dim_n >= r - static_cast<long long>(supporting),
                           str("dim_N=", dim_n, " r-s=", r - static_cast<long long>(supporting))));
  return out;
}

}  // namespace liecoh
