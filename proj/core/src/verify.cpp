#include "liecoh/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <sstream>

#include "liecoh/io.hpp"
#include "liecoh/koszul.hpp"

namespace liecoh {

namespace {

constexpr std::size_t kCompareDegrees = 5;

struct Timed {
  BettiReport report;
  double seconds = 0;
};

template <typename F>
Timed timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Timed t{f(), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

CeOptions ce_options(const VerifyOptions& options, bool certify) {
  CeOptions ce;
  ce.max_degree = options.max_degree;
  ce.size_cap = options.size_cap;
  ce.engine = RankEngine(certify ? RankEngine::Mode::certified : RankEngine::Mode::modular, options.seed);
  return ce;
}

std::map<std::size_t, bool> compare(const std::vector<BettiReport>& reports) {
  std::map<std::size_t, bool> out;
  for (std::size_t k = 0; k < kCompareDegrees; ++k) {
    bool agree = true;
    for (const auto& r : reports)
      if (r.betti.at(k) != reports.front().betti.at(k)) agree = false;
    out[k] = agree;
  }
  return out;
}

bool all_agree(const std::map<std::size_t, bool>& agreement) {
  return std::all_of(agreement.begin(), agreement.end(), [](const auto& e) { return e.second; });
}

}  // namespace

VerifyResult run_verify(const HomogeneousPair& pair, const VerifyOptions& options) {
  require_valid(pair);
  VerifyResult result;
  std::vector<Method> methods = options.methods;
  const std::size_t q = pair.dim_g() - pair.dim_h();
  if (options.skip_ce) {
    std::erase(methods, Method::ce);
  } else if (q > options.size_cap && std::find(methods.begin(), methods.end(), Method::ce) != methods.end()) {
    std::erase(methods, Method::ce);
    result.notes.push_back("ce skipped: dim g/h = " + std::to_string(q) + " exceeds size cap " +
                           std::to_string(options.size_cap));
  }

  std::vector<std::future<Timed>> futures;
  for (Method m : methods) {
    futures.push_back(std::async(std::launch::async, [&pair, &options, m] {
      switch (m) {
        case Method::formula: return timed([&] { return betti_low(pair); });
        case Method::koszul: return timed([&] { return betti_koszul(pair); });
        case Method::ce: return timed([&] { return betti_ce(pair, ce_options(options, options.certify)); });
      }
      return Timed{};
    }));
  }
  for (std::size_t i = 0; i < futures.size(); ++i) {
    Timed t = futures[i].get();
    result.elapsed_seconds[to_string(methods[i])] = t.seconds;
    result.reports.push_back(std::move(t.report));
  }
  if (result.reports.empty()) {
    result.notes.push_back("no methods were run");
    return result;
  }

  result.agreement = compare(result.reports);
  if (!all_agree(result.agreement) && !options.certify) {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (methods[i] != Method::ce) continue;
      result.notes.push_back("disagreement with modular ranks; ce repeated with certified ranks");
      Timed t = timed([&] { return betti_ce(pair, ce_options(options, true)); });
      result.elapsed_seconds["ce"] += t.seconds;
      result.reports[i] = std::move(t.report);
      result.agreement = compare(result.reports);
    }
  }
  result.pass = all_agree(result.agreement);
  return result;
}

nlohmann::json to_json(const VerifyResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  nlohmann::json agreement = nlohmann::json::object();
  for (const auto& [k, ok] : result.agreement) agreement[std::to_string(k)] = ok;
  return {{"status", result.pass ? "pass" : "fail"},
          {"reports", std::move(reports)},
          {"agreement", std::move(agreement)},
          {"elapsed_seconds", result.elapsed_seconds},
          {"notes", result.notes}};
}

std::string format_table(const VerifyResult& result, bool explain) {
  std::ostringstream os;
  if (!result.reports.empty()) {
    const BettiReport& first = result.reports.front();
    os << "pair     " << (first.pair_name.empty() ? "-" : first.pair_name) << '\n';
    os << "dims     g=" << first.dim_g << " h=" << first.dim_h << " g/h=" << first.dim_quotient() << '\n';
  }
  os << "method    ";
  for (std::size_t k = 0; k < kCompareDegrees; ++k) os << std::setw(4) << ("b" + std::to_string(k));
  os << "   seconds\n";
  for (const auto& r : result.reports) {
    os << std::left << std::setw(10) << to_string(r.method) << std::right;
    for (std::size_t k = 0; k < kCompareDegrees; ++k) os << std::setw(4) << r.betti[k];
    const auto it = result.elapsed_seconds.find(to_string(r.method));
    os << "   " << std::fixed << std::setprecision(3) << (it == result.elapsed_seconds.end() ? 0.0 : it->second);
    if (r.method == Method::ce && r.betti.size() > kCompareDegrees) {
      os << "   full:";
      for (auto b : r.betti) os << ' ' << b;
    }
    os << '\n';
  }
  for (const auto& note : result.notes) os << "note: " << note << '\n';
  os << "status   " << (result.pass ? "pass" : "FAIL") << '\n';
  if (explain) {
    for (const auto& r : result.reports) {
      if (r.slices.empty() && r.corollary_flags.empty()) continue;
      os << "\n[" << to_string(r.method) << "]\n" << format_table(r, true);
    }
  }
  return os.str();
}

}  // namespace liecoh
