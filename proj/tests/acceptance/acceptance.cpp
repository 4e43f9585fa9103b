// End-to-end acceptance checks through the public C interface. Prints one
// PASS/FAIL line per criterion; argv[1] is the path of the thetakit CLI.

#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "stats.hpp"
#include "thetakit/thetakit.h"

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Calls f(double* out); a failing status fails the criterion.
template <class F>
double value(Outcome& o, const char* what, F&& f) {
  double v = NAN;
  if (f(&v) != TK_OK) {
    o.require(false, std::string(what) + ": " + tk_last_error());
    return NAN;
  }
  return v;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

using DistPtr = std::unique_ptr<tk_dist, void (*)(tk_dist*)>;
using RngPtr = std::unique_ptr<tk_rng, void (*)(tk_rng*)>;

DistPtr make_dist(tk_family f, double c) {
  tk_dist* d = nullptr;
  if (tk_dist_create(f, c, &d) != TK_OK) return DistPtr(nullptr, tk_dist_destroy);
  return DistPtr(d, tk_dist_destroy);
}

RngPtr make_rng(std::uint64_t seed) {
  tk_rng* r = nullptr;
  tk_rng_create(seed, &r);
  return RngPtr(r, tk_rng_destroy);
}

// Max defect of each named identity (NAN if the run itself failed).
std::map<std::string, double> suite_defects(const std::vector<std::string>& names,
                                            double tol = 0.0) {
  std::vector<const char*> raw;
  for (const auto& n : names) raw.push_back(n.c_str());
  tk_report_list* list = nullptr;
  std::map<std::string, double> out;
  if (tk_verify_run(raw.data(), raw.size(), tol, nullptr, &list) != TK_OK) {
    for (const auto& n : names) out[n] = NAN;
    return out;
  }
  for (std::size_t i = 0; i < tk_report_count(list); ++i) {
    tk_report_view v;
    tk_report_get(list, i, &v);
    out[v.name] = v.max_defect;
  }
  tk_report_list_destroy(list);
  return out;
}

// Passes when every named defect is finite and below tol.
void require_suite(Outcome& o, const std::vector<std::string>& names, double tol) {
  for (const auto& [name, d] : suite_defects(names)) {
    o.detail << " " << name << "=" << d;
    o.require(d < tol, name);
  }
}

Outcome variance_table(tk_family family) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  double worst_printed = 0.0;
  double worst_closed = 0.0;
  for (int r = 1; r <= 10; ++r) {
    auto d = make_dist(family, std::sqrt(static_cast<double>(r)));
    o.require(d != nullptr, "dist");
    if (!d) return o;
    double rec = NAN, closed = NAN, printed = NAN;
    rec = value(o, "variance", [&](double* out) { return tk_dist_variance(d.get(), TK_VAR_ELLIPTIC, nullptr, out); });
    closed = value(o, "closed form", [&](double* out) { return tk_variance_closed_form(family, r, out); });
    printed = value(o, "printed", [&](double* out) { return tk_variance_printed(family, r, out); });
    worst_printed = std::max(worst_printed, std::fabs(rec - printed));
    worst_closed = std::max(worst_closed, std::fabs(rec - closed));
    if (family == TK_FAMILY_THETA3 && r == 1) {
      o.require(std::fabs(rec - 1.0 / (4.0 * M_PI)) < 1e-12, "r=1 equals 1/(4 pi)");
    }
    if (family == TK_FAMILY_THETA3 && r == 10) {
      o.require(std::fabs(rec - 9.69284e-5) < 1e-9, "r=10 equals 9.69284e-5");
    }
    if (family == TK_FAMILY_THETA2 && r == 1) {
      o.require(std::fabs(rec - 0.253728) < 1e-6, "r=1 equals 0.253728");
    }
    if (family == TK_FAMILY_THETA2 && r == 2) {
      o.require(std::fabs(rec - 0.250277) < 1e-6, "r=2 equals 0.250277");
    }
  }
  const double secs = seconds_since(start);
  o.require(worst_printed < 1e-6, "printed column within 1e-6");
  o.require(worst_closed < 1e-9, "closed-form column within 1e-9");
  o.require(secs < 5.0, "runtime < 5 s");
  o.detail << " printed_defect=" << worst_printed << " closed_defect=" << worst_closed
           << " seconds=" << secs;
  return o;
}

Outcome criterion_3() {
  Outcome o;
  double lattice = 0.0, alpha = 0.0;
  for (int r = 1; r <= 10; ++r) {
    tk_singular s;
    tk_modulus m;
    if (tk_singular_reference(r, &s) != TK_OK || tk_modulus_from_k(s.k_r, &m) != TK_OK) {
      o.require(false, tk_last_error());
      return o;
    }
    lattice = std::max(lattice, std::fabs(m.K_prime / m.K - std::sqrt(r)));
    const double a = M_PI / (4.0 * m.K * m.K) + std::sqrt(r) * (1.0 - m.E / m.K);
    alpha = std::max(alpha, std::fabs(a - s.alpha_r));
  }
  o.require(lattice < 1e-10, "K'/K = sqrt(r)");
  o.require(alpha < 1e-10, "alpha relation");
  o.detail << " lattice_defect=" << lattice << " alpha_defect=" << alpha;
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  require_suite(o, {"modular-1", "modular-2", "modular-3", "modular-4", "modular-243", "modular-42",
                    "modular-32", "modular-lh10"},
                1e-11);
  const double secs = seconds_since(start);
  o.require(secs < 2.0, "runtime < 2 s");
  o.detail << " seconds=" << secs;
  return o;
}

Outcome criterion_5() {
  Outcome o;
  require_suite(o, {"density-reflected-xcheck", "density-killed-xcheck"}, 1e-10);
  require_suite(o, {"green-reflected-xcheck", "green-killed-xcheck"}, 1e-8);
  return o;
}

Outcome criterion_6() {
  Outcome o;
  require_suite(o, {"mod4-hitting", "bessel3-density", "bessel3-cdf"}, 1e-11);
  boost::math::quadrature::exp_sinh<double> integrator;
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double numeric = integrator.integrate(
        [&](double t) {
          double f = 0.0;
          const auto method = t < 1.0 ? TK_METHOD_IMAGES : TK_METHOD_SPECTRAL;
          if (tk_bessel3_pdf(method, t, nullptr, &f) != TK_OK) return std::nan("");
          return std::exp(-alpha * t) * f;
        },
        1e-12);
    const double s = std::sqrt(2.0 * alpha);
    const double err = std::fabs(numeric - s / std::sinh(s));
    o.require(err < 1e-7, "Laplace transform at alpha=" + std::to_string(alpha));
    o.detail << " laplace(" << alpha << ")_err=" << err;
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const std::array<tk_hyperbolic, 4> kinds = {TK_HYPERBOLIC_COTH, TK_HYPERBOLIC_CSCH,
                                              TK_HYPERBOLIC_TANH, TK_HYPERBOLIC_SECH};
  double raw = 0.0, fast = 0.0;
  for (auto kind : kinds) {
    for (double z : {0.5, 1.0, 2.0}) {
      double exact = NAN, p = NAN, a = NAN;
      exact = value(o, "direct", [&](double* out) { return tk_ml_direct(kind, z, out); });
      p = value(o, "partial", [&](double* out) { return tk_ml_partial(kind, z, 1'000'000, out); });
      a = value(o, "accelerated", [&](double* out) { return tk_ml_accelerated(kind, z, 1'000'000, out); });
      raw = std::max(raw, std::fabs(p - exact));
      fast = std::max(fast, std::fabs(a - exact));
    }
  }
  o.require(raw < 1e-5, "partial sums within 1e-5");
  o.require(fast < 1e-10, "tail-corrected sums within 1e-10");
  o.detail << " partial_defect=" << raw << " corrected_defect=" << fast;
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const auto conv = suite_defects({"convolution", "stability-1-1", "stability-1-m1"});
  for (const auto& [name, d] : conv) {
    o.require(d < 1e-12, name);
    o.detail << " " << name << "=" << d;
  }
  require_suite(o, {"duality-m1"}, 1e-11);
  double signed_mean = 0.0, routes = 0.0, cumulants = 0.0;
  for (double c : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (auto family : {TK_FAMILY_THETA2, TK_FAMILY_THETA3}) {
      auto d = make_dist(family, c);
      if (!d) {
        o.require(false, "dist");
        return o;
      }
      double v[3];
      const tk_variance_route rs[3] = {TK_VAR_ELLIPTIC, TK_VAR_LAMBERT, TK_VAR_DIRECT};
      for (int i = 0; i < 3; ++i) v[i] = value(o, "variance", [&](double* out) { return tk_dist_variance(d.get(), rs[i], nullptr, out); });
      routes = std::max({routes, std::fabs(v[0] - v[1]), std::fabs(v[0] - v[2]), std::fabs(v[1] - v[2])});
      for (int order : {2, 4}) {
        double l = NAN, e = NAN;
        l = value(o, "cumulant", [&](double* out) { return tk_dist_cumulant(d.get(), order, TK_CUMULANT_LAMBERT, nullptr, out); });
        e = value(o, "cumulant", [&](double* out) { return tk_dist_cumulant(d.get(), order, TK_CUMULANT_EISENSTEIN, nullptr, out); });
        cumulants = std::max(cumulants, std::fabs(l - e));
      }
      if (family == TK_FAMILY_THETA3) {
        tk_modulus m;
        tk_dist_modulus(d.get(), &m);
        long lo = 0, hi = 0;
        tk_dist_support(d.get(), &lo, &hi);
        double direct = 0.0;
        for (long n = lo; n <= hi; ++n) {
          double p = 0.0;
          tk_dist_pmf(d.get(), n, &p);
          direct += (n % 2 == 0) ? p : -p;
        }
        signed_mean = std::max(signed_mean, std::fabs(direct - std::sqrt(m.k_prime)));
      }
    }
  }
  o.require(signed_mean < 1e-12, "signed mean = sqrt(k')");
  o.require(routes < 1e-11, "variance routes");
  o.require(cumulants < 1e-8, "Lambert vs Eisenstein");
  o.detail << " signed_mean=" << signed_mean << " variance_routes=" << routes
           << " cumulants=" << cumulants;
  return o;
}

Outcome criterion_9() {
  Outcome o;
  constexpr long kDraws = 100000;
  std::uint64_t seed = 2024;
  for (auto family : {TK_FAMILY_THETA3, TK_FAMILY_THETA2}) {
    const char* label = family == TK_FAMILY_THETA3 ? "theta3" : "theta2";
    auto d = make_dist(family, 1.0);
    long lo = 0, hi = 0;
    tk_dist_support(d.get(), &lo, &hi);
    std::map<long, double> probs;
    for (long n = lo; n <= hi; ++n) tk_dist_pmf(d.get(), n, &probs[n]);

    std::map<long, long> exact, bern;
    double sum = 0.0, sum_sq = 0.0;
    auto rng_a = make_rng(seed++);
    auto rng_b = make_rng(seed++);
    for (long i = 0; i < kDraws; ++i) {
      long x = 0, y = 0;
      if (tk_dist_sample(d.get(), rng_a.get(), TK_SAMPLER_EXACT, nullptr, &x) != TK_OK ||
          tk_dist_sample(d.get(), rng_b.get(), TK_SAMPLER_BERNOULLI, nullptr, &y) != TK_OK) {
        o.require(false, tk_last_error());
        return o;
      }
      ++exact[x];
      ++bern[y];
      sum += static_cast<double>(x);
      sum_sq += static_cast<double>(x) * static_cast<double>(x);
    }
    const double p_exact = testing_stats::chi_square_gof(exact, probs, kDraws);
    const double p_bern = testing_stats::chi_square_gof(bern, probs, kDraws);
    const double p_two = testing_stats::chi_square_two_sample(exact, bern);
    o.require(p_exact > 1e-3, std::string(label) + " exact sampler GOF");
    o.require(p_bern > 1e-3, std::string(label) + " Bernoulli sampler GOF");
    o.require(p_two > 1e-3, std::string(label) + " two-sample");
    o.detail << " " << label << ":p_exact=" << p_exact << ",p_bernoulli=" << p_bern
             << ",p_two_sample=" << p_two;
    if (family == TK_FAMILY_THETA2) {
      const double mean = sum / kDraws;
      const double se = std::sqrt((sum_sq / kDraws - mean * mean) / kDraws);
      o.require(std::fabs(mean + 0.5) < 3.0 * se, "theta2 mean within 3 SE of -1/2");
      o.detail << ",mean=" << mean << ",se=" << se;
    }
  }
  return o;
}

Outcome criterion_10() {
  Outcome o;
  double routes = 0.0;
  for (int i = 0; i <= 160; ++i) {
    const double h = 0.4 + 0.01 * i;
    double s = NAN, p = NAN, e = NAN;
    s = value(o, "cdf", [&](double* out) { return tk_kolmogorov_cdf(h, TK_KOLMOGOROV_SERIES, nullptr, out); });
    p = value(o, "cdf", [&](double* out) { return tk_kolmogorov_cdf(h, TK_KOLMOGOROV_PRODUCT, nullptr, out); });
    e = value(o, "cdf", [&](double* out) { return tk_kolmogorov_cdf(h, TK_KOLMOGOROV_ELLIPTIC, nullptr, out); });
    routes = std::max({routes, std::fabs(s - p), std::fabs(s - e), std::fabs(p - e)});
  }
  o.require(routes < 2e-11, "CDF routes within 2e-11");
  double f_series = NAN, f_elliptic = NAN;
  f_series = value(o, "cdf", [&](double* out) { return tk_kolmogorov_cdf(1.0, TK_KOLMOGOROV_SERIES, nullptr, out); });
  f_elliptic = value(o, "cdf", [&](double* out) { return tk_kolmogorov_cdf(1.0, TK_KOLMOGOROV_ELLIPTIC, nullptr, out); });
  o.require(std::fabs(f_series - 0.7300003) < 1e-7, "F(1) = 0.7300003");
  o.require(std::fabs(f_elliptic - f_series) < 1e-10, "elliptic F(1)");

  double pdf = 0.0;
  for (int i = 0; i <= 160; ++i) {
    const double h = 0.4 + 0.01 * i;
    double s = NAN, e = NAN;
    s = value(o, "pdf", [&](double* out) { return tk_kolmogorov_pdf(h, TK_KOLMOGOROV_SERIES, nullptr, out); });
    e = value(o, "pdf", [&](double* out) { return tk_kolmogorov_pdf(h, TK_KOLMOGOROV_ELLIPTIC, nullptr, out); });
    pdf = std::max(pdf, std::fabs(s - e));
  }
  o.require(pdf < 2e-9, "pdf series vs elliptic");

  const auto start = std::chrono::steady_clock::now();
  constexpr long kPaths = 100000;
  constexpr long kSteps = 10000;
  auto rng = make_rng(99);
  long below = 0;
  for (long i = 0; i < kPaths; ++i) {
    double s = 0.0;
    if (tk_kolmogorov_bridge_sample(rng.get(), kSteps, &s) != TK_OK) {
      o.require(false, tk_last_error());
      return o;
    }
    below += s < 1.0;
  }
  const double secs = seconds_since(start);
  const double est = static_cast<double>(below) / kPaths;
  const double se = std::sqrt(f_series * (1.0 - f_series) / kPaths);
  o.require(std::fabs(est - f_series) < 3.0 * se + 0.01, "Monte Carlo F(1)");
  o.require(secs < 60.0, "Monte Carlo runtime < 60 s");
  o.detail << " cdf_routes=" << routes << " F(1)=" << f_series << " pdf_routes=" << pdf
           << " mc_estimate=" << est << " mc_se=" << se << " mc_seconds=" << secs;
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome criterion_11(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "CLI path not given");
    return o;
  }
  int s1 = 0, s2 = 0;
  const std::string verify = "'" + cli + "' verify --suite all 2>/dev/null";
  const auto a = run_capture(verify, s1);
  const auto b = run_capture(verify, s2);
  o.require(s1 == 0 && s2 == 0, "verify --suite all exits 0");
  o.require(!a.empty() && a == b, "verify output byte-identical");

  const std::string sample = "'" + cli + "' dist sample --family theta2 --c 0.8 --n 200 --seed 77 --route bernoulli";
  const auto c = run_capture(sample, s1);
  const auto d = run_capture(sample, s2);
  o.require(s1 == 0 && s2 == 0 && !c.empty() && c == d, "seeded sampling byte-identical");

  // Round trip: the JSON value parses back to the exact double.
  const auto e = run_capture("'" + cli + "' theta eval --kind 1 --z 0.7 --q 0.1", s1);
  double direct = NAN;
  tk_theta(1, 0.7, 0.1, TK_THETA_SERIES, nullptr, &direct);
  double parsed = NAN;
  try {
    parsed = nlohmann::json::parse(e).at("value").get<double>();
  } catch (const std::exception&) {
  }
  o.require(s1 == 0 && parsed == direct, "JSON value round-trips bit-for-bit");
  o.detail << " verify_bytes=" << a.size() << " sample_bytes=" << c.size();
  return o;
}

// The alternative closed-form density does not match F'(h); quantify it.
void report_finding() {
  double worst = 0.0, at = 0.0;
  for (int i = 0; i <= 16; ++i) {
    const double h = 0.4 + 0.1 * i;
    double series = NAN, alt = NAN;
    if (tk_kolmogorov_pdf(h, TK_KOLMOGOROV_SERIES, nullptr, &series) != TK_OK ||
        tk_kolmogorov_pdf_alternative(h, &alt) != TK_OK) {
      continue;
    }
    if (std::fabs(series - alt) > worst) {
      worst = std::fabs(series - alt);
      at = h;
    }
  }
  double s1 = NAN, a1 = NAN;
  tk_kolmogorov_pdf(1.0, TK_KOLMOGOROV_SERIES, nullptr, &s1);
  tk_kolmogorov_pdf_alternative(1.0, &a1);
  std::printf(
      "FINDING: alternative elliptic Kolmogorov density differs from F'(h) by up to %.6g "
      "(at h=%.2f) on [0.4, 2]; at h=1 it gives %.6g vs series %.6g. The library's elliptic "
      "route uses (4/pi^2) sqrt(k') K sqrt(K') (K - E), which agrees with the series.\n",
      worst, at, a1, s1);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Table 2 variance reproduction", [] { return variance_table(TK_FAMILY_THETA2); }},
      {"Table 3 variance reproduction", [] { return variance_table(TK_FAMILY_THETA3); }},
      {"Table 1 singular moduli", criterion_3},
      {"modular identity suite", criterion_4},
      {"spectral vs images densities and Green functions", criterion_5},
      {"hitting-time identities", criterion_6},
      {"Mittag-Leffler expansions", criterion_7},
      {"distribution laws", criterion_8},
      {"sampling", criterion_9},
      {"Kolmogorov distribution", criterion_10},
      {"determinism", [&cli] { return criterion_11(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    std::printf("%s criterion %zu: %s:%s\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  report_finding();
  return failed == 0 ? 0 : 1;
}
