// Command-line front end. Talks to the library only through thetakit.h.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thetakit/thetakit.h"

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

// Carries an exit code out of a command handler.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string& message) { throw Failure{2, message}; }

void check(tk_status status, const std::string& op) {
  if (status == TK_OK) return;
  const std::string detail = tk_last_error();
  const std::string message = op + ": " + (detail.empty() ? tk_status_string(status) : detail);
  // Bad arguments are usage errors; numerical failures are runtime failures.
  const bool usage = status == TK_ERR_DOMAIN || status == TK_ERR_UNKNOWN_IDENTITY ||
                     status == TK_ERR_NULL_ARGUMENT;
  throw Failure{usage ? 2 : 1, message};
}

tk_policy policy_from_env() {
  tk_policy p = tk_default_policy();
  const char* raw = std::getenv("THETAKIT_TOL");
  if (raw == nullptr || *raw == '\0') return p;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(raw, &end);
  if (errno != 0 || end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    usage_error(std::string("THETAKIT_TOL must be a positive decimal real, got '") + raw + "'");
  }
  p.tol = v;
  return p;
}

// One output record: command, inputs, value(s) or rows, tolerance, provenance.
struct Record {
  ordered_json body;

  Record(const std::string& command, const tk_policy& policy) {
    body["command"] = command;
    body["inputs"] = ordered_json::object();
    tol = policy.tol;
  }
  double tol;

  Record& input(const std::string& key, ordered_json v) {
    body["inputs"][key] = std::move(v);
    return *this;
  }
  void emit(const std::string& provenance) {
    body["tol"] = tol;
    body["provenance"] = provenance;
    std::cout << body.dump(2) << "\n";
  }
};

std::vector<std::string> keys_of(const auto& m) {
  std::vector<std::string> k;
  for (const auto& [name, _] : m) k.push_back(name);
  return k;
}

const std::map<std::string, tk_family> kFamilies = {{"theta2", TK_FAMILY_THETA2},
                                                    {"theta3", TK_FAMILY_THETA3}};
const std::map<std::string, tk_method> kMethods = {{"images", TK_METHOD_IMAGES},
                                                   {"spectral", TK_METHOD_SPECTRAL}};
const std::map<std::string, tk_process> kProcesses = {{"reflected", TK_PROCESS_REFLECTED},
                                                      {"killed", TK_PROCESS_KILLED}};

// RAII owners for the opaque handles.
struct Dist {
  tk_dist* ptr = nullptr;
  Dist(tk_family f, double c) { check(tk_dist_create(f, c, &ptr), "dist"); }
  ~Dist() { tk_dist_destroy(ptr); }
  Dist(const Dist&) = delete;
  Dist& operator=(const Dist&) = delete;
};

struct Rng {
  tk_rng* ptr = nullptr;
  explicit Rng(std::uint64_t seed) { check(tk_rng_create(seed, &ptr), "rng"); }
  ~Rng() { tk_rng_destroy(ptr); }
  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
};

ordered_json modulus_json(const tk_modulus& m) {
  return ordered_json{{"k", m.k}, {"k_prime", m.k_prime}, {"K", m.K},
                      {"K_prime", m.K_prime}, {"E", m.E}, {"E_prime", m.E_prime}};
}

// ---- theta -----------------------------------------------------------------

void add_theta(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* theta = app.add_subcommand("theta", "Jacobi theta functions");
  theta->require_subcommand(1);

  struct Opts {
    int kind = 3;
    double z = 0, q = 0, t = 1;
    std::string method = "series";
  };
  static Opts o;

  auto* eval = theta->add_subcommand("eval", "theta_kind(z, q)");
  eval->add_option("--kind", o.kind, "1, 2, 3 or 4")->required()->check(CLI::Range(1, 4));
  eval->add_option("--z", o.z, "real argument")->required();
  eval->add_option("--q", o.q, "nome in (0, 1)")->required();
  eval->add_option("--method", o.method, "series or product")
      ->check(CLI::IsMember({"series", "product"}));
  eval->callback([&] {
    action = [&] {
      double v;
      const auto m = o.method == "series" ? TK_THETA_SERIES : TK_THETA_PRODUCT;
      check(tk_theta(o.kind, o.z, o.q, m, &policy, &v), "theta eval");
      Record r("theta eval", policy);
      r.input("kind", o.kind).input("z", o.z).input("q", o.q).input("method", o.method);
      r.body["value"] = v;
      r.emit(o.method);
    };
  });

  auto* prime = theta->add_subcommand("prime", "d/dz theta_1(z, q)");
  prime->add_option("--z", o.z)->required();
  prime->add_option("--q", o.q)->required();
  prime->callback([&] {
    action = [&] {
      double v;
      check(tk_theta1_prime(o.z, o.q, &policy, &v), "theta prime");
      Record r("theta prime", policy);
      r.input("z", o.z).input("q", o.q);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto* modular = theta->add_subcommand("modular", "both sides of the modular identity at tau = i t");
  modular->add_option("--kind", o.kind)->required()->check(CLI::Range(1, 4));
  modular->add_option("--z", o.z)->required();
  modular->add_option("--t", o.t)->required();
  modular->callback([&] {
    action = [&] {
      double lhs, rhs;
      check(tk_modular_pair(o.kind, o.z, o.t, &policy, &lhs, &rhs), "theta modular");
      Record r("theta modular", policy);
      r.input("kind", o.kind).input("z", o.z).input("t", o.t);
      r.body["values"] = {{"lhs", lhs}, {"rhs", rhs}, {"defect", std::fabs(lhs - rhs)}};
      r.emit("series");
    };
  });
}

// ---- elliptic --------------------------------------------------------------

void add_elliptic(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* ell = app.add_subcommand("elliptic", "complete elliptic integrals and moduli");
  ell->require_subcommand(1);
  static double k = 0, c = 0;

  auto scalar = [&](const char* name, const char* help,
                    tk_status (*fn)(double, double*)) {
    auto* sub = ell->add_subcommand(name, help);
    sub->add_option("--k", k, "modulus")->required();
    sub->callback([&action, &policy, name, fn] {
      action = [&policy, name, fn] {
        double v;
        const std::string cmd = std::string("elliptic ") + name;
        check(fn(k, &v), cmd);
        Record r(cmd, policy);
        r.input("k", k);
        r.body["value"] = v;
        r.emit("series");
      };
    });
  };
  scalar("k", "K(k)", tk_ellip_k);
  scalar("e", "E(k)", tk_ellip_e);
  scalar("nome", "q = exp(-pi K(k')/K(k))", tk_nome_from_modulus);
  scalar("lattice", "c = K(k')/K(k)", tk_lattice_from_modulus);

  auto* from_c = ell->add_subcommand("modulus-from-c", "k with K(k')/K(k) = c");
  from_c->add_option("--c", c, "lattice parameter > 0")->required();
  from_c->callback([&] {
    action = [&] {
      tk_modulus m;
      check(tk_modulus_from_lattice(c, &m), "elliptic modulus-from-c");
      Record r("elliptic modulus-from-c", policy);
      r.input("c", c);
      r.body["values"] = modulus_json(m);
      r.emit("series");
    };
  });
}

// ---- dist ------------------------------------------------------------------

void add_dist(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* dist = app.add_subcommand("dist", "discrete Gaussian theta_2 / theta_3 laws");
  dist->require_subcommand(1);

  struct Opts {
    std::string family;
    double c = 1;
    std::string route;
    std::uint64_t seed = kDefaultSeed;
    long n = 0;
    int order = 2;
    double z = 0;
  };
  static Opts o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "theta2 or theta3")
        ->required()
        ->check(CLI::IsMember(keys_of(kFamilies)));
    sub->add_option("--c", o.c, "lattice parameter > 0")->required();
  };
  auto base = [&](const std::string& cmd) {
    Record r(cmd, policy);
    r.input("family", o.family).input("c", o.c);
    return r;
  };

  auto* pmf = dist->add_subcommand("pmf", "P(X = n)");
  common(pmf);
  pmf->add_option("--n", o.n, "integer point");
  pmf->callback([=, &action, &policy] {
    action = [=, &policy] {
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      check(tk_dist_pmf(d.ptr, o.n, &v), "dist pmf");
      auto r = base("dist pmf");
      r.input("n", o.n);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto* mean = dist->add_subcommand("mean", "E[X]");
  common(mean);
  mean->callback([=, &action, &policy] {
    action = [=, &policy] {
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      check(tk_dist_mean(d.ptr, &v), "dist mean");
      auto r = base("dist mean");
      r.body["value"] = v;
      r.emit("closed-form");
    };
  });

  static const std::map<std::string, tk_variance_route> var_routes = {
      {"elliptic", TK_VAR_ELLIPTIC}, {"lambert", TK_VAR_LAMBERT}, {"direct", TK_VAR_DIRECT}};
  auto* var = dist->add_subcommand("var", "Var[X]");
  common(var);
  var->add_option("--route", o.route, "elliptic, lambert or direct")
      ->check(CLI::IsMember(keys_of(var_routes)));
  var->callback([=, &action, &policy] {
    action = [=, &policy] {
      const std::string route = o.route.empty() ? "elliptic" : o.route;
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      check(tk_dist_variance(d.ptr, var_routes.at(route), &policy, &v), "dist var");
      auto r = base("dist var");
      r.input("route", route);
      r.body["value"] = v;
      r.emit(route == "elliptic" ? "closed-form" : "series");
    };
  });

  static const std::map<std::string, tk_cumulant_route> cum_routes = {
      {"lambert", TK_CUMULANT_LAMBERT}, {"eisenstein", TK_CUMULANT_EISENSTEIN}};
  auto* cumulant = dist->add_subcommand("cumulant", "cumulant kappa_order");
  common(cumulant);
  cumulant->add_option("--order", o.order, "1..30")->check(CLI::Range(1, 30));
  cumulant->add_option("--route", o.route, "lambert or eisenstein")
      ->check(CLI::IsMember(keys_of(cum_routes)));
  cumulant->callback([=, &action, &policy] {
    action = [=, &policy] {
      const std::string route = o.route.empty() ? "lambert" : o.route;
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      check(tk_dist_cumulant(d.ptr, o.order, cum_routes.at(route), &policy, &v), "dist cumulant");
      auto r = base("dist cumulant");
      r.input("order", o.order).input("route", route);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto* mgf = dist->add_subcommand("mgf", "E[exp(z X)]");
  common(mgf);
  mgf->add_option("--z", o.z)->required();
  mgf->callback([=, &action, &policy] {
    action = [=, &policy] {
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      check(tk_dist_mgf(d.ptr, o.z, &policy, &v), "dist mgf");
      auto r = base("dist mgf");
      r.input("z", o.z);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto* entropy = dist->add_subcommand("entropy", "Shannon entropy in nats");
  common(entropy);
  entropy->add_option("--route", o.route, "direct, or elliptic (theta3 only)")
      ->check(CLI::IsMember({"direct", "elliptic"}));
  entropy->callback([=, &action, &policy] {
    action = [=, &policy] {
      const std::string route = o.route.empty() ? "direct" : o.route;
      Dist d(kFamilies.at(o.family), o.c);
      double v;
      if (route == "elliptic") {
        if (o.family != "theta3") usage_error("dist entropy: the elliptic route is theta3 only");
        tk_modulus m;
        check(tk_dist_modulus(d.ptr, &m), "dist entropy");
        check(tk_entropy_theta3_elliptic(m.k, &v), "dist entropy");
      } else {
        check(tk_dist_entropy(d.ptr, &v), "dist entropy");
      }
      auto r = base("dist entropy");
      r.input("route", route);
      r.body["value"] = v;
      r.emit(route == "elliptic" ? "closed-form" : "series");
    };
  });

  static const std::map<std::string, tk_sampler> samplers = {{"exact", TK_SAMPLER_EXACT},
                                                             {"bernoulli", TK_SAMPLER_BERNOULLI}};
  auto* sample = dist->add_subcommand("sample", "draw from the law");
  common(sample);
  sample->add_option("--n", o.n, "number of draws (default 10)")->check(CLI::Range(0L, 100000000L));
  sample->add_option("--seed", o.seed, "RNG seed (default 12345)");
  sample->add_option("--route", o.route, "exact or bernoulli")
      ->check(CLI::IsMember(keys_of(samplers)));
  sample->callback([=, &action, &policy] {
    action = [=, &policy] {
      const std::string route = o.route.empty() ? "exact" : o.route;
      const long count = sample->count("--n") ? o.n : 10;
      Dist d(kFamilies.at(o.family), o.c);
      Rng rng(o.seed);
      std::vector<long> draws;
      draws.reserve(static_cast<std::size_t>(count));
      for (long i = 0; i < count; ++i) {
        long x;
        check(tk_dist_sample(d.ptr, rng.ptr, samplers.at(route), &policy, &x), "dist sample");
        draws.push_back(x);
      }
      auto r = base("dist sample");
      r.input("n", count).input("seed", o.seed).input("route", route);
      r.body["values"] = draws;
      r.emit("monte-carlo");
    };
  });
}

// ---- bm --------------------------------------------------------------------

void add_bm(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* bm = app.add_subcommand("bm", "Brownian motion on [-1, 1]");
  bm->require_subcommand(1);

  struct Opts {
    std::string process = "reflected";
    std::string method = "spectral";
    double t = 1, x = 0, y = 0, alpha = 1, dt = 1e-3;
    long n = 10;
    std::uint64_t seed = kDefaultSeed;
    std::string scheme = "bridge";
  };
  static Opts o;

  auto method_opt = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "images or spectral (default spectral)")
        ->check(CLI::IsMember(keys_of(kMethods)));
  };
  auto process_opt = [&](CLI::App* sub) {
    sub->add_option("--process", o.process, "reflected or killed (default reflected)")
        ->check(CLI::IsMember(keys_of(kProcesses)));
  };
  // Images Green functions are the hyperbolic closed forms.
  auto provenance = [] { return o.method == "spectral" ? "series" : "closed-form"; };

  auto* dens = bm->add_subcommand("density", "transition density w.r.t. 2 dy");
  process_opt(dens);
  method_opt(dens);
  dens->add_option("--t", o.t)->required();
  dens->add_option("--x", o.x)->required();
  dens->add_option("--y", o.y)->required();
  dens->callback([=, &action, &policy] {
    action = [=, &policy] {
      double v;
      check(tk_bm_density(kProcesses.at(o.process), kMethods.at(o.method), o.t, o.x, o.y,
                          &policy, &v),
            "bm density");
      Record r("bm density", policy);
      r.input("process", o.process).input("method", o.method);
      r.input("t", o.t).input("x", o.x).input("y", o.y);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto* grn = bm->add_subcommand("green", "Green function int e^{-alpha t} p dt");
  process_opt(grn);
  method_opt(grn);
  grn->add_option("--alpha", o.alpha)->required();
  grn->add_option("--x", o.x)->required();
  grn->add_option("--y", o.y)->required();
  grn->callback([=, &action, &policy] {
    action = [=, &policy] {
      double v;
      check(tk_bm_green(kProcesses.at(o.process), kMethods.at(o.method), o.alpha, o.x, o.y,
                        &policy, &v),
            "bm green");
      Record r("bm green", policy);
      r.input("process", o.process).input("method", o.method);
      r.input("alpha", o.alpha).input("x", o.x).input("y", o.y);
      r.body["value"] = v;
      r.emit(provenance());
    };
  });

  auto* surv = bm->add_subcommand("exit-survival", "P(H > t), H the exit time of (-1, 1)");
  surv->add_option("--t", o.t)->required();
  surv->callback([=, &action, &policy] {
    action = [=, &policy] {
      double v;
      check(tk_bm_exit_survival(o.t, &policy, &v), "bm exit-survival");
      Record r("bm exit-survival", policy);
      r.input("t", o.t);
      r.body["value"] = v;
      r.emit("series");
    };
  });

  auto time_fn = [&](const char* name, const char* help,
                     tk_status (*fn)(tk_method, double, const tk_policy*, double*)) {
    auto* sub = bm->add_subcommand(name, help);
    method_opt(sub);
    sub->add_option("--t", o.t)->required();
    sub->callback([&action, &policy, name, fn] {
      action = [&policy, name, fn] {
        double v;
        const std::string cmd = std::string("bm ") + name;
        check(fn(kMethods.at(o.method), o.t, &policy, &v), cmd);
        Record r(cmd, policy);
        r.input("method", o.method).input("t", o.t);
        r.body["value"] = v;
        r.emit("series");
      };
    });
  };
  time_fn("exit-density", "density of H", tk_bm_exit_density);
  time_fn("bessel3-pdf", "density of the Bessel(3) hitting time of 1", tk_bessel3_pdf);
  time_fn("bessel3-cdf", "CDF of the Bessel(3) hitting time of 1", tk_bessel3_cdf);

  auto* lap = bm->add_subcommand("bessel3-laplace", "E[exp(-alpha H_1)]");
  lap->add_option("--alpha", o.alpha)->required();
  lap->callback([=, &action, &policy] {
    action = [=, &policy] {
      double v;
      check(tk_bessel3_laplace(o.alpha, &v), "bm bessel3-laplace");
      Record r("bm bessel3-laplace", policy);
      r.input("alpha", o.alpha);
      r.body["value"] = v;
      r.emit("closed-form");
    };
  });

  auto* exit_mc = bm->add_subcommand("exit-sample", "simulated exit times of (-1, 1)");
  exit_mc->add_option("--dt", o.dt, "time step (default 1e-3)");
  exit_mc->add_option("--n", o.n, "number of paths (default 10)")->check(CLI::Range(0L, 100000000L));
  exit_mc->add_option("--seed", o.seed, "RNG seed (default 12345)");
  exit_mc->add_option("--scheme", o.scheme, "bridge or plain")
      ->check(CLI::IsMember({"bridge", "plain"}));
  exit_mc->callback([=, &action, &policy] {
    action = [=, &policy] {
      Rng rng(o.seed);
      const auto scheme = o.scheme == "plain" ? TK_EXIT_PLAIN_EULER : TK_EXIT_BRIDGE;
      std::vector<double> out;
      for (long i = 0; i < o.n; ++i) {
        double h;
        check(tk_bm_exit_sample(rng.ptr, o.dt, scheme, &h), "bm exit-sample");
        out.push_back(h);
      }
      Record r("bm exit-sample", policy);
      r.input("dt", o.dt).input("n", o.n).input("seed", o.seed).input("scheme", o.scheme);
      r.body["values"] = out;
      r.emit("monte-carlo");
    };
  });
}

// ---- kolmogorov ------------------------------------------------------------

void add_kolmogorov(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* kol = app.add_subcommand("kolmogorov", "law of sup |Brownian bridge|");
  kol->require_subcommand(1);
  static double h = 1;
  static std::string route;
  static long n = 10, steps = 10000;
  static std::uint64_t seed = kDefaultSeed;
  static const std::map<std::string, tk_kolmogorov_route> routes = {
      {"series", TK_KOLMOGOROV_SERIES},
      {"product", TK_KOLMOGOROV_PRODUCT},
      {"elliptic", TK_KOLMOGOROV_ELLIPTIC}};

  auto fn = [&](const char* name, const char* help,
                tk_status (*f)(double, tk_kolmogorov_route, const tk_policy*, double*)) {
    auto* sub = kol->add_subcommand(name, help);
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--h", h, "h > 0")->required();
    sub->add_option("--route", route, "series, product or elliptic (default series)")
        ->check(CLI::IsMember(keys_of(routes)));
    sub->callback([&action, &policy, name, f] {
      action = [&policy, name, f] {
        const std::string rt = route.empty() ? "series" : route;
        const std::string cmd = std::string("kolmogorov ") + name;
        double v;
        check(f(h, routes.at(rt), &policy, &v), cmd);
        Record r(cmd, policy);
        r.input("h", h).input("route", rt);
        r.body["value"] = v;
        r.emit(rt == "elliptic" ? "closed-form" : rt);
      };
    });
  };
  fn("cdf", "F(h)", tk_kolmogorov_cdf);
  fn("pdf", "F'(h)", tk_kolmogorov_pdf);

  auto* sample = kol->add_subcommand("sample", "simulated sup |bridge| values");
  sample->add_option("--n", n, "number of paths (default 10)")->check(CLI::Range(0L, 100000000L));
  sample->add_option("--steps", steps, "grid steps per path (default 10000)")
      ->check(CLI::Range(1L, 100000000L));
  sample->add_option("--seed", seed, "RNG seed (default 12345)");
  sample->callback([&] {
    action = [&] {
      Rng rng(seed);
      std::vector<double> out;
      for (long i = 0; i < n; ++i) {
        double s;
        check(tk_kolmogorov_bridge_sample(rng.ptr, steps, &s), "kolmogorov sample");
        out.push_back(s);
      }
      Record r("kolmogorov sample", policy);
      r.input("n", n).input("steps", steps).input("seed", seed);
      r.body["values"] = out;
      r.emit("monte-carlo");
    };
  });
}

// ---- verify ----------------------------------------------------------------

void add_verify(CLI::App& app, std::function<void()>& action, int& exit_code,
                const tk_policy& policy) {
  auto* ver = app.add_subcommand("verify", "run identity checks");
  static std::vector<std::string> suite;
  static double tol = 0;
  static bool list = false;
  ver->add_option("--suite", suite, "identity labels, or all (default)");
  ver->add_option("--tol", tol, "override every identity tolerance")->check(CLI::PositiveNumber);
  ver->add_flag("--list", list, "print the registered labels");
  ver->callback([&] {
    action = [&] {
      if (list) {
        ordered_json names = ordered_json::array();
        for (std::size_t i = 0; i < tk_identity_count(); ++i) names.push_back(tk_identity_name(i));
        Record r("verify", policy);
        r.input("list", true);
        r.body["values"] = names;
        r.emit("series");
        return;
      }
      const std::vector<std::string> labels = suite.empty() ? std::vector<std::string>{"all"} : suite;
      std::vector<const char*> raw;
      for (const auto& s : labels) raw.push_back(s.c_str());
      tk_report_list* reports = nullptr;
      check(tk_verify_run(raw.data(), raw.size(), tol, &policy, &reports), "verify");
      std::unique_ptr<tk_report_list, void (*)(tk_report_list*)> owner(reports,
                                                                       tk_report_list_destroy);
      ordered_json out = ordered_json::array();
      std::size_t failures = 0;
      for (std::size_t i = 0; i < tk_report_count(reports); ++i) {
        tk_report_view v;
        check(tk_report_get(reports, i, &v), "verify");
        ordered_json axes = ordered_json::array();
        for (std::size_t a = 0; a < v.n_axes; ++a) axes.push_back(v.axes[a]);
        ordered_json grid = ordered_json::array();
        for (std::size_t p = 0; p < v.n_points; ++p) {
          grid.push_back(std::vector<double>(v.points + p * v.n_axes, v.points + (p + 1) * v.n_axes));
        }
        out.push_back({{"name", v.name},
                       {"description", v.description},
                       {"axes", axes},
                       {"grid", grid},
                       {"max_defect", v.max_defect},
                       {"tol", v.tol},
                       {"passed", v.passed != 0},
                       {"worst", std::vector<double>(v.worst, v.worst + v.n_axes)}});
        if (!v.passed) {
          ++failures;
          std::cerr << "thetakit: verify: " << v.name << " failed (max_defect " << v.max_defect
                    << " > tol " << v.tol << ")\n";
        }
      }
      Record r("verify", policy);
      r.input("suite", labels);
      if (tol > 0) r.input("tol", tol);
      r.body["reports"] = out;
      r.body["passed"] = failures == 0;
      r.body["failures"] = failures;
      r.emit("series");
      if (failures > 0) exit_code = 1;
    };
  });
}

// ---- tables ----------------------------------------------------------------

void add_tables(CLI::App& app, std::function<void()>& action, const tk_policy& policy) {
  auto* tab = app.add_subcommand("tables", "singular-value and variance tables");
  static int id = 0;
  static std::vector<int> rs;
  static std::string format = "json";
  tab->add_option("table", id, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  tab->add_option("--r", rs, "rows in 1..10 (default all)")->check(CLI::Range(1, 10));
  tab->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  tab->callback([&] {
    action = [&] {
      std::vector<int> rows = rs;
      if (rows.empty()) {
        for (int r = 1; r <= 10; ++r) rows.push_back(r);
      }
      ordered_json out = ordered_json::array();
      for (int r : rows) {
        const double c = std::sqrt(static_cast<double>(r));
        ordered_json row;
        row["r"] = r;
        if (id == 1) {
          tk_singular s;
          tk_modulus m;
          check(tk_singular_reference(r, &s), "tables 1");
          check(tk_modulus_from_lattice(c, &m), "tables 1");
          const double alpha = std::acos(-1.0) / (4.0 * m.K * m.K) + c * (1.0 - m.E / m.K);
          row["closed_form"] = s.k_r;
          row["recomputed"] = m.k;
          row["abs_diff"] = std::fabs(s.k_r - m.k);
          row["K_closed_form"] = s.K_r;
          row["K_recomputed"] = m.K;
          row["alpha_closed_form"] = s.alpha_r;
          row["alpha_recomputed"] = alpha;
        } else {
          const tk_family fam = id == 2 ? TK_FAMILY_THETA2 : TK_FAMILY_THETA3;
          const std::string op = "tables " + std::to_string(id);
          double closed, printed, recomputed;
          check(tk_variance_closed_form(fam, r, &closed), op);
          check(tk_variance_printed(fam, r, &printed), op);
          Dist d(fam, c);
          check(tk_dist_variance(d.ptr, TK_VAR_ELLIPTIC, &policy, &recomputed), op);
          row["closed_form"] = closed;
          row["recomputed"] = recomputed;
          row["abs_diff"] = std::fabs(closed - recomputed);
          row["printed"] = printed;
        }
        out.push_back(row);
      }
      if (format == "csv") {
        std::printf("r,closed_form,recomputed,abs_diff\n");
        for (const auto& row : out) {
          std::printf("%d,%.17g,%.17g,%.17g\n", row["r"].get<int>(), row["closed_form"].get<double>(),
                      row["recomputed"].get<double>(), row["abs_diff"].get<double>());
        }
        return;
      }
      Record rec("tables", policy);
      rec.input("table", id).input("r", rows).input("format", format);
      rec.body["rows"] = out;
      rec.emit("closed-form");
    };
  });
}

int run(int argc, char** argv) {
  CLI::App app{"thetakit: theta functions, elliptic integrals, Brownian kernels, "
               "discrete Gaussian and Kolmogorov laws"};
  app.require_subcommand(1);
  std::function<void()> action;
  int exit_code = 0;
  tk_policy policy{};
  try {
    policy = policy_from_env();
  } catch (const Failure& f) {
    std::cerr << "thetakit: " << f.message << "\n";
    return f.code;
  }

  add_theta(app, action, policy);
  add_elliptic(app, action, policy);
  add_dist(app, action, policy);
  add_bm(app, action, policy);
  add_kolmogorov(app, action, policy);
  add_verify(app, action, exit_code, policy);
  add_tables(app, action, policy);

  if (argc > 1 && argv[1][0] != '-') {
    try {
      (void)app.get_subcommand(argv[1]);
    } catch (const CLI::OptionNotFound&) {
      std::cerr << "thetakit: unknown subcommand '" << argv[1] << "' (see --help)\n";
      return 2;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "thetakit: " << e.what() << "\n";
    return 2;
  }
  try {
    if (action) action();
  } catch (const Failure& f) {
    std::cerr << "thetakit: " << f.message << "\n";
    return f.code;
  }
  std::cout.flush();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
