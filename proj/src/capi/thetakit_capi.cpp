#include "thetakit/thetakit.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "brownian.hpp"
#include "discrete_gaussian.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "kolmogorov.hpp"
#include "reference_tables.hpp"
#include "theta.hpp"
#include "verify.hpp"

using namespace thetakit;

struct tk_dist {
  ThetaDistribution impl;
};

struct tk_rng {
  std::mt19937_64 engine;
};

struct tk_report_list {
  struct Entry {
    VerificationReport report;
    std::vector<const char*> axes;
    std::vector<double> points;
  };
  std::vector<Entry> entries;
};

namespace {

thread_local std::string g_last_error;

tk_status fail(tk_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs body, mapping library exceptions to status codes.
template <class F>
tk_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TK_OK;
  } catch (const DomainError& e) {
    return fail(TK_ERR_DOMAIN, e.what());
  } catch (const NonConvergent& e) {
    return fail(TK_ERR_NONCONVERGENT, e.what());
  } catch (const Overflow& e) {
    return fail(TK_ERR_OVERFLOW, e.what());
  } catch (const UnknownIdentity& e) {
    return fail(TK_ERR_UNKNOWN_IDENTITY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TK_ERR_INTERNAL, e.what());
  }
}

#define TK_REQUIRE(ptr)                                          \
  do {                                                           \
    if ((ptr) == nullptr) {                                      \
      return fail(TK_ERR_NULL_ARGUMENT, #ptr " must not be NULL"); \
    }                                                            \
  } while (0)

SeriesPolicy to_policy(const tk_policy* p) {
  if (p == nullptr) return SeriesPolicy{};
  return SeriesPolicy{p->tol, p->max_terms};
}

tk_modulus to_c(const EllipticModulus& m) {
  return tk_modulus{m.k, m.k_prime, m.bigK, m.bigK_prime, m.bigE, m.bigE_prime};
}

Family to_family(tk_family f) {
  switch (f) {
    case TK_FAMILY_THETA2:
      return Family::Theta2;
    case TK_FAMILY_THETA3:
      return Family::Theta3;
  }
  throw DomainError("family must be TK_FAMILY_THETA2 or TK_FAMILY_THETA3");
}

MethodKind to_method(tk_method m) {
  switch (m) {
    case TK_METHOD_IMAGES:
      return MethodKind::Images;
    case TK_METHOD_SPECTRAL:
      return MethodKind::Spectral;
  }
  throw DomainError("unknown method");
}

ProcessKind to_process(tk_process p) {
  switch (p) {
    case TK_PROCESS_REFLECTED:
      return ProcessKind::Reflected;
    case TK_PROCESS_KILLED:
      return ProcessKind::Killed;
  }
  throw DomainError("unknown process");
}

KolmogorovRoute to_route(tk_kolmogorov_route r) {
  switch (r) {
    case TK_KOLMOGOROV_SERIES:
      return KolmogorovRoute::Series;
    case TK_KOLMOGOROV_PRODUCT:
      return KolmogorovRoute::Product;
    case TK_KOLMOGOROV_ELLIPTIC:
      return KolmogorovRoute::Elliptic;
  }
  throw DomainError("unknown Kolmogorov route");
}

HyperbolicKind to_hyperbolic(tk_hyperbolic h) {
  switch (h) {
    case TK_HYPERBOLIC_COTH:
      return HyperbolicKind::Coth;
    case TK_HYPERBOLIC_CSCH:
      return HyperbolicKind::Csch;
    case TK_HYPERBOLIC_TANH:
      return HyperbolicKind::Tanh;
    case TK_HYPERBOLIC_SECH:
      return HyperbolicKind::Sech;
  }
  throw DomainError("unknown hyperbolic kind");
}

}  // namespace

extern "C" {

const char* tk_status_string(tk_status status) {
  switch (status) {
    case TK_OK:
      return "ok";
    case TK_ERR_DOMAIN:
      return "domain error";
    case TK_ERR_NONCONVERGENT:
      return "no convergence";
    case TK_ERR_OVERFLOW:
      return "overflow";
    case TK_ERR_UNKNOWN_IDENTITY:
      return "unknown identity";
    case TK_ERR_NULL_ARGUMENT:
      return "null argument";
    case TK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* tk_last_error(void) { return g_last_error.c_str(); }

tk_policy tk_default_policy(void) {
  const SeriesPolicy p;
  return tk_policy{p.tol, p.max_terms};
}

tk_status tk_theta(int kind, double z, double q, tk_theta_method method,
                   const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    const auto k = theta_kind_from_int(kind);
    const auto pol = to_policy(policy);
    if (method == TK_THETA_SERIES) {
      *out = theta_series(k, z, q, pol);
    } else if (method == TK_THETA_PRODUCT) {
      *out = theta_product(k, z, q, pol);
    } else {
      throw DomainError("unknown theta method");
    }
  });
}

tk_status tk_theta1_prime(double z, double q, const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = theta1_prime(z, q, to_policy(policy)); });
}

tk_status tk_modular_pair(int kind, double z, double t, const tk_policy* policy,
                          double* lhs, double* rhs) {
  TK_REQUIRE(lhs);
  TK_REQUIRE(rhs);
  return guarded([&] {
    const auto m = modular_pair(theta_kind_from_int(kind), z, t, to_policy(policy));
    *lhs = m.lhs;
    *rhs = m.rhs;
  });
}

tk_status tk_ellip_k(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = ellip_k(k); });
}

tk_status tk_ellip_e(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = ellip_e(k); });
}

tk_status tk_modulus_from_k(double k, tk_modulus* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = to_c(EllipticModulus::from_k(k)); });
}

tk_status tk_modulus_from_lattice(double c, tk_modulus* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = to_c(modulus_from_lattice(c)); });
}

tk_status tk_lattice_from_modulus(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = lattice_from_modulus(k); });
}

tk_status tk_nome_from_modulus(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = nome_from_modulus(k); });
}

tk_status tk_landen_ascend(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = landen_ascend(k); });
}

tk_status tk_legendre_defect(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = legendre_defect(EllipticModulus::from_k(k)); });
}

tk_status tk_singular_reference(int r, tk_singular* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    const auto v = singular_reference(r);
    *out = tk_singular{v.r, v.k_r, v.bigK_r, v.alpha_r};
  });
}

tk_status tk_variance_closed_form(tk_family family, int r, double* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    *out = to_family(family) == Family::Theta2 ? theta2_variance_closed_form(r)
                                               : theta3_variance_closed_form(r);
  });
}

tk_status tk_variance_printed(tk_family family, int r, double* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    *out = to_family(family) == Family::Theta2 ? theta2_variance_printed(r)
                                               : theta3_variance_printed(r);
  });
}

tk_status tk_dist_create(tk_family family, double c, tk_dist** out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = new tk_dist{ThetaDistribution(to_family(family), c)}; });
}

tk_status tk_dist_create_from_modulus(tk_family family, double k, tk_dist** out) {
  TK_REQUIRE(out);
  return guarded([&] {
    *out = new tk_dist{ThetaDistribution::from_modulus(to_family(family), k)};
  });
}

void tk_dist_destroy(tk_dist* dist) { delete dist; }

tk_status tk_dist_modulus(const tk_dist* dist, tk_modulus* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  *out = to_c(dist->impl.modulus());
  return TK_OK;
}

tk_status tk_dist_support(const tk_dist* dist, long* min, long* max) {
  TK_REQUIRE(dist);
  TK_REQUIRE(min);
  TK_REQUIRE(max);
  *min = dist->impl.support_min();
  *max = dist->impl.support_max();
  return TK_OK;
}

tk_status tk_dist_pmf(const tk_dist* dist, long n, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.pmf(n); });
}

tk_status tk_dist_mean(const tk_dist* dist, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.mean(); });
}

tk_status tk_dist_variance(const tk_dist* dist, tk_variance_route route,
                           const tk_policy* policy, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] {
    VarianceRoute r;
    switch (route) {
      case TK_VAR_ELLIPTIC:
        r = VarianceRoute::Elliptic;
        break;
      case TK_VAR_LAMBERT:
        r = VarianceRoute::Lambert;
        break;
      case TK_VAR_DIRECT:
        r = VarianceRoute::Direct;
        break;
      default:
        throw DomainError("unknown variance route");
    }
    *out = dist->impl.variance(r, to_policy(policy));
  });
}

tk_status tk_dist_cumulant(const tk_dist* dist, int order, tk_cumulant_route route,
                           const tk_policy* policy, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] {
    CumulantRoute r;
    switch (route) {
      case TK_CUMULANT_LAMBERT:
        r = CumulantRoute::Lambert;
        break;
      case TK_CUMULANT_EISENSTEIN:
        r = CumulantRoute::Eisenstein;
        break;
      default:
        throw DomainError("unknown cumulant route");
    }
    *out = dist->impl.cumulant(order, r, to_policy(policy));
  });
}

tk_status tk_dist_mgf(const tk_dist* dist, double z, const tk_policy* policy, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.mgf(z, to_policy(policy)); });
}

tk_status tk_dist_signed_mean(const tk_dist* dist, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.signed_mean(); });
}

tk_status tk_dist_odd_probability(const tk_dist* dist, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.odd_probability(); });
}

tk_status tk_dist_entropy(const tk_dist* dist, double* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(out);
  return guarded([&] { *out = dist->impl.entropy_direct(); });
}

tk_status tk_entropy_theta3_elliptic(double k, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = entropy_theta3(k); });
}

tk_status tk_rng_create(uint64_t seed, tk_rng** out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = new tk_rng{std::mt19937_64(seed)}; });
}

void tk_rng_destroy(tk_rng* rng) { delete rng; }

tk_status tk_dist_sample(const tk_dist* dist, tk_rng* rng, tk_sampler sampler,
                         const tk_policy* policy, long* out) {
  TK_REQUIRE(dist);
  TK_REQUIRE(rng);
  TK_REQUIRE(out);
  return guarded([&] {
    if (sampler == TK_SAMPLER_EXACT) {
      *out = dist->impl.sample_exact(rng->engine);
    } else if (sampler == TK_SAMPLER_BERNOULLI) {
      *out = dist->impl.sample_bernoulli(rng->engine, to_policy(policy));
    } else {
      throw DomainError("unknown sampler");
    }
  });
}

tk_status tk_bm_density(tk_process process, tk_method method, double t, double x, double y,
                        const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    *out = density(to_process(process), to_method(method), DensityQuery{t, x, y},
                   to_policy(policy));
  });
}

tk_status tk_bm_green(tk_process process, tk_method method, double alpha, double x, double y,
                      const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] {
    *out = green(to_process(process), to_method(method), alpha, x, y, to_policy(policy));
  });
}

tk_status tk_bm_exit_survival(double t, const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = exit_survival(t, to_policy(policy)); });
}

tk_status tk_bm_exit_density(tk_method method, double t, const tk_policy* policy,
                             double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = exit_density(to_method(method), t, to_policy(policy)); });
}

tk_status tk_bm_exit_sample(tk_rng* rng, double dt, tk_exit_scheme scheme, double* out) {
  TK_REQUIRE(rng);
  TK_REQUIRE(out);
  return guarded([&] {
    const auto s = scheme == TK_EXIT_PLAIN_EULER ? ExitScheme::PlainEuler
                                                 : ExitScheme::BridgeCorrected;
    *out = mc_exit_sample(rng->engine, dt, s);
  });
}

tk_status tk_bessel3_pdf(tk_method method, double t, const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = bessel3_hit_density(to_method(method), t, to_policy(policy)); });
}

tk_status tk_bessel3_cdf(tk_method method, double t, const tk_policy* policy, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = bessel3_hit_cdf(to_method(method), t, to_policy(policy)); });
}

tk_status tk_bessel3_laplace(double alpha, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = bessel3_hit_laplace(alpha); });
}

tk_status tk_kolmogorov_cdf(double h, tk_kolmogorov_route route, const tk_policy* policy,
                            double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = kolmogorov_cdf(h, to_route(route), to_policy(policy)); });
}

tk_status tk_kolmogorov_pdf(double h, tk_kolmogorov_route route, const tk_policy* policy,
                            double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = kolmogorov_pdf(h, to_route(route), to_policy(policy)); });
}

tk_status tk_kolmogorov_pdf_alternative(double h, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = kolmogorov_pdf_as_printed(h); });
}

tk_status tk_kolmogorov_bridge_sample(tk_rng* rng, long n_steps, double* out) {
  TK_REQUIRE(rng);
  TK_REQUIRE(out);
  return guarded([&] {
    if (n_steps < 1) throw DomainError("n_steps must be >= 1");
    *out = mc_bridge_sup_sample(rng->engine, n_steps);
  });
}

tk_status tk_ml_partial(tk_hyperbolic kind, double z, long n_terms, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = ml_partial(to_hyperbolic(kind), z, n_terms); });
}

tk_status tk_ml_accelerated(tk_hyperbolic kind, double z, long n_terms, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = ml_accelerated(to_hyperbolic(kind), z, n_terms); });
}

tk_status tk_ml_direct(tk_hyperbolic kind, double z, double* out) {
  TK_REQUIRE(out);
  return guarded([&] { *out = ml_direct(to_hyperbolic(kind), z); });
}

size_t tk_identity_count(void) {
  static const size_t n = identity_names().size();
  return n;
}

const char* tk_identity_name(size_t index) {
  static const std::vector<std::string> names = identity_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

tk_status tk_verify_run(const char* const* names, size_t n_names, double tol,
                        const tk_policy* policy, tk_report_list** out) {
  TK_REQUIRE(names);
  TK_REQUIRE(out);
  return guarded([&] {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n_names; ++i) {
      if (names[i] == nullptr) throw DomainError("identity name must not be NULL");
      labels.emplace_back(names[i]);
    }
    const auto tol_opt = tol > 0.0 ? std::optional<double>(tol) : std::nullopt;
    auto reports = run_suite(labels, tol_opt, to_policy(policy));
    auto list = std::make_unique<tk_report_list>();
    list->entries.resize(reports.size());
    for (size_t i = 0; i < reports.size(); ++i) {
      auto& e = list->entries[i];
      e.report = std::move(reports[i]);
      for (const auto& a : e.report.axes) e.axes.push_back(a.c_str());
      for (const auto& p : e.report.grid) e.points.insert(e.points.end(), p.begin(), p.end());
    }
    *out = list.release();
  });
}

void tk_report_list_destroy(tk_report_list* list) { delete list; }

size_t tk_report_count(const tk_report_list* list) {
  return list == nullptr ? 0 : list->entries.size();
}

tk_status tk_report_get(const tk_report_list* list, size_t index, tk_report_view* out) {
  TK_REQUIRE(list);
  TK_REQUIRE(out);
  if (index >= list->entries.size()) {
    return fail(TK_ERR_DOMAIN, "report index out of range");
  }
  const auto& e = list->entries[index];
  out->name = e.report.name.c_str();
  out->description = e.report.description.c_str();
  out->n_axes = e.axes.size();
  out->axes = e.axes.data();
  out->n_points = e.report.grid.size();
  out->points = e.points.data();
  out->worst = e.report.worst.data();
  out->max_defect = e.report.max_defect;
  out->tol = e.report.tol;
  out->passed = e.report.passed ? 1 : 0;
  return TK_OK;
}

}  // extern "C"
