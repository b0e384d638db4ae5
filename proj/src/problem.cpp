#include "hardy/problem.hpp"

#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Interior sample points of (0, D), mixing uniform and log placement; for an
// infinite domain the points are pushed through t -> t/(1-t).
std::vector<double> sample_points(double D, int n) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const bool inf = std::isinf(D);
  const double scale = inf ? 1.0 : D;
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    double t = scale * (i + 0.5) / half;
    xs.push_back(inf ? t / (1.0 + 1e-12 - t) : t);
  }
  for (int i = 0; i < n - half; ++i) {
    double t = scale * std::pow(1e-12, 1.0 - (i + 0.5) / (n - half));
    xs.push_back(inf ? t / (1.0 - t) : t);
  }
  return xs;
}

void check_density_signs(const Density& d, double D, bool strictly_positive,
                         const char* name) {
  for (const double x : sample_points(D, 1000)) {
    double val;
    try {
      val = d(x);
    } catch (const EvalError& e) {
      throw DomainError(std::string(name) + " density not evaluable on (0, D): " + e.what());
    }
    if (std::isnan(val) || val < 0.0) {
      throw DomainError(std::string(name) + " density must be nonnegative on (0, D)");
    }
    if (strictly_positive && val == 0.0) {
      throw DomainError(std::string(name) + " density must be positive a.e. on (0, D)");
    }
  }
}

}  // namespace

ProblemSpec ProblemSpec::make(double p, double q, double D, Density u, Density v) {
  const auto exps = specfun::Exponents::make(p, q);
  if (!(D > 0.0) || std::isnan(D)) throw DomainError("domain bound D must be positive");
  check_density_signs(u, D, false, "u");
  check_density_signs(v, D, true, "v");
  return ProblemSpec{p, q, D, std::move(u), std::move(v), exps};
}

bool ProblemSpec::infinite_domain() const { return std::isinf(D); }

double vhat(const ProblemSpec& spec, double x) {
  const double val = spec.v(x);
  if (std::isnan(val) || val < 0.0) throw EvalError("v is negative or undefined");
  if (val == 0.0) return kInf;
  return std::pow(val, 1.0 - spec.exps.p_star);
}

double nuhat_cum(const ProblemSpec& spec, double x, const quad::QuadConfig& cfg) {
  if (!(x >= 0.0) || (x > spec.D && !spec.infinite_domain())) {
    throw DomainError("nuhat_cum requires 0 <= x <= D");
  }
  if (x == 0.0) return 0.0;
  if (const auto pl = spec.v.power_law_params()) {
    const double e = pl->exponent * (1.0 - spec.exps.p_star);
    if (e <= -1.0) throw DivergenceError("dual density is not integrable at 0");
    const double c = std::pow(pl->coef, 1.0 - spec.exps.p_star);
    if (std::isinf(x)) return kInf;
    return c * std::pow(x, e + 1.0) / (e + 1.0);
  }
  return quad::integrate([&spec](double y) { return vhat(spec, y); }, 0.0, x, cfg);
}

double mu_tail(const ProblemSpec& spec, double x, const quad::QuadConfig& cfg) {
  if (!(x > 0.0) || (x > spec.D && !spec.infinite_domain())) {
    throw DomainError("mu_tail requires 0 < x <= D");
  }
  if (x == spec.D) return 0.0;
  if (spec.infinite_domain()) {
    if (const auto pl = spec.u.power_law_params()) {
      if (pl->exponent >= -1.0) throw DivergenceError("mu has infinite tail mass");
      return pl->coef * std::pow(x, pl->exponent + 1.0) / (-pl->exponent - 1.0);
    }
  }
  return quad::integrate([&spec](double y) { return spec.u(y); }, x, spec.D, cfg);
}

std::pair<ProblemSpec, DomainMap> transform_domain(const ProblemSpec& spec) {
  if (!spec.infinite_domain()) {
    throw DomainError("transform_domain requires D = +inf");
  }
  const Density u = spec.u;
  const Density v = spec.v;
  const double jac_pow = 2.0 * (spec.p - 1.0);
  Density ut = Density::mapped(
      [u](double t) {
        if (t >= 1.0) throw EvalError("transformed density queried at the right endpoint");
        const double om = 1.0 - t;
        return u(t / om) / (om * om);
      },
      "pullback[" + u.describe() + "]");
  Density vt = Density::mapped(
      [v, jac_pow](double t) {
        if (t >= 1.0) throw EvalError("transformed density queried at the right endpoint");
        const double om = 1.0 - t;
        return v(t / om) * std::pow(om, jac_pow);
      },
      "pullback[" + v.describe() + "]");
  ProblemSpec out = ProblemSpec::make(spec.p, spec.q, 1.0, std::move(ut), std::move(vt));
  return {std::move(out), DomainMap{true}};
}

std::pair<ProblemSpec, DomainMap> reduce_domain(const ProblemSpec& spec) {
  if (spec.infinite_domain()) return transform_domain(spec);
  return {spec, DomainMap{false}};
}

ProblemSpec transform_problem(const ProblemSpec& spec) {
  if (!(spec.q >= spec.p)) throw DomainError("transform_problem requires q >= p");
  if (spec.q == spec.p) return spec;
  const double pt = spec.q / spec.exps.p_star + 1.0;
  Density vt = Density::pow_of(spec.v, spec.q / spec.p);
  return ProblemSpec::make(pt, pt, spec.D, spec.u, std::move(vt));
}

ProblemSpec sharp_instance(const Density& v, double B1, double p, double q, double D) {
  if (!(q > p)) throw DomainError("sharp_instance requires q > p");
  if (!(B1 > 0.0) || !std::isfinite(B1)) throw DomainError("sharp_instance requires B1 > 0");
  const auto exps = specfun::Exponents::make(p, q);
  const double dual_pow = 1.0 - exps.p_star;
  const double s_pow = -q / exps.p_star - 1.0;
  const double front = q / exps.p_star * std::pow(B1, q);

  std::function<double(double)> s_of;  // s(x) = int_0^x v^(1-p*)
  if (const auto pl = v.power_law_params()) {
    const double e = pl->exponent * dual_pow;
    if (e <= -1.0) throw DivergenceError("dual density is not integrable at 0");
    const double c = std::pow(pl->coef, dual_pow);
    s_of = [c, e](double x) { return c * std::pow(x, e + 1.0) / (e + 1.0); };
  } else {
    const Density vc = v;
    s_of = [vc, dual_pow](double x) {
      return quad::integrate([&vc, dual_pow](double y) { return std::pow(vc(y), dual_pow); },
                             0.0, x);
    };
    s_of(std::isinf(D) ? 1.0 : D / 2.0);  // probe: divergence surfaces here
  }

  const Density vcopy = v;
  Density u = Density::mapped(
      [vcopy, s_of, front, s_pow, dual_pow](double x) {
        const double s = s_of(x);
        return front * std::pow(s, s_pow) * std::pow(vcopy(x), dual_pow);
      },
      "sharp[" + v.describe() + "]");
  return ProblemSpec::make(p, q, D, std::move(u), v);
}

}  // namespace hardy
