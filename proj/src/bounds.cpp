#include "hardy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/specfun.hpp"
#include "internal.hpp"

namespace hardy::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

detail::Frame frame_of(const ProblemSpec& spec, const BoundsOptions& opts) {
  return detail::make_frame(spec, opts.grid_nodes, opts.quad);
}

double basic_B_on(const detail::Frame& fr, double* loc) {
  const auto& e = fr.spec.exps;
  auto phi = fr.phi;
  auto mu = fr.mu;
  const double a = 1.0 / e.p_star, b = 1.0 / e.q;
  const auto obj = [phi, mu, a, b](double x) {
    const double pv = (*phi)(x);
    const double mv = (*mu)(x);
    if (!(pv >= 0.0) || !(mv >= 0.0)) return 0.0;
    return std::pow(pv, a) * std::pow(mv, b);
  };
  const auto r = quad::sup_search(obj, 0.0, fr.spec.D, quad::SupHint::General, fr.cfg);
  if (loc) *loc = fr.map.to_original(r.x);
  return r.value;
}

double deltabar1_on(const detail::Frame& fr, double* loc) {
  const auto obj = detail::deltabar1_objective(fr);
  const auto r = quad::sup_search(obj, 0.0, fr.spec.D, quad::SupHint::General, fr.cfg);
  if (loc) *loc = fr.map.to_original(r.x);
  return std::pow(r.value, 1.0 / fr.spec.exps.q);
}

double deltatilde1_on(const detail::Frame& fr, int x0_scan, double* loc) {
  const auto& e = fr.spec.exps;
  const auto ns = fr.grid->nodes();
  const double D = fr.spec.D;

  // piecewise-linear phi and H(y) = int_0^y phi^(q-1) u keep the per-x0 cost
  // at a few grid passes; their h^2 interpolation error is far below the
  // accuracy this bound is consumed at
  const quad::GridFunction phipl{fr.grid, detail::phi_nodes_clamped(fr)};
  const double qm1 = e.q - 1.0;
  const quad::CumulativeEval H(
      [&phipl, qm1, &fr](double y) { return std::pow(phipl(y), qm1) * fr.u_at(y); }, fr.grid,
      fr.cfg);
  const quad::GridFunction Hpl = H.node_values();

  const auto value_at = [&](double x0) -> double {
    const double p0 = phipl(x0);
    if (!(p0 > 0.0) || !std::isfinite(p0)) return 0.0;
    const double mu0 = (*fr.mu)(x0);
    if (!std::isfinite(mu0)) return 0.0;
    const double cst = std::pow(p0, qm1) * mu0;
    const double hx0 = Hpl(x0);
    const auto bracket = [&](double y) {
      const double b = hx0 - Hpl(y) + cst;
      return b > 0.0 ? b : 0.0;
    };
    const auto df2 = [&](double y) {
      return fr.vhat_at(y) * std::pow(bracket(y), e.p_star - 1.0);
    };
    // f2 nodes up to x0, then the partial panel
    const std::size_t kx = fr.grid->panel_of(x0);
    std::vector<double> f2(kx + 1);
    f2[0] = 0.0;
    for (std::size_t k = 0; k < kx; ++k) {
      f2[k + 1] = f2[k] + quad::integrate(df2, ns[k], ns[k + 1], fr.cfg);
    }
    const double f2x0 = f2[kx] + (x0 > ns[kx] ? quad::integrate(df2, ns[kx], x0, fr.cfg) : 0.0);
    if (!(f2x0 > 0.0) || !std::isfinite(f2x0)) return 0.0;

    double normq = std::pow(f2x0, e.q) * mu0;
    for (std::size_t k = 0; k < kx; ++k) {
      const double fa = f2[k], fb = f2[k + 1], xa = ns[k], xb = ns[k + 1];
      normq += quad::integrate(
          [&](double y) {
            const double fy = fa + (fb - fa) * (y - xa) / (xb - xa);
            return std::pow(fy, e.q) * fr.u_at(y);
          },
          xa, xb, fr.cfg);
    }
    if (x0 > ns[kx]) {
      const double fa = f2[kx], xa = ns[kx];
      normq += quad::integrate(
          [&](double y) {
            const double fy = fa + (f2x0 - fa) * (y - xa) / (x0 - xa);
            return std::pow(fy, e.q) * fr.u_at(y);
          },
          xa, x0, fr.cfg);
    }
    if (!(normq > 0.0)) return 0.0;
    return std::pow(normq, 1.0 / e.q - 1.0 / e.p) * std::pow(f2x0 / p0, (e.q - 1.0) / e.p);
  };

  // coarse log-spaced scan, then golden refinement around the best point
  const int m = std::max(8, x0_scan);
  double best_x = 0.0, best_v = 0.0;
  std::vector<double> xs(m);
  for (int j = 0; j < m; ++j) {
    xs[j] = D * std::pow(1e-6, 1.0 - (j + 1.0) / m);
    const double v = value_at(xs[j]);
    if (v > best_v) {
      best_v = v;
      best_x = xs[j];
    }
  }
  if (best_v > 0.0) {
    int bj = 0;
    for (int j = 0; j < m; ++j)
      if (xs[j] == best_x) bj = j;
    const double lo = bj > 0 ? xs[bj - 1] : 0.25 * xs[0];
    const double hi = bj + 1 < m ? xs[bj + 1] : D;
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = value_at(x1), f2v = value_at(x2);
    for (int it = 0; it < 80 && b - a > 1e-10 * D; ++it) {
      if (f1 >= f2v) {
        b = x2;
        x2 = x1;
        f2v = f1;
        x1 = b - gr * (b - a);
        f1 = value_at(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2v;
        x2 = a + gr * (b - a);
        f2v = value_at(x2);
      }
      const double fv = std::max(f1, f2v);
      if (fv > best_v) {
        best_v = fv;
        best_x = f1 >= f2v ? x1 : x2;
      }
    }
  }
  if (loc) *loc = fr.map.to_original(best_x);
  return best_v;
}

bool is_unit_lebesgue(const ProblemSpec& spec) {
  return spec.D == 1.0 && spec.u.is_constant_one() && spec.v.is_constant_one();
}

std::pair<double, bool> a_star_on(const ProblemSpec& spec, int effort,
                                  const BoundsOptions& opts) {
  if (!(spec.q >= spec.p)) throw DomainError("a_star requires q >= p");
  if (effort < 1) throw DomainError("a_star requires effort >= 1");
  const double expo = 1.0 / spec.exps.p_star + 1.0 / spec.q;
  const ProblemSpec companion = transform_problem(spec);
  if (is_unit_lebesgue(spec)) {
    const double pt = companion.p;
    const double app = pt * std::sin(kPi / pt) / (kPi * std::pow(pt - 1.0, 1.0 / pt));
    return {std::pow(app, expo), true};
  }
  auto fr = detail::make_frame(companion, opts.grid_nodes, opts.quad);
  const auto deltas = detail::delta_sequence(fr, effort);
  return {std::pow(deltas.back(), expo), false};
}

}  // namespace

double basic_B(const ProblemSpec& spec, const BoundsOptions& opts) {
  try {
    const auto fr = frame_of(spec, opts);
    return basic_B_on(fr, nullptr);
  } catch (const DivergenceError&) {
    return kInf;  // no finite constant exists
  }
}

std::pair<double, double> basic_bracket(const ProblemSpec& spec, const BoundsOptions& opts) {
  if (!(spec.q >= spec.p)) throw DomainError("basic_bracket requires q >= p");
  const double B = basic_B(spec, opts);
  return {B, specfun::k_factor(spec.p, spec.q) * B};
}

double delta1(const ProblemSpec& spec, const BoundsOptions& opts) {
  if (!(spec.q >= spec.p)) throw DomainError("delta1 requires q >= p");
  const auto fr = frame_of(spec, opts);
  return detail::delta_sequence(fr, 1).front();
}

double deltabar1(const ProblemSpec& spec, const BoundsOptions& opts) {
  const auto fr = frame_of(spec, opts);
  return deltabar1_on(fr, nullptr);
}

double deltatilde1(const ProblemSpec& spec, const BoundsOptions& opts) {
  const auto fr = frame_of(spec, opts);
  return deltatilde1_on(fr, opts.x0_scan, nullptr);
}

std::pair<double, bool> a_star(const ProblemSpec& spec, int effort, const BoundsOptions& opts) {
  return a_star_on(spec, effort, opts);
}

BoundsReport full_report(const ProblemSpec& spec, const BoundsOptions& opts) {
  BoundsReport rep;
  rep.upper_applicable = spec.q >= spec.p;

  bool frame_ok = true;
  try {
    const auto fr = frame_of(spec, opts);

    double loc = 0.0;
    rep.B = basic_B_on(fr, &loc);
    rep.locations["B"] = loc;

    rep.deltabar1 = deltabar1_on(fr, &loc);
    rep.locations["deltabar1"] = loc;

    try {
      rep.deltatilde1 = deltatilde1_on(fr, opts.x0_scan, &loc);
      rep.locations["deltatilde1"] = loc;
    } catch (const DivergenceError&) {
      rep.divergences.push_back("deltatilde1");
      rep.deltatilde1 = 0.0;  // still a valid lower-bound contribution
    }

    if (rep.upper_applicable) {
      if (std::isfinite(rep.B)) {
        rep.k_B = specfun::k_factor(spec.p, spec.q) * rep.B;
        rep.ktilde_B = specfun::k_tilde(spec.p, spec.q) * rep.B;
      }
      try {
        double dloc = 0.0;
        rep.delta1 = detail::delta_sequence(fr, 1, &dloc).front();
        rep.locations["delta1"] = fr.map.to_original(dloc);
      } catch (const DivergenceError&) {
        rep.divergences.push_back("delta1");
      }
      try {
        const auto [as, exact] = a_star_on(spec, 1, opts);
        rep.a_star = as;
        rep.a_star_exact = exact;
      } catch (const DivergenceError&) {
        rep.divergences.push_back("a_star");
      }
    }
  } catch (const DivergenceError& e) {
    rep.divergences.push_back(std::string("basic: ") + e.what());
    rep.B = kInf;
    frame_ok = false;
  }

  rep.lower = frame_ok ? std::max({rep.B, rep.deltabar1, rep.deltatilde1}) : kInf;

  if (rep.upper_applicable) {
    double up = kInf;
    if (rep.delta1) up = std::min(up, *rep.delta1);
    if (rep.k_B) up = std::min(up, *rep.k_B);
    if (rep.a_star) up = std::min(up, *rep.a_star);
    if (!frame_ok) up = kInf;
    if (rep.B == 0.0) up = 0.0;  // mu carries no mass
    rep.upper = up;
  } else {
    rep.upper = kInf;
  }
  return rep;
}

}  // namespace hardy::bounds
