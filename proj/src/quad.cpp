#include "hardy/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy::quad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss(7)-Kronrod(15) on [-1, 1]; all nodes interior, so the rule is open.
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469};

struct RuleResult {
  double integral;
  double error;
};

RuleResult gk15(const Fn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - hw * kKronrodX[i]);
    fv[14 - i] = f(c + hw * kKronrodX[i]);
  }
  fv[7] = f(c);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 7; ++i) k += kKronrodW[i] * (fv[i] + fv[14 - i]);
  k += kKronrodW[7] * fv[7];
  for (int i = 0; i < 3; ++i) g += kGaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  g += kGaussW[3] * fv[7];
  k *= hw;
  g *= hw;
  // QUADPACK-style scaled error estimate
  const double mean = k / (b - a);
  double resasc = 0.0;
  for (int i = 0; i < 7; ++i) {
    resasc += kKronrodW[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }
  resasc += kKronrodW[7] * std::fabs(fv[7] - mean);
  resasc *= std::fabs(hw);
  double err = std::fabs(k - g);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {k, err};
}

double adaptive_gk(const Fn& f, double a, double b, double abs_tol, double rel_tol,
                   int depth, int max_depth) {
  const RuleResult r = gk15(f, a, b);
  if (std::isfinite(r.integral) && r.error <= std::max(abs_tol, rel_tol * std::fabs(r.integral))) {
    return r.integral;
  }
  const double m = 0.5 * (a + b);
  if (depth >= max_depth || m <= a || m >= b) {
    if (std::isfinite(r.integral) &&
        r.error <= 1e3 * std::max(abs_tol, rel_tol * std::fabs(r.integral))) {
      return r.integral;  // close enough; panel budgets are conservative
    }
    throw ConvergenceError("adaptive quadrature did not converge");
  }
  return adaptive_gk(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1, max_depth) +
         adaptive_gk(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth);
}

// Integrates over a slice with a suspected singularity at one endpoint:
// geometric strips toward the endpoint, ratio-extrapolated tail. A stable
// strip ratio >= 0.97 (or growth) is classified as a divergent integral.
double singular_slice(const Fn& f, double lo, double hi, bool singular_at_lo,
                      const QuadConfig& cfg) {
  const double width = hi - lo;
  const double s = 0.125;
  double sum = 0.0;
  double prev_strip = 0.0;
  double prev_ratio = -1.0;
  int stable = 0;
  double t_hi = 1.0;
  for (int j = 0; j < 600; ++j) {
    const double t_lo = t_hi * s;
    const double x0 = singular_at_lo ? lo + width * t_lo : hi - width * t_hi;
    const double x1 = singular_at_lo ? lo + width * t_hi : hi - width * t_lo;
    if (x0 >= x1 || x1 - x0 < 1e-305) {
      return sum;  // strip width exhausted at double resolution
    }
    const double strip =
        adaptive_gk(f, x0, x1, 0.25 * cfg.abs_tol, 0.5 * cfg.rel_tol, 0, cfg.max_depth);
    sum += strip;
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(sum));
    const double as = std::fabs(strip);
    if (as <= 0.02 * tol) return sum;
    if (j > 0 && std::fabs(prev_strip) > 0.0) {
      const double ratio = as / std::fabs(prev_strip);
      if (prev_ratio >= 0.0 && std::fabs(ratio - prev_ratio) <= 0.02 * ratio + 1e-14) {
        ++stable;
      } else {
        stable = 0;
      }
      if (stable >= 2) {
        if (ratio >= 0.97) {
          throw DivergenceError("endpoint singularity is not integrable");
        }
        const double tail = as * ratio / (1.0 - ratio);
        const double drift = std::fabs(ratio - prev_ratio) + 1e-16;
        const double tail_err = drift * as / ((1.0 - ratio) * (1.0 - ratio));
        if (tail_err <= 0.3 * tol) {
          return sum + (strip < 0.0 ? -tail : tail);
        }
      }
      prev_ratio = ratio;
    }
    prev_strip = strip;
    t_hi = t_lo;
  }
  throw ConvergenceError("endpoint strip summation did not converge");
}

double integrate_finite(const Fn& f, double a, double b, const QuadConfig& cfg) {
  if (a == b) return 0.0;
  const RuleResult fast = gk15(f, a, b);
  if (std::isfinite(fast.integral) &&
      fast.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(fast.integral))) {
    return fast.integral;
  }
  // peel both end slices, which absorb endpoint singularities
  const double w = 0.125 * (b - a);
  if (!(a + w < b - w)) {
    return adaptive_gk(f, a, b, cfg.abs_tol, cfg.rel_tol, 0, cfg.max_depth);
  }
  QuadConfig part = cfg;
  part.abs_tol = cfg.abs_tol / 3.0;
  double left, right;
  const RuleResult lr = gk15(f, a, a + w);
  if (std::isfinite(lr.integral) &&
      lr.error <= std::max(part.abs_tol, cfg.rel_tol * std::fabs(lr.integral))) {
    left = lr.integral;
  } else {
    left = singular_slice(f, a, a + w, true, part);
  }
  const RuleResult rr = gk15(f, b - w, b);
  if (std::isfinite(rr.integral) &&
      rr.error <= std::max(part.abs_tol, cfg.rel_tol * std::fabs(rr.integral))) {
    right = rr.integral;
  } else {
    right = singular_slice(f, b - w, b, false, part);
  }
  const double mid =
      adaptive_gk(f, a + w, b - w, part.abs_tol, cfg.rel_tol, 0, cfg.max_depth);
  return left + mid + right;
}

}  // namespace

double integrate(const Fn& f, double a, double b, const QuadConfig& cfg) {
  if (std::isnan(a) || std::isnan(b)) throw DomainError("integrate: NaN bound");
  if (b < a) throw DomainError("integrate: requires a <= b");
  if (std::isinf(a)) throw DomainError("integrate: lower bound must be finite");
  if (std::isinf(b)) {
    // x = a + t/(1-t) maps (a, inf) onto (0, 1)
    const Fn g = [&f, a](double t) {
      const double om = 1.0 - t;
      return f(a + t / om) / (om * om);
    };
    return integrate_finite(g, 0.0, 1.0, cfg);
  }
  return integrate_finite(f, a, b, cfg);
}

std::shared_ptr<const Grid> Grid::make(double d_eff, int n_nodes, GridLayout layout) {
  if (!(d_eff > 0.0) || !std::isfinite(d_eff)) throw DomainError("grid needs finite d_eff > 0");
  if (n_nodes < 16) throw DomainError("grid needs at least 16 nodes");
  constexpr double kEdge = 1e-10;  // relative offset of the node closest to an endpoint
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n_nodes));
  switch (layout) {
    case GridLayout::Uniform:
      for (int k = 0; k < n_nodes; ++k) xs.push_back(d_eff * k / (n_nodes - 1.0));
      break;
    case GridLayout::LogNearZero: {
      xs.push_back(0.0);
      const int m = n_nodes - 1;
      for (int k = 1; k <= m; ++k) {
        xs.push_back(d_eff * std::pow(kEdge, (m - k) / (m - 1.0)));
      }
      break;
    }
    case GridLayout::LogBothEnds: {
      xs.push_back(0.0);
      const int interior = n_nodes - 2;
      const int left = (interior + 1) / 2;   // ends at d/2
      const int right = interior - left;     // approaches d from below
      for (int k = 1; k <= left; ++k) {
        xs.push_back(0.5 * d_eff * std::pow(kEdge, (left - k) / (left - 1.0)));
      }
      for (int i = 1; i <= right; ++i) {
        xs.push_back(d_eff - 0.5 * d_eff * std::pow(kEdge, i / static_cast<double>(right)));
      }
      xs.push_back(d_eff);
      break;
    }
  }
  return from_nodes(std::move(xs));
}

std::shared_ptr<const Grid> Grid::from_nodes(std::vector<double> nodes) {
  if (nodes.size() < 16) throw DomainError("grid needs at least 16 nodes");
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i] > nodes[i - 1])) throw DomainError("grid nodes must ascend strictly");
  }
  if (nodes.front() != 0.0) throw DomainError("grid must start at 0");
  return std::shared_ptr<const Grid>(new Grid(std::move(nodes)));
}

std::size_t Grid::panel_of(double x) const {
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::ptrdiff_t idx = std::max<std::ptrdiff_t>(1, it - nodes_.begin()) - 1;
  return std::min<std::size_t>(static_cast<std::size_t>(idx), nodes_.size() - 2);
}

double GridFunction::operator()(double x) const {
  const auto ns = grid->nodes();
  if (x <= ns.front()) return values.front();
  if (x >= ns.back()) return values.back();
  const std::size_t k = grid->panel_of(x);
  const double t = (x - ns[k]) / (ns[k + 1] - ns[k]);
  return values[k] + t * (values[k + 1] - values[k]);
}

GridFunction cum_integral(const Fn& f, const GridPtr& grid, const QuadConfig& cfg) {
  const auto ns = grid->nodes();
  std::vector<double> vals(ns.size());
  vals[0] = 0.0;
  for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
    if (!std::isfinite(vals[k])) {
      vals[k + 1] = vals[k];
      continue;
    }
    double piece;
    try {
      piece = integrate(f, ns[k], ns[k + 1], cfg);
    } catch (const DivergenceError&) {
      if (k == 0) throw;  // the cumulative would be infinite everywhere
      piece = kInf;
    }
    vals[k + 1] = vals[k] + piece;
  }
  return GridFunction{grid, std::move(vals)};
}

GridFunction tail_integral(const Fn& f, const GridPtr& grid, const QuadConfig& cfg) {
  const auto ns = grid->nodes();
  const std::size_t n = ns.size();
  std::vector<double> vals(n);
  vals[n - 1] = 0.0;
  for (std::size_t k = n - 1; k-- > 0;) {
    if (!std::isfinite(vals[k + 1])) {
      vals[k] = vals[k + 1];
      continue;
    }
    double piece;
    try {
      piece = integrate(f, ns[k], ns[k + 1], cfg);
    } catch (const DivergenceError&) {
      if (k == n - 2) throw;  // the tail would be infinite everywhere
      piece = kInf;           // only the mass near 0 diverges
    }
    vals[k] = vals[k + 1] + piece;
  }
  return GridFunction{grid, std::move(vals)};
}

namespace {

double safe_eval(const Fn& g, double x) {
  const double v = g(x);
  return std::isnan(v) ? -kInf : v;
}

SupResult golden_max(const Fn& g, double lo, double hi, double seed_x, double seed_v) {
  const double gr = 0.6180339887498949;
  const double tol = 1e-12 * std::max(1.0, hi - lo);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = safe_eval(g, x1), f2 = safe_eval(g, x2);
  double best_x = seed_x, best_v = seed_v;
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = safe_eval(g, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = safe_eval(g, x2);
    }
    if (f1 > best_v) best_v = f1, best_x = x1;
    if (f2 > best_v) best_v = f2, best_x = x2;
  }
  return {best_x, best_v};
}

}  // namespace

SupResult sup_search(const Fn& g, double a, double b, SupHint hint, const QuadConfig&) {
  if (!(b > a)) throw DomainError("sup_search: empty interval");
  const int n = hint == SupHint::Unimodal ? 64 : 1024;
  std::vector<double> xs(n), vs(n);
  int finite = 0;
  for (int i = 0; i < n; ++i) {
    xs[i] = a + (b - a) * (i + 0.5) / n;
    vs[i] = safe_eval(g, xs[i]);
    if (vs[i] > -kInf) ++finite;
    if (vs[i] == kInf) return {xs[i], kInf};
  }
  if (finite == 0) throw EvalError("sup_search: no finite samples in scan");

  auto bracket = [&](int i) {
    const double lo = i > 0 ? xs[i - 1] : a;
    const double hi = i + 1 < n ? xs[i + 1] : b;
    return golden_max(g, lo, hi, xs[i], vs[i]);
  };

  if (hint == SupHint::Unimodal) {
    int best = 0;
    for (int i = 1; i < n; ++i)
      if (vs[i] > vs[best]) best = i;
    return bracket(best);
  }
  // refine the three best scan points
  int order[3] = {-1, -1, -1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (order[j] < 0 || vs[i] > vs[order[j]]) {
        for (int k = 2; k > j; --k) order[k] = order[k - 1];
        order[j] = i;
        break;
      }
    }
  }
  SupResult best{xs[order[0]], vs[order[0]]};
  for (int j = 0; j < 3; ++j) {
    if (order[j] < 0) continue;
    const SupResult r = bracket(order[j]);
    if (r.value > best.value) best = r;
  }
  return best;
}

CumulativeEval::CumulativeEval(Fn f, GridPtr grid, const QuadConfig& cfg)
    : f_(std::move(f)), cfg_(cfg), nodes_(cum_integral(f_, grid, cfg)) {}

double CumulativeEval::operator()(double x) const {
  const auto ns = nodes_.grid->nodes();
  if (x <= ns.front()) return 0.0;
  if (x >= ns.back()) return nodes_.values.back();
  const std::size_t k = nodes_.grid->panel_of(x);
  const double base = nodes_.values[k];
  if (!std::isfinite(base)) return base;
  if (x == ns[k]) return base;
  return base + integrate(f_, ns[k], x, cfg_);
}

TailEval::TailEval(Fn f, GridPtr grid, const QuadConfig& cfg)
    : f_(std::move(f)), cfg_(cfg), nodes_(tail_integral(f_, grid, cfg)) {}

double TailEval::operator()(double x) const {
  const auto ns = nodes_.grid->nodes();
  if (x >= ns.back()) return 0.0;
  if (x <= ns.front()) return nodes_.values.front();
  const std::size_t k = nodes_.grid->panel_of(x);
  const double base = nodes_.values[k + 1];
  if (!std::isfinite(base)) return base;
  if (x == ns[k + 1]) return base;
  return base + integrate(f_, x, ns[k + 1], cfg_);
}

}  // namespace hardy::quad
