#include "hardy/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "internal.hpp"

namespace hardy::iterate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Golden refinement of fn around a coarse log-spaced scan maximum over (0, D].
double log_scan_max(const std::function<double(double)>& fn, double D, int m, double* loc) {
  m = std::max(8, m);
  std::vector<double> xs(m);
  double best_v = 0.0, best_x = D;
  int bj = m - 1;
  for (int j = 0; j < m; ++j) {
    xs[j] = D * std::pow(1e-6, 1.0 - (j + 1.0) / m);
    const double v = fn(xs[j]);
    if (v > best_v) {
      best_v = v;
      best_x = xs[j];
      bj = j;
    }
  }
  const double lo = bj > 0 ? xs[bj - 1] : 0.25 * xs[0];
  const double hi = bj + 1 < m ? xs[bj + 1] : D;
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  for (int it = 0; it < 120 && b - a > 1e-13 * D; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = fn(x2);
    }
    const double fv = std::max(f1, f2);
    if (fv > best_v) {
      best_v = fv;
      best_x = f1 >= f2 ? x1 : x2;
    }
  }
  if (loc) *loc = best_x;
  return best_v;
}

// Quotient chain ||f_n||/||f_n'|| for the truncation point at node j; returns
// the values for n = 1 .. n_max.
std::vector<double> truncated_chain(const detail::Frame& fr, std::size_t j, int n_max) {
  const auto& e = fr.spec.exps;
  const auto ns = fr.grid->nodes();
  const std::size_t n = ns.size();
  const double x0 = ns[j];
  const auto phin = detail::phi_nodes_clamped(fr);
  const double phi0 = phin[j];
  const double mu0 = (*fr.mu)(x0);
  std::vector<double> out(static_cast<std::size_t>(n_max), 0.0);
  if (!(phi0 > 0.0) || !std::isfinite(phi0) || !std::isfinite(mu0)) return out;

  // f_1 = phi(. ^ x0)
  std::vector<double> f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = phin[std::min(k, j)];

  auto mu_norm_q = [&](const std::vector<double>& g, double gx0) {
    double acc = std::pow(gx0, e.q) * mu0;
    for (std::size_t k = 0; k < j; ++k) {
      const double fa = g[k], fb = g[k + 1], xa = ns[k], xb = ns[k + 1];
      acc += quad::integrate(
          [&](double y) {
            const double fy = fa + (fb - fa) * (y - xa) / (xb - xa);
            return std::pow(std::max(fy, 0.0), e.q) * fr.u_at(y);
          },
          xa, xb, fr.cfg);
    }
    return acc;
  };

  // n = 1: ||f_1'||_{v,p}^p = phi(x0)
  {
    const double numq = mu_norm_q(f, phi0);
    out[0] = std::pow(numq, 1.0 / e.q) / std::pow(phi0, 1.0 / e.p);
  }

  for (int step = 1; step < n_max; ++step) {
    // tails of f^(q-1) d(mu), continuous near a possibly infinite left node
    const quad::GridFunction fpl{fr.grid, f};
    auto tail_integrand = [&](double y) {
      return std::pow(std::max(fpl(y), 0.0), e.q - 1.0) * fr.u_at(y);
    };
    const quad::GridFunction tails = quad::tail_integral(tail_integrand, fr.grid, fr.cfg);
    auto tail_at = [&](double y) -> double {
      const std::size_t k = fr.grid->panel_of(y);
      if (std::isfinite(tails.values[k])) {
        const double t = (y - ns[k]) / (ns[k + 1] - ns[k]);
        return tails.values[k] + t * (tails.values[k + 1] - tails.values[k]);
      }
      return tails.values[k + 1] + quad::integrate(tail_integrand, y, ns[k + 1], fr.cfg);
    };

    // f_next = int_0^{x ^ x0} vhat tail^(p*-1); derivative norm uses tail^(p*)
    std::vector<double> fn(n, 0.0);
    double denp = 0.0;
    bool ok = true;
    for (std::size_t k = 0; k < j; ++k) {
      const double inc = quad::integrate(
          [&](double y) { return fr.vhat_at(y) * std::pow(tail_at(y), e.p_star - 1.0); },
          ns[k], ns[k + 1], fr.cfg);
      const double dinc = quad::integrate(
          [&](double y) { return fr.vhat_at(y) * std::pow(tail_at(y), e.p_star); }, ns[k],
          ns[k + 1], fr.cfg);
      if (!std::isfinite(inc) || !std::isfinite(dinc)) {
        ok = false;
        break;
      }
      fn[k + 1] = fn[k] + inc;
      denp += dinc;
    }
    if (!ok || !(denp > 0.0)) break;
    for (std::size_t k = j; k < n; ++k) fn[k] = fn[j];

    const double numq = mu_norm_q(fn, fn[j]);
    out[static_cast<std::size_t>(step)] = std::pow(numq, 1.0 / e.q) / std::pow(denp, 1.0 / e.p);

    double m = 0.0;
    for (const double v : fn) m = std::max(m, v);
    if (!(m > 0.0)) break;
    for (double& v : fn) v /= m;
    f = std::move(fn);
  }
  return out;
}

}  // namespace

std::vector<double> iterate_delta(const ProblemSpec& spec, int n_max,
                                  const IterateOptions& opts) {
  if (n_max < 1) throw DomainError("iterate_delta requires n_max >= 1");
  if (!(spec.q >= spec.p)) throw DomainError("iterate_delta requires q >= p");
  const auto fr = detail::make_frame(spec, opts.grid_nodes, opts.quad);
  return detail::delta_sequence(fr, n_max);
}

std::vector<double> iterate_deltabar(const ProblemSpec& spec, int n_max, int x0_grid_size,
                                     const IterateOptions& opts) {
  if (n_max < 1) throw DomainError("iterate_deltabar requires n_max >= 1");
  const auto fr = detail::make_frame(spec, opts.grid_nodes, opts.quad);
  const auto ns = fr.grid->nodes();
  const std::size_t n = ns.size();

  std::vector<double> result(static_cast<std::size_t>(n_max), 0.0);

  // n = 1 through the analytically reduced objective and a continuous search
  {
    const auto obj = detail::deltabar1_objective(fr);
    const double sup =
        log_scan_max([&obj](double x0) { return obj(x0); }, fr.spec.D, x0_grid_size, nullptr);
    result[0] = std::pow(sup, 1.0 / fr.spec.exps.q);
  }
  if (n_max == 1) return result;

  // coarse log-spaced truncation nodes
  std::vector<std::size_t> idx;
  const int m = std::max(8, x0_grid_size);
  for (int jj = 0; jj < m; ++jj) {
    const double target = fr.spec.D * std::pow(1e-6, 1.0 - (jj + 1.0) / m);
    std::size_t k = fr.grid->panel_of(target) + 1;
    k = std::min(k, n - 1);
    if (k >= 2 && (idx.empty() || idx.back() != k)) idx.push_back(k);
  }

  std::vector<std::size_t> best_idx(static_cast<std::size_t>(n_max), idx.front());
  for (const std::size_t j : idx) {
    const auto vals = truncated_chain(fr, j, n_max);
    for (int s = 1; s < n_max; ++s) {
      if (vals[static_cast<std::size_t>(s)] > result[static_cast<std::size_t>(s)]) {
        result[static_cast<std::size_t>(s)] = vals[static_cast<std::size_t>(s)];
        best_idx[static_cast<std::size_t>(s)] = j;
      }
    }
  }
  // one refinement pass: walk the unexplored nodes around each argmax
  for (int s = 1; s < n_max; ++s) {
    const std::size_t jb = best_idx[static_cast<std::size_t>(s)];
    auto pos = std::find(idx.begin(), idx.end(), jb);
    const std::size_t lo = pos != idx.begin() ? *(pos - 1) + 1 : std::max<std::size_t>(2, jb / 2);
    const std::size_t hi = (pos + 1) != idx.end() ? *(pos + 1) : std::min(n - 1, jb + 8);
    const std::size_t stride = std::max<std::size_t>(1, (hi - lo) / 16);
    for (std::size_t j = lo; j < hi; j += stride) {
      if (j == jb) continue;
      const auto vals = truncated_chain(fr, j, n_max);
      if (vals[static_cast<std::size_t>(s)] > result[static_cast<std::size_t>(s)]) {
        result[static_cast<std::size_t>(s)] = vals[static_cast<std::size_t>(s)];
      }
    }
  }
  return result;
}

}  // namespace hardy::iterate
