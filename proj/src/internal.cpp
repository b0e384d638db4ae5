#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/errors.hpp"

namespace hardy::detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Frame make_frame(const ProblemSpec& spec, int grid_nodes, const quad::QuadConfig& cfg) {
  auto [working, map] = reduce_domain(spec);
  const auto layout =
      map.transformed ? quad::GridLayout::LogBothEnds : quad::GridLayout::LogNearZero;
  auto grid = quad::Grid::make(working.D, grid_nodes, layout);
  const ProblemSpec w = working;
  auto phi = std::make_shared<const quad::CumulativeEval>(
      [w](double y) { return vhat(w, y); }, grid, cfg);
  auto mu = std::make_shared<const quad::TailEval>([w](double y) { return w.u(y); }, grid, cfg);
  return Frame{std::move(working), map, std::move(grid), cfg, std::move(phi), std::move(mu)};
}

Frame make_frame_on(const ProblemSpec& spec, quad::GridPtr grid, const quad::QuadConfig& cfg) {
  auto [working, map] = reduce_domain(spec);
  if (grid->d_eff() != working.D) {
    throw DomainError("grid must span the working domain of the problem");
  }
  const ProblemSpec w = working;
  auto phi = std::make_shared<const quad::CumulativeEval>(
      [w](double y) { return vhat(w, y); }, grid, cfg);
  auto mu = std::make_shared<const quad::TailEval>([w](double y) { return w.u(y); }, grid, cfg);
  return Frame{std::move(working), map, std::move(grid), cfg, std::move(phi), std::move(mu)};
}

std::vector<double> phi_nodes_clamped(const Frame& fr) {
  std::vector<double> vals(fr.phi->node_values().values);
  for (std::size_t k = 1; k < vals.size(); ++k) {
    if (!std::isfinite(vals[k])) vals[k] = vals[k - 1];
  }
  return vals;
}

StepResult ratio_step(const Frame& fr, const std::vector<double>& f, double pow_tail,
                      double pow_out) {
  const auto ns = fr.grid->nodes();
  const std::size_t n = ns.size();
  const quad::GridFunction fpl{fr.grid, f};

  auto tail_integrand = [&](double y) {
    const double fy = fpl(y);
    return std::pow(std::max(fy, 0.0), pow_tail) * fr.u_at(y);
  };
  const quad::GridFunction tails = quad::tail_integral(tail_integrand, fr.grid, fr.cfg);

  // T(y) = tail(y)^pow_out, piecewise linear in the powered node values; the
  // panel under an infinite node is integrated incrementally instead.
  std::vector<double> tn(n);
  for (std::size_t k = 0; k < n; ++k) {
    tn[k] = std::isfinite(tails.values[k]) ? std::pow(tails.values[k], pow_out) : kInf;
  }
  const quad::GridFunction tpl{fr.grid, tn};
  auto tail_pow = [&](double y) -> double {
    const std::size_t k = fr.grid->panel_of(y);
    if (std::isfinite(tn[k])) return tpl(y);
    const double g = tails.values[k + 1] + quad::integrate(tail_integrand, y, ns[k + 1], fr.cfg);
    return std::pow(g, pow_out);
  };

  auto cum_integrand = [&](double y) { return fr.vhat_at(y) * tail_pow(y); };
  quad::GridFunction next = quad::cum_integral(cum_integrand, fr.grid, fr.cfg);
  for (std::size_t k = 1; k < n; ++k) {
    if (!std::isfinite(next.values[k])) next.values[k] = next.values[k - 1];
  }

  // sup of next/f over interior nodes, skipping the outermost two cells and
  // nodes where the denominator has effectively vanished
  double fmax = 0.0;
  for (const double v : f)
    if (std::isfinite(v)) fmax = std::max(fmax, v);
  const double floor = 1e-13 * fmax;
  double sup = 0.0, arg = 0.0;
  for (std::size_t k = 2; k + 2 < n; ++k) {
    if (!(f[k] > floor) || !std::isfinite(next.values[k])) continue;
    const double r = next.values[k] / f[k];
    if (r > sup) {
      sup = r;
      arg = ns[k];
    }
  }
  return StepResult{std::move(next.values), sup, arg};
}

std::vector<double> delta_sequence(const Frame& fr, int n_max, double* argmax_x) {
  if (n_max < 1) throw DomainError("delta sequence needs n_max >= 1");
  const auto& e = fr.spec.exps;
  const double gs = e.gamma_star();
  const auto ns = fr.grid->nodes();
  const std::size_t n = ns.size();

  // B < inf is required for delta_1 < inf; a node estimate suffices here
  const auto phin = phi_nodes_clamped(fr);
  const auto& mun = fr.mu->node_values().values;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (!std::isfinite(mun[k]) ||
        !std::isfinite(std::pow(phin[k], 1.0 / e.p_star) * std::pow(mun[k], 1.0 / e.q))) {
      throw DivergenceError("basic bound is infinite; the upper sequence diverges");
    }
  }

  std::vector<double> f(n);
  for (std::size_t k = 0; k < n; ++k) f[k] = std::pow(phin[k], gs);

  std::vector<double> deltas;
  deltas.reserve(static_cast<std::size_t>(n_max));
  for (int it = 0; it < n_max; ++it) {
    StepResult st = ratio_step(fr, f, e.q / e.p_star, e.p_star / e.q);
    deltas.push_back(std::pow(st.ratio_sup, 1.0 / e.p_star));
    if (argmax_x && it == 0) *argmax_x = st.argmax_x;
    double m = 0.0;
    for (const double v : st.next)
      if (std::isfinite(v)) m = std::max(m, v);
    if (m <= 0.0) {
      // mu carries no mass; every remaining delta is zero
      while (static_cast<int>(deltas.size()) < n_max) deltas.push_back(0.0);
      break;
    }
    for (double& v : st.next) v = std::isfinite(v) ? v / m : 1.0;
    f = std::move(st.next);
  }
  return deltas;
}

std::function<double(double)> deltabar1_objective(const Frame& fr) {
  const auto& e = fr.spec.exps;
  // capture the evaluators by value so the objective outlives the frame
  auto phi = fr.phi;
  auto mu = fr.mu;
  const double q = e.q, pw = -e.q / e.p, pw2 = e.q / e.p_star;
  const ProblemSpec w = fr.spec;
  auto phiq_u = std::make_shared<const quad::CumulativeEval>(
      [w, phi, q](double y) { return std::pow((*phi)(y), q) * w.u(y); }, fr.grid, fr.cfg);
  return [phi, mu, phiq_u, pw, pw2](double x0) -> double {
    const double p0 = (*phi)(x0);
    if (!(p0 > 0.0) || !std::isfinite(p0)) return 0.0;
    const double head = std::pow(p0, pw) * (*phiq_u)(x0);
    const double tail = std::pow(p0, pw2) * (*mu)(x0);
    return head + tail;
  };
}

}  // namespace hardy::detail
