#include "hardy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hardy/errors.hpp"
#include "internal.hpp"

namespace hardy::oracle {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double rayleigh(const ProblemSpec& spec, const quad::GridFunction& f,
                const quad::QuadConfig& cfg) {
  if (spec.infinite_domain()) {
    throw DomainError("rayleigh needs a finite-domain spec; reduce the domain first");
  }
  const auto ns = f.grid->nodes();
  if (ns.back() != spec.D) throw DomainError("test function grid must span (0, D)");
  if (f.values.front() != 0.0) throw DomainError("test function must vanish at 0");
  const auto& e = spec.exps;

  double numq = 0.0, denp = 0.0;
  for (std::size_t k = 0; k + 1 < ns.size(); ++k) {
    const double xa = ns[k], xb = ns[k + 1];
    const double fa = f.values[k], fb = f.values[k + 1];
    numq += quad::integrate(
        [&](double y) {
          const double fy = fa + (fb - fa) * (y - xa) / (xb - xa);
          return std::pow(std::fabs(fy), e.q) * spec.u(y);
        },
        xa, xb, cfg);
    const double slope = (fb - fa) / (xb - xa);
    if (slope != 0.0) {
      denp += std::pow(std::fabs(slope), e.p) *
              quad::integrate([&](double y) { return spec.v(y); }, xa, xb, cfg);
    }
  }
  if (!(denp > 0.0)) throw DomainError("test function has zero derivative norm");
  if (!std::isfinite(numq) || !std::isfinite(denp)) {
    throw DivergenceError("test function norm diverges");
  }
  return std::pow(numq, 1.0 / e.q) / std::pow(denp, 1.0 / e.p);
}

RayleighResult maximize(const ProblemSpec& spec, const quad::GridPtr& grid, int max_iters,
                        const quad::QuadConfig& cfg) {
  if (max_iters < 1) throw DomainError("maximize requires max_iters >= 1");
  const auto fr = detail::make_frame_on(spec, grid, cfg);
  const auto& e = fr.spec.exps;
  const auto ns = fr.grid->nodes();
  const std::size_t n = ns.size();

  if (!((*fr.mu)(ns[1]) > 0.0)) throw DivergenceError("mu carries no mass");

  std::vector<double> f = detail::phi_nodes_clamped(fr);
  {
    double m = 0.0;
    for (const double v : f) m = std::max(m, v);
    if (!(m > 0.0)) throw DivergenceError("phi vanishes identically");
    for (double& v : f) v /= m;
  }

  RayleighResult out;
  out.argmax = quad::GridFunction{fr.grid, f};
  out.value = rayleigh(fr.spec, out.argmax, cfg);
  double prev = out.value;

  for (int it = 1; it <= max_iters; ++it) {
    auto st = detail::ratio_step(fr, f, e.q - 1.0, e.p_star - 1.0);
    double m = 0.0;
    for (const double v : st.next)
      if (std::isfinite(v)) m = std::max(m, v);
    if (!(m > 0.0)) break;
    for (double& v : st.next) v = std::isfinite(v) ? v / m : 1.0;
    f = std::move(st.next);
    const quad::GridFunction cand{fr.grid, f};
    const double val = rayleigh(fr.spec, cand, cfg);
    out.iterations_used = it;
    if (val > out.value) {
      out.value = val;
      out.argmax = cand;
    }
    if (std::fabs(val - prev) <= 1e-10 * std::max(1.0, std::fabs(val))) {
      out.converged = true;
      break;
    }
    prev = val;
  }

  // deterministic random-restart perturbations of the best iterate
  std::mt19937 rng(271828);
  std::uniform_real_distribution<double> noise(-0.01, 0.01);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<double> g = out.argmax.values;
    for (std::size_t k = 1; k < n; ++k) {
      g[k] *= 1.0 + noise(rng);
      if (g[k] < g[k - 1]) g[k] = g[k - 1];  // keep the test function nondecreasing
    }
    g[0] = 0.0;
    const quad::GridFunction cand{fr.grid, std::move(g)};
    const double val = rayleigh(fr.spec, cand, cfg);
    if (val > out.value) {
      out.value = val;
      out.argmax = cand;
    }
  }
  return out;
}

RayleighResult maximize(const ProblemSpec& spec, int grid_nodes, int max_iters,
                        const quad::QuadConfig& cfg) {
  auto [working, map] = reduce_domain(spec);
  const auto layout =
      map.transformed ? quad::GridLayout::LogBothEnds : quad::GridLayout::LogNearZero;
  return maximize(spec, quad::Grid::make(working.D, grid_nodes, layout), max_iters, cfg);
}

BlissPair bliss_optimizer(double p, double q, double alpha, double beta) {
  if (!(q > p) || !(p > 1.0)) throw DomainError("bliss_optimizer requires q > p > 1");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("bliss_optimizer requires alpha, beta > 0");
  const double gamma = q / p - 1.0;
  BlissPair out;
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  out.g = [alpha, beta, gamma](double x) {
    if (x <= 0.0) return 0.0;
    return alpha * x / std::pow(1.0 + beta * std::pow(x, gamma), 1.0 / gamma);
  };
  out.g_prime = [alpha, beta, gamma](double x) {
    if (x <= 0.0) return alpha;
    return alpha / std::pow(beta * std::pow(x, gamma) + 1.0, (gamma + 1.0) / gamma);
  };
  return out;
}

EigenResidual eigen_residual(const ProblemSpec& spec, const std::function<double(double)>& g,
                             const std::function<double(double)>& g_prime,
                             const quad::GridPtr& sample) {
  const auto ns = sample->nodes();
  const auto& e = spec.exps;
  const auto w = [&](double x) { return spec.v(x) * std::pow(g_prime(x), e.p - 1.0); };

  std::vector<double> eps;
  eps.reserve(ns.size());
  int skipped = 0;
  for (std::size_t k = 1; k + 1 < ns.size(); ++k) {
    const double x = ns[k];
    if (!(x > 0.0)) {
      ++skipped;
      continue;
    }
    const double h = 1e-5 * x;
    const double d = (w(x + h) - w(x - h)) / (2.0 * h);
    if (!std::isfinite(d) || std::fabs(d) < 1e-300) {
      ++skipped;
      continue;
    }
    const double val = -spec.u(x) * std::pow(g(x), e.q - 1.0) / d;
    if (!std::isfinite(val)) {
      ++skipped;
      continue;
    }
    eps.push_back(val);
  }
  if (eps.empty()) throw EvalError("eigen_residual: no usable sample nodes");

  EigenResidual out;
  out.skipped = skipped;
  double sum = 0.0;
  for (const double v : eps) sum += v;
  out.eps_mean = sum / static_cast<double>(eps.size());
  double dev = 0.0;
  for (const double v : eps) dev = std::max(dev, std::fabs(v - out.eps_mean));
  out.max_rel_dev = dev / std::fabs(out.eps_mean);
  return out;
}

double eigen_constant_A(const ProblemSpec& spec, const std::function<double(double)>& g,
                        const std::function<double(double)>& g_prime, double eps,
                        const quad::QuadConfig& cfg) {
  const auto& e = spec.exps;

  // boundary terms of v g'^(p-1) g must vanish at both ends
  const auto probe_grid = quad::Grid::make(1.0, 64, quad::GridLayout::LogBothEnds);
  const DomainMap map{spec.infinite_domain()};
  const auto ns = probe_grid->nodes();
  const auto bterm = [&](double t) {
    const double x = map.to_original(spec.infinite_domain() ? t : t * spec.D);
    return spec.v(x) * std::pow(g_prime(x), e.p - 1.0) * g(x);
  };
  double interior_max = 0.0;
  for (std::size_t k = 2; k + 2 < ns.size(); ++k) {
    interior_max = std::max(interior_max, std::fabs(bterm(ns[k])));
  }
  if (std::fabs(bterm(ns[1])) > 1e-6 * interior_max ||
      std::fabs(bterm(ns[ns.size() - 2])) > 1e-6 * interior_max) {
    throw DomainError("eigen_constant_A: boundary condition violated");
  }

  const double den_p =
      quad::integrate([&](double x) { return spec.v(x) * std::pow(g_prime(x), e.p); }, 0.0,
                      spec.D, cfg);
  const double A = std::pow(eps, 1.0 / e.q) * std::pow(den_p, 1.0 / e.q - 1.0 / e.p);

  const double num_q =
      quad::integrate([&](double x) { return std::pow(g(x), e.q) * spec.u(x); }, 0.0, spec.D,
                      cfg);
  const double direct = std::pow(num_q, 1.0 / e.q) / std::pow(den_p, 1.0 / e.p);
  if (!(std::fabs(A - direct) <= 1e-6 * std::fabs(A))) {
    throw ConvergenceError("eigen_constant_A: direct quotient cross-check failed");
  }
  return A;
}

}  // namespace hardy::oracle
