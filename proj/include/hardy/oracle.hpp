#pragma once

#include <functional>

#include "hardy/problem.hpp"
#include "hardy/quad.hpp"

namespace hardy::oracle {

// ||f||_{mu,q} / ||f'||_{nu,p} for a piecewise-linear test function with
// f(0) = 0 on a finite-domain spec. Any admissible f yields a valid lower
// bound on the optimal constant. Throws DomainError when the derivative norm
// vanishes, DivergenceError when a norm is infinite.
double rayleigh(const ProblemSpec& spec, const quad::GridFunction& f,
                const quad::QuadConfig& cfg = {});

struct RayleighResult {
  double value = 0.0;
  quad::GridFunction argmax;
  int iterations_used = 0;
  bool converged = false;
};

// Fixed-point ascent of the quotient starting from f = phi, then a few
// deterministic random-restart perturbations of the best iterate. Infinite
// domains are reduced to (0, 1) first; the quotient is invariant under that
// substitution and the returned argmax lives on the working grid.
RayleighResult maximize(const ProblemSpec& spec, const quad::GridPtr& grid, int max_iters,
                        const quad::QuadConfig& cfg = {});
RayleighResult maximize(const ProblemSpec& spec, int grid_nodes = 2048, int max_iters = 200,
                        const quad::QuadConfig& cfg = {});

struct BlissPair {
  std::function<double(double)> g;
  std::function<double(double)> g_prime;
  double alpha;
  double beta;
  double gamma;
};

// g(x) = alpha x / (1 + beta x^gamma)^(1/gamma), gamma = q/p - 1 > 0, with
// g'(x) = alpha / (beta x^gamma + 1)^((gamma+1)/gamma). Requires q > p.
BlissPair bliss_optimizer(double p, double q, double alpha, double beta);

struct EigenResidual {
  double eps_mean = 0.0;
  double max_rel_dev = 0.0;
  int skipped = 0;  // derivative-degenerate sample nodes
};

// eps(x) = -u g^(q-1) / (v g'^(p-1))' at the interior sample nodes, the
// derivative taken by central differences with step 1e-5 x. The ratio is
// constant exactly when g solves the optimizer equation.
EigenResidual eigen_residual(const ProblemSpec& spec, const std::function<double(double)>& g,
                             const std::function<double(double)>& g_prime,
                             const quad::GridPtr& sample);

// A = eps^(1/q) (int_0^D v g'^p)^(1/q - 1/p). Verifies the vanishing boundary
// terms of v g'^(p-1) g and cross-checks against the direct quotient within
// 1e-6 relative.
double eigen_constant_A(const ProblemSpec& spec, const std::function<double(double)>& g,
                        const std::function<double(double)>& g_prime, double eps,
                        const quad::QuadConfig& cfg = {});

}  // namespace hardy::oracle
