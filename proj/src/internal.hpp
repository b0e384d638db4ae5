#pragma once

// Shared machinery behind the bound, iteration, and oracle modules: the
// reduced-problem frame with cached integral evaluators, the ratio-iteration
// step, and the first lower-bound objective.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "hardy/problem.hpp"
#include "hardy/quad.hpp"

namespace hardy::detail {

struct Frame {
  ProblemSpec spec;  // finite working domain
  DomainMap map;
  quad::GridPtr grid;
  quad::QuadConfig cfg;
  std::shared_ptr<const quad::CumulativeEval> phi;  // int_0^x vhat
  std::shared_ptr<const quad::TailEval> mu;         // int_x^Deff u

  double u_at(double x) const { return spec.u(x); }
  double vhat_at(double x) const { return vhat(spec, x); }
};

// Throws DivergenceError when vhat is not integrable at 0 or the mu tail is
// infinite for every x.
Frame make_frame(const ProblemSpec& spec, int grid_nodes, const quad::QuadConfig& cfg);

// Same, but on a caller-supplied grid spanning the working domain.
Frame make_frame_on(const ProblemSpec& spec, quad::GridPtr grid, const quad::QuadConfig& cfg);

// phi at the grid nodes with a trailing +inf (infinite nuhat mass at the right
// endpoint) replaced by the last finite value; harmless because ratio suprema
// exclude the outermost cells and tail slivers there are negligible.
std::vector<double> phi_nodes_clamped(const Frame& fr);

// One application of f |-> int_0^x vhat(y) (int_y^D f^pow_tail dmu)^pow_out dy
// on the grid, plus the supremum of f_next/f over admissible interior nodes.
struct StepResult {
  std::vector<double> next;  // not normalized
  double ratio_sup;          // sup over admissible nodes, 0 if none
  double argmax_x;           // working coordinates
};
StepResult ratio_step(const Frame& fr, const std::vector<double>& f, double pow_tail,
                      double pow_out);

// delta_n sequence: f_1 = phi^(gamma*), pow_tail = q/p*, pow_out = p*/q,
// delta_n = (sup f_{n+1}/f_n)^(1/p*). Throws DivergenceError when the node
// estimate of B is infinite.
std::vector<double> delta_sequence(const Frame& fr, int n_max, double* argmax_x = nullptr);

// Objective of the first lower bound before the final 1/q power:
//   phi(x0)^(-q/p) int_0^x0 phi^q dmu + phi(x0)^(q/p*) mu(x0, D).
// Shared by the bound module and the n = 1 entry of the lower iteration.
std::function<double(double)> deltabar1_objective(const Frame& fr);

}  // namespace hardy::detail
