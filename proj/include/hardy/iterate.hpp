#pragma once

#include <vector>

#include "hardy/problem.hpp"
#include "hardy/quad.hpp"

namespace hardy::iterate {

struct IterateOptions {
  int grid_nodes = 2048;
  quad::QuadConfig quad;
};

// Decreasing upper bounds delta_1 >= delta_2 >= ... starting from
// f_1 = phi^(gamma*). Requires q >= p; throws DivergenceError when the basic
// bound (and hence delta_1) is infinite.
std::vector<double> iterate_delta(const ProblemSpec& spec, int n_max,
                                  const IterateOptions& opts = {});

// Lower bounds deltabar_1 ... deltabar_n from the truncated test functions
// f_1 = phi(. ^ x0) and their iterates; every entry is a valid lower bound on
// the optimal constant. Defined for all p, q in (1, inf).
std::vector<double> iterate_deltabar(const ProblemSpec& spec, int n_max,
                                     int x0_grid_size = 64, const IterateOptions& opts = {});

}  // namespace hardy::iterate
