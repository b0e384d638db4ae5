#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hardy/problem.hpp"
#include "hardy/quad.hpp"

namespace hardy::config {

// Flat key-value run configuration ("key = value" lines, '#' comments).
// Recognized keys: p, q, D, u, v, grid_nodes, n_iters, rel_tol, abs_tol,
// max_depth. Unknown keys are rejected.
struct RunConfig {
  double p = 0.0;
  double q = 0.0;
  double D = 0.0;  // +inf when the file says "inf"
  std::optional<Density> u;
  std::optional<Density> v;
  int grid_nodes = 2048;
  int n_iters = 3;
  quad::QuadConfig quad;
};

// Density descriptors: "kind=power coef=1 exp=-3", "kind=const value=2",
// "kind=tab nodes=0,1,2 values=1,2,1", "expr = x^(-3)", or a bare number.
Density parse_density(std::string_view descriptor);

RunConfig parse_config_text(std::string_view text);
RunConfig parse_config_file(const std::string& path);

ProblemSpec to_problem(const RunConfig& rc);

}  // namespace hardy::config
