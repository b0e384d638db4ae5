#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hardy/problem.hpp"
#include "hardy/quad.hpp"

namespace hardy::bounds {

struct BoundsOptions {
  int grid_nodes = 2048;
  int x0_scan = 64;  // coarse x0 grid for the second lower bound
  quad::QuadConfig quad;
};

// Named bound values plus the certified bracket. Divergent components are
// recorded by name instead of aborting the report.
struct BoundsReport {
  double B = 0.0;
  std::optional<double> k_B;
  std::optional<double> ktilde_B;
  std::optional<double> delta1;
  double deltabar1 = 0.0;
  double deltatilde1 = 0.0;
  std::optional<double> a_star;
  bool a_star_exact = false;
  double lower = 0.0;
  double upper = 0.0;
  bool upper_applicable = false;  // the upper-bound formulas need q >= p
  std::map<std::string, double> locations;  // bound name -> maximizing x (original coords)
  std::vector<std::string> divergences;
};

// B = sup_x phi(x)^(1/p*) mu(x,D)^(1/q); +inf when either factor diverges
// (the inequality then has no finite constant).
double basic_B(const ProblemSpec& spec, const BoundsOptions& opts = {});

// (B, k_{q,p} B); requires q >= p.
std::pair<double, double> basic_bracket(const ProblemSpec& spec, const BoundsOptions& opts = {});

// First upper bound of the ratio iteration, requires q >= p.
double delta1(const ProblemSpec& spec, const BoundsOptions& opts = {});

// First lower bound from the truncated test function phi(. ^ x0).
double deltabar1(const ProblemSpec& spec, const BoundsOptions& opts = {});

// Second lower bound, built from the twice-iterated truncated test function.
double deltatilde1(const ProblemSpec& spec, const BoundsOptions& opts = {});

// Upper bound through the same-target companion (pt, pt) problem. Exact
// (returns the closed form) when the input is the unit-interval Lebesgue
// problem; otherwise delta_effort of the companion raised to 1/p* + 1/q.
std::pair<double, bool> a_star(const ProblemSpec& spec, int effort,
                               const BoundsOptions& opts = {});

BoundsReport full_report(const ProblemSpec& spec, const BoundsOptions& opts = {});

}  // namespace hardy::bounds
