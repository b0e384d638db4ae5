#pragma once

#include <optional>

#include "hardy/problem.hpp"

namespace hardy::closed_forms {

// Closed-form constants of a model problem, used as golden values in tests
// and figure sweeps.
struct ClosedFormSet {
  double A;
  double B;
  double k;
  double k_tilde;
  std::optional<double> delta1;   // set only when a closed form exists
  double deltabar1;
  std::optional<double> a_star;
};

// Lebesgue measures on the unit interval. Exact A for all p, q in (1, inf):
//   A = p^(1/q) q^(1-1/p) (pq+p-q)^(1/p-1/q) / ((p-1)^(1/p) B(1/q, 1-1/p)),
// reducing to p sin(pi/p) / (pi (p-1)^(1/p)) when q = p.
ClosedFormSet lebesgue_unit(double p, double q);

// The extremal power-law model on (0, inf): u = x^(-q/p*-1), v = 1. The basic
// upper bound is attained: A = (p*/q)^(1/q) k_{q,p}. Requires q > p.
ClosedFormSet bliss_model(double p, double q);

ProblemSpec lebesgue_unit_spec(double p, double q);
ProblemSpec bliss_spec(double p, double q);                       // D = +inf
ProblemSpec bliss_spec_truncated(double p, double q, double D);   // finite D

}  // namespace hardy::closed_forms
