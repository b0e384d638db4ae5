#pragma once

#include <utility>

#include "hardy/density.hpp"
#include "hardy/quad.hpp"
#include "hardy/specfun.hpp"

namespace hardy {

// One weighted-norm problem on (0, D): exponents p, q, target measure density
// u (for mu) and derivative-measure density v (for nu). D may be +inf.
struct ProblemSpec {
  double p;
  double q;
  double D;
  Density u;
  Density v;
  specfun::Exponents exps;

  // Validates parameters and samples both densities for sign violations.
  static ProblemSpec make(double p, double q, double D, Density u, Density v);
  bool infinite_domain() const;
};

// Dual density v^(1 - p*) at x; +inf where v vanishes.
double vhat(const ProblemSpec& spec, double x);

// phi(x) = int_0^x vhat. Throws DivergenceError when vhat is not integrable
// at 0. One-shot adaptive evaluation; bound computations use cached
// evaluators instead.
double nuhat_cum(const ProblemSpec& spec, double x, const quad::QuadConfig& cfg = {});

// mu(x, D) = int_x^D u. Throws DivergenceError for an infinite tail.
double mu_tail(const ProblemSpec& spec, double x, const quad::QuadConfig& cfg = {});

// Forward/inverse maps of the change of variable x = t/(1-t) used to carry an
// infinite-domain problem onto (0, 1). Identity when no transform applied.
struct DomainMap {
  bool transformed = false;
  double to_original(double t) const { return transformed ? t / (1.0 - t) : t; }
  double to_working(double x) const { return transformed ? x / (1.0 + x) : x; }
};

// Equivalent problem on (0, 1) for D = +inf; every integral functional and
// every bound below is invariant under the substitution. Requires D = +inf.
std::pair<ProblemSpec, DomainMap> transform_domain(const ProblemSpec& spec);

// Identity wrapper: transforms when D = +inf, otherwise passes through.
std::pair<ProblemSpec, DomainMap> reduce_domain(const ProblemSpec& spec);

// Same-target companion problem (u, v^(q/p)) with exponents (pt, pt),
// pt = q/p* + 1; its dual density coincides with the original one. Requires
// q >= p; the identity when q = p.
ProblemSpec transform_problem(const ProblemSpec& spec);

// Instance with u = (q/p*) B1^q s(x)^(-q/p*-1) vhat(x), s(x) = int_0^x vhat,
// built so the basic upper bound k_{q,p} B1 is attained in the infinite-domain
// limit. Requires q > p.
ProblemSpec sharp_instance(const Density& v, double B1, double p, double q, double D);

}  // namespace hardy
