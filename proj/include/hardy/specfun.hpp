#pragma once

namespace hardy::specfun {

// Exponent pair (p, q) together with the conjugate p* of p, 1/p + 1/p* = 1.
struct Exponents {
  double p;
  double q;
  double p_star;

  // Throws DomainError unless p, q are finite and lie in (1, inf).
  static Exponents make(double p, double q);

  double gamma_star() const { return q / (p_star + q); }
  bool q_ge_p() const { return q >= p; }
};

// Gamma(x) for x > 0. Lanczos approximation; relative error well under 1e-12
// on (0, 170]. Throws DomainError for x <= 0, OverflowError past ~171.6.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double lgamma_fn(double x);

// Beta function B(a,b), a, b > 0.
double beta_fn(double a, double b);

// log B(a,b); stable for large arguments.
double lbeta_fn(double a, double b);

// Incomplete Beta B(x; a, b) = int_0^x s^(a-1) (1-s)^(b-1) ds (not regularized).
double inc_beta(double x, double a, double b);

// Sharp factor of the basic two-sided estimate, 1 < p <= q.
// q > p: [(q-p) / (p B(p/(q-p), p(q-1)/(q-p)))]^(1/p - 1/q); q = p: p^(1/p) p*^(1/p*).
double k_factor(double p, double q);

// Relaxed factor (1 + q/p*)^(1/q) (1 + p*/q)^(1/p*), defined for all p, q > 1.
double k_tilde(double p, double q);

}  // namespace hardy::specfun
