#include "hardy/closed_forms.hpp"

#include <cmath>
#include <limits>

#include "hardy/errors.hpp"
#include "hardy/specfun.hpp"

namespace hardy::closed_forms {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ClosedFormSet lebesgue_unit(double p, double q) {
  const auto e = specfun::Exponents::make(p, q);
  const double ps = e.p_star;
  ClosedFormSet out{};
  if (q == p) {
    out.A = p / (kPi * std::pow(p - 1.0, 1.0 / p)) * std::sin(kPi / p);
  } else {
    out.A = std::pow(p, 1.0 / q) * std::pow(q, 1.0 - 1.0 / p) *
            std::pow(p * q + p - q, 1.0 / p - 1.0 / q) /
            (std::pow(p - 1.0, 1.0 / p) * specfun::beta_fn(1.0 / q, 1.0 - 1.0 / p));
  }
  out.B = std::pow(p, 1.0 / q) * std::pow((p - 1.0) * q, 1.0 - 1.0 / p) /
          std::pow(p * q + p - q, 1.0 - 1.0 / p + 1.0 / q);
  out.deltabar1 = std::pow(p, 1.0 / q) * std::pow((p - 1.0) * (q + 1.0), 1.0 - 1.0 / p) /
                  std::pow(p * q + p - q, 1.0 - 1.0 / p + 1.0 / q);
  out.a_star = std::pow(ps / q, 1.0 / q) *
               std::pow((ps + q) / (kPi * ps) * std::sin(kPi * ps / (ps + q)),
                        1.0 / ps + 1.0 / q);
  out.k = q >= p ? specfun::k_factor(p, q) : std::numeric_limits<double>::quiet_NaN();
  out.k_tilde = specfun::k_tilde(p, q);
  return out;
}

ClosedFormSet bliss_model(double p, double q) {
  if (!(q > p)) throw DomainError("bliss_model requires q > p");
  const auto e = specfun::Exponents::make(p, q);
  const double ps = e.p_star;
  ClosedFormSet out{};
  out.B = std::pow(ps / q, 1.0 / q);
  out.k = specfun::k_factor(p, q);
  out.k_tilde = specfun::k_tilde(p, q);
  out.A = out.B * out.k;
  out.delta1 = std::pow(1.0 + ps / q, 1.0 / ps + 1.0 / q);
  out.deltabar1 = std::pow(p * ps / q, 1.0 / q);
  return out;
}

ProblemSpec lebesgue_unit_spec(double p, double q) {
  return ProblemSpec::make(p, q, 1.0, Density::constant(1.0), Density::constant(1.0));
}

ProblemSpec bliss_spec(double p, double q) {
  return bliss_spec_truncated(p, q, std::numeric_limits<double>::infinity());
}

ProblemSpec bliss_spec_truncated(double p, double q, double D) {
  if (!(q > p)) throw DomainError("bliss_spec requires q > p");
  const auto e = specfun::Exponents::make(p, q);
  return ProblemSpec::make(p, q, D, Density::power_law(1.0, -q / e.p_star - 1.0),
                           Density::constant(1.0));
}

}  // namespace hardy::closed_forms
