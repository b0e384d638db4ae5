#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hardy/expr.hpp"

namespace hardy {

enum class DensityKind { PowerLaw, Constant, Expression, Tabulated, Mapped };

// Nonnegative weight function on (0, D), evaluable pointwise. PowerLaw and
// Constant keep their parameters visible so callers can use analytic paths;
// Mapped wraps derived densities (domain transforms, powers, paddings).
class Density {
 public:
  struct PowerLawParams {
    double coef;
    double exponent;
  };

  static Density power_law(double coef, double exponent);
  static Density constant(double value);
  static Density expression(std::string_view src);
  static Density expression(expr::Ast ast);
  static Density tabulated(std::vector<double> nodes, std::vector<double> values);
  static Density mapped(std::function<double(double)> fn, std::string label);

  double operator()(double x) const;

  DensityKind kind() const { return kind_; }
  std::optional<PowerLawParams> power_law_params() const;
  std::optional<double> constant_value() const;
  bool is_constant_one() const;
  std::string describe() const;

  // d(x)^e, preserving PowerLaw/Constant structure when possible.
  static Density pow_of(const Density& d, double e);
  // c * d(x)
  static Density scaled(const Density& d, double c);

 private:
  struct Impl;
  Density(DensityKind kind, std::shared_ptr<const Impl> impl)
      : kind_(kind), impl_(std::move(impl)) {}
  DensityKind kind_;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace hardy
