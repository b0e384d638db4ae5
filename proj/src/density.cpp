#include "hardy/density.hpp"

#include <cmath>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

struct Density::Impl {
  // PowerLaw / Constant
  double coef = 0.0;
  double exponent = 0.0;
  // Expression
  std::optional<expr::Ast> ast;
  // Tabulated
  std::vector<double> nodes;
  std::vector<double> values;
  // Mapped
  std::function<double(double)> fn;
  std::string label;
};

Density Density::power_law(double coef, double exponent) {
  if (!(coef > 0.0) || !std::isfinite(coef) || !std::isfinite(exponent)) {
    throw DomainError("power-law density needs finite coef > 0 and finite exponent");
  }
  auto impl = std::make_shared<Impl>();
  impl->coef = coef;
  impl->exponent = exponent;
  return Density(DensityKind::PowerLaw, std::move(impl));
}

Density Density::constant(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError("constant density must be finite and nonnegative");
  }
  auto impl = std::make_shared<Impl>();
  impl->coef = value;
  return Density(DensityKind::Constant, std::move(impl));
}

Density Density::expression(std::string_view src) { return expression(expr::parse(src)); }

Density Density::expression(expr::Ast ast) {
  auto impl = std::make_shared<Impl>();
  impl->ast = std::move(ast);
  return Density(DensityKind::Expression, std::move(impl));
}

Density Density::tabulated(std::vector<double> nodes, std::vector<double> values) {
  if (nodes.size() < 2 || nodes.size() != values.size()) {
    throw DomainError("tabulated density needs matching node/value lists, length >= 2");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && !(nodes[i] > nodes[i - 1])) {
      throw DomainError("tabulated density nodes must ascend strictly");
    }
    if (!(values[i] >= 0.0)) throw DomainError("tabulated density values must be nonnegative");
  }
  auto impl = std::make_shared<Impl>();
  impl->nodes = std::move(nodes);
  impl->values = std::move(values);
  return Density(DensityKind::Tabulated, std::move(impl));
}

Density Density::mapped(std::function<double(double)> fn, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->fn = std::move(fn);
  impl->label = std::move(label);
  return Density(DensityKind::Mapped, std::move(impl));
}

double Density::operator()(double x) const {
  switch (kind_) {
    case DensityKind::PowerLaw:
      return impl_->coef * std::pow(x, impl_->exponent);
    case DensityKind::Constant:
      return impl_->coef;
    case DensityKind::Expression:
      return expr::eval(*impl_->ast, x);
    case DensityKind::Tabulated: {
      const auto& ns = impl_->nodes;
      const auto& vs = impl_->values;
      if (x <= ns.front()) return vs.front();
      if (x >= ns.back()) return vs.back();
      const auto it = std::upper_bound(ns.begin(), ns.end(), x);
      const std::size_t k = static_cast<std::size_t>(it - ns.begin()) - 1;
      const double t = (x - ns[k]) / (ns[k + 1] - ns[k]);
      return vs[k] + t * (vs[k + 1] - vs[k]);
    }
    case DensityKind::Mapped:
      return impl_->fn(x);
  }
  throw EvalError("unknown density kind");
}

std::optional<Density::PowerLawParams> Density::power_law_params() const {
  if (kind_ == DensityKind::PowerLaw) return PowerLawParams{impl_->coef, impl_->exponent};
  if (kind_ == DensityKind::Constant && impl_->coef > 0.0) {
    return PowerLawParams{impl_->coef, 0.0};
  }
  return std::nullopt;
}

std::optional<double> Density::constant_value() const {
  if (kind_ == DensityKind::Constant) return impl_->coef;
  if (kind_ == DensityKind::PowerLaw && impl_->exponent == 0.0) return impl_->coef;
  return std::nullopt;
}

bool Density::is_constant_one() const {
  const auto c = constant_value();
  return c && *c == 1.0;
}

std::string Density::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case DensityKind::PowerLaw:
      out << impl_->coef << " * x^" << impl_->exponent;
      break;
    case DensityKind::Constant:
      out << impl_->coef;
      break;
    case DensityKind::Expression:
      out << expr::to_string(*impl_->ast);
      break;
    case DensityKind::Tabulated:
      out << "tabulated[" << impl_->nodes.size() << " nodes]";
      break;
    case DensityKind::Mapped:
      out << impl_->label;
      break;
  }
  return out.str();
}

Density Density::pow_of(const Density& d, double e) {
  if (e == 1.0) return d;
  if (const auto pl = d.power_law_params()) {
    if (pl->exponent == 0.0) return constant(std::pow(pl->coef, e));
    return power_law(std::pow(pl->coef, e), pl->exponent * e);
  }
  return mapped([d, e](double x) { return std::pow(d(x), e); },
                "(" + d.describe() + ")^" + std::to_string(e));
}

Density Density::scaled(const Density& d, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("density scale must be positive");
  if (c == 1.0) return d;
  if (const auto pl = d.power_law_params()) {
    if (pl->exponent == 0.0) return constant(c * pl->coef);
    return power_law(c * pl->coef, pl->exponent);
  }
  return mapped([d, c](double x) { return c * d(x); },
                std::to_string(c) + " * (" + d.describe() + ")");
}

}  // namespace hardy
