#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace hardy::quad {

using Fn = std::function<double(double)>;

struct QuadConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 48;
};

enum class GridLayout { Uniform, LogNearZero, LogBothEnds };

// Strictly ascending nodes on [0, d_eff], endpoints included.
class Grid {
 public:
  static std::shared_ptr<const Grid> make(double d_eff, int n_nodes, GridLayout layout);
  // Custom node set (tests and padding constructions). Validates ordering.
  static std::shared_ptr<const Grid> from_nodes(std::vector<double> nodes);

  std::span<const double> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double operator[](std::size_t i) const { return nodes_[i]; }
  double d_eff() const { return nodes_.back(); }
  // Index k with nodes[k] <= x < nodes[k+1] (clamped to a valid panel).
  std::size_t panel_of(double x) const;

 private:
  explicit Grid(std::vector<double> nodes) : nodes_(std::move(nodes)) {}
  std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Piecewise-linear function on a grid.
struct GridFunction {
  GridPtr grid;
  std::vector<double> values;

  double operator()(double x) const;
  double front() const { return values.front(); }
  double back() const { return values.back(); }
};

// Adaptive quadrature of f over (a, b); open rules only, f is never evaluated
// at a or b, so integrable endpoint singularities are fine. b may be +inf
// (mapped to a bounded interval first). Throws ConvergenceError when the
// tolerance cannot be met and DivergenceError when an endpoint singularity is
// classified as non-integrable.
double integrate(const Fn& f, double a, double b, const QuadConfig& cfg = {});

// F(nodes[k]) = int_0^{nodes[k]} f, each panel integrated adaptively.
// Throws DivergenceError if the first panel diverges (F would be infinite
// everywhere); later divergent panels mark the remaining nodes +inf.
GridFunction cum_integral(const Fn& f, const GridPtr& grid, const QuadConfig& cfg = {});

// G(nodes[k]) = int_{nodes[k]}^{d_eff} f, mirror of cum_integral. A divergent
// last panel throws; a divergent first panel only marks G(0) = +inf.
GridFunction tail_integral(const Fn& f, const GridPtr& grid, const QuadConfig& cfg = {});

enum class SupHint { Unimodal, General };

struct SupResult {
  double x;
  double value;
};

// Maximizes g over (a, b). Unimodal: 64-point bracketing scan then
// golden-section refinement; General: 1024-point scan plus refinement of the
// best three brackets. NaN probes are skipped; an all-NaN scan is an error.
SupResult sup_search(const Fn& g, double a, double b, SupHint hint,
                     const QuadConfig& cfg = {});

// Cached cumulative evaluator: F(x) = int_0^x f for arbitrary x, anchored at
// grid nodes with an adaptive increment inside the panel.
class CumulativeEval {
 public:
  CumulativeEval(Fn f, GridPtr grid, const QuadConfig& cfg = {});
  double operator()(double x) const;
  double total() const { return nodes_.values.back(); }
  const GridFunction& node_values() const { return nodes_; }

 private:
  Fn f_;
  QuadConfig cfg_;
  GridFunction nodes_;
};

// Cached tail evaluator: T(x) = int_x^{d_eff} f. T(0) may be +inf (stored as a
// tag) while T(x) stays finite for x > 0.
class TailEval {
 public:
  TailEval(Fn f, GridPtr grid, const QuadConfig& cfg = {});
  double operator()(double x) const;
  const GridFunction& node_values() const { return nodes_; }

 private:
  Fn f_;
  QuadConfig cfg_;
  GridFunction nodes_;
};

}  // namespace hardy::quad
