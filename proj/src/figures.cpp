#include "hardy/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hardy/bounds.hpp"
#include "hardy/closed_forms.hpp"
#include "hardy/errors.hpp"
#include "hardy/specfun.hpp"

namespace hardy::figures {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void row(std::ostream& out, std::initializer_list<double> vals) {
  bool first = true;
  for (const double v : vals) {
    if (!first) out << ',';
    out << fmt(v);
    first = false;
  }
  out << '\n';
}

// numeric delta1 on the unit-interval Lebesgue problem
double delta1_unit(double p, double q) {
  bounds::BoundsOptions opts;
  opts.grid_nodes = 1024;
  return bounds::delta1(closed_forms::lebesgue_unit_spec(p, q), opts);
}

void figure_qp(std::ostream& out, bool with_first_step) {
  out << (with_first_step ? "p,k_B,delta1,A,deltabar1,B\n" : "p,k_B,A,B\n");
  for (int j = 1; j <= 179; ++j) {
    const double p = (105 + 5 * j) / 100.0;
    const auto cf = closed_forms::lebesgue_unit(p, p);
    if (with_first_step) {
      row(out, {p, cf.k * cf.B, delta1_unit(p, p), cf.A, cf.deltabar1, cf.B});
    } else {
      row(out, {p, cf.k * cf.B, cf.A, cf.B});
    }
  }
}

void figure_qgtp(std::ostream& out, double p) {
  out << "r,k_B,delta1,a_star,A,deltabar1,B\n";
  for (int j = 1; j <= 150; ++j) {
    const double r = j / 10.0;
    const auto cf = closed_forms::lebesgue_unit(p, p + r);
    row(out, {r, cf.k * cf.B, delta1_unit(p, p + r), *cf.a_star, cf.A, cf.deltabar1, cf.B});
  }
}

void figure_factor_gap(std::ostream& out) {
  const double ps[5] = {1.1, 2.0, 5.0, 10.0, 20.0};
  out << "x,p1.1,p2,p5,p10,p20\n";
  for (int j = 0; j <= 500; ++j) {
    const double x = j == 0 ? 1e-4 : j * 0.05;
    out << fmt(x);
    for (const double p : ps) {
      out << ',' << fmt(specfun::k_tilde(p, p + x) - specfun::k_factor(p, p + x));
    }
    out << '\n';
  }
}

void figure_extremal(std::ostream& out, double p) {
  out << "r,A,deltabar1\n";
  const double ps = p / (p - 1.0);
  for (int j = 0; j <= 200; ++j) {
    const double r = 0.5 * j;
    const double q = p + r;
    const double A = std::pow(ps / q, 1.0 / q) * specfun::k_factor(p, q);
    const double db1 = std::pow(p * ps / q, 1.0 / q);
    row(out, {r, A, db1});
  }
}

}  // namespace

void write_figure(int id, std::ostream& out) {
  switch (id) {
    case 1: figure_qp(out, false); return;
    case 2: figure_qp(out, true); return;
    case 3: figure_qgtp(out, 2.0); return;
    case 4: figure_qgtp(out, 5.0); return;
    case 5: figure_factor_gap(out); return;
    case 6: figure_extremal(out, 2.0); return;
    case 7: figure_extremal(out, 5.0); return;
    default: throw DomainError("figure id must be 1..7");
  }
}

void write_figure_file(int id, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  write_figure(id, out);
  if (!out.good()) throw Error("error writing: " + path);
}

}  // namespace hardy::figures
