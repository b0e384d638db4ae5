#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hardy/bounds.hpp"
#include "hardy/closed_forms.hpp"
#include "hardy/config.hpp"
#include "hardy/errors.hpp"
#include "hardy/figures.hpp"
#include "hardy/iterate.hpp"
#include "hardy/oracle.hpp"
#include "hardy/specfun.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitNoConvergence = 4;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CommonArgs {
  std::string config_path;
  int nodes_override = 0;
  std::string out_path;
  int n = 0;
};

hardy::bounds::BoundsOptions bounds_options(const hardy::config::RunConfig& rc,
                                            int nodes_override) {
  hardy::bounds::BoundsOptions opts;
  opts.grid_nodes = nodes_override > 0 ? nodes_override : rc.grid_nodes;
  opts.quad = rc.quad;
  return opts;
}

int cmd_bounds(const CommonArgs& args) {
  const auto rc = hardy::config::parse_config_file(args.config_path);
  const auto spec = hardy::config::to_problem(rc);
  const auto opts = bounds_options(rc, args.nodes_override);
  const auto rep = hardy::bounds::full_report(spec, opts);

  std::cout << "problem: p=" << fmt(spec.p) << " q=" << fmt(spec.q) << " D=" << fmt(spec.D)
            << " u=" << spec.u.describe() << " v=" << spec.v.describe() << "\n";
  if (std::isinf(rep.B)) {
    std::cout << "A = infinity (the basic bound diverges; no finite constant exists)\n";
    return kExitDivergence;
  }

  const auto print_bound = [&](const char* name, double value) {
    std::cout << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 12; ++i) std::cout << ' ';
    std::cout << fmt(value);
    const auto it = rep.locations.find(name);
    if (it != rep.locations.end()) std::cout << "   at x = " << fmt(it->second);
    std::cout << "\n";
  };
  print_bound("B", rep.B);
  print_bound("deltabar1", rep.deltabar1);
  print_bound("deltatilde1", rep.deltatilde1);
  if (rep.upper_applicable) {
    if (rep.delta1) print_bound("delta1", *rep.delta1);
    if (rep.k_B) print_bound("k_B", *rep.k_B);
    if (rep.ktilde_B) print_bound("ktilde_B", *rep.ktilde_B);
    if (rep.a_star) {
      print_bound("a_star", *rep.a_star);
      std::cout << "               (" << (rep.a_star_exact ? "exact" : "upper estimate") << ")\n";
    }
  } else {
    std::cout << "  upper-bound formulas not applicable (q < p); lower bounds only\n";
  }
  std::cout << "certified bracket: [" << fmt(rep.lower) << ", "
            << (std::isinf(rep.upper) ? "inf" : fmt(rep.upper)) << "]\n";

  if (!args.out_path.empty()) {
    std::ofstream out(args.out_path);
    if (!out) throw hardy::Error("cannot open output file: " + args.out_path);
    out << "bound,value,location\n";
    const auto csv_row = [&](const char* name, double value) {
      out << name << ',' << fmt(value);
      const auto it = rep.locations.find(name);
      out << ',' << (it != rep.locations.end() ? fmt(it->second) : "");
      out << '\n';
    };
    csv_row("B", rep.B);
    csv_row("deltabar1", rep.deltabar1);
    csv_row("deltatilde1", rep.deltatilde1);
    if (rep.delta1) csv_row("delta1", *rep.delta1);
    if (rep.k_B) csv_row("k_B", *rep.k_B);
    if (rep.ktilde_B) csv_row("ktilde_B", *rep.ktilde_B);
    if (rep.a_star) csv_row("a_star", *rep.a_star);
    csv_row("lower", rep.lower);
    csv_row("upper", rep.upper);
  }
  if (!rep.divergences.empty()) {
    std::cout << "divergent components:";
    for (const auto& d : rep.divergences) std::cout << ' ' << d;
    std::cout << "\n";
    return kExitDivergence;
  }
  return kExitOk;
}

int cmd_iterate(const CommonArgs& args) {
  const auto rc = hardy::config::parse_config_file(args.config_path);
  const auto spec = hardy::config::to_problem(rc);
  const int n = args.n > 0 ? args.n : rc.n_iters;
  if (n < 1) throw hardy::DomainError("iteration count must be >= 1");

  hardy::iterate::IterateOptions opts;
  opts.grid_nodes = args.nodes_override > 0 ? args.nodes_override : rc.grid_nodes;
  opts.quad = rc.quad;

  const bool upper_ok = spec.q >= spec.p;
  std::vector<double> deltas;
  if (upper_ok) deltas = hardy::iterate::iterate_delta(spec, n, opts);
  const auto dbars = hardy::iterate::iterate_deltabar(spec, n, 64, opts);

  std::cout << "n,delta_n,deltabar_n\n";
  for (int i = 0; i < n; ++i) {
    std::cout << (i + 1) << ',' << (upper_ok ? fmt(deltas[i]) : std::string("n/a")) << ','
              << fmt(dbars[i]) << "\n";
  }
  if (upper_ok) {
    bool noninc = true;
    for (int i = 1; i < n; ++i) noninc = noninc && deltas[i] <= deltas[i - 1] + 1e-7;
    std::cout << "delta sequence nonincreasing: " << (noninc ? "yes" : "no") << "\n";
  }
  bool nondec = true;
  for (int i = 1; i < n; ++i) nondec = nondec && dbars[i] >= dbars[i - 1] - 1e-7;
  std::cout << "deltabar sequence nondecreasing (observed): " << (nondec ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_oracle(const CommonArgs& args) {
  const auto rc = hardy::config::parse_config_file(args.config_path);
  const auto spec = hardy::config::to_problem(rc);
  const int nodes = args.nodes_override > 0 ? args.nodes_override : rc.grid_nodes;
  const auto res = hardy::oracle::maximize(spec, nodes, 200, rc.quad);
  std::cout << "certified lower bound on A: " << fmt(res.value) << "\n";
  std::cout << "iterations: " << res.iterations_used << ", converged: "
            << (res.converged ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_figure(int id, const std::string& out_path) {
  hardy::figures::write_figure_file(id, out_path);
  std::cout << "wrote figure " << id << " data to " << out_path << "\n";
  return kExitOk;
}

int cmd_sharp(double p, double q, double b1, const std::string& v_text, int nodes) {
  const auto v = hardy::config::parse_density(v_text.empty() ? "1" : v_text);
  const auto spec =
      hardy::sharp_instance(v, b1, p, q, std::numeric_limits<double>::infinity());
  hardy::bounds::BoundsOptions opts;
  if (nodes > 0) opts.grid_nodes = nodes;
  const double B = hardy::bounds::basic_B(spec, opts);
  const auto res = hardy::oracle::maximize(spec, opts.grid_nodes, 200, opts.quad);
  const double kb1 = hardy::specfun::k_factor(p, q) * b1;
  std::cout << "sharp instance: p=" << fmt(p) << " q=" << fmt(q) << " B1=" << fmt(b1)
            << " v=" << v.describe() << "\n";
  std::cout << "  computed B:            " << fmt(B) << "  (target B1 = " << fmt(b1) << ")\n";
  std::cout << "  oracle lower bound:    " << fmt(res.value) << "\n";
  std::cout << "  upper bound k_{q,p}B1: " << fmt(kb1) << "\n";
  const bool ok = res.value <= kb1 + 1e-6;
  std::cout << "  oracle <= k_{q,p}B1:   " << (ok ? "yes" : "NO") << "\n";
  return ok ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-sided bounds on the optimal constant in weighted Hardy-type inequalities"};
  app.require_subcommand(1);

  CommonArgs args;
  int figure_id = 0;
  double sharp_p = 0.0, sharp_q = 0.0, sharp_b1 = 1.0;
  std::string sharp_v = "1";

  auto* c_bounds = app.add_subcommand("bounds", "named bounds and the certified bracket");
  c_bounds->add_option("--config", args.config_path)->required();
  c_bounds->add_option("--nodes", args.nodes_override);
  c_bounds->add_option("--out", args.out_path);

  auto* c_iter = app.add_subcommand("iterate", "approximating sequences delta_n, deltabar_n");
  c_iter->add_option("--config", args.config_path)->required();
  c_iter->add_option("--n", args.n);
  c_iter->add_option("--nodes", args.nodes_override);

  auto* c_oracle = app.add_subcommand("oracle", "variational lower bound via fixed-point ascent");
  c_oracle->add_option("--config", args.config_path)->required();
  c_oracle->add_option("--nodes", args.nodes_override);

  auto* c_fig = app.add_subcommand("figure", "figure data CSV");
  c_fig->add_option("--id", figure_id)->required();
  c_fig->add_option("--out", args.out_path)->required();

  auto* c_sharp = app.add_subcommand("sharp", "sharp-instance verification report");
  c_sharp->add_option("--p", sharp_p)->required();
  c_sharp->add_option("--q", sharp_q)->required();
  c_sharp->add_option("--b1", sharp_b1);
  c_sharp->add_option("--v", sharp_v);
  c_sharp->add_option("--nodes", args.nodes_override);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (c_bounds->parsed()) return cmd_bounds(args);
    if (c_iter->parsed()) return cmd_iterate(args);
    if (c_oracle->parsed()) return cmd_oracle(args);
    if (c_fig->parsed()) return cmd_figure(figure_id, args.out_path);
    if (c_sharp->parsed()) return cmd_sharp(sharp_p, sharp_q, sharp_b1, sharp_v,
                                            args.nodes_override);
  } catch (const hardy::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDivergence;
  } catch (const hardy::ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const hardy::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hardy::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const hardy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
