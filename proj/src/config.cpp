#include "hardy/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy::config {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_number(std::string_view s, double& out) {
  const std::string text(s);
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size() && !text.empty();
}

std::vector<double> parse_list(std::string_view s, const char* what) {
  std::vector<double> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    double v;
    if (!parse_number(trim(item), v)) {
      throw DomainError(std::string("bad number in ") + what + " list: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw DomainError(std::string("empty ") + what + " list");
  return out;
}

Density parse_kind_descriptor(std::string_view text) {
  std::string kind;
  std::optional<double> coef, expo, value;
  std::vector<double> nodes, values;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw DomainError("density descriptor token needs '=': " + tok);
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    double num;
    if (key == "kind") {
      kind = val;
    } else if (key == "coef" && parse_number(val, num)) {
      coef = num;
    } else if (key == "exp" && parse_number(val, num)) {
      expo = num;
    } else if (key == "value" && parse_number(val, num)) {
      value = num;
    } else if (key == "nodes") {
      nodes = parse_list(val, "nodes");
    } else if (key == "values") {
      values = parse_list(val, "values");
    } else {
      throw DomainError("unknown or malformed density parameter: " + tok);
    }
  }
  if (kind == "power") {
    if (!coef || !expo) throw DomainError("power density needs coef= and exp=");
    return Density::power_law(*coef, *expo);
  }
  if (kind == "const") {
    if (!value) throw DomainError("const density needs value=");
    return Density::constant(*value);
  }
  if (kind == "tab") {
    if (nodes.empty() || values.empty()) throw DomainError("tab density needs nodes= and values=");
    return Density::tabulated(std::move(nodes), std::move(values));
  }
  throw DomainError("unknown density kind: '" + kind + "'");
}

}  // namespace

Density parse_density(std::string_view descriptor) {
  const std::string_view text = trim(descriptor);
  if (text.empty()) throw DomainError("empty density descriptor");
  if (text.substr(0, 5) == "kind=") return parse_kind_descriptor(text);
  if (text.substr(0, 4) == "expr") {
    std::string_view rest = trim(text.substr(4));
    if (rest.empty() || rest.front() != '=') {
      throw DomainError("expression density needs 'expr = <expression>'");
    }
    rest = trim(rest.substr(1));
    return Density::expression(rest);
  }
  double num;
  if (parse_number(text, num)) return Density::constant(num);
  // bare expression text
  return Density::expression(text);
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig rc;
  bool have_p = false, have_q = false, have_d = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(lineno) + " is not 'key = value'");
    }
    const std::string key{trim(body.substr(0, eq))};
    const std::string_view value = trim(body.substr(eq + 1));
    double num;
    if (key == "p" && parse_number(value, num)) {
      rc.p = num;
      have_p = true;
    } else if (key == "q" && parse_number(value, num)) {
      rc.q = num;
      have_q = true;
    } else if (key == "D") {
      if (value == "inf" || value == "infinity") {
        rc.D = std::numeric_limits<double>::infinity();
      } else if (parse_number(value, num)) {
        rc.D = num;
      } else {
        throw DomainError("bad D value: '" + std::string(value) + "'");
      }
      have_d = true;
    } else if (key == "u") {
      rc.u = parse_density(value);
    } else if (key == "v") {
      rc.v = parse_density(value);
    } else if (key == "grid_nodes" && parse_number(value, num)) {
      rc.grid_nodes = static_cast<int>(num);
    } else if (key == "n_iters" && parse_number(value, num)) {
      rc.n_iters = static_cast<int>(num);
    } else if (key == "rel_tol" && parse_number(value, num)) {
      rc.quad.rel_tol = num;
    } else if (key == "abs_tol" && parse_number(value, num)) {
      rc.quad.abs_tol = num;
    } else if (key == "max_depth" && parse_number(value, num)) {
      rc.quad.max_depth = static_cast<int>(num);
    } else {
      throw DomainError("unknown config key or bad value at line " + std::to_string(lineno) +
                        ": '" + key + "'");
    }
  }
  if (!have_p || !have_q || !have_d || !rc.u || !rc.v) {
    throw DomainError("config must set p, q, D, u, and v");
  }
  if (rc.grid_nodes < 16) throw DomainError("grid_nodes must be at least 16");
  if (!(rc.quad.rel_tol > 0.0) || !(rc.quad.abs_tol > 0.0) || rc.quad.max_depth < 8) {
    throw DomainError("quad tolerances must be positive and max_depth >= 8");
  }
  return rc;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

ProblemSpec to_problem(const RunConfig& rc) {
  return ProblemSpec::make(rc.p, rc.q, rc.D, *rc.u, *rc.v);
}

}  // namespace hardy::config
