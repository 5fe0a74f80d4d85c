#include "rcf/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace rcf {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(ch));
  return s;
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: cannot parse value for key '" + key +
                                "': '" + value + "'");
  }
}

std::uint64_t to_uint(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: cannot parse value for key '" + key +
                                "': '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (;;) {
    const auto comma = value.find(',', start);
    if (comma == std::string::npos) {
      const std::string item = trim(value.substr(start));
      if (!item.empty()) items.push_back(item);
      break;
    }
    const std::string item = trim(value.substr(start, comma - start));
    if (!item.empty()) items.push_back(item);
    start = comma + 1;
  }
  return items;
}

// Ordered key=value pairs; '#' comments, blank lines skipped.
std::vector<std::pair<std::string, std::string>> parse_kv(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    pairs.emplace_back(lower(trim(stripped.substr(0, eq))),
                       trim(stripped.substr(eq + 1)));
  }
  return pairs;
}

// Applies one key to a scenario; returns false when the key is unknown.
bool apply_scenario_key(McScenario& sc, const std::string& key,
                        const std::string& value) {
  if (key == "n") {
    sc.sim.n = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "t_end") {
    sc.sim.t_end = to_double(key, value);
  } else if (key == "beta") {
    sc.sim.beta = to_double(key, value);
  } else if (key == "jump_scale") {
    sc.sim.jump_scale = to_double(key, value);
  } else if (key == "cir_kappa") {
    sc.sim.cir_kappa = to_double(key, value);
  } else if (key == "cir_theta") {
    sc.sim.cir_theta = to_double(key, value);
  } else if (key == "cir_xi") {
    sc.sim.cir_xi = to_double(key, value);
  } else if (key == "c0") {
    sc.sim.c0 = to_double(key, value);
  } else if (key == "rho") {
    sc.sim.rho = to_double(key, value);
  } else if (key == "scenario") {
    sc.sim.scenario = scenario_from_string(value);
  } else if (key == "sigma2" || key == "const_vol") {
    sc.sim.const_vol = to_double(key, value);
  } else if (key == "reps") {
    sc.reps = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "seed") {
    sc.master_seed = to_uint(key, value);
  } else if (key == "k_n") {
    sc.k_n = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "c") {
    sc.c = to_double(key, value);
  } else if (key == "c_star") {
    sc.c_star = to_double(key, value);
  } else if (key == "alpha") {
    sc.alpha = to_double(key, value);
  } else {
    return false;
  }
  return true;
}

}  // namespace

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string format_fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void write_path_csv(const PricePath& path, std::ostream& out) {
  out << "t,x\n";
  const double delta = path.delta();
  const std::size_t n = path.n();
  for (std::size_t i = 0; i <= n; ++i) {
    // The last grid time is the horizon itself, so a read-back recovers
    // t_end (and hence delta) exactly rather than via n*delta rounding.
    const double t =
        (i == n) ? path.t_end : static_cast<double>(i) * delta;
    out << format_full(t) << ',' << format_full(path.values[i]) << '\n';
  }
}

PricePath read_path_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,x") {
    throw std::invalid_argument("path csv must start with header 't,x'");
  }
  std::vector<double> ts;
  std::vector<double> xs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 't,x' row");
    }
    ts.push_back(to_double("t", trim(line.substr(0, comma))));
    xs.push_back(to_double("x", trim(line.substr(comma + 1))));
    if (ts.size() >= 2 && !(ts[ts.size() - 1] > ts[ts.size() - 2])) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": grid times must increase");
    }
  }
  if (ts.size() < 2) {
    throw std::invalid_argument("path too short: need at least two samples");
  }
  return make_path(ts.back() - ts.front(), std::move(xs));
}

std::string test_result_csv_header() {
  return "c_hat_0,c_hat_1,i_hat,t_n,script_t,reject,u_n,k_n,gamma_n,alpha";
}

std::string test_result_csv_row(const TestResult& r) {
  std::string row;
  row += format_full(r.c_hat_0);
  row += ',';
  row += format_full(r.c_hat_1);
  row += ',';
  row += format_full(r.i_hat);
  row += ',';
  row += format_full(r.t_n);
  row += ',';
  row += format_full(r.script_t);
  row += ',';
  row += r.reject ? '1' : '0';
  row += ',';
  row += format_full(r.tuning.u_n);
  row += ',';
  row += std::to_string(r.tuning.k_n);
  row += ',';
  row += format_full(r.tuning.gamma_n);
  row += ',';
  row += format_full(r.tuning.alpha);
  return row;
}

std::string test_result_json(const TestResult& r) {
  nlohmann::ordered_json doc;
  doc["c_hat_0"] = r.c_hat_0;
  doc["c_hat_1"] = r.c_hat_1;
  doc["i_hat"] = r.i_hat;
  doc["t_n"] = r.t_n;
  doc["script_t"] = r.script_t;
  doc["reject"] = r.reject;
  doc["u_n"] = r.tuning.u_n;
  doc["k_n"] = r.tuning.k_n;
  doc["gamma_n"] = r.tuning.gamma_n;
  doc["alpha"] = r.tuning.alpha;
  return doc.dump(2);
}

std::string size_power_csv(const SizePowerTable& table) {
  std::string out = "beta,n,scenario,reps,reject_rate,stderr,failures\n";
  for (const TableRow& row : table.rows) {
    out += format_full(row.beta);
    out += ',';
    out += std::to_string(row.cell.n);
    out += ',';
    out += to_string(row.scenario);
    out += ',';
    out += std::to_string(row.reps);
    out += ',';
    out += format_fixed6(row.rejection_rate);
    out += ',';
    out += format_fixed6(row.mc_stderr);
    out += ',';
    out += std::to_string(row.failures);
    out += '\n';
  }
  return out;
}

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::string out = "u,script_t\n";
  for (const ScanPoint& p : points) {
    out += format_full(p.u);
    out += ',';
    out += p.valid ? format_full(p.script_t) : "NA";
    out += '\n';
  }
  return out;
}

std::string qq_csv(const std::vector<QqPoint>& points) {
  std::string out = "theo_q,emp_q\n";
  for (const QqPoint& p : points) {
    out += format_full(p.theoretical);
    out += ',';
    out += format_full(p.empirical);
    out += '\n';
  }
  return out;
}

SimConfig parse_sim_config(std::istream& in) {
  return parse_scenario_config(in).sim;
}

McScenario parse_scenario_config(std::istream& in) {
  McScenario sc;
  for (const auto& [key, value] : parse_kv(in)) {
    if (!apply_scenario_key(sc, key, value)) {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return sc;
}

std::string scenario_config_kv(const McScenario& sc) {
  std::string out;
  out += "n=" + std::to_string(sc.sim.n) + "\n";
  out += "t_end=" + format_full(sc.sim.t_end) + "\n";
  out += "beta=" + format_full(sc.sim.beta) + "\n";
  out += "jump_scale=" + format_full(sc.sim.jump_scale) + "\n";
  out += "cir_kappa=" + format_full(sc.sim.cir_kappa) + "\n";
  out += "cir_theta=" + format_full(sc.sim.cir_theta) + "\n";
  out += "cir_xi=" + format_full(sc.sim.cir_xi) + "\n";
  out += "c0=" + format_full(sc.sim.c0) + "\n";
  out += "rho=" + format_full(sc.sim.rho) + "\n";
  out += "scenario=" + to_string(sc.sim.scenario) + "\n";
  out += "sigma2=" + format_full(sc.sim.const_vol) + "\n";
  out += "reps=" + std::to_string(sc.reps) + "\n";
  out += "seed=" + std::to_string(sc.master_seed) + "\n";
  out += "k_n=" + std::to_string(sc.k_n) + "\n";
  out += "c=" + format_full(sc.c) + "\n";
  out += "c_star=" + format_full(sc.c_star) + "\n";
  out += "alpha=" + format_full(sc.alpha) + "\n";
  return out;
}

TableSpec parse_table_config(std::istream& in) {
  TableSpec spec;
  McScenario defaults;
  std::vector<std::size_t> ns;
  std::vector<std::pair<double, std::size_t>> cell_pairs;
  bool have_betas = false;

  for (const auto& [key, value] : parse_kv(in)) {
    if (key == "betas") {
      for (const std::string& item : split_list(value)) {
        spec.betas.push_back(to_double(key, item));
      }
      have_betas = true;
    } else if (key == "ns") {
      for (const std::string& item : split_list(value)) {
        ns.push_back(static_cast<std::size_t>(to_uint(key, item)));
      }
    } else if (key == "cells") {
      for (const std::string& item : split_list(value)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw std::invalid_argument(
              "config: cells entries must look like c:k_n, got '" + item +
              "'");
        }
        cell_pairs.emplace_back(
            to_double(key, trim(item.substr(0, colon))),
            static_cast<std::size_t>(to_uint(key, trim(item.substr(colon + 1)))));
      }
    } else if (!apply_scenario_key(defaults, key, value)) {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }

  if (!have_betas || spec.betas.empty()) {
    throw std::invalid_argument("table config requires a non-empty betas list");
  }
  if (ns.empty() == cell_pairs.empty()) {
    throw std::invalid_argument(
        "table config requires exactly one of 'ns' or 'cells'");
  }
  spec.base = defaults.sim;
  spec.reps = defaults.reps;
  spec.master_seed = defaults.master_seed;
  spec.alpha = defaults.alpha;
  if (!ns.empty()) {
    for (const std::size_t n : ns) {
      spec.cells.push_back(
          TableCell{n, defaults.k_n, defaults.c, defaults.c_star});
    }
  } else {
    for (const auto& [c, k_n] : cell_pairs) {
      spec.cells.push_back(
          TableCell{defaults.sim.n, k_n, c, defaults.c_star});
    }
  }
  return spec;
}

}  // namespace rcf
