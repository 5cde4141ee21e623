// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: cut-off profiles, thresholds, exact total
// variation values and the inequality verification harness, with CSV/JSON
// output for plotting.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freewalk/bounds.hpp"
#include "freewalk/checks.hpp"
#include "freewalk/io.hpp"
#include "freewalk/oracle.hpp"

namespace fw = freewalk;
using nlohmann::json;

namespace {

struct run_config {
  std::string group = "oplus";
  int size = 10;
  std::string state;
  std::string theta;
  double tau = 0.0;
  std::string k_range = "1..20";
  double c = 0.0;
  double c0 = 0.0;
  std::string format = "csv";
  std::string out;
  double tol = 0.0;
  int max_terms = 0;
  int quad_order = 0;
  std::string only;
  bool json_out = false;
  bool no_exact = false;
  std::vector<int> sweep_sizes;
  std::vector<std::string> sweep_states;
};

fw::group_family make_group(const run_config& cfg) {
  if (cfg.group == "oplus")
    return {fw::family_kind::free_orthogonal, cfg.size};
  if (cfg.group == "splus")
    return {fw::family_kind::free_symmetric, cfg.size};
  if (cfg.group == "aut")
    return {fw::family_kind::quantum_automorphism, cfg.size};
  throw std::invalid_argument("unknown group: " + cfg.group);
}

fw::numeric_context make_context(const run_config& cfg) {
  fw::numeric_context ctx;
  if (cfg.tol > 0.0) ctx.rel_tol = ctx.abs_tol = cfg.tol;
  if (cfg.max_terms > 0) ctx.max_terms = cfg.max_terms;
  if (cfg.quad_order > 0) ctx.quad_order = cfg.quad_order;
  ctx.validate();
  return ctx;
}

double theta_from_tau(double tau) {
  if (!(tau > 0.0) || !(tau > 0.0 && tau <= 4.0))
    throw std::invalid_argument("tau must lie in (0, 4]");
  return std::acos(1.0 - tau / 2.0);
}

fw::central_state make_state(const fw::group_family& g, const run_config& cfg) {
  if (!cfg.state.empty()) {
    const std::string& s = cfg.state;
    if (s == "randtrans") return fw::central_state::random_transposition(g);
    if (s == "haar") return fw::central_state::haar(g);
    const auto colon = s.find(':');
    if (colon != std::string::npos) {
      const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
      if (kind == "pure")
        return fw::central_state::pure(g, fw::io::parse_double(arg));
      if (kind == "rotation")
        return fw::central_state::rotation(g, fw::io::parse_angle(arg));
      if (kind == "mixture")
        return fw::central_state::mixture(g, fw::io::parse_mixture_file(arg));
    }
    throw std::invalid_argument("unknown state spec: " + s);
  }
  if (!cfg.theta.empty())
    return fw::central_state::rotation(g, fw::io::parse_angle(cfg.theta));
  if (cfg.tau > 0.0)
    return fw::central_state::rotation(g, theta_from_tau(cfg.tau));
  throw std::invalid_argument("no state given (use --state, --theta or --tau)");
}

void emit(const run_config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.out);
  out << text;
}

json bound_json(const fw::bound_value& b) {
  json j;
  j["value"] = fw::io::format_double(b.value);
  j["status"] = fw::to_string(b.status);
  return j;
}

std::string profile_json(const fw::cutoff_profile& p) {
  json rows = json::array();
  for (const fw::profile_row& r : p.rows) {
    json row;
    row["k"] = r.k;
    row["past_k0"] = r.past_k0;
    row["dsh_upper"] = bound_json(r.dsh);
    row["closed_upper"] = bound_json(r.closed_upper);
    row["char_lower"] = bound_json(r.char_low);
    row["window_lower"] = bound_json(r.window_low);
    row["exact_tv"] =
        r.exact ? json(fw::io::format_double(*r.exact)) : json(nullptr);
    row["exact_err"] = fw::io::format_double(r.exact_err);
    row["l2_norm"] = fw::io::format_double(r.l2_norm);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

int cmd_profile(const run_config& cfg) {
  const fw::group_family g = make_group(cfg);
  const fw::central_state s = make_state(g, cfg);
  const fw::numeric_context ctx = make_context(cfg);
  const auto [k_from, k_to] = fw::io::parse_k_range(cfg.k_range);
  const fw::cutoff_profile p =
      fw::build_profile(s, k_from, k_to, ctx, !cfg.no_exact);
  emit(cfg, cfg.format == "json" ? profile_json(p) : fw::io::profile_to_csv(p));
  return 0;
}

int cmd_cutoff(const run_config& cfg) {
  const fw::group_family g = make_group(cfg);
  const fw::central_state s = make_state(g, cfg);
  json j;
  const fw::k0_result k0 = s.boundedness_threshold();
  if (k0.finite)
    j["k0"] = k0.k0;
  else
    j["k0"] = "inf";

  std::optional<double> tau;
  if (s.state_kind() == fw::central_state::kind::rotation_angle)
    tau = s.tau();
  else if (s.state_kind() == fw::central_state::kind::random_transposition)
    tau = 2.0;
  if (tau) {
    j["tau"] = *tau;
    j["k1"] = fw::threshold_k1(g.size(), *tau);
    j["admissible"] = g.size() >= fw::admissible_size(*tau);
    if (cfg.c > 0.0) {
      const double c0 = cfg.c0 > 0.0 ? cfg.c0 : cfg.c;
      try {
        if (s.state_kind() == fw::central_state::kind::random_transposition) {
          const fw::window_pair w = fw::transposition_window(g.size(), cfg.c);
          j["upper_at_c"] = bound_json(w.upper);
          j["lower_at_c"] = bound_json(w.lower);
        } else {
          j["upper_at_c"] =
              bound_json(fw::kac_window_upper(g.size(), s.theta(), cfg.c, c0));
          j["lower_at_c"] =
              bound_json(fw::kac_window_lower(g.size(), s.theta(), cfg.c));
        }
      } catch (const std::domain_error& e) {
        j["window_error"] = e.what();
      }
    }
  }
  emit(cfg, j.dump(2) + "\n");
  return 0;
}

int cmd_oracle(const run_config& cfg) {
  const fw::group_family g = make_group(cfg);
  const fw::central_state s = make_state(g, cfg);
  const fw::numeric_context ctx = make_context(cfg);
  const auto [k_from, k_to] = fw::io::parse_k_range(cfg.k_range);
  if (k_from != k_to)
    throw std::invalid_argument("oracle expects a single k (use --k K)");
  const fw::tv_result tv = fw::exact_tv(s, k_from, ctx);
  std::string text;
  if (cfg.json_out || cfg.format == "json") {
    json j;
    if (tv.divergent) {
      j["status"] = "divergent";
    } else {
      j["status"] = "ok";
      j["tv"] = tv.value;
      j["err"] = tv.error_bar;
    }
    text = j.dump(2) + "\n";
  } else if (tv.divergent) {
    text = "DIVERGENT\n";
  } else {
    text = fw::io::format_double(tv.value) + " +/- " +
           fw::io::format_double(tv.error_bar) + "\n";
  }
  emit(cfg, text);
  return 0;
}

int cmd_verify(const run_config& cfg) {
  std::vector<fw::check_report> reports = fw::run_all_checks();
  if (!cfg.only.empty()) {
    std::vector<fw::check_report> filtered;
    for (auto& r : reports)
      if (r.name.find(cfg.only) != std::string::npos)
        filtered.push_back(std::move(r));
    if (filtered.empty())
      throw std::invalid_argument("no check matches --only " + cfg.only);
    reports = std::move(filtered);
  }
  std::string text;
  bool all_pass = true;
  for (const auto& r : reports) {
    text += fw::format_report(r);
    text += '\n';
    all_pass = all_pass && r.pass;
  }
  emit(cfg, text);
  return all_pass ? 0 : 1;
}

int cmd_sweep(const run_config& cfg) {
  if (cfg.out.empty())
    throw std::invalid_argument("sweep requires --out DIRECTORY");
  const auto sizes = cfg.sweep_sizes.empty() ? std::vector<int>{cfg.size}
                                             : cfg.sweep_sizes;
  const auto states = cfg.sweep_states.empty()
                          ? std::vector<std::string>{cfg.state}
                          : cfg.sweep_states;
  const auto [k_from, k_to] = fw::io::parse_k_range(cfg.k_range);
  for (int n : sizes) {
    for (const std::string& st : states) {
      run_config one = cfg;
      one.size = n;
      one.state = st;
      const fw::group_family g = make_group(one);
      const fw::central_state s = make_state(g, one);
      const fw::numeric_context ctx = make_context(one);
      const fw::cutoff_profile p =
          fw::build_profile(s, k_from, k_to, ctx, !cfg.no_exact);
      std::string tag = st;
      for (char& c : tag)
        if (c == ':' || c == '/') c = '_';
      const std::string path = cfg.out + "/profile_" + cfg.group + "_N" +
                               std::to_string(n) + "_" + tag + "." +
                               (cfg.format == "json" ? "json" : "csv");
      std::ofstream out(path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << (cfg.format == "json" ? profile_json(p) : fw::io::profile_to_csv(p));
      std::cout << path << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  run_config cfg;
  CLI::App app{"central random walks on free quantum groups"};
  app.set_config("--config");
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* cmd, bool with_k) {
    cmd->add_option("--group", cfg.group, "oplus | splus | aut");
    cmd->add_option("--N", cfg.size, "group size");
    cmd->add_option("--state", cfg.state,
                    "pure:T | rotation:THETA | mixture:FILE | randtrans | haar");
    cmd->add_option("--theta", cfg.theta, "rotation angle (pi, pi/2, ... or radians)");
    cmd->add_option("--tau", cfg.tau, "2(1-cos theta) in (0,4]");
    if (with_k) cmd->add_option("--k", cfg.k_range, "convolution powers A..B");
    cmd->add_option("--c", cfg.c, "window offset in units of N");
    cmd->add_option("--c0", cfg.c0, "window floor c0 (defaults to c)");
    cmd->add_option("--format", cfg.format, "csv | json");
    cmd->add_option("--out", cfg.out, "output path (stdout if omitted)");
    cmd->add_option("--tol", cfg.tol, "numeric tolerance override");
    cmd->add_option("--max-terms", cfg.max_terms, "series truncation cap");
    cmd->add_option("--quad-order", cfg.quad_order, "quadrature order");
  };

  CLI::App* profile = app.add_subcommand("profile", "bounds and exact TV per k");
  add_common(profile, true);
  profile->add_flag("--no-exact", cfg.no_exact, "skip the exact TV column");

  CLI::App* cutoff = app.add_subcommand("cutoff", "thresholds and window bounds");
  add_common(cutoff, false);

  CLI::App* oracle = app.add_subcommand("oracle", "exact TV at one k");
  add_common(oracle, true);
  oracle->add_flag("--json", cfg.json_out, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "run the inequality harness");
  verify->add_option("--only", cfg.only, "run only checks whose name matches");
  verify->add_option("--out", cfg.out, "output path (stdout if omitted)");

  CLI::App* sweep = app.add_subcommand("sweep", "profiles over a parameter grid");
  add_common(sweep, true);
  sweep->add_option("--N-list", cfg.sweep_sizes, "sizes to sweep")
      ->delimiter(',');
  sweep->add_option("--state-list", cfg.sweep_states, "state specs to sweep")
      ->delimiter(',');
  sweep->add_flag("--no-exact", cfg.no_exact, "skip the exact TV column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (profile->parsed()) return cmd_profile(cfg);
    if (cutoff->parsed()) return cmd_cutoff(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
