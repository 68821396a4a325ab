// Command-line front end: pair inspection, exhaustive claim verification,
// essential sets, text diagrams and pair enumeration.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schub/diagram.hpp"
#include "schub/enumerate.hpp"
#include "schub/influence.hpp"
#include "schub/neighbors.hpp"
#include "schub/reduction.hpp"
#include "schub/verify.hpp"

namespace {

using nlohmann::json;

int env_max_degree() {
  const char* env = std::getenv("SCHUB_MAX_N");
  if (!env) return schub::kDefaultMaxEnumerationDegree;
  int v = std::atoi(env);
  if (v < 1) return schub::kDefaultMaxEnumerationDegree;
  return std::min(v, schub::kMaxDegree);
}

json points_json(const std::vector<schub::Point>& pts) {
  json arr = json::array();
  for (auto p : pts) arr.push_back({p.i, p.j});
  return arr;
}

json trans_json(const std::vector<schub::Transposition>& ts) {
  json arr = json::array();
  for (auto t : ts) arr.push_back({t.a, t.b});
  return arr;
}

std::string points_text(const std::vector<schub::Point>& pts) {
  std::string s;
  for (auto p : pts) {
    if (!s.empty()) s += " ";
    s += schub::to_string(p);
  }
  return s.empty() ? "(none)" : s;
}

std::string trans_text(const std::vector<schub::Transposition>& ts) {
  std::string s;
  for (auto t : ts) {
    if (!s.empty()) s += " ";
    s += t.str();
  }
  return s.empty() ? "(none)" : s;
}

std::vector<schub::Point> restricted(const schub::PointSet& set, int n) {
  std::vector<schub::Point> out;
  for (auto p : set.points())
    if (schub::in_restricted_square(p, n)) out.push_back(p);
  return out;
}

int cmd_check_pair(const std::string& wtext, const std::string& xtext,
                   bool as_json) {
  auto pair = schub::PermPair::make(schub::Permutation::parse(wtext),
                                    schub::Permutation::parse(xtext));
  int n = pair.degree();
  bool smooth = pair.is_smooth();
  bool influential = schub::is_influential(pair);
  std::optional<bool> tight;
  std::optional<schub::Permutation> witness;
  if (n <= 7) {
    witness = schub::tightness_counterexample(pair);
    tight = !witness.has_value();
  }
  auto level = restricted(pair.level_set(), n);
  auto ess = schub::essential_set(pair.w()).points();
  auto crit = schub::critical_set(pair).points();
  std::vector<schub::Point> critred;
  if (smooth) critred = schub::crit_red(pair).points();

  if (as_json) {
    json j;
    j["w"] = pair.w().str();
    j["x"] = pair.x().str();
    j["n"] = n;
    j["length_w"] = pair.length_w();
    j["length_x"] = pair.length_x();
    j["length_pair"] = pair.length();
    j["smooth"] = smooth;
    j["influential"] = influential;
    if (tight)
      j["tight"] = *tight;
    else
      j["tight"] = nullptr;
    if (witness) j["tight_witness"] = witness->str();
    j["tangent_dim"] = pair.tangent_dim();
    j["r_set"] = trans_json(pair.r_set());
    j["rs_set"] = trans_json(pair.rs_set());
    j["essential"] = points_json(ess);
    j["level_set_restricted"] = points_json(level);
    j["crit"] = points_json(crit);
    if (smooth)
      j["crit_red"] = points_json(critred);
    else
      j["crit_red"] = nullptr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "pair: w=" << pair.w().str() << " x=" << pair.x().str()
              << " n=" << n << "\n"
              << "l(w)=" << pair.length_w() << " l(x)=" << pair.length_x()
              << " l(pair)=" << pair.length() << "\n"
              << "smooth: " << (smooth ? "yes" : "no")
              << " (#R=" << pair.r_set().size() << ")\n";
    if (tight)
      std::cout << "tight: " << (*tight ? "yes" : "no") << "\n";
    else
      std::cout << "tight: skipped (degree > 7)\n";
    if (witness) std::cout << "tight witness: y=" << witness->str() << "\n";
    std::cout << "influential: " << (influential ? "yes" : "no") << "\n"
              << "tangent_dim: " << pair.tangent_dim() << "\n"
              << "R: " << trans_text(pair.r_set()) << "\n"
              << "R*: " << trans_text(pair.rs_set()) << "\n"
              << "ess(w): " << points_text(ess) << "\n"
              << "X (restricted): " << points_text(level) << "\n"
              << "crit: " << points_text(crit) << "\n";
    if (smooth)
      std::cout << "crit_red: " << points_text(critred) << "\n";
    else
      std::cout << "crit_red: (undefined for non-smooth pairs)\n";
  }
  return 0;
}

int cmd_verify(const std::string& claim, int n, int parallel, bool as_json,
               bool allow_slow) {
  schub::VerifyOptions opt;
  opt.parallelism = parallel;
  opt.allow_slow = allow_slow;
  opt.max_degree = env_max_degree();
  std::vector<schub::VerificationReport> reports;
  if (claim == "all")
    reports = schub::run_all(n, opt);
  else
    reports.push_back(schub::run_claim(claim, n, opt));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (as_json) {
    std::cout << (claim == "all" ? schub::reports_to_json(reports)
                                 : schub::report_to_json(reports.front()));
  } else {
    for (const auto& r : reports) std::cout << schub::report_to_text(r);
  }
  return pass ? 0 : 1;
}

int cmd_enumerate(int n, bool smooth_only) {
  schub::enumerate_pairs(
      n,
      [&](const schub::PermPair& p) {
        if (smooth_only && !p.is_smooth()) return;
        std::cout << p.w().str() << " " << p.x().str() << "\n";
      },
      env_max_degree());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive verifier for smooth/tight/influential "
               "permutation pair combinatorics"};
  app.require_subcommand(1);

  std::string wtext, xtext, claim;
  int n = 0, parallel = 0;
  bool as_json = false, allow_slow = false, smooth_only = false;

  auto* check = app.add_subcommand("check-pair",
                                   "inspect one pair (w, x) with x <= w");
  check->add_option("--w", wtext, "w in one-line form")->required();
  check->add_option("--x", xtext, "x in one-line form")->required();
  check->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand(
      "verify", "run a registered claim exhaustively at degree n");
  verify->add_option("--claim", claim, "claim id, or 'all'")->required();
  verify->add_option("--n", n, "degree")->required();
  verify->add_option("--parallel", parallel, "worker count (default: cores)");
  verify->add_flag("--json", as_json, "JSON output");
  verify->add_flag("--allow-slow", allow_slow,
                   "permit degrees above a claim's fast cap");

  auto* essential =
      app.add_subcommand("essential", "print the essential set of w");
  essential->add_option("--w", wtext, "w in one-line form")->required();

  auto* render = app.add_subcommand("render", "text diagram of a pair");
  render->add_option("--w", wtext, "w in one-line form")->required();
  render->add_option("--x", xtext, "x in one-line form")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list pairs of S_n");
  enumerate->add_option("--n", n, "degree")->required();
  enumerate->add_flag("--smooth-only", smooth_only, "smooth pairs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check_pair(wtext, xtext, as_json);
    if (verify->parsed())
      return cmd_verify(claim, n, parallel, as_json, allow_slow);
    if (essential->parsed()) {
      auto pts =
          schub::essential_set(schub::Permutation::parse(wtext)).points();
      for (auto p : pts) std::cout << schub::to_string(p) << "\n";
      return 0;
    }
    if (render->parsed()) {
      std::cout << schub::render_diagram(
          schub::PermPair::make(schub::Permutation::parse(wtext),
                                schub::Permutation::parse(xtext)));
      return 0;
    }
    if (enumerate->parsed()) return cmd_enumerate(n, smooth_only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
