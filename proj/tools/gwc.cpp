#include "gwc/brackets.hpp"
#include "gwc/cache_io.hpp"
#include "gwc/checks.hpp"
#include "gwc/fock.hpp"
#include "gwc/query.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using nlohmann::json;
using namespace gwc;

namespace {

constexpr int exit_failed_check = 1;
constexpr int exit_usage = 2;
constexpr int exit_cutoff = 3;

struct Output {
  bool json_mode = true;
  bool quiet = false;

  void emit(const json& j, const std::string& text) const {
    if (quiet) return;
    if (json_mode) std::cout << j.dump(2) << '\n';
    else std::cout << text;
  }
};

std::string text_report(const ResidualReport& r) {
  std::string s = r.name + ": " + std::to_string(r.checked) + " checked, " + std::to_string(r.failed) + " failed\n";
  for (const auto& f : r.failures) s += "  " + f + "\n";
  return s;
}

int run_eval(const std::string& expr, int genus, int degree, const Output& out) {
  Bracket b = parse_expression(expr, genus, degree);
  PipelineLog log;
  Rational v = evaluate(b, &log);
  json j;
  j["query"] = render(b);
  j["genus"] = genus;
  j["degree"] = degree;
  j["value"] = to_string(v);
  j["pipeline"] = log;
  std::string text = render(b) + " = " + to_string(v) + "\n";
  for (const auto& line : log) text += "  " + line + "\n";
  out.emit(j, text);
  return 0;
}

int run_check(const std::string& suite, const SuiteOptions& opts, const Output& out) {
  auto reports = run_suite(suite, opts);
  bool ok = true;
  json list = json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    list.push_back({{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}});
    text += text_report(r);
  }
  json j{{"suite", suite}, {"ok", ok}, {"reports", list}};
  out.emit(j, text);
  return ok ? 0 : exit_failed_check;
}

// stationary invariants <prod tau_k(w)> of the absolute target, degrees 1..degree,
// at most max_k insertions of level <= max_level
int run_table(int genus, int degree, int max_level, int max_k, const Output& out) {
  json entries = json::array();
  std::string text;
  std::vector<int> levels;
  std::function<void(int)> rec = [&](int hi) {
    for (int d = 1; d <= degree; ++d) {
      std::vector<Insertion> ins;
      for (int l : levels) ins.push_back(tau(l, CohClass::omega()));
      Bracket b{genus, d, ins, {}};
      const std::string v = to_string(evaluate(b));
      entries.push_back({{"degree", d}, {"query", render(b)}, {"value", v}});
      text += "d=" + std::to_string(d) + " " + render(b) + " = " + v + "\n";
    }
    if (static_cast<int>(levels.size()) == max_k) return;
    for (int l = hi; l >= 0; --l) {
      levels.push_back(l);
      rec(l);
      levels.pop_back();
    }
  };
  rec(max_level);
  out.emit(json{{"genus", genus}, {"max_level", max_level}, {"entries", entries}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact descendent invariants of target curves"};
  app.require_subcommand(1);
  Output out;
  std::optional<std::string> cache_dir;
  int genus = 0, degree = 1, max_level = 3, max_k = 3;
  app.add_option("--cache-dir", cache_dir, "character table cache directory (overrides GWC_CACHE_DIR)");
  app.add_flag("--json,!--no-json", out.json_mode, "JSON output (default)");
  app.add_flag("--quiet", out.quiet, "no output, exit code only");

  auto* eval = app.add_subcommand("eval", "evaluate a bracket");
  std::string expr;
  eval->add_option("expression", expr, "bracket, e.g. \"<t2(1) t3(w)>\"")->required();
  eval->add_option("--genus", genus, "target genus")->check(CLI::NonNegativeNumber);
  eval->add_option("--degree", degree, "degree")->check(CLI::NonNegativeNumber);

  auto* check = app.add_subcommand("check", "run a check suite");
  std::string suite;
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  SuiteOptions opts;
  check->add_option("--genus", opts.genus, "largest genus")->check(CLI::NonNegativeNumber);
  check->add_option("--degree", opts.degree, "largest degree")->check(CLI::PositiveNumber);
  check->add_option("--max-level", opts.max_level, "largest descendent level")->check(CLI::NonNegativeNumber);
  check->add_option("--max-k", opts.max_k, "largest operator index / k")->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "list stationary invariants");
  table->add_option("--genus", genus, "target genus")->check(CLI::NonNegativeNumber);
  table->add_option("--degree", degree, "largest degree")->check(CLI::PositiveNumber);
  table->add_option("--max-level", max_level, "largest level")->check(CLI::NonNegativeNumber);
  table->add_option("--max-k", max_k, "largest number of insertions")->check(CLI::NonNegativeNumber);

  for (auto* sub : {eval, check, table}) {
    sub->add_option("--cache-dir", cache_dir, "character table cache directory (overrides GWC_CACHE_DIR)");
    sub->add_flag("--json,!--no-json", out.json_mode, "JSON output (default)");
    sub->add_flag("--quiet", out.quiet, "no output, exit code only");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_usage;
  }

  if (auto dir = resolve_cache_dir(cache_dir)) {
    const bool quiet = out.quiet;
    set_table_persistence(directory_persistence(*dir, [quiet](const std::string& w) {
      if (!quiet) std::cerr << "warning: " << w << '\n';
    }));
  }

  try {
    if (*eval) return run_eval(expr, genus, degree, out);
    if (*check) return run_check(suite, opts, out);
    return run_table(genus, degree, max_level, max_k, out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return exit_usage;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CutoffError& e) {
    std::cerr << "cutoff error: " << e.what() << '\n';
    return exit_cutoff;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
}
