// Batch front-end: parse a system config, run property checkers or the
// theorem suites, and emit a structured JSON report.
//
// Exit codes: 0 success; 1 assertion failure (--assert and a property
// failed or a theorem case was refuted); 2 usage or config error;
// 3 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hyperdyn/config.hpp"
#include "hyperdyn/hyperspace.hpp"
#include "hyperdyn/properties.hpp"
#include "hyperdyn/theorems.hpp"

namespace {

using namespace hyperdyn;

constexpr const char* kVersion = "0.1.0";

Json system_descriptor(const ParsedSystem& parsed, const std::string& source) {
  Json j;
  j["source"] = source;
  if (parsed.finite) {
    j["kind"] = "finite";
    j["name"] = parsed.finite->name;
    j["points"] = parsed.finite->space.points();
    j["generators"] = static_cast<int>(parsed.finite->group.generators.size());
  } else if (parsed.sft) {
    j["kind"] = "sft";
    j["name"] = parsed.sft->name;
    j["alphabet"] = parsed.sft->k;
  }
  return j;
}

PropertyReport run_check(const ParsedSystem& parsed, const std::string& property,
                         const Bounds& bounds) {
  if (parsed.finite) {
    const ActionSystem& sys = *parsed.finite;
    if (property == "transitive") return is_transitive(sys);
    if (property == "weakly-mixing") return is_weakly_mixing(sys);
    if (property == "mixing") return is_mixing(sys);
    if (property == "dense-periodic") return has_dense_periodic_points(sys);
    if (property == "sdic") return is_sdic(sys);
    if (property == "devaney") return is_devaney_chaotic(sys);
    if (property == "product-diagnostic") return weak_mixing_product_group_diagnostic(sys);
  } else {
    const Sft& m = *parsed.sft;
    if (property == "transitive") return sft_is_transitive(m, bounds);
    if (property == "weakly-mixing") return sft_is_weakly_mixing(m, bounds);
    if (property == "mixing") return sft_is_mixing(m, bounds);
    if (property == "dense-periodic") return sft_has_dense_periodic_points(m, bounds);
    if (property == "sdic") return sft_is_sdic(m, {Rational(1)}, bounds);
    if (property == "devaney") return sft_is_devaney_chaotic(m, bounds);
  }
  throw std::invalid_argument("unknown property '" + property +
                              "' (expected transitive, weakly-mixing, mixing, dense-periodic, "
                              "sdic, devaney, product-diagnostic)");
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperdyn: hyperspace dynamics property checker and theorem verifier"};

  std::string system_source, check_property, verify_ids, suite_path, out_path;
  Bounds bounds;
  bool assert_flag = false;

  app.add_option("--system", system_source, "config file path or builtin:name(params)");
  app.add_option("--check", check_property, "property to decide");
  app.add_option("--verify", verify_ids, "comma-separated theorem ids");
  app.add_option("--suite", suite_path, "suite file to run");
  app.add_option("--radius", bounds.word_radius, "word/exponent ball radius")
      ->check(CLI::PositiveNumber);
  app.add_option("--cyl-len", bounds.cylinder_length, "max cylinder word length")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", bounds.hyperspace_cap, "hyperspace base-size cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "report output path (default stdout)");
  app.add_flag("--assert", assert_flag, "nonzero exit when a property fails or a case is refuted");

  CLI11_PARSE(app, argc, argv);

  int commands = (!check_property.empty()) + (!verify_ids.empty()) + (!suite_path.empty());
  if (commands != 1) {
    std::cerr << "error: exactly one of --check, --verify, --suite is required\n";
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  Json report;
  report["tool"] = "hyperdyn";
  report["version"] = kVersion;
  report["bounds"] = bounds.to_json();

  bool any_negative = false;

  try {
    if (!suite_path.empty()) {
      std::ifstream file(suite_path);
      if (!file) {
        std::cerr << "error: cannot open suite file '" << suite_path << "'\n";
        return 3;
      }
      std::ostringstream text;
      text << file.rdbuf();
      ParsedSuite suite = parse_suite(text.str(), bounds);
      if (!suite.ok()) {
        for (const auto& e : suite.errors) std::cerr << "suite error: " << e.str() << "\n";
        return 2;
      }
      report["command"] = "suite " + suite_path;
      SuiteReport sr = run_suite(suite.config);
      report["results"] = sr.to_json();
      any_negative = !sr.passed;
    } else {
      if (system_source.empty()) {
        std::cerr << "error: --system is required with --check/--verify\n";
        return 2;
      }
      ParsedSystem parsed = parse_system_source(system_source);
      if (!parsed.ok()) {
        for (const auto& e : parsed.errors) std::cerr << "config error: " << e.str() << "\n";
        return 2;
      }
      report["system"] = system_descriptor(parsed, system_source);
      if (!check_property.empty()) {
        report["command"] = "check " + check_property;
        PropertyReport pr = run_check(parsed, check_property, bounds);
        report["results"] = Json::array({pr.to_json()});
        any_negative = !verdict_positive(pr.verdict);
      } else {
        report["command"] = "verify " + verify_ids;
        Json results = Json::array();
        for (const auto& id : split_ids(verify_ids)) {
          TheoremCase c = parsed.finite ? verify_theorem(id, *parsed.finite, bounds)
                                        : verify_theorem_sft(id, *parsed.sft, bounds);
          if (c.verdict == TheoremVerdict::Refuted) any_negative = true;
          results.push_back(c.to_json());
        }
        report["results"] = results;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }

  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  report["run"] = Json{{"wall_ms", elapsed.count()},
                       {"timestamp", static_cast<long long>(std::chrono::duration_cast<std::chrono::seconds>(
                                         std::chrono::system_clock::now().time_since_epoch())
                                         .count())}};

  std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write report to '" << out_path << "'\n";
      return 3;
    }
    out << text;
  }

  return (assert_flag && any_negative) ? 1 : 0;
}
