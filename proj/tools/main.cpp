// Copyright 2026 The ctxmeasure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: analyze, approx, sizes, dump-lp, selftest.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ctxmeasure/ctxmeasure.hpp"

namespace {

using ctxm::Error;
using ctxm::ErrorClass;
using json = nlohmann::ordered_json;

int exit_code(ErrorClass cls) {
  switch (cls) {
    case ErrorClass::Input: return 2;
    case ErrorClass::Precondition: return 3;
    case ErrorClass::Solver: return 4;
  }
  return 1;
}

int exit_code(const Error& e) { return exit_code(ctxm::error_class(e.code())); }

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ctxm::Errc::InvalidArgument, "cannot write " + out_path);
  out << text;
}

std::vector<ctxm::Method> parse_methods(const std::vector<std::string>& names) {
  std::vector<ctxm::Method> out;
  for (const auto& group : names) {
    std::stringstream in(group);
    for (std::string name; std::getline(in, name, ',');) {
      if (name.empty()) continue;
      auto method = ctxm::parse_method(name);
      if (method == ctxm::Method::FixedModel) {
        throw Error(ctxm::Errc::InvalidArgument, "fixed_model is run through 'approx'");
      }
      out.push_back(method);
    }
  }
  return out;
}

/// "0,60;180,240" -> alphas {0,60}, betas {180,240}.
std::pair<std::vector<double>, std::vector<double>> parse_angles(const std::string& text) {
  auto semicolon = text.find(';');
  if (semicolon == std::string::npos) {
    throw Error(ctxm::Errc::InvalidArgument, "angles must look like 'a1,a2;b1,b2'");
  }
  auto side = [](const std::string& part) {
    std::vector<double> out;
    std::stringstream in(part);
    for (std::string item; std::getline(in, item, ',');) {
      try {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ctxm::Errc::InvalidArgument, "bad angle '" + item + "'");
      }
    }
    return out;
  };
  return {side(text.substr(0, semicolon)), side(text.substr(semicolon + 1))};
}

struct AnalyzeArgs {
  std::string path;
  std::vector<std::string> methods{"present"};
  bool json = false;
  bool witness = false;
  std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
  auto system = ctxm::parse_system(args.path);
  auto methods = parse_methods(args.methods);
  int code = 0;
  json reports = json::array();
  std::string text;
  for (auto method : methods) {
    try {
      auto report = ctxm::measure(system, method);
      reports.push_back(json::parse(ctxm::report_json(report, args.witness)));
      text += ctxm::format_report(report, args.witness) + "\n";
    } catch (const Error& e) {
      code = std::max(code, exit_code(e));
      json failed;
      failed["method"] = std::string(ctxm::to_string(method));
      failed["error"] = std::string(ctxm::errc_name(e.code()));
      failed["message"] = e.what();
      reports.push_back(failed);
      text += "method:        " + std::string(ctxm::to_string(method)) + "\nerror:         " + e.what() + "\n\n";
    }
  }
  emit(args.json ? reports.dump(2) + "\n" : text, args.out);
  return code;
}

struct ApproxArgs {
  std::string path;
  std::string model;
  bool epr = false;
  std::string angles = "0,60;180,240";
  bool json = false;
  bool witness = false;
  std::string out;
};

int run_approx(const ApproxArgs& args) {
  auto system = ctxm::parse_system(args.path);
  ctxm::ContextModel model;
  std::vector<std::string> rounding;
  if (args.epr) {
    auto [alphas, betas] = parse_angles(args.angles);
    auto epr = ctxm::epr_model(alphas, betas);
    model = ctxm::model_from_system(epr.system);
    rounding = epr.rounding;
  } else if (!args.model.empty()) {
    model = ctxm::model_from_system(ctxm::parse_system(args.model));
  } else {
    throw Error(ctxm::Errc::InvalidArgument, "approx needs --model or --epr");
  }
  auto report = ctxm::measure_fixed_model(system, model);
  const bool optimal = report.delta == report.delta0;
  if (args.json) {
    auto j = json::parse(ctxm::report_json(report, args.witness));
    j["optimal"] = optimal;
    j["rounding"] = rounding;
    emit(j.dump(2) + "\n", args.out);
  } else {
    std::string text = ctxm::format_report(report, args.witness);
    for (const auto& note : rounding) text += "rounding:      " + note + "\n";
    text += optimal ? "verdict:       approximation is optimal\n" : "verdict:       approximation is not optimal\n";
    emit(text, args.out);
  }
  return 0;
}

int run_sizes(std::size_t m, std::size_t n, bool as_json) {
  auto sizes = ctxm::problem_sizes(m, n);
  if (as_json) {
    json rows = json::array();
    for (const auto& s : sizes) {
      rows.push_back({{"method", std::string(ctxm::to_string(s.method))},
                      {"variables", s.variable_count.get_str()},
                      {"equalities", s.equality_count.get_str()},
                      {"inequalities", s.inequality_count.get_str()}});
    }
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << "m=" << m << " n=" << n << "\n";
  std::cout << "method     variables  equalities  inequalities\n";
  for (const auto& s : sizes) {
    std::string name(ctxm::to_string(s.method));
    name.resize(10, ' ');
    std::cout << name << ' ' << s.variable_count.get_str() << "  " << s.equality_count.get_str() << "  "
              << s.inequality_count.get_str() << "\n";
  }
  return 0;
}

int run_dump(const std::string& path, const std::string& method_name, const std::string& out) {
  auto system = ctxm::parse_system(path);
  ctxm::LinearProgram lp;
  switch (ctxm::parse_method(method_name)) {
    case ctxm::Method::Present: lp = ctxm::build_present_lp(system); break;
    case ctxm::Method::Cbd: lp = ctxm::build_cbd_lp(system); break;
    case ctxm::Method::Np: lp = ctxm::build_np_lp(system); break;
    case ctxm::Method::NpInside: lp = ctxm::build_np_inside_lp(system, ctxm::delta0_present(system)); break;
    case ctxm::Method::FixedModel:
      throw Error(ctxm::Errc::InvalidArgument, "dump-lp supports present, cbd, np and np_inside");
  }
  emit(ctxm::dump_lp(lp), out);
  return 0;
}

int run_selftest(std::size_t cases, std::uint64_t seed, double tol) {
  const ctxm::SuiteReport reports[] = {
      ctxm::run_cbd_equivalence_suite(cases, seed, tol), ctxm::run_np_equivalence_suite(cases, seed, tol),
      ctxm::run_median_suite(cases, seed, tol),          ctxm::run_cyclic2_suite(cases, seed, tol),
      ctxm::run_max_coupling_suite(cases, seed, tol),
  };
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.cases << " cases, "
              << r.certificates_ok << "/" << r.lps_solved << " certificates, " << r.float_agreements << "/"
              << r.lps_solved << " float agreements\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact contextuality measures for finite measurement systems"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Measure contextuality of a system file");
  cmd_analyze->add_option("system", analyze.path, "System file")->required();
  cmd_analyze->add_option("--method", analyze.methods, "present, cbd, np, np_inside (comma separated)");
  cmd_analyze->add_flag("--json", analyze.json, "Machine-readable output");
  cmd_analyze->add_flag("--witness", analyze.witness, "Include the optimal LP solution");
  cmd_analyze->add_option("--out", analyze.out, "Write the report to a file");

  ApproxArgs approx;
  auto* cmd_approx = app.add_subcommand("approx", "Test a fixed consistently connected model");
  cmd_approx->add_option("system", approx.path, "System file with the data")->required();
  auto* model_opt = cmd_approx->add_option("--model", approx.model, "System file holding the model");
  auto* epr_opt = cmd_approx->add_flag("--epr", approx.epr, "Use the builtin EPR model");
  model_opt->excludes(epr_opt);
  cmd_approx->add_option("--angles", approx.angles, "EPR angles in degrees, 'a1,a2;b1,b2'")->capture_default_str();
  cmd_approx->add_flag("--json", approx.json, "Machine-readable output");
  cmd_approx->add_flag("--witness", approx.witness, "Include the optimal couplings");
  cmd_approx->add_option("--out", approx.out, "Write the report to a file");

  std::size_t m = 2, n = 2;
  bool sizes_json = false;
  auto* cmd_sizes = app.add_subcommand("sizes", "LP sizes for m x n binary Alice-Bob systems");
  cmd_sizes->add_option("m", m)->required()->check(CLI::PositiveNumber);
  cmd_sizes->add_option("n", n)->required()->check(CLI::PositiveNumber);
  cmd_sizes->add_flag("--json", sizes_json);

  std::string dump_path, dump_method = "present", dump_out;
  auto* cmd_dump = app.add_subcommand("dump-lp", "Write the LP of a method in text form");
  cmd_dump->add_option("system", dump_path, "System file")->required();
  cmd_dump->add_option("--method", dump_method)->capture_default_str();
  cmd_dump->add_option("--out", dump_out, "Output file (stdout if omitted)");

  std::size_t cases = 100;
  std::uint64_t seed = 1;
  double tol = 1e-7;
  auto* cmd_selftest = app.add_subcommand("selftest", "Run the randomized cross-check suites");
  cmd_selftest->add_option("--cases", cases)->capture_default_str();
  cmd_selftest->add_option("--seed", seed)->capture_default_str();
  cmd_selftest->add_option("--tol", tol)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_analyze) return run_analyze(analyze);
    if (*cmd_approx) return run_approx(approx);
    if (*cmd_sizes) return run_sizes(m, n, sizes_json);
    if (*cmd_dump) return run_dump(dump_path, dump_method, dump_out);
    if (*cmd_selftest) return run_selftest(cases, seed, tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
