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

#include "ctxmeasure/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ctxmeasure/analytic.hpp"
#include "ctxmeasure/error.hpp"

namespace ctxm {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

enum class Section { None, Properties, Contexts, Bunch };

}  // namespace

MeasurementSystem read_system_raw(std::istream& in) {
  MeasurementSystem raw;
  Section section = Section::None;
  std::vector<BunchEntry>* bunch = nullptr;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    auto tokens = tokens_of(text);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();
    if (head == "properties" || head == "contexts") {
      if (tokens.size() != 1) fail_at(line, "unexpected text after '" + head + "'");
      section = head == "properties" ? Section::Properties : Section::Contexts;
      continue;
    }
    if (head == "bunch") {
      if (tokens.size() != 2) fail_at(line, "expected 'bunch <context>'");
      auto [it, inserted] = raw.bunches.try_emplace(tokens[1]);
      if (!inserted) fail_at(line, "second bunch for context '" + tokens[1] + "'");
      bunch = &it->second;
      section = Section::Bunch;
      continue;
    }
    switch (section) {
      case Section::None:
        fail_at(line, "expected a section header, got '" + head + "'");
      case Section::Properties:
      case Section::Contexts: {
        if (tokens.size() < 3 || tokens[1] != "=") fail_at(line, "expected '<id> = <items>'");
        std::vector<std::string> items(tokens.begin() + 2, tokens.end());
        if (section == Section::Properties) {
          raw.properties.push_back({head, std::move(items)});
        } else {
          raw.contexts.push_back({head, std::move(items)});
        }
        break;
      }
      case Section::Bunch: {
        if (tokens.size() < 3 || tokens[tokens.size() - 2] != ":") {
          fail_at(line, "expected '<symbols> : <probability>'");
        }
        Rational p;
        try {
          p = parse_rational(tokens.back());
        } catch (const Error& e) {
          fail_at(line, std::string(e.what()));
        }
        bunch->push_back({std::vector<std::string>(tokens.begin(), tokens.end() - 2), std::move(p)});
        break;
      }
    }
  }
  return raw;
}

ValidatedSystem parse_system_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return validate_system(read_system_raw(in));
}

ValidatedSystem parse_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  try {
    return validate_system(read_system_raw(in));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string write_system(const ValidatedSystem& system) {
  auto raw = system.to_raw();
  std::ostringstream out;
  out << "properties\n";
  for (const auto& p : raw.properties) {
    out << "  " << p.id << " =";
    for (const auto& s : p.alphabet) out << ' ' << s;
    out << '\n';
  }
  out << "contexts\n";
  for (const auto& c : raw.contexts) {
    out << "  " << c.id << " =";
    for (const auto& p : c.properties) out << ' ' << p;
    out << '\n';
  }
  for (const auto& c : raw.contexts) {
    out << "bunch " << c.id << '\n';
    for (const auto& entry : raw.bunches.at(c.id)) {
      out << ' ';
      for (const auto& s : entry.symbols) out << ' ' << s;
      out << " : " << to_string(entry.probability) << '\n';
    }
  }
  return out.str();
}

// --- Builtins -------------------------------------------------------------------

namespace {

std::vector<BunchEntry> binary_bunch(const BinaryStats& stats) {
  auto pmf = pmf_from_stats(stats);
  std::vector<BunchEntry> out;
  for (const auto& [outcome, p] : pmf.support()) out.push_back({pmf.space().symbols(outcome), p});
  return out;
}

}  // namespace

ValidatedSystem prbox_system() {
  MeasurementSystem raw;
  for (const char* id : {"a1", "a2", "b1", "b2"}) raw.properties.push_back({id, binary_alphabet()});
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      std::string a = "a" + std::to_string(i), b = "b" + std::to_string(j);
      raw.contexts.push_back({a + b, {a, b}});
      raw.bunches[a + b] = binary_bunch({0, 0, i == 2 && j == 2 ? -1 : 1});
    }
  }
  return validate_system(raw);
}

ValidatedSystem disjoint_system() {
  MeasurementSystem raw;
  raw.properties = {{"1", binary_alphabet()}, {"2", binary_alphabet()}};
  const BinaryStats stats[] = {{0, 0, 1}, {0, 0, -1}, {1, 1, 1}, {-1, -1, 1}};
  for (int c = 0; c < 4; ++c) {
    auto id = std::to_string(c + 1);
    raw.contexts.push_back({id, {"1", "2"}});
    raw.bunches[id] = binary_bunch(stats[c]);
  }
  return validate_system(raw);
}

Rational exact_or_rounded_cosine(double degrees, bool& rounded) {
  double reduced = std::fmod(degrees, 360.0);
  if (reduced < 0) reduced += 360.0;
  rounded = false;
  if (reduced == std::round(reduced)) {
    switch (static_cast<int>(reduced)) {
      case 0: return 1;
      case 60: case 300: return Rational(1, 2);
      case 90: case 270: return 0;
      case 120: case 240: return Rational(-1, 2);
      case 180: return -1;
      default: break;
    }
  }
  rounded = true;
  const double value = std::cos(reduced * std::acos(-1.0) / 180.0);
  if (std::abs(value) < 1e-300) return 0;
  // 12 significant digits: value ~ digits * 10^(exponent - 11).
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  const int shift = 11 - exponent;
  std::ostringstream digits;
  digits << std::fixed << std::setprecision(0) << value * std::pow(10.0, shift);
  mpz_class numerator(digits.str()), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
  Rational out = shift >= 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  out.canonicalize();
  return out;
}

EprModel epr_model(const std::vector<double>& alphas, const std::vector<double>& betas) {
  if (alphas.empty() || betas.empty()) throw Error(Errc::InvalidArgument, "need at least one angle per side");
  EprModel out;
  MeasurementSystem raw;
  for (std::size_t i = 1; i <= alphas.size(); ++i) raw.properties.push_back({"a" + std::to_string(i), binary_alphabet()});
  for (std::size_t j = 1; j <= betas.size(); ++j) raw.properties.push_back({"b" + std::to_string(j), binary_alphabet()});
  const Rational half(1, 2);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = 0; j < betas.size(); ++j) {
      std::string a = "a" + std::to_string(i + 1), b = "b" + std::to_string(j + 1);
      bool rounded = false;
      Rational product = -exact_or_rounded_cosine(alphas[i] - betas[j], rounded);
      if (rounded) {
        std::ostringstream note;
        note << a << b << ": -cos(" << alphas[i] - betas[j] << " deg) rounded to " << to_string(product);
        out.rounding.push_back(note.str());
      }
      BinaryStats stats{half, half, product};
      if (!is_realizable(stats)) {
        throw Error(Errc::UnrealizableStats, "context " + a + b + ": correlation " + to_string(product) +
                                                 " is not realizable with means 1/2");
      }
      raw.contexts.push_back({a + b, {a, b}});
      raw.bunches[a + b] = binary_bunch(stats);
    }
  }
  out.system = validate_system(raw);
  return out;
}

ContextModel model_from_system(const ValidatedSystem& model) {
  ContextModel out;
  for (std::size_t c = 0; c < model.contexts().size(); ++c) out.emplace(model.contexts()[c].id, model.bunch(c));
  return out;
}

// --- Reports ----------------------------------------------------------------------

std::string format_report(const MeasureReport& report, bool with_witness) {
  std::ostringstream out;
  out << "method:        " << to_string(report.method) << '\n'
      << "delta:         " << to_string(report.delta) << '\n'
      << "delta0:        " << to_string(report.delta0) << '\n'
      << "measure:       " << to_string(report.measure) << '\n'
      << "noncontextual: " << (report.noncontextual ? "yes" : "no") << '\n'
      << "certified:     " << (report.certified ? "yes" : "no") << '\n'
      << "lp size:       " << report.variables << " variables, " << report.rows << " rows\n"
      << "time:          " << std::fixed << std::setprecision(3) << report.seconds << " s\n";
  if (with_witness) {
    out << "witness:\n";
    for (const auto& w : report.witness) out << "  " << w.variable << " = " << to_string(w.value) << '\n';
  }
  return out.str();
}

std::string report_json(const MeasureReport& report, bool with_witness) {
  nlohmann::ordered_json j;
  j["method"] = std::string(to_string(report.method));
  j["delta"] = to_string(report.delta);
  j["delta0"] = to_string(report.delta0);
  j["measure"] = to_string(report.measure);
  j["noncontextual"] = report.noncontextual;
  j["certified"] = report.certified;
  if (with_witness) {
    auto& witness = j["witness"] = nlohmann::ordered_json::object();
    for (const auto& w : report.witness) witness[w.variable] = to_string(w.value);
  }
  j["variables"] = report.variables;
  j["rows"] = report.rows;
  j["seconds"] = report.seconds;
  return j.dump(2);
}

}  // namespace ctxm
