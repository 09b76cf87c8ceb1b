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

#include "ctxmeasure/builders.hpp"

#include <chrono>
#include <optional>

#include "coupling.hpp"
#include "ctxmeasure/analytic.hpp"
#include "ctxmeasure/error.hpp"

namespace ctxm {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Present: return "present";
    case Method::Cbd: return "cbd";
    case Method::Np: return "np";
    case Method::NpInside: return "np_inside";
    case Method::FixedModel: return "fixed_model";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "present") return Method::Present;
  if (name == "cbd") return Method::Cbd;
  if (name == "np") return Method::Np;
  if (name == "np_inside" || name == "np-inside") return Method::NpInside;
  if (name == "fixed_model" || name == "fixed-model") return Method::FixedModel;
  throw Error(Errc::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

namespace {

void check_block(std::size_t columns, const BuildLimits& limits, const std::string& what) {
  if (columns > limits.max_block_columns) {
    throw Error(Errc::AlphabetTooLarge, what + " needs " + std::to_string(columns) +
                                            " columns, limit is " +
                                            std::to_string(limits.max_block_columns));
  }
}

std::size_t checked_square(std::size_t k, const BuildLimits& limits, const std::string& what) {
  if (k > limits.max_block_columns / k) check_block(limits.max_block_columns + 1, limits, what);
  check_block(k * k, limits, what);
  return k * k;
}

/// Index in the context's outcome space of every atom of the joint space.
std::vector<std::size_t> projection(const OutcomeSpace& joint, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> strides(positions.size());
  std::size_t stride = 1;
  for (std::size_t k = positions.size(); k-- > 0;) {
    strides[k] = stride;
    stride *= joint.alphabet(positions[k]).size();
  }
  std::vector<std::size_t> out(joint.size());
  for (std::size_t a = 0; a < joint.size(); ++a) {
    std::size_t y = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) y += joint.digit(a, positions[k]) * strides[k];
    out[a] = y;
  }
  return out;
}

struct JointBlock {
  OutcomeSpace space;
  std::vector<std::vector<std::size_t>> projections;  // per context
};

JointBlock joint_block(const ValidatedSystem& system, const BuildLimits& limits) {
  JointBlock block{system.joint_space(), {}};
  check_block(block.space.size(), limits, "joint of all properties");
  for (const auto& c : system.contexts()) block.projections.push_back(projection(block.space, c.properties));
  return block;
}

std::size_t add_signed_joint(LinearProgram& lp, const JointBlock& joint, const std::string& prefix,
                             const Rational& cost) {
  auto first = lp.variable_count();
  for (std::size_t a = 0; a < joint.space.size(); ++a) {
    lp.add_variable(prefix + "(" + joint.space.format(a) + ")", cost);
  }
  return first;
}

}  // namespace

LinearProgram build_present_lp(const ValidatedSystem& system, const BuildLimits& limits) {
  auto joint = joint_block(system, limits);
  LinearProgram lp;
  auto q_first = add_signed_joint(lp, joint, "Q", 0);
  for (std::size_t c = 0; c < system.contexts().size(); ++c) {
    const auto& space = system.context_space(c);
    checked_square(space.size(), limits, "coupling block of '" + system.contexts()[c].id + "'");
    auto block = detail::add_coupling_block(lp, "K." + system.contexts()[c].id, space,
                                            system.bunch(c).probabilities(), {});
    for (std::size_t a = 0; a < joint.space.size(); ++a) {
      lp.add_term(block.first_q_row + joint.projections[c][a], q_first + a, -1);
    }
  }
  return lp;
}

LinearProgram build_cbd_lp(const ValidatedSystem& system, const BuildLimits& limits) {
  const auto& contexts = system.contexts();
  std::size_t atoms = 1;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    auto k = system.context_space(c).size();
    if (atoms > limits.max_block_columns / k) {
      check_block(limits.max_block_columns + 1, limits, "coupling of all bunches");
    }
    atoms *= k;
  }
  check_block(atoms, limits, "coupling of all bunches");

  LinearProgram lp;
  std::vector<std::size_t> row_offset;
  std::vector<std::vector<std::string>> formatted(contexts.size());
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    row_offset.push_back(lp.row_count());
    const auto& bunch = system.bunch(c);
    for (std::size_t y = 0; y < bunch.size(); ++y) {
      lp.add_row(bunch[y]);
      formatted[c].push_back(bunch.space().format(y));
    }
  }

  // Mixed-radix counter over context outcomes, first context most significant.
  std::vector<std::size_t> digits(contexts.size(), 0);
  std::string name;
  for (std::size_t t = 0; t < atoms; ++t) {
    unsigned long cost = 0;
    for (std::size_t p = 0; p < system.properties().size(); ++p) {
      auto incidence = system.contexts_of(p);
      const auto& first = incidence.front();
      auto value = system.context_space(first.context).digit(digits[first.context], first.position);
      for (const auto& [c, pos] : incidence.subspan(1)) {
        if (system.context_space(c).digit(digits[c], pos) != value) {
          ++cost;
          break;
        }
      }
    }
    name = "J(";
    for (std::size_t c = 0; c < contexts.size(); ++c) {
      if (c) name += '|';
      name += formatted[c][digits[c]];
    }
    name += ')';
    auto column = lp.add_variable(name, cost);
    for (std::size_t c = 0; c < contexts.size(); ++c) lp.add_term(row_offset[c] + digits[c], column, 1);

    for (std::size_t c = contexts.size(); c-- > 0;) {
      if (++digits[c] < system.context_space(c).size()) break;
      digits[c] = 0;
    }
  }
  return lp;
}

LinearProgram build_np_lp(const ValidatedSystem& system, const BuildLimits& limits) {
  if (!consistency_report(system).consistent) {
    throw Error(Errc::InconsistentlyConnected,
                "a signed joint of single-indexed variables needs a consistently connected system");
  }
  auto joint = joint_block(system, limits);
  LinearProgram lp;
  std::vector<std::size_t> row_offset;
  for (std::size_t c = 0; c < system.contexts().size(); ++c) {
    row_offset.push_back(lp.row_count());
    for (const auto& w : system.bunch(c).probabilities()) lp.add_row(w);
  }
  auto plus = add_signed_joint(lp, joint, "Q+", 0);
  auto minus = add_signed_joint(lp, joint, "Q-", 1);
  for (std::size_t a = 0; a < joint.space.size(); ++a) {
    for (std::size_t c = 0; c < system.contexts().size(); ++c) {
      lp.add_term(row_offset[c] + joint.projections[c][a], plus + a, 1);
    }
  }
  for (std::size_t a = 0; a < joint.space.size(); ++a) {
    for (std::size_t c = 0; c < system.contexts().size(); ++c) {
      lp.add_term(row_offset[c] + joint.projections[c][a], minus + a, -1);
    }
  }
  return lp;
}

LinearProgram build_np_inside_lp(const ValidatedSystem& system, const Rational& delta0,
                                 const BuildLimits& limits) {
  auto joint = joint_block(system, limits);
  LinearProgram lp;
  auto plus = add_signed_joint(lp, joint, "Q+", 0);
  auto minus = add_signed_joint(lp, joint, "Q-", 1);
  std::vector<detail::CouplingBlock> blocks;
  for (std::size_t c = 0; c < system.contexts().size(); ++c) {
    const auto& space = system.context_space(c);
    checked_square(space.size(), limits, "coupling block of '" + system.contexts()[c].id + "'");
    auto block = detail::add_coupling_block(lp, "K." + system.contexts()[c].id, space,
                                            system.bunch(c).probabilities(), {});
    for (std::size_t a = 0; a < joint.space.size(); ++a) {
      lp.add_term(block.first_q_row + joint.projections[c][a], plus + a, -1);
      lp.add_term(block.first_q_row + joint.projections[c][a], minus + a, 1);
    }
    blocks.push_back(block);
  }
  auto slack = lp.add_variable("slack");
  auto cap = lp.add_row(delta0);
  for (const auto& block : blocks) {
    for (std::size_t j = block.first_column; j < block.first_column + block.outcomes * block.outcomes; ++j) {
      lp.add_term(cap, j, lp.cost()[j]);
    }
  }
  lp.add_term(cap, slack, 1);
  return lp;
}

void check_model(const ValidatedSystem& system, const ContextModel& model) {
  if (model.size() != system.contexts().size()) {
    throw Error(Errc::ShapeMismatch, "model has " + std::to_string(model.size()) +
                                         " contexts, system has " +
                                         std::to_string(system.contexts().size()));
  }
  for (std::size_t c = 0; c < system.contexts().size(); ++c) {
    const auto& id = system.contexts()[c].id;
    auto it = model.find(id);
    if (it == model.end()) throw Error(Errc::ShapeMismatch, "model has no bunch for '" + id + "'");
    if (!(it->second.space() == system.context_space(c))) {
      throw Error(Errc::ShapeMismatch, "model bunch for '" + id + "' has a different alphabet");
    }
  }
  for (std::size_t p = 0; p < system.properties().size(); ++p) {
    std::optional<Pmf> reference;
    for (const auto& [c, pos] : system.contexts_of(p)) {
      std::size_t keep[] = {pos};
      auto m = marginal(model.at(system.contexts()[c].id), keep);
      if (!reference) {
        reference = std::move(m);
      } else if (!(m == *reference)) {
        throw Error(Errc::ModelNotConsistentlyConnected,
                    "model marginals of '" + system.properties()[p].id + "' differ across contexts");
      }
    }
  }
}

LinearProgram build_fixed_model_lp(const ValidatedSystem& system, const ContextModel& model) {
  check_model(system, model);
  LinearProgram lp;
  for (std::size_t c = 0; c < system.contexts().size(); ++c) {
    const auto& id = system.contexts()[c].id;
    detail::add_coupling_block(lp, "K." + id, system.context_space(c), system.bunch(c).probabilities(),
                               model.at(id).probabilities());
  }
  return lp;
}

namespace {

void finish(MeasureReport& report, const LinearProgram& lp, const LpSolution& solution,
            std::chrono::steady_clock::time_point start) {
  report.noncontextual = report.measure == 0;
  report.certified = true;
  report.variables = lp.variable_count();
  report.rows = lp.row_count();
  for (std::size_t j = 0; j < solution.primal.size(); ++j) {
    if (solution.primal[j] != 0) report.witness.push_back({lp.names()[j], solution.primal[j]});
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MeasureReport measure(const ValidatedSystem& system, Method method, const BuildLimits& limits) {
  auto start = std::chrono::steady_clock::now();
  MeasureReport report;
  report.method = method;
  LinearProgram lp;
  switch (method) {
    case Method::Present: lp = build_present_lp(system, limits); break;
    case Method::Cbd: lp = build_cbd_lp(system, limits); break;
    case Method::Np: lp = build_np_lp(system, limits); break;
    case Method::NpInside:
      report.delta0 = delta0_present(system);
      lp = build_np_inside_lp(system, report.delta0, limits);
      break;
    case Method::FixedModel:
      throw Error(Errc::InvalidArgument, "fixed_model needs a model; use measure_fixed_model");
  }
  auto solution = detail::solve_certified(lp, std::string(to_string(method)));
  switch (method) {
    case Method::Present:
      report.delta = solution.objective;
      report.delta0 = delta0_present(system);
      report.measure = report.delta - report.delta0;
      break;
    case Method::Cbd:
      report.delta = solution.objective;
      report.delta0 = delta0_cbd(system);
      report.measure = report.delta - report.delta0;
      break;
    case Method::Np:
      report.delta = solution.objective;
      report.delta0 = 0;
      report.measure = solution.objective;
      break;
    case Method::NpInside:
      report.delta = report.delta0 - solution.primal.back();
      report.measure = solution.objective;
      break;
    case Method::FixedModel: break;
  }
  finish(report, lp, solution, start);
  return report;
}

MeasureReport measure_fixed_model(const ValidatedSystem& system, const ContextModel& model) {
  auto start = std::chrono::steady_clock::now();
  MeasureReport report;
  report.method = Method::FixedModel;
  auto lp = build_fixed_model_lp(system, model);
  auto solution = detail::solve_certified(lp, "fixed_model");
  report.delta = solution.objective;
  report.delta0 = delta0_present(system);
  report.measure = report.delta - report.delta0;
  finish(report, lp, solution, start);
  return report;
}

std::vector<ProblemSizes> problem_sizes(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(Errc::InvalidArgument, "m and n must be at least 1");
  mpz_class settings = static_cast<unsigned long>(m * n);
  mpz_class joint;
  mpz_ui_pow_ui(joint.get_mpz_t(), 2, m + n);
  mpz_class cbd;
  mpz_ui_pow_ui(cbd.get_mpz_t(), 4, m * n);
  return {
      {Method::Present, joint + 16 * settings, 8 * settings, 0},
      {Method::Np, 2 * joint, 4 * settings, 0},
      {Method::Cbd, cbd, 4 * settings, 0},
  };
}

}  // namespace ctxm
