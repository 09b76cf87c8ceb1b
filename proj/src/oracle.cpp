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

#include "ctxmeasure/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "coupling.hpp"
#include "ctxmeasure/error.hpp"

namespace ctxm {

// --- Floating-point simplex ---------------------------------------------------

namespace {

constexpr double kPivotTol = 1e-9;
constexpr std::size_t kStallLimit = 50;

/// Column-major dense tableau in doubles. Kept separate from the exact solver:
/// different storage, pricing rule and ratio test.
class FloatTableau {
 public:
  FloatTableau(const LinearProgram& lp, double tol)
      : m_(lp.row_count()), n_(lp.variable_count()), tol_(tol) {
    cols_ = n_ + m_;
    a_.assign(cols_, std::vector<double>(m_, 0.0));
    b_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      double sign = lp.rhs()[i] < 0 ? -1.0 : 1.0;
      for (const auto& t : lp.row(i)) a_[t.column][i] = sign * t.value.get_d();
      a_[n_ + i][i] = 1.0;
      b_[i] = sign * lp.rhs()[i].get_d();
      basis_.push_back(n_ + i);
    }
    live_.assign(m_, true);
  }

  bool run(const std::vector<double>& cost, std::size_t& pivots) {
    std::size_t stalled = 0;
    const std::size_t limit = 50 * (cols_ + m_) + 1000;
    for (std::size_t iter = 0; iter < limit; ++iter) {
      auto d = reduced_costs(cost);
      std::optional<std::size_t> entering;
      if (stalled < kStallLimit) {
        double best = -tol_;
        for (std::size_t j = 0; j < n_; ++j) {
          if (d[j] < best) {
            best = d[j];
            entering = j;
          }
        }
      } else {
        for (std::size_t j = 0; j < n_; ++j) {
          if (d[j] < -tol_) {
            entering = j;
            break;
          }
        }
      }
      if (!entering) return true;
      const auto& col = a_[*entering];
      std::optional<std::size_t> leaving;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (!live_[i] || col[i] <= kPivotTol) continue;
        double ratio = std::max(b_[i], 0.0) / col[i];
        bool better = ratio < best_ratio - 1e-12;
        bool tie = !better && ratio <= best_ratio + 1e-12;
        if (better || (tie && leaving &&
                       (stalled >= kStallLimit ? basis_[i] < basis_[*leaving]
                                               : col[i] > a_[*entering][*leaving]))) {
          best_ratio = ratio;
          leaving = i;
        }
      }
      if (!leaving) return false;
      stalled = best_ratio <= 1e-12 ? stalled + 1 : 0;
      pivot(*leaving, *entering);
      ++pivots;
    }
    throw Error(Errc::NumericalFailure, "float simplex exceeded its iteration limit");
  }

  double phase_one_objective() const {
    double z = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (live_[i] && basis_[i] >= n_) z += b_[i];
    }
    return z;
  }

  void drive_out_artificials(std::size_t& pivots) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!live_[i] || basis_[i] < n_) continue;
      std::optional<std::size_t> column;
      double best = 1e-7;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(a_[j][i]) > best) {
          best = std::abs(a_[j][i]);
          column = j;
        }
      }
      if (column) {
        pivot(i, *column);
        ++pivots;
      } else {
        live_[i] = false;  // dependent row
      }
    }
  }

  std::vector<double> primal() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (live_[i] && basis_[i] < n_) x[basis_[i]] = b_[i];
    }
    return x;
  }

  std::size_t artificial_cost_columns() const { return cols_; }

 private:
  std::vector<double> reduced_costs(const std::vector<double>& cost) const {
    std::vector<double> d(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      double z = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (live_[i]) z += cost[basis_[i]] * a_[j][i];
      }
      d[j] = cost[j] - z;
    }
    return d;
  }

  void pivot(std::size_t row, std::size_t column) {
    const double p = a_[column][row];
    for (std::size_t j = 0; j < cols_; ++j) a_[j][row] /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || !live_[i]) continue;
      const double f = a_[column][i];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) a_[j][i] -= f * a_[j][row];
      b_[i] -= f * b_[row];
      if (std::abs(b_[i]) < 1e-13) b_[i] = 0.0;
    }
    basis_[row] = column;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t cols_;
  double tol_;
  std::vector<std::vector<double>> a_;  // a_[column][row]
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> live_;
};

}  // namespace

FloatSolution solve_float(const LinearProgram& lp, double tol) {
  lp.check();
  FloatSolution out;
  FloatTableau tableau(lp, tol);
  const auto cols = tableau.artificial_cost_columns();
  const auto n = lp.variable_count();

  std::vector<double> phase_one(cols, 0.0);
  for (std::size_t j = n; j < cols; ++j) phase_one[j] = 1.0;
  tableau.run(phase_one, out.pivots);
  double scale = 1.0;
  for (const auto& r : lp.rhs()) scale += std::abs(r.get_d());
  if (tableau.phase_one_objective() > 1e-7 * scale) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  tableau.drive_out_artificials(out.pivots);

  std::vector<double> cost(cols, 0.0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.cost()[j].get_d();
  if (!tableau.run(cost, out.pivots)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.primal = tableau.primal();
  for (std::size_t j = 0; j < n; ++j) {
    if (out.primal[j] < -1e-7) throw Error(Errc::NumericalFailure, "negative primal value");
    out.objective += cost[j] * out.primal[j];
  }
  for (std::size_t i = 0; i < lp.row_count(); ++i) {
    double activity = 0;
    for (const auto& t : lp.row(i)) activity += t.value.get_d() * out.primal[t.column];
    if (std::abs(activity - lp.rhs()[i].get_d()) > 1e-6) {
      throw Error(Errc::NumericalFailure, "row " + std::to_string(i) + " residual too large");
    }
  }
  return out;
}

// --- Brute-force maximal coupling -----------------------------------------------

LinearProgram build_max_coupling_lp(std::span<const Pmf> marginals) {
  if (marginals.empty()) throw Error(Errc::InvalidArgument, "no marginals");
  if (marginals.size() > 4) throw Error(Errc::TooLarge, "more than 4 marginals");
  const auto& space = marginals.front().space();
  for (const auto& m : marginals) {
    if (!(m.space() == space)) throw Error(Errc::AlphabetMismatch, "marginals over different alphabets");
  }
  const auto k = space.size();
  if (k > 6) throw Error(Errc::TooLarge, "more than 6 symbols");

  std::vector<Alphabet> copies;
  Alphabet symbols;
  for (std::size_t x = 0; x < k; ++x) symbols.push_back(space.format(x));
  for (std::size_t i = 0; i < marginals.size(); ++i) copies.push_back(symbols);
  OutcomeSpace coupling(std::move(copies));

  LinearProgram lp;
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    for (std::size_t x = 0; x < k; ++x) lp.add_row(marginals[i][x]);
  }
  for (std::size_t t = 0; t < coupling.size(); ++t) {
    bool equal = true;
    for (std::size_t i = 1; i < marginals.size(); ++i) equal = equal && coupling.digit(t, i) == coupling.digit(t, 0);
    auto column = lp.add_variable("C(" + coupling.format(t) + ")", equal ? -1 : 0);
    for (std::size_t i = 0; i < marginals.size(); ++i) lp.add_term(i * k + coupling.digit(t, i), column, 1);
  }
  return lp;
}

Rational brute_force_max_coupling(std::span<const Pmf> marginals) {
  auto solution = detail::solve_certified(build_max_coupling_lp(marginals), "maximal coupling");
  return -solution.objective;
}

// --- Random systems ---------------------------------------------------------------

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Random composition of `total` into `parts` nonnegative integers.
std::vector<std::uint64_t> composition(std::uint64_t total, std::size_t parts, std::mt19937_64& rng) {
  std::vector<std::uint64_t> cuts(parts - 1);
  for (auto& c : cuts) c = uniform(rng, 0, total);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::uint64_t> out(parts);
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i + 1 < parts; ++i) {
    out[i] = cuts[i] - previous;
    previous = cuts[i];
  }
  out[parts - 1] = total - previous;
  return out;
}

/// Random nonnegative integer table with the given row and column sums.
std::vector<std::uint64_t> fit_table(std::vector<std::uint64_t> rows, std::vector<std::uint64_t> cols,
                                     std::mt19937_64& rng) {
  std::vector<std::uint64_t> table(rows.size() * cols.size());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    for (std::size_t y = 0; y < cols.size(); ++y) {
      std::uint64_t later = 0;
      for (std::size_t z = y + 1; z < cols.size(); ++z) later += cols[z];
      std::uint64_t lo = rows[x] > later ? rows[x] - later : 0;
      std::uint64_t hi = std::min(rows[x], cols[y]);
      auto v = uniform(rng, lo, hi);
      table[x * cols.size() + y] = v;
      rows[x] -= v;
      cols[y] -= v;
    }
  }
  return table;
}

}  // namespace

Pmf random_pmf(const OutcomeSpace& space, std::uint64_t denominator, std::mt19937_64& rng) {
  auto counts = composition(denominator, space.size(), rng);
  std::vector<Rational> weights;
  weights.reserve(counts.size());
  for (auto c : counts) {
    Rational w(static_cast<unsigned long>(c), static_cast<unsigned long>(denominator));
    w.canonicalize();
    weights.push_back(std::move(w));
  }
  return Pmf(space, std::move(weights));
}

BinaryStats random_binary_stats(std::uint64_t denominator, std::mt19937_64& rng) {
  return binary_stats(random_pmf(OutcomeSpace({binary_alphabet(), binary_alphabet()}), denominator, rng));
}

ValidatedSystem random_system(const SystemShape& shape) {
  if (shape.m == 0 || shape.n == 0 || shape.alphabet_size < 2) {
    throw Error(Errc::InvalidArgument, "shape needs m, n >= 1 and at least two symbols");
  }
  std::mt19937_64 rng(shape.seed);
  const auto denominator = uniform(rng, 2, 64);
  Alphabet alphabet;
  if (shape.alphabet_size == 2) {
    alphabet = binary_alphabet();
  } else {
    for (std::size_t s = 0; s < shape.alphabet_size; ++s) alphabet.push_back(std::to_string(s));
  }
  const auto k = alphabet.size();

  MeasurementSystem raw;
  std::vector<std::vector<std::uint64_t>> a_counts, b_counts;
  for (std::size_t i = 1; i <= shape.m; ++i) {
    raw.properties.push_back({"a" + std::to_string(i), alphabet});
    a_counts.push_back(composition(denominator, k, rng));
  }
  for (std::size_t j = 1; j <= shape.n; ++j) {
    raw.properties.push_back({"b" + std::to_string(j), alphabet});
    b_counts.push_back(composition(denominator, k, rng));
  }
  for (std::size_t i = 1; i <= shape.m; ++i) {
    for (std::size_t j = 1; j <= shape.n; ++j) {
      std::string id = "a" + std::to_string(i) + "b" + std::to_string(j);
      raw.contexts.push_back({id, {"a" + std::to_string(i), "b" + std::to_string(j)}});
      auto table = shape.consistent ? fit_table(a_counts[i - 1], b_counts[j - 1], rng)
                                    : composition(denominator, k * k, rng);
      auto& entries = raw.bunches[id];
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          auto count = table[x * k + y];
          if (count == 0) continue;
          Rational w(static_cast<unsigned long>(count), static_cast<unsigned long>(denominator));
          w.canonicalize();
          entries.push_back({{alphabet[x], alphabet[y]}, std::move(w)});
        }
      }
    }
  }
  return validate_system(raw);
}

// --- Cross checks -------------------------------------------------------------------

CrossCheck cross_check(const LinearProgram& lp, double tol) {
  CrossCheck out;
  auto exact = solve_exact(lp);
  out.certified = verify_certificate(lp, exact);
  if (exact.status == LpStatus::Optimal) out.exact = exact.objective;
  try {
    auto approx = solve_float(lp);
    out.approx = approx.objective;
    if (approx.status != exact.status) return out;
    if (exact.status != LpStatus::Optimal) {
      out.agree = true;
      return out;
    }
    out.agree = out.certified && std::abs(exact.objective.get_d() - approx.objective) <= tol;
  } catch (const Error& e) {
    if (e.code() != Errc::NumericalFailure) throw;
    out.approx = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

CrossCheck cross_check(const ValidatedSystem& system, Method method, double tol) {
  switch (method) {
    case Method::Present: return cross_check(build_present_lp(system), tol);
    case Method::Cbd: return cross_check(build_cbd_lp(system), tol);
    case Method::Np: return cross_check(build_np_lp(system), tol);
    case Method::NpInside: return cross_check(build_np_inside_lp(system, delta0_present(system)), tol);
    case Method::FixedModel: break;
  }
  throw Error(Errc::InvalidArgument, "cross_check of fixed_model needs a model");
}

// --- Suites ---------------------------------------------------------------------------

namespace {

struct SuiteRecorder {
  SuiteReport& report;
  double tol;

  CrossCheck check(const LinearProgram& lp) {
    auto result = cross_check(lp, tol);
    ++report.lps_solved;
    if (result.certified) ++report.certificates_ok;
    if (result.agree) ++report.float_agreements;
    return result;
  }

  void verdict(bool ok, const std::string& what) {
    ++report.cases;
    if (ok) {
      ++report.passed;
    } else if (report.failures.size() < 20) {
      report.failures.push_back(what);
    }
  }
};

}  // namespace

SuiteReport run_cbd_equivalence_suite(std::size_t cases, std::uint64_t seed, double tol) {
  SuiteReport report;
  report.name = "cbd-equivalence";
  SuiteRecorder rec{report, tol};
  for (std::size_t k = 0; k < cases; ++k) {
    SystemShape shape{2, 2, 2, k % 2 == 0, seed + k};
    auto system = random_system(shape);
    auto present = rec.check(build_present_lp(system));
    auto cbd = rec.check(build_cbd_lp(system));
    Rational present_measure = present.exact - delta0_present(system);
    Rational cbd_measure = cbd.exact - delta0_cbd(system);
    rec.verdict(present.certified && cbd.certified && present_measure == cbd_measure,
                "seed " + std::to_string(shape.seed) + ": present " + to_string(present_measure) +
                    " vs cbd " + to_string(cbd_measure));
  }
  return report;
}

SuiteReport run_np_equivalence_suite(std::size_t cases, std::uint64_t seed, double tol) {
  SuiteReport report;
  report.name = "np-equivalence";
  SuiteRecorder rec{report, tol};
  for (std::size_t k = 0; k < cases; ++k) {
    SystemShape shape{2, 2, 2, true, seed + k};
    auto system = random_system(shape);
    auto np = rec.check(build_np_lp(system));
    auto inside = rec.check(build_np_inside_lp(system, delta0_present(system)));
    rec.verdict(np.certified && inside.certified && np.exact == inside.exact,
                "seed " + std::to_string(shape.seed) + ": np " + to_string(np.exact) +
                    " vs np_inside " + to_string(inside.exact));
  }
  return report;
}

SuiteReport run_median_suite(std::size_t cases, std::uint64_t seed, double tol) {
  SuiteReport report;
  report.name = "median";
  SuiteRecorder rec{report, tol};
  std::mt19937_64 rng(seed);
  OutcomeSpace space({binary_alphabet()});
  for (std::size_t k = 0; k < cases; ++k) {
    auto contexts = uniform(rng, 2, 5);
    auto denominator = uniform(rng, 2, 64);
    std::vector<Pmf> marginals;
    std::vector<Rational> means;
    for (std::size_t c = 0; c < contexts; ++c) {
      marginals.push_back(random_pmf(space, denominator, rng));
      means.push_back(expectation(marginals.back()));
    }
    auto median = median_binary(means);
    auto lp = rec.check(build_delta_p_lp(marginals));
    bool ok = lp.certified && lp.exact == median.delta_p;
    if (contexts == 2) ok = ok && median.delta_p == Rational(abs(means[0] - means[1]) / 2);
    rec.verdict(ok, "case " + std::to_string(k) + ": median " + to_string(median.delta_p) + " vs lp " +
                        to_string(lp.exact));
  }
  return report;
}

SuiteReport run_cyclic2_suite(std::size_t cases, std::uint64_t seed, double tol) {
  SuiteReport report;
  report.name = "cyclic2";
  SuiteRecorder rec{report, tol};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    auto q = random_binary_stats(uniform(rng, 2, 64), rng);
    auto r = random_binary_stats(uniform(rng, 2, 64), rng);
    auto closed = cyclic2_min_partial(q, r);
    auto lp = rec.check(build_context_coupling_lp(pmf_from_stats(r), pmf_from_stats(q)));
    rec.verdict(lp.certified && lp.exact == closed,
                "case " + std::to_string(k) + ": closed " + to_string(closed) + " vs lp " + to_string(lp.exact));
  }
  return report;
}

SuiteReport run_max_coupling_suite(std::size_t cases, std::uint64_t seed, double tol) {
  SuiteReport report;
  report.name = "max-coupling";
  SuiteRecorder rec{report, tol};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    auto symbols = uniform(rng, 2, 4);
    auto count = uniform(rng, 2, 4);
    auto denominator = uniform(rng, 2, 64);
    Alphabet alphabet = symbols == 2 ? binary_alphabet() : Alphabet{};
    for (std::size_t s = 0; alphabet.size() < symbols; ++s) alphabet.push_back("s" + std::to_string(s));
    OutcomeSpace space({alphabet});
    std::vector<Pmf> marginals;
    for (std::size_t i = 0; i < count; ++i) marginals.push_back(random_pmf(space, denominator, rng));
    auto closed = max_coupling_probability(marginals);
    auto lp = rec.check(build_max_coupling_lp(marginals));
    bool ok = lp.certified && -lp.exact == closed;
    if (symbols == 2) {
      auto tv = tv_distance(marginals[0], marginals[1]);
      auto gap = Rational(abs(expectation(marginals[0]) - expectation(marginals[1])) / 2);
      ok = ok && tv == gap && max_coupling_probability(std::span(marginals).first(2)) == 1 - tv;
    }
    rec.verdict(ok, "case " + std::to_string(k) + ": closed " + to_string(closed) + " vs lp " +
                        to_string(Rational(-lp.exact)));
  }
  return report;
}

}  // namespace ctxm
