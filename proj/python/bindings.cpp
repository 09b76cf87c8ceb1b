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

// Python bindings. Rationals cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ctxmeasure/ctxmeasure.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const ctxm::Rational& value) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(ctxm::to_string(value));
}

ctxm::Rational rational(const py::handle& value) {
  return ctxm::parse_rational(py::str(value).cast<std::string>());
}

py::dict report_dict(const ctxm::MeasureReport& report) {
  py::dict d;
  d["method"] = std::string(ctxm::to_string(report.method));
  d["delta"] = fraction(report.delta);
  d["delta0"] = fraction(report.delta0);
  d["measure"] = fraction(report.measure);
  d["noncontextual"] = report.noncontextual;
  d["certified"] = report.certified;
  py::dict witness;
  for (const auto& w : report.witness) witness[py::str(w.variable)] = fraction(w.value);
  d["witness"] = witness;
  d["variables"] = report.variables;
  d["rows"] = report.rows;
  d["seconds"] = report.seconds;
  return d;
}

ctxm::LinearProgram build(const ctxm::ValidatedSystem& system, const std::string& method) {
  switch (ctxm::parse_method(method)) {
    case ctxm::Method::Present: return ctxm::build_present_lp(system);
    case ctxm::Method::Cbd: return ctxm::build_cbd_lp(system);
    case ctxm::Method::Np: return ctxm::build_np_lp(system);
    case ctxm::Method::NpInside: return ctxm::build_np_inside_lp(system, ctxm::delta0_present(system));
    case ctxm::Method::FixedModel: break;
  }
  throw ctxm::Error(ctxm::Errc::InvalidArgument, "fixed_model has no standalone LP");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact contextuality measures (C++ core)";

  static py::exception<ctxm::Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ctxm::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = std::string(ctxm::errc_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<ctxm::ValidatedSystem>(m, "System")
      .def_property_readonly("properties",
                             [](const ctxm::ValidatedSystem& s) {
                               std::vector<std::string> ids;
                               for (const auto& p : s.properties()) ids.push_back(p.id);
                               return ids;
                             })
      .def_property_readonly("contexts",
                             [](const ctxm::ValidatedSystem& s) {
                               std::vector<std::pair<std::string, std::vector<std::string>>> out;
                               for (const auto& c : s.contexts()) {
                                 std::vector<std::string> props;
                                 for (auto p : c.properties) props.push_back(s.properties()[p].id);
                                 out.emplace_back(c.id, std::move(props));
                               }
                               return out;
                             })
      .def("bunch",
           [](const ctxm::ValidatedSystem& s, const std::string& context) {
             const auto& pmf = s.bunch(s.context_index(context));
             py::dict d;
             for (const auto& [outcome, p] : pmf.support()) {
               d[py::tuple(py::cast(pmf.space().symbols(outcome)))] = fraction(p);
             }
             return d;
           })
      .def_property_readonly("consistent",
                             [](const ctxm::ValidatedSystem& s) { return ctxm::consistency_report(s).consistent; })
      .def("__eq__", [](const ctxm::ValidatedSystem& a, const ctxm::ValidatedSystem& b) { return a == b; })
      .def("__str__", &ctxm::write_system);

  m.def("parse_system", [](const std::string& path) { return ctxm::parse_system(path); }, py::arg("path"));
  m.def("parse_system_text", [](const std::string& text) { return ctxm::parse_system_text(text); },
        py::arg("text"));
  m.def("write_system", &ctxm::write_system, py::arg("system"));
  m.def("prbox_system", &ctxm::prbox_system);
  m.def("disjoint_system", &ctxm::disjoint_system);
  m.def(
      "epr_model",
      [](const std::vector<double>& alphas, const std::vector<double>& betas) {
        auto model = ctxm::epr_model(alphas, betas);
        return py::make_tuple(model.system, model.rounding);
      },
      py::arg("alphas"), py::arg("betas"));

  m.def(
      "measure",
      [](const ctxm::ValidatedSystem& system, const std::string& method) {
        return report_dict(ctxm::measure(system, ctxm::parse_method(method)));
      },
      py::arg("system"), py::arg("method") = "present");
  m.def(
      "measure_fixed_model",
      [](const ctxm::ValidatedSystem& system, const ctxm::ValidatedSystem& model) {
        return report_dict(ctxm::measure_fixed_model(system, ctxm::model_from_system(model)));
      },
      py::arg("system"), py::arg("model"));
  m.def("delta0_present", [](const ctxm::ValidatedSystem& s) { return fraction(ctxm::delta0_present(s)); });
  m.def("delta0_cbd", [](const ctxm::ValidatedSystem& s) { return fraction(ctxm::delta0_cbd(s)); });

  m.def(
      "median_binary",
      [](const py::iterable& means) {
        std::vector<ctxm::Rational> values;
        for (auto v : means) values.push_back(rational(v));
        auto r = ctxm::median_binary(values);
        return py::make_tuple(fraction(r.lo), fraction(r.hi), fraction(r.delta_p));
      },
      py::arg("means"), "Median interval (lo, hi) and the minimal deviation sum.");
  m.def(
      "cyclic2_min_partial",
      [](const py::sequence& q, const py::sequence& r) {
        auto stats = [](const py::sequence& s) {
          if (s.size() != 3) throw ctxm::Error(ctxm::Errc::InvalidArgument, "stats are (mean1, mean2, product)");
          return ctxm::BinaryStats{rational(s[0]), rational(s[1]), rational(s[2])};
        };
        return fraction(ctxm::cyclic2_min_partial(stats(q), stats(r)));
      },
      py::arg("q"), py::arg("r"));

  m.def(
      "problem_sizes",
      [](std::size_t m_settings, std::size_t n_settings) {
        py::list out;
        for (const auto& s : ctxm::problem_sizes(m_settings, n_settings)) {
          py::dict d;
          d["method"] = std::string(ctxm::to_string(s.method));
          d["variables"] = py::int_(py::str(s.variable_count.get_str()));
          d["equalities"] = py::int_(py::str(s.equality_count.get_str()));
          d["inequalities"] = py::int_(py::str(s.inequality_count.get_str()));
          out.append(d);
        }
        return out;
      },
      py::arg("m"), py::arg("n"));

  m.def(
      "dump_lp",
      [](const ctxm::ValidatedSystem& system, const std::string& method) { return ctxm::dump_lp(build(system, method)); },
      py::arg("system"), py::arg("method"));
  m.def(
      "solve_lp_text",
      [](const std::string& text) {
        auto lp = ctxm::parse_lp(text);
        auto solution = ctxm::solve_exact(lp);
        py::dict d;
        d["status"] = std::string(ctxm::to_string(solution.status));
        d["objective"] = fraction(solution.objective);
        d["certified"] = ctxm::verify_certificate(lp, solution);
        py::list primal;
        for (const auto& x : solution.primal) primal.append(fraction(x));
        d["primal"] = primal;
        return d;
      },
      py::arg("text"), "Solve an LP in dump format exactly and verify its certificate.");

  m.def(
      "selftest",
      [](std::size_t cases, std::uint64_t seed, double tol) {
        py::list out;
        const ctxm::SuiteReport reports[] = {
            ctxm::run_cbd_equivalence_suite(cases, seed, tol), ctxm::run_np_equivalence_suite(cases, seed, tol),
            ctxm::run_median_suite(cases, seed, tol), ctxm::run_cyclic2_suite(cases, seed, tol),
            ctxm::run_max_coupling_suite(cases, seed, tol)};
        for (const auto& r : reports) {
          py::dict d;
          d["name"] = r.name;
          d["cases"] = r.cases;
          d["passed"] = r.passed;
          d["certificates_ok"] = r.certificates_ok;
          d["float_agreements"] = r.float_agreements;
          d["lps_solved"] = r.lps_solved;
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("cases") = 20, py::arg("seed") = 1, py::arg("tol") = 1e-7);
}
