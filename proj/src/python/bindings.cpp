#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lc/catalog.hpp"
#include "lc/composer.hpp"
#include "lc/formula.hpp"
#include "lc/geometry.hpp"
#include "lc/report_json.hpp"
#include "lc/text.hpp"
#include "lc/version.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::object json_to_py(const json& value) {
  switch (value.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(value.get<bool>());
    case json::value_t::number_integer: return py::int_(value.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(value.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(value.get<double>());
    case json::value_t::string: return py::str(value.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : value) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, item] : value.items()) out[py::str(key)] = json_to_py(item);
      return out;
    }
    default: return py::none();
  }
}

lc::Formula to_formula(const py::object& value) {
  if (py::isinstance<lc::Formula>(value)) return value.cast<lc::Formula>();
  return lc::parse(value.cast<std::string>());
}

lc::Assignment to_assignment(const py::dict& d) {
  lc::Assignment a;
  for (const auto& [key, value] : d) {
    a[key.cast<std::string>()] = value.cast<bool>();
  }
  return a;
}

lc::geo::SamplerConfig make_config(std::uint64_t seed, std::uint64_t samples, double tol_solve,
                                   double tol_verify) {
  lc::geo::SamplerConfig cfg;
  cfg.seed = seed;
  cfg.sample_count = samples;
  cfg.tol_solve = tol_solve;
  cfg.tol_verify = tol_verify;
  cfg.validate();
  return cfg;
}

py::object battery_to_py(const lc::catalog::BatteryResult& result) {
  json items = json::array();
  for (const auto& item : result.items) items.push_back(lc::report::to_json(item));
  return json_to_py(json{{"group", result.group}, {"items", items}, {"overall", result.all_met ? "pass" : "fail"}});
}

py::dict classify_to_py(const lc::RelationVerdict& verdict) {
  py::dict out;
  out["relation"] = lc::to_string(verdict.relation);
  out["forward_witness"] =
      verdict.forward_witness ? py::cast(*verdict.forward_witness) : py::object(py::none());
  out["backward_witness"] =
      verdict.backward_witness ? py::cast(*verdict.backward_witness) : py::object(py::none());
  return out;
}

std::set<lc::geo::AtomId> to_premise(const std::vector<std::string>& names) {
  std::set<lc::geo::AtomId> out;
  for (const auto& name : names) {
    if (name == "p") out.insert(lc::geo::AtomId::P);
    else if (name == "q") out.insert(lc::geo::AtomId::Q);
    else if (name == "r") out.insert(lc::geo::AtomId::R);
    else throw lc::ConfigError("premise atoms must be drawn from p, q, r; got '" + name + "'");
  }
  return out;
}

lc::geo::AtomId to_atom(const std::string& name) {
  if (name == "p") return lc::geo::AtomId::P;
  if (name == "q") return lc::geo::AtomId::Q;
  if (name == "r") return lc::geo::AtomId::R;
  throw lc::ConfigError("unknown atom '" + name + "' (expected p, q or r)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Propositional problem composition with a numeric triangle-geometry oracle";
  m.attr("__version__") = std::string(lc::kVersion);

  py::register_exception<lc::geo::BudgetError>(m, "BudgetError");
  py::register_exception<lc::ParseError>(m, "FormulaParseError");

  py::class_<lc::Formula>(m, "Formula")
      .def("__str__", &lc::Formula::str)
      .def("__repr__", [](const lc::Formula& f) { return "Formula('" + f.str() + "')"; })
      .def("__eq__", [](const lc::Formula& a, const lc::Formula& b) { return a == b; })
      .def("__hash__", [](const lc::Formula& f) { return py::hash(py::str(f.str())); });

  py::class_<lc::ImplicationStructure>(m, "ImplicationStructure")
      .def(py::init([](const py::object& text) {
             return lc::ImplicationStructure::from_formula(to_formula(text));
           }),
           py::arg("formula"))
      .def_property_readonly("premise", &lc::ImplicationStructure::premise)
      .def_property_readonly("conclusion", &lc::ImplicationStructure::conclusion)
      .def("formula", &lc::ImplicationStructure::to_formula)
      .def("__str__", &lc::ImplicationStructure::str)
      .def("__repr__",
           [](const lc::ImplicationStructure& s) { return "ImplicationStructure('" + s.str() + "')"; })
      .def("__eq__", [](const lc::ImplicationStructure& a, const lc::ImplicationStructure& b) {
        return a == b;
      });

  m.def("parse", [](const std::string& text) { return lc::parse(text); }, py::arg("text"),
        "Parse formula text into a Formula");
  m.def("to_text", [](const py::object& f) { return lc::print(to_formula(f)); }, py::arg("formula"),
        "Canonical minimal-parentheses rendering");
  m.def("normalize", [](const py::object& f) { return lc::normalize(to_formula(f)); },
        py::arg("formula"));
  m.def("atoms", [](const py::object& f) { return lc::atoms(to_formula(f)); }, py::arg("formula"));
  m.def("evaluate",
        [](const py::object& f, const py::dict& assignment) {
          return lc::eval(to_formula(f), to_assignment(assignment));
        },
        py::arg("formula"), py::arg("assignment"));
  m.def("is_tautology", [](const py::object& f) { return lc::is_tautology(to_formula(f)); },
        py::arg("formula"));
  m.def("are_equivalent",
        [](const py::object& f, const py::object& g) {
          return lc::are_equivalent(to_formula(f), to_formula(g));
        },
        py::arg("formula"), py::arg("other"));
  m.def("find_falsifying",
        [](const py::object& f) -> py::object {
          const auto witness = lc::find_falsifying(to_formula(f));
          return witness ? py::cast(*witness) : py::object(py::none());
        },
        py::arg("formula"));
  m.def("truth_table",
        [](const py::object& f) {
          const auto report = lc::truth_table(to_formula(f));
          py::dict out;
          out["atoms"] = report.atom_order;
          out["rows"] = py::cast(std::vector<bool>(report.row_values));
          out["classification"] = lc::to_string(report.classification);
          out["falsifying"] =
              report.falsifying ? py::cast(*report.falsifying) : py::object(py::none());
          out["satisfying"] =
              report.satisfying ? py::cast(*report.satisfying) : py::object(py::none());
          return out;
        },
        py::arg("formula"));

  m.def("compose",
        [](const py::object& first, const py::object& second, bool allow_empty_context) {
          return lc::compose(lc::ImplicationStructure::from_formula(to_formula(first)),
                             lc::ImplicationStructure::from_formula(to_formula(second)),
                             allow_empty_context);
        },
        py::arg("first"), py::arg("second"), py::arg("allow_empty_context") = false);
  m.def("invert_all",
        [](const py::object& f) {
          py::list out;
          for (const auto& candidate :
               lc::invert_all(lc::ImplicationStructure::from_formula(to_formula(f)))) {
            py::dict entry;
            entry["structure"] = py::cast(candidate.structure);
            entry["moved"] = py::cast(candidate.moved);
            out.append(entry);
          }
          return out;
        },
        py::arg("formula"));
  m.def("conditionalize",
        [](const py::object& f, const py::object& keep) {
          return lc::conditionalize(lc::ImplicationStructure::from_formula(to_formula(f)),
                                    to_formula(keep));
        },
        py::arg("formula"), py::arg("keep"));
  m.def("homogenize",
        [](const py::object& f) {
          return lc::homogenize(lc::ImplicationStructure::from_formula(to_formula(f)));
        },
        py::arg("formula"));
  m.def("classify",
        [](const py::object& a, const py::object& b) {
          return classify_to_py(lc::classify(lc::ImplicationStructure::from_formula(to_formula(a)),
                                             lc::ImplicationStructure::from_formula(to_formula(b))));
        },
        py::arg("first"), py::arg("second"));

  py::class_<lc::geo::Triangle>(m, "Triangle")
      .def(py::init([](double ax, double ay, double bx, double by, double cx, double cy) {
             return lc::geo::Triangle({ax, ay}, {bx, by}, {cx, cy});
           }),
           py::arg("ax"), py::arg("ay"), py::arg("bx"), py::arg("by"), py::arg("cx"),
           py::arg("cy"))
      .def_property_readonly("a",
                             [](const lc::geo::Triangle& t) {
                               return py::make_tuple(t.a().x, t.a().y);
                             })
      .def_property_readonly("b",
                             [](const lc::geo::Triangle& t) {
                               return py::make_tuple(t.b().x, t.b().y);
                             })
      .def_property_readonly("c",
                             [](const lc::geo::Triangle& t) {
                               return py::make_tuple(t.c().x, t.c().y);
                             })
      .def_property_readonly("angles",
                             [](const lc::geo::Triangle& t) {
                               return py::make_tuple(t.angle_at_a(), t.angle_at_b(),
                                                     t.angle_at_c());
                             })
      .def("__repr__", [](const lc::geo::Triangle& t) {
        return "Triangle(" + std::to_string(t.a().x) + ", " + std::to_string(t.a().y) + ", " +
               std::to_string(t.b().x) + ", " + std::to_string(t.b().y) + ", " +
               std::to_string(t.c().x) + ", " + std::to_string(t.c().y) + ")";
      });

  m.def("predicate",
        [](const std::string& group, const std::string& atom, const lc::geo::Triangle& t,
           double tol) {
          const auto g = lc::catalog::parse_group(group);
          const auto result = lc::geo::predicate(g, to_atom(atom), t, lc::geo::construct(g, t), tol);
          return py::make_tuple(result.holds, result.residual);
        },
        py::arg("group"), py::arg("atom"), py::arg("triangle"), py::arg("tol") = 1e-9,
        "Evaluate a group statement; returns (holds, residual)");
  m.def("sample_triangle",
        [](const std::string& group_ignored, std::uint64_t seed, std::uint64_t index) {
          (void)group_ignored;
          lc::RngStream stream(seed, index);
          return lc::geo::sample_triangle(lc::geo::SamplerConfig{}, stream);
        },
        py::arg("group") = "I", py::arg("seed") = 0, py::arg("index") = 0);
  m.def("solve_on_slice",
        [](const std::string& group, std::uint64_t seed, std::uint64_t index, double tol_solve) {
          auto cfg = make_config(seed, 1, tol_solve, tol_solve * 1000);
          lc::RngStream stream(seed, index);
          return lc::geo::solve_on_slice(lc::catalog::parse_group(group), cfg, stream);
        },
        py::arg("group"), py::arg("seed") = 0, py::arg("index") = 0, py::arg("tol_solve") = 1e-12);
  m.def("check_implication",
        [](const std::string& group, const std::vector<std::string>& premise,
           const py::object& conclusion, std::uint64_t samples, std::uint64_t seed,
           double tol_solve, double tol_verify) {
          const auto report = lc::geo::check_implication(
              lc::catalog::parse_group(group), to_premise(premise), to_formula(conclusion),
              make_config(seed, samples, tol_solve, tol_verify));
          return json_to_py(lc::report::to_json(report));
        },
        py::arg("group"), py::arg("premise"), py::arg("conclusion"), py::arg("samples") = 1000,
        py::arg("seed") = 42, py::arg("tol_solve") = 1e-12, py::arg("tol_verify") = 1e-9);
  m.def("find_counterexample",
        [](const std::string& group, const py::object& claim, std::uint64_t samples,
           std::uint64_t seed, double tol_solve, double tol_verify) -> py::object {
          const auto hit =
              lc::geo::find_counterexample(lc::catalog::parse_group(group), to_formula(claim),
                                           make_config(seed, samples, tol_solve, tol_verify));
          if (!hit) return py::none();
          return json_to_py(lc::report::to_json(*hit));
        },
        py::arg("group"), py::arg("claim"), py::arg("samples") = 1000, py::arg("seed") = 42,
        py::arg("tol_solve") = 1e-12, py::arg("tol_verify") = 1e-9);

  m.def("schema",
        [](const std::string& group) {
          const auto s = lc::catalog::schema(lc::catalog::parse_group(group));
          py::dict statements;
          for (const auto& [atom, text] : s.statements) {
            statements[py::str(std::string(1, atom))] = text;
          }
          py::dict out;
          out["group"] = lc::geo::to_string(s.group);
          out["context"] = s.context;
          out["statements"] = statements;
          return out;
        },
        py::arg("group"));
  m.def("derive_set",
        [](const std::string& group) {
          const auto set = lc::catalog::derive_set(lc::catalog::parse_group(group));
          py::dict out;
          for (const auto* problem : set.all()) {
            py::dict entry;
            entry["tag"] = problem->tag ? py::cast(*problem->tag) : py::object(py::none());
            entry["formula"] = problem->structure.str();
            out[py::str(problem->name)] = entry;
          }
          return out;
        },
        py::arg("group"));
  m.def("verify_group",
        [](const std::string& group, std::uint64_t samples, std::uint64_t seed, double tol_solve,
           double tol_verify) {
          return battery_to_py(lc::catalog::verify_group(
              lc::catalog::parse_group(group), make_config(seed, samples, tol_solve, tol_verify)));
        },
        py::arg("group"), py::arg("samples") = 1000, py::arg("seed") = 42,
        py::arg("tol_solve") = 1e-12, py::arg("tol_verify") = 1e-9);
  m.def("verify_capstone",
        [](std::uint64_t samples, std::uint64_t seed, double tol_solve, double tol_verify) {
          return battery_to_py(
              lc::catalog::verify_capstone(make_config(seed, samples, tol_solve, tol_verify)));
        },
        py::arg("samples") = 1000, py::arg("seed") = 7, py::arg("tol_solve") = 1e-12,
        py::arg("tol_verify") = 1e-9);
}
