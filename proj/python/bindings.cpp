#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cobweb/chains.hpp"
#include "cobweb/cli.hpp"
#include "cobweb/export.hpp"
#include "cobweb/fibcalc.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/zeta.hpp"

namespace py = pybind11;
using namespace cobweb;

namespace {

// Big integers cross the boundary as big-endian magnitude bytes, which avoids
// Python's limit on decimal string conversion.
py::object to_py(const BigCount& value) {
  std::string bytes;
  boost::multiprecision::export_bits(value, std::back_inserter(bytes), 8);
  return py::module_::import("builtins")
      .attr("int")
      .attr("from_bytes")(py::bytes(bytes), "big");
}

py::list to_py(const std::vector<BigCount>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

CountMode parse_mode(const std::string& mode) {
  if (mode == "formula") return CountMode::formula;
  if (mode == "enumerate") return CountMode::enumerate;
  throw py::value_error("mode must be 'formula' or 'enumerate'");
}

CopyCountMethod parse_method(const std::string& method) {
  if (method == "automatic") return CopyCountMethod::automatic;
  if (method == "enumerate") return CopyCountMethod::enumerate;
  if (method == "product") return CopyCountMethod::product;
  throw py::value_error("method must be 'automatic', 'enumerate' or 'product'");
}

Observation parse_obs(const std::string& text) {
  if (auto o = parse_observation(text)) return *o;
  throw py::value_error("observation must be 1, 2, 3, obs1, obs2 or obs3");
}

template <typename Fn>
py::object count_without_gil(Fn&& fn) {
  BigCount result;
  {
    py::gil_scoped_release release;
    result = fn();
  }
  return to_py(result);
}

py::dict case_to_dict(const VerificationCase& c) {
  py::dict d;
  d["observation"] = observation_id(c.observation);
  d["k"] = c.k;
  d["n"] = c.n;
  d["start"] = c.start ? py::object(py::make_tuple(c.start->level, c.start->index))
                       : py::object(py::none());
  d["formula"] = to_py(c.formula);
  d["oracle"] = to_py(c.oracle);
  d["status"] = c.pass ? "pass" : "fail";
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fibonomial calculus, cobweb posets and chain-count verification";

  py::register_exception<GuardRefusal>(m, "GuardRefusal");
  py::register_exception<DenseCapExceeded>(m, "DenseCapExceeded");
  py::register_exception<VerificationFailure>(m, "VerificationFailure");

  m.attr("DEFAULT_ENUMERATION_LIMIT") = kDefaultEnumerationLimit;
  m.attr("DEFAULT_ZETA_CAP") = kDefaultZetaCap;

  // fibcalc
  m.def("fib", [](FIndex n) { return to_py(fib(n)); }, py::arg("n"));
  m.def("fib_factorial", [](FIndex n) { return to_py(fib_factorial(n)); },
        py::arg("n"));
  m.def("falling_f_factorial",
        [](FIndex n, FIndex k) { return to_py(falling_f_factorial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("fibonomial", [](FIndex n, FIndex k) { return to_py(fibonomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("fibonomial_factorial_ratio",
        [](FIndex n, FIndex k) { return to_py(fibonomial_factorial_ratio(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("fibonomial_row", [](FIndex n) { return to_py(fibonomial_row(n)); },
        py::arg("n"));

  // poset
  py::class_<Vertex>(m, "Vertex")
      .def(py::init<std::uint32_t, std::uint64_t>(), py::arg("level"),
           py::arg("index"))
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 2) throw py::value_error("vertex tuple must be (level, index)");
        return Vertex{t[0].cast<std::uint32_t>(), t[1].cast<std::uint64_t>()};
      }))
      .def_readonly("level", &Vertex::level)
      .def_readonly("index", &Vertex::index)
      .def_property_readonly("name", [](const Vertex& v) { return vertex_name(v); })
      .def("__eq__", [](const Vertex& a, const Vertex& b) { return a == b; })
      .def("__hash__",
           [](const Vertex& v) { return py::hash(py::make_tuple(v.level, v.index)); })
      .def("__repr__", [](const Vertex& v) {
        return "Vertex(" + std::to_string(v.level) + ", " +
               std::to_string(v.index) + ")";
      });
  py::implicitly_convertible<py::tuple, Vertex>();

  py::class_<CobwebPoset>(m, "CobwebPoset")
      .def(py::init<std::uint32_t>(), py::arg("depth"))
      .def_property_readonly("depth", &CobwebPoset::depth)
      .def_property_readonly("level_sizes",
                             [](const CobwebPoset& p) {
                               auto s = p.level_sizes();
                               return std::vector<std::uint64_t>(s.begin(), s.end());
                             })
      .def_property_readonly("vertex_count", &CobwebPoset::vertex_count)
      .def_property_readonly("cover_count", &CobwebPoset::cover_count)
      .def("level_size", &CobwebPoset::level_size, py::arg("level"))
      .def("leq", &CobwebPoset::leq, py::arg("x"), py::arg("y"))
      .def("is_cover", &CobwebPoset::is_cover, py::arg("x"), py::arg("y"))
      .def("position", &CobwebPoset::position, py::arg("v"))
      .def("vertices", &CobwebPoset::vertices)
      .def("__eq__", [](const CobwebPoset& a, const CobwebPoset& b) { return a == b; })
      .def("__repr__", [](const CobwebPoset& p) {
        return "CobwebPoset(depth=" + std::to_string(p.depth()) + ")";
      });
  m.def("build_cobweb", &build_cobweb, py::arg("depth"));

  // zeta
  py::class_<IncidenceMatrix>(m, "IncidenceMatrix")
      .def_property_readonly("dim", &IncidenceMatrix::dim)
      .def("at", &IncidenceMatrix::at, py::arg("row"), py::arg("col"))
      .def("to_list",
           [](const IncidenceMatrix& z) {
             std::vector<std::vector<int>> rows(z.dim());
             for (std::size_t i = 0; i < z.dim(); ++i) {
               auto r = z.row(i);
               rows[i].assign(r.begin(), r.end());
             }
             return rows;
           })
      .def("to_csv", [](const IncidenceMatrix& z) { return to_csv(z); })
      .def("__eq__",
           [](const IncidenceMatrix& a, const IncidenceMatrix& b) { return a == b; });
  m.def("zeta_matrix", &zeta_matrix, py::arg("poset"),
        py::arg("cap") = kDefaultZetaCap);
  m.def("staircase_check", &staircase_check, py::arg("matrix"), py::arg("poset"));
  m.def("parse_csv", [](const std::string& text) { return parse_csv(text); },
        py::arg("text"));
  m.def("poset_from_zeta", &poset_from_zeta, py::arg("matrix"));
  m.def("hasse_dot", &hasse_dot, py::arg("poset"));

  // chains
  m.def("count_from_root_formula",
        [](std::uint32_t n) { return to_py(count_from_root_formula(n)); },
        py::arg("n"));
  m.def("count_layer_chains_formula",
        [](std::uint32_t k, std::uint32_t n) {
          return to_py(count_layer_chains_formula(k, n));
        },
        py::arg("k"), py::arg("n"));
  m.def(
      "enumerate_from_root",
      [](const CobwebPoset& p, std::uint32_t n, std::uint64_t limit,
         unsigned threads) {
        return count_without_gil([&] {
          return enumerate_from_root(p, n, EnumerationOptions{limit, threads});
        });
      },
      py::arg("poset"), py::arg("n"), py::arg("limit") = kDefaultEnumerationLimit,
      py::arg("threads") = 1);
  m.def(
      "enumerate_layer_chains",
      [](const CobwebPoset& p, const Vertex& from, std::uint32_t to_level,
         std::uint64_t limit, unsigned threads) {
        return count_without_gil([&] {
          return enumerate_layer_chains(p, LayerSpec{from, to_level},
                                        EnumerationOptions{limit, threads});
        });
      },
      py::arg("poset"), py::arg("start"), py::arg("to_level"),
      py::arg("limit") = kDefaultEnumerationLimit, py::arg("threads") = 1);
  m.def(
      "chains_from_root",
      [](const CobwebPoset& p, std::uint32_t n, std::uint64_t limit) {
        std::vector<std::vector<Vertex>> out;
        stream_from_root(
            p, n,
            [&](std::span<const Vertex> c) { out.emplace_back(c.begin(), c.end()); },
            limit);
        return out;
      },
      py::arg("poset"), py::arg("n"), py::arg("limit") = 100'000);
  m.def(
      "obs3_quotient",
      [](std::uint32_t k, std::uint32_t n, const std::string& mode) {
        const CountMode cm = parse_mode(mode);
        return count_without_gil([&] { return obs3_quotient(k, n, cm); });
      },
      py::arg("k"), py::arg("n"), py::arg("mode") = "formula");
  m.def(
      "induced_copy_count",
      [](std::uint32_t k, std::uint32_t n, const std::vector<std::uint64_t>& profile,
         const std::string& method) {
        return to_py(induced_copy_count(k, n, profile, parse_method(method)));
      },
      py::arg("k"), py::arg("n"), py::arg("profile"),
      py::arg("method") = "automatic");

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("observation",
                             [](const VerificationReport& r) {
                               return observation_id(r.observation());
                             })
      .def_property_readonly("max_n", &VerificationReport::max_n)
      .def_property_readonly("passed", &VerificationReport::passed)
      .def_property_readonly("case_count",
                             [](const VerificationReport& r) { return r.cases().size(); })
      .def_property_readonly("cases",
                             [](const VerificationReport& r) {
                               py::list out;
                               for (const auto& c : r.cases()) out.append(case_to_dict(c));
                               return out;
                             })
      .def_property_readonly("counterexamples",
                             [](const VerificationReport& r) {
                               py::list out;
                               for (const auto& c : r.counterexamples())
                                 out.append(case_to_dict(c));
                               return out;
                             })
      .def("to_structured", [](const VerificationReport& r) { return to_structured(r); });
  m.def(
      "verify_observation",
      [](const std::string& obs, std::uint32_t max_n, std::uint64_t limit) {
        const Observation o = parse_obs(obs);
        py::gil_scoped_release release;
        return verify_observation(o, max_n, EnumerationOptions{limit, 1});
      },
      py::arg("observation"), py::arg("max_n"),
      py::arg("limit") = kDefaultEnumerationLimit);

  // cli
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"),
      "Runs one cobweb command; returns (exit_status, stdout, stderr).");
}
