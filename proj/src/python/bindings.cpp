#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "m4kit/abelianize.hpp"
#include "m4kit/blocks.hpp"
#include "m4kit/certify.hpp"
#include "m4kit/constructions.hpp"
#include "m4kit/coset.hpp"
#include "m4kit/error.hpp"
#include "m4kit/geography.hpp"
#include "m4kit/manifest.hpp"
#include "m4kit/replay.hpp"
#include "m4kit/surgery.hpp"

namespace py = pybind11;
using namespace m4kit;

namespace {

Budget budget_of(std::size_t max_cosets, std::size_t max_steps) {
  Budget b = Budget::from_env();
  if (max_cosets) b.max_cosets = max_cosets;
  if (max_steps) b.max_steps = max_steps;
  return b;
}

Target target_of(const std::string& kind, long long order, const std::string& generator) {
  if (kind == "auto") return Target{Target::Kind::Auto, 0, generator};
  if (kind == "trivial") return Target::trivial();
  if (kind == "Z" || kind == "infinite-cyclic") return Target::infinite_cyclic(generator);
  if (kind == "Z/p" || kind == "finite-cyclic") return Target::finite_cyclic(order, generator);
  throw Error("unknown target '" + kind + "' (auto, trivial, Z, Z/p)");
}

py::object big(const BigInt& x) { return py::int_(py::str(x.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fundamental groups and characteristic numbers of 4-manifold constructions";

  // Type objects live for the life of the interpreter.
  static PyObject* error = PyErr_NewException("m4kit.Error", PyExc_RuntimeError, nullptr);
  static PyObject* parse_error = PyErr_NewException(
      "m4kit.ParseError", py::make_tuple(py::handle(error), py::handle(PyExc_ValueError)).release().ptr(),
      nullptr);
  m.attr("Error") = py::handle(error);
  m.attr("ParseError") = py::handle(parse_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::object inst = py::reinterpret_steal<py::object>(PyObject_CallFunction(parse_error, "s", e.what()));
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      PyErr_SetObject(parse_error, inst.ptr());
    } catch (const Error& e) {
      PyErr_SetString(error, e.what());
    }
  });

  py::class_<Word>(m, "Word")
      .def(py::init([](const std::string& text) { return parse_word(text); }), py::arg("text") = "1")
      .def("inverse", &Word::inverse)
      .def("__mul__", [](const Word& a, const Word& b) { return a * b; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__hash__", [](const Word& w) { return py::hash(py::str(to_string(w))); })
      .def("__len__", &Word::size)
      .def("__str__", [](const Word& w) { return to_string(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + to_string(w) + "')"; })
      .def("exponent_sum", [](const Word& w, const std::string& g) { return w.exponent_sum(g); })
      .def("is_identity", &Word::is_identity);
  m.def("commutator", &commutator, py::arg("x"), py::arg("y"));
  m.def("canonical_relator", &canonical_relator);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](const std::string& text) { return parse_presentation(text); }))
      .def_readonly("generators", &Presentation::generators)
      .def_readonly("relators", &Presentation::relators)
      .def("closed_candidate", &closed_candidate)
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; })
      .def("__str__", [](const Presentation& p) { return to_text(p); })
      .def("__repr__", [](const Presentation& p) { return "Presentation('" + to_text(p) + "')"; });

  py::class_<H1Result>(m, "H1")
      .def_readonly("rank", &H1Result::rank)
      .def_property_readonly("torsion",
                             [](const H1Result& h) {
                               py::list out;
                               for (const auto& t : h.torsion) out.append(big(t));
                               return out;
                             })
      .def("trivial", &H1Result::trivial)
      .def("__str__", [](const H1Result& h) { return to_string(h); });
  m.def("h1", &h1, py::arg("presentation"));
  m.def("smith_form", [](const std::vector<std::vector<long long>>& rows) {
    SmithForm s = smith_normal_form(IntMatrix::from_rows(rows));
    py::list d;
    for (std::size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i) d.append(big(s.d(i, i)));
    return d;
  }, py::arg("rows"), "Diagonal of the Smith normal form.");

  m.def("coset_index",
        [](const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets)
            -> py::object {
          CosetResult r = todd_coxeter(p, subgroup, max_cosets);
          if (r.exceeded()) return py::none();
          return py::int_(*r.index);
        },
        py::arg("presentation"), py::arg("subgroup") = std::vector<Word>{},
        py::arg("max_cosets") = 1'000'000);

  py::class_<Certificate>(m, "Certificate")
      .def_property_readonly("verdict", [](const Certificate& c) { return to_string(c.verdict); })
      .def_readonly("order", &Certificate::order)
      .def_readonly("generator", &Certificate::generator)
      .def_readonly("reason", &Certificate::reason)
      .def_readonly("input", &Certificate::input)
      .def_readonly("final_presentation", &Certificate::final_presentation)
      .def_readonly("images", &Certificate::images)
      .def_property_readonly("steps", [](const Certificate& c) { return c.trace.size(); })
      .def("conclusive", &Certificate::conclusive)
      .def("to_json", [](const Certificate& c) { return certificate_json(c); })
      .def_static("from_json", [](const std::string& s) { return certificate_from_json(s); })
      .def("__str__", [](const Certificate& c) { return describe(c); });

  m.def("certify",
        [](const Presentation& p, const std::string& target, long long order,
           const std::string& generator, std::size_t max_cosets, std::size_t max_steps) {
          py::gil_scoped_release release;
          return certify(p, target_of(target, order, generator), budget_of(max_cosets, max_steps));
        },
        py::arg("presentation"), py::arg("target") = "auto", py::arg("order") = 0,
        py::arg("generator") = "", py::arg("max_cosets") = 0, py::arg("max_steps") = 0);
  m.def("prove_word_trivial",
        [](const Presentation& p, const Word& w, std::size_t max_cosets, std::size_t max_steps) {
          return prove_word_trivial(p, w, budget_of(max_cosets, max_steps));
        },
        py::arg("presentation"), py::arg("word"), py::arg("max_cosets") = 0,
        py::arg("max_steps") = 0);
  m.def("replay",
        [](const Certificate& c) {
          ReplayResult r = replay(c, Budget::from_env());
          py::dict d;
          d["ok"] = r.ok;
          d["steps_checked"] = r.steps_checked;
          d["error"] = r.error;
          return d;
        },
        py::arg("certificate"));

  py::class_<SurgeryDatum>(m, "SurgerySite")
      .def_readonly("site", &SurgeryDatum::site)
      .def_readonly("curve", &SurgeryDatum::curve)
      .def_readonly("pushoff", &SurgeryDatum::pushoff)
      .def_readonly("relator", &SurgeryDatum::relator)
      .def_readonly("coefficient", &SurgeryDatum::coefficient)
      .def_readonly("k", &SurgeryDatum::k)
      .def_readonly("m", &SurgeryDatum::m)
      .def_readonly("performed", &SurgeryDatum::performed);

  py::class_<MarkedManifold>(m, "Manifold")
      .def_readonly("name", &MarkedManifold::name)
      .def_readonly("recipe", &MarkedManifold::recipe)
      .def_readonly("e", &MarkedManifold::e)
      .def_readonly("sigma", &MarkedManifold::sigma)
      .def_property_readonly("parity", [](const MarkedManifold& x) { return to_string(x.parity); })
      .def_readonly("symplectic", &MarkedManifold::symplectic)
      .def_readonly("pi1", &MarkedManifold::pi1)
      .def_readonly("sites", &MarkedManifold::tori)
      .def_property_readonly("surfaces",
                             [](const MarkedManifold& x) {
                               std::vector<std::string> out;
                               for (const auto& s : x.surfaces) out.push_back(s.name);
                               return out;
                             })
      .def("__repr__", [](const MarkedManifold& x) {
        return "<Manifold " + x.recipe + " e=" + std::to_string(x.e) +
               " sigma=" + std::to_string(x.sigma) + ">";
      });

  m.def("block",
        [](const std::string& name, const std::map<std::string, long long>& params) {
          const CatalogEntry& e = catalog_entry(name);
          std::map<std::string, long long> args;
          for (const auto& p : e.params) {
            auto it = params.find(p.name);
            if (it == params.end() && p.required) throw Error(name + " needs parameter '" + p.name + "'");
            args[p.name] = it == params.end() ? p.default_value : it->second;
          }
          for (const auto& [k, v] : params) {
            bool known = false;
            for (const auto& p : e.params) known |= p.name == k;
            if (!known) throw Error(name + " has no parameter '" + k + "'");
          }
          return e.make(args);
        },
        py::arg("name"), py::arg("params") = std::map<std::string, long long>{});
  m.def("catalog", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });

  m.def("X1", [](int mm, int e1, int e3) { return X1(mm, {e1, e3}); }, py::arg("m"),
        py::arg("e1") = 1, py::arg("e3") = -1);
  m.def("X1_tilde", [](int p, int mm, int e1, int e3) { return X1_tilde(p, mm, {e1, e3}); },
        py::arg("p"), py::arg("m") = 1, py::arg("e1") = 1, py::arg("e3") = -1);
  m.def("Xn", [](int n, int mm, int e1, int e3) { return Xn(n, mm, {e1, e3}); }, py::arg("n"),
        py::arg("m") = 1, py::arg("e1") = 1, py::arg("e3") = -1);
  m.def("V", [](int mm, int e1, int e3) { return V(mm, {e1, e3}); }, py::arg("m"),
        py::arg("e1") = 1, py::arg("e3") = -1);
  m.def("W", [](int mm, int e1, int e3) { return W(mm, {e1, e3}); }, py::arg("m"),
        py::arg("e1") = 1, py::arg("e3") = -1);

  m.def("torus_surgery", &torus_surgery, py::arg("manifold"), py::arg("site"), py::arg("k"),
        py::arg("m") = 1);
  m.def("blow_up", &blow_up, py::arg("manifold"));
  m.def("fiber_sum",
        [](MarkedManifold x, const std::string& s, MarkedManifold n, const std::string& sn,
           const std::string& xname, const std::string& nname) {
          if (!xname.empty()) x.name = xname;
          if (!nname.empty()) n.name = nname;
          return fiber_sum(x, s, n, sn);
        },
        py::arg("x"), py::arg("surface"), py::arg("n"), py::arg("surface_n"),
        py::arg("x_name") = "", py::arg("n_name") = "");

  m.def("coords", [](long long e, long long s) {
    GeoPoint p = coords(e, s);
    return py::make_tuple(p.chi_h, p.c1sq);
  }, py::arg("e"), py::arg("sigma"));
  m.def("euler_signature", [](long long chi, long long c) { return euler_signature({chi, c}); },
        py::arg("chi_h"), py::arg("c1sq"));
  m.def("region_check", [](long long chi, long long c) { return region_check({chi, c}); },
        py::arg("chi_h"), py::arg("c1sq"));
  m.def("freedman_model", [](long long e, long long s) { return freedman_numbers(e, s).name(); },
        py::arg("e"), py::arg("sigma"));

  m.def("realize",
        [](long long chi, long long c) {
          Realization r;
          {
            py::gil_scoped_release release;
            r = realize_pair({chi, c}, Budget::from_env());
          }
          py::dict d;
          d["construction"] = r.construction;
          d["skipped_site"] = r.skipped_site;
          d["torus_generators"] = r.torus_generators;
          d["designated"] = r.designated;
          d["arithmetic_only"] = r.arithmetic_only;
          d["e"] = r.e;
          d["sigma"] = r.sigma;
          d["pi1"] = r.pi1;
          d["surjectivity_index"] =
              r.surjectivity_index ? py::object(py::int_(*r.surjectivity_index)) : py::none();
          d["meridian"] = r.meridian;
          d["established"] = r.established();
          d["note"] = r.note;
          return d;
        },
        py::arg("chi_h"), py::arg("c1sq"));

  m.def("run_manifest",
        [](const std::string& text, bool certify_pi1, const std::string& source) {
          Manifest man = parse_manifest(text, source);
          Report r;
          {
            py::gil_scoped_release release;
            r = run_manifest(man, {Budget::from_env(), certify_pi1});
          }
          return report_json(r);
        },
        py::arg("text"), py::arg("certify") = true, py::arg("source") = "<input>",
        "Runs a manifest and returns the JSON report.");
  m.def("format_manifest", [](const std::string& text) { return print_manifest(parse_manifest(text)); },
        py::arg("text"));
}
