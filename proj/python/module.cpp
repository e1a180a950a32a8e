// Python bindings for the main operations: check runner, frame data, the
// exotic-family constructions and the monodromy/sym3 computations. Values
// cross the boundary in the same JSON shapes the CLI speaks.

#include <pybind11/pybind11.h>

#include "cylie/borcea.hpp"
#include "cylie/checks.hpp"
#include "cylie/gx_family.hpp"

namespace py = pybind11;
using namespace cylie;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array:
    case json::value_t::binary: {
      py::list out;
      for (const auto& e : j) out.append(json_to_py(e));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
      return out;
    }
    default: return py::none();
  }
}

json py_to_json(py::handle h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<int64_t>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json out = json::array();
    for (py::handle e : h) out.push_back(py_to_json(e));
    return out;
  }
  if (py::isinstance<py::dict>(h)) {
    json out = json::object();
    for (auto item : h.cast<py::dict>()) out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  throw Error(ErrorKind::ParseError, "unsupported python value for JSON conversion");
}

Mat mat_from_py(py::handle h) { return mat_from_json(py_to_json(h)); }

BasisOrdering ordering_from_py(const py::list& labels) {
  if (labels.size() != 4) throw Error(ErrorKind::ShapeMismatch, "ordering needs 4 labels");
  std::array<Label, 4> arr{};
  for (int k = 0; k < 4; ++k) arr[k] = label_from_name(labels[k].cast<std::string>());
  return BasisOrdering(arr);
}

CircleKind kind_from_name(const std::string& name) {
  if (name == "hX") return CircleKind::hX;
  if (name == "hW") return CircleKind::hW;
  if (name == "hG") return CircleKind::hG;
  throw Error(ErrorKind::ParseError, "circle kind must be hX, hW or hG");
}

Tower tower_from_py(py::handle h) {
  return scalar_from_json(py_to_json(h)).promote(Ring::Tower).as_tower();
}

}  // namespace

PYBIND11_MODULE(cylie, m) {
  m.doc() = "exact-arithmetic toolkit for the rank-4 symplectic Hodge-group computations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "run_checks",
      [](const std::string& selector, uint64_t seed) {
        return json_to_py(report_to_json(run_checks(selector, seed), seed)["results"]);
      },
      py::arg("selector") = "all", py::arg("seed") = 12345,
      "Run registered checks; returns a list of result dicts.");

  m.def(
      "report",
      [](const std::string& selector, uint64_t seed) {
        return json_to_py(report_to_json(run_checks(selector, seed), seed));
      },
      py::arg("selector") = "all", py::arg("seed") = 12345,
      "Full verification report with summary counts.");

  m.def(
      "q_matrix",
      [](const py::list& ordering) { return json_to_py(mat_to_json(q_matrix(ordering_from_py(ordering)))); },
      py::arg("ordering") = py::list(py::make_tuple("v30", "v21", "v12", "v03")),
      "The alternating cup-product form in the requested label ordering.");

  m.def(
      "circle_action",
      [](const std::string& kind, py::handle z) {
        Gauss g = scalar_from_json(py_to_json(z)).promote(Ring::Gauss).as_gauss();
        return json_to_py(mat_to_json(circle_action(kind_from_name(kind), g)));
      },
      py::arg("kind"), py::arg("z"), "Diagonal circle action hX/hW/hG at a unit-norm point.");

  m.def(
      "sp_basis", [] { return json_to_py(subalgebra_to_json(sp_basis(HodgeFrame::canonical()))); },
      "Basis of the 10-dimensional real symplectic algebra.");

  m.def(
      "character_dimensions",
      [] {
        HodgeFrame f = HodgeFrame::canonical();
        Mat t = Mat::diagonal({Scalar(Gauss(Rational(0), Rational(3))), Scalar(Gauss::i()),
                               Scalar(-Gauss::i()), Scalar(Gauss(Rational(0), Rational(-3)))});
        auto pieces = character_decomposition(t, sp_basis(f));
        py::dict out;
        for (const auto& [k, mats] : pieces) out[py::int_(k)] = py::int_(mats.size());
        return out;
      },
      "Dimensions of the ad-eigenspaces of sp(4) under the h_X torus.");

  m.def(
      "gx_derive",
      [] {
        ConstraintSet cs = derive_constraints();
        json out = json::array();
        for (const auto& p : cs.polys) out.push_back(poly_to_json(p));
        return json_to_py(out);
      },
      "Closure constraints of the exotic family, as polynomial JSON.");

  m.def(
      "gx_instantiate",
      [](py::handle x) {
        return json_to_py(subalgebra_to_json(gx_instantiate(tower_from_py(x), HodgeFrame::canonical())));
      },
      py::arg("x"), "Instantiate the exotic algebra at a tower value with |x|^2 = 4/3.");

  m.def(
      "gx_nilpotent_check",
      [] {
        Subalgebra g =
            gx_instantiate(Tower(Rational(2)) * Tower::sqrt3().inv(), HodgeFrame::canonical());
        return nilpotent_square_check(g);
      },
      "Certify that no nonzero element of the family squares to zero.");

  m.def(
      "legendre_monodromy", [] { return json_to_py(mat_to_json(legendre_monodromy())); },
      "The unipotent monodromy generator [[1,2],[0,1]].");

  m.def(
      "borcea_nilpotent",
      [](const std::string& r, const std::string& s, const std::string& t) {
        return json_to_py(
            mat_to_json(borcea_nilpotent(Rational::parse(r), Rational::parse(s), Rational::parse(t))));
      },
      py::arg("r") = "1", py::arg("s") = "1", py::arg("t") = "1",
      "The 8x8 monodromy logarithm N_{r,s,t}.");

  m.def(
      "max_unipotent_check",
      [](const std::string& r, const std::string& s, const std::string& t) {
        return max_unipotent_check(
            borcea_nilpotent(Rational::parse(r), Rational::parse(s), Rational::parse(t)));
      },
      py::arg("r") = "1", py::arg("s") = "1", py::arg("t") = "1",
      "N^3 != 0 and N^4 = 0 for the monodromy logarithm.");

  m.def(
      "sym3", [](py::handle mat) { return json_to_py(mat_to_json(sym3_matrix(mat_from_py(mat)))); },
      py::arg("matrix"), "Action of a 2x2 matrix on the third symmetric power.");

  m.def(
      "sym3_hom_check",
      [](py::handle a, py::handle b) { return sym3_hom_check(mat_from_py(a), mat_from_py(b)); },
      py::arg("a"), py::arg("b"), "sym3(AB) == sym3(A) sym3(B).");

  m.def(
      "sym3_identities",
      [] {
        Sym3Identities res = sym3_polynomial_identities();
        json out;
        out["all_hold"] = res.all_hold;
        out["identities"] = json::array();
        for (const auto& [name, holds] : res.identities)
          out["identities"].push_back(json{{"name", name}, {"holds", holds}});
        return json_to_py(out);
      },
      "The det^6 and cube identities of the sym3 matrix, verified symbolically.");
}
