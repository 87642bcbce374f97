#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "parryac/complexity.hpp"
#include "parryac/numeration.hpp"
#include "parryac/oracle.hpp"
#include "parryac/stream.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> BigInt through the decimal representation.
template <>
struct type_caster<parryac::BigInt> {
  PYBIND11_TYPE_CASTER(parryac::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = parryac::parse_decimal(std::string(py::str(src)));
    return true;
  }

  static handle cast(const parryac::BigInt& v, return_value_policy, handle) {
    const std::string text = parryac::to_decimal(v);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace parryac;

py::dict interval_dict(const ParikhInterval& r) {
  py::dict d;
  d["n"] = r.n;
  d["min_b"] = r.min_b;
  d["max_b"] = r.max_b;
  d["ac"] = r.ac();
  d["prefix_len"] = r.prefix_len_used;
  d["stabilized"] = r.stabilized;
  return d;
}

StreamTarget parse_target(const std::string& which) {
  if (which == "ubeta") return StreamTarget::UBeta;
  if (which == "v") return StreamTarget::V;
  if (which == "w") return StreamTarget::W;
  throw ArgumentError("which must be 'ubeta', 'v' or 'w'");
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Abelian complexity of the fixed points of quadratic Parry morphisms";

  auto base = py::register_exception<Error>(mod, "Error", PyExc_ValueError);
  py::register_exception<UnsupportedConstruction>(mod, "UnsupportedConstruction", base.ptr());
  py::register_exception<InstabilityError>(mod, "InstabilityError", base.ptr());

  py::enum_<Family>(mod, "Family")
      .value("SIMPLE", Family::Simple)
      .value("NONSIMPLE", Family::NonSimple);

  py::class_<Morphism>(mod, "Morphism")
      .def(py::init(&make_morphism), py::arg("p"), py::arg("q"), py::arg("family"))
      .def(py::init([](std::uint32_t p, std::uint32_t q, const std::string& family) {
             return make_morphism(p, q, parse_family(family));
           }),
           py::arg("p"), py::arg("q"), py::arg("family"))
      .def_property_readonly("p", &Morphism::p)
      .def_property_readonly("q", &Morphism::q)
      .def_property_readonly("family", &Morphism::family)
      .def_property_readonly("is_simple", &Morphism::is_simple)
      .def_property_readonly("is_sturmian", &Morphism::is_sturmian)
      .def("__eq__", [](const Morphism& a, const Morphism& b) { return a == b; })
      .def("__hash__", [](const Morphism& m) {
        return py::hash(py::make_tuple(m.p(), m.q(), static_cast<int>(m.family())));
      })
      .def("__repr__", [](const Morphism& m) {
        return "Morphism(p=" + std::to_string(m.p()) + ", q=" + std::to_string(m.q()) +
               ", family='" + std::string(to_string(m.family())) + "')";
      });

  mod.def("ac", [](const Morphism& m, const BigInt& n) { return ac(m, n).value; },
          py::arg("m"), py::arg("n"));
  mod.def("ac_result",
          [](const Morphism& m, const BigInt& n) {
            const ACResult r = ac(m, n);
            py::dict d;
            d["n"] = r.n;
            d["ac"] = r.value;
            d["method"] = std::string(to_string(r.method));
            return d;
          },
          py::arg("m"), py::arg("n"));
  mod.def("ac_via_prefix_counts", &ac_via_prefix_counts, py::arg("m"), py::arg("n"));
  mod.def("max_ac", &max_ac, py::arg("m"));
  mod.def("balance_bound", &balance_bound, py::arg("m"));

  mod.def("u_value", &u_value, py::arg("m"), py::arg("k"));
  mod.def("normal_u_rep",
          [](const Morphism& m, const BigInt& n, std::optional<std::size_t> places) {
            return normal_u_rep(m, n, places).digits;
          },
          py::arg("m"), py::arg("n"), py::arg("places") = py::none());
  mod.def("prefix_decomposition",
          [](const Morphism& m, const BigInt& n) {
            py::list out;
            for (const auto& b : prefix_decomposition(m, n)) out.append(py::make_tuple(b.power, b.exponent));
            return out;
          },
          py::arg("m"), py::arg("n"));
  mod.def("prefix_b_count", &prefix_b_count, py::arg("m"), py::arg("n"));

  mod.def("fixed_point_prefix",
          [](const Morphism& m, std::size_t len) { return fixed_point_prefix(m, len).to_string(); },
          py::arg("m"), py::arg("length"));
  mod.def("word_prefix",
          [](const Morphism& m, const std::string& which, std::size_t len) {
            if (len > kDefaultPrefixCap) throw ResourceError("length exceeds the prefix cap");
            WordStream stream(m, parse_target(which));
            return stream.take(len).to_string();
          },
          py::arg("m"), py::arg("which"), py::arg("length"));

  mod.def("oracle_ac",
          [](const Morphism& m, std::size_t n, std::optional<std::size_t> prefix_len) {
            if (prefix_len) return interval_dict(parikh_extrema(m, n, *prefix_len));
            return interval_dict(oracle_ac(m, n));
          },
          py::arg("m"), py::arg("n"), py::arg("prefix_len") = py::none());
  mod.def("parikh_set",
          [](const Morphism& m, std::size_t n, std::size_t prefix_len) {
            py::list out;
            for (const auto& v : parikh_set(m, n, prefix_len)) out.append(py::make_tuple(v.count_a, v.count_b));
            return out;
          },
          py::arg("m"), py::arg("n"), py::arg("prefix_len"));
}
