#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sunit/bounds.hpp"
#include "sunit/enumerate.hpp"
#include "sunit/errors.hpp"
#include "sunit/padic.hpp"
#include "sunit/presentation.hpp"
#include "sunit/quaternion.hpp"
#include "sunit/tree.hpp"

namespace py = pybind11;
using namespace sunit;

namespace {

std::vector<std::string> strings(const std::vector<HurwitzElement>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string bounds_json(int n, int d, int s, int r1, int r2, const std::string& covolume,
                        const std::vector<std::string>& places, unsigned digits) {
  const Precision prec{digits};
  AlgebraShape shape;
  shape.n = n;
  shape.d = d;
  shape.s = s;
  shape.r1 = r1;
  shape.r2 = r2;
  shape.covolume = Real::from_string(covolume, prec);
  shape.validate();
  FinitePlaces fp;
  for (const auto& p : places) fp.norms.emplace_back(p);
  return to_json(thresholds_and_final(shape, fp, OnSmallC::kOmitClosedForms)).dump();
}

py::dict transitivity(const std::vector<unsigned long>& primes, long radius) {
  const TransitivityReport r = verify_product_transitivity(SPlaceSet(primes), radius);
  py::dict witnesses;
  for (const auto& [v, w] : r.witnesses) witnesses[py::str(v.to_string())] = to_string(w);
  py::dict out;
  out["expected"] = r.expected;
  out["reached"] = r.reached;
  out["ball_sizes"] = r.ball_sizes;
  out["generators"] = r.generators;
  out["min_slack"] = r.min_slack;
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sunit, m) {
  m.doc() = "Exact Hurwitz quaternion arithmetic, height bounds and tree checks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<ZeroElementError>(m, "ZeroElementError", PyExc_ZeroDivisionError);

  m.def("canonical", [](const std::string& q) { return to_string(parse_quaternion(q)); },
        py::arg("q"));
  m.def("multiply",
        [](const std::string& x, const std::string& y) {
          return to_string(parse_quaternion(x) * parse_quaternion(y));
        },
        py::arg("x"), py::arg("y"));
  m.def("reduced_norm", [](const std::string& q) { return parse_quaternion(q).reduced_norm().get_str(); },
        py::arg("q"));
  m.def("height", [](const std::string& q) { return height(parse_quaternion(q)).get_str(); },
        py::arg("q"));
  m.def("is_hurwitz", [](const std::string& q) { return is_hurwitz(parse_quaternion(q)); },
        py::arg("q"));
  m.def("is_s_unit",
        [](const std::string& q, const std::vector<unsigned long>& primes) {
          return is_s_unit(parse_quaternion(q), SPlaceSet(primes));
        },
        py::arg("q"), py::arg("primes"));
  m.def("local_abs",
        [](const std::string& q, unsigned long p, long k) {
          return local_abs(parse_quaternion(q), p, k).get_str();
        },
        py::arg("q"), py::arg("p"), py::arg("precision") = kDefaultPadicPrecision);

  m.def("enumerate_by_norm", [](unsigned long n) { return strings(enumerate_by_norm(n).elements); },
        py::arg("m"));
  m.def("generating_set",
        [](const std::vector<unsigned long>& primes) { return strings(generating_set(SPlaceSet(primes))); },
        py::arg("primes"));
  m.def("unit_order_counts", [] { return unit_group_check().order_counts; });

  m.def("_bounds_json", &bounds_json, py::arg("n"), py::arg("d"), py::arg("s"), py::arg("r1"),
        py::arg("r2"), py::arg("covolume"), py::arg("places"), py::arg("digits"));

  m.def("neighbor_coverage",
        [](unsigned long p) {
          std::map<std::string, std::size_t> hits;
          for (const auto& [v, n] : verify_neighbor_coverage(p).hits) hits[v.to_string()] = n;
          return hits;
        },
        py::arg("p"));
  m.def("product_transitivity", &transitivity, py::arg("primes"), py::arg("radius"));

  m.def("relator_values", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& r : verify_relators().results) out.emplace_back(r.name, r.value[0].get_str());
    return out;
  });
}
