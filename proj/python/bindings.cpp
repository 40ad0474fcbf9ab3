#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rootnum/arith.hpp"
#include "rootnum/error.hpp"
#include "rootnum/finite_field.hpp"
#include "rootnum/oracle.hpp"
#include "rootnum/padic.hpp"
#include "rootnum/poly.hpp"
#include "rootnum/record.hpp"

namespace py = pybind11;
using rootnum::Integer;

namespace {

// Python ints cross the boundary as decimal strings; no size limit.
Integer to_integer(const py::int_& v) {
  return Integer(py::str(py::handle(v)).cast<std::string>());
}

py::int_ from_integer(const Integer& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

rootnum::IntPoly to_poly(const std::vector<py::int_>& coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.push_back(to_integer(x));
  return rootnum::IntPoly(std::move(c));
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_rootnum, m) {
  m.doc() = "Root numbers of y^2 = x^p + a over Q";

  // Leaked on purpose: must outlive module teardown.
  static PyObject* error_type =
      py::exception<rootnum::Error>(m, "RootnumError", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const rootnum::Error& ex) {
      py::object exc = py::handle(error_type)(ex.what());
      exc.attr("kind") = std::string(rootnum::error_name(ex.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def(
      "compute",
      [](const py::int_& p, const py::int_& a, unsigned long bound) {
        rootnum::EngineOptions opts;
        opts.model_bound = bound;
        return json_to_py(rootnum::to_json(
            rootnum::compute_record(to_integer(p), to_integer(a), opts)));
      },
      py::arg("p"), py::arg("a"), py::arg("bound") = 200,
      "Record for y^2 = x^p + a as a dict; errors land in 'status'.");

  m.def(
      "root_number",
      [](const py::int_& p, const py::int_& a, unsigned long bound) {
        rootnum::EngineOptions opts;
        opts.model_bound = bound;
        Integer pp = to_integer(p), aa = to_integer(a);
        py::gil_scoped_release release;
        return rootnum::global_root_number(pp, aa, opts).global_sign;
      },
      py::arg("p"), py::arg("a"), py::arg("bound") = 200,
      "Global root number; raises RootnumError when unsupported.");

  m.def(
      "find_model",
      [](const py::int_& p, const py::int_& a, unsigned long bound) {
        auto choice = rootnum::find_model(to_integer(p), to_integer(a), bound);
        py::list coeffs;
        for (const auto& c : choice.model.coeffs()) coeffs.append(from_integer(c));
        return py::make_tuple(from_integer(choice.shift), coeffs);
      },
      py::arg("p"), py::arg("a"), py::arg("bound") = 200,
      "(shift, coefficients low degree first).");

  m.def("is_prime", [](const py::int_& n) { return rootnum::is_prime(to_integer(n)); });
  m.def("legendre", [](const py::int_& a, const py::int_& p) {
    return rootnum::legendre(to_integer(a), to_integer(p));
  });
  m.def("hilbert", [](const py::int_& a, const py::int_& b, const py::int_& ell) {
    return rootnum::hilbert(to_integer(a), to_integer(b), to_integer(ell));
  });
  m.def("is_pth_power", [](const py::int_& a, const py::int_& p) {
    return rootnum::is_pth_power(to_integer(a), to_integer(p));
  });
  m.def(
      "discriminant",
      [](const std::vector<py::int_>& coeffs) {
        return from_integer(rootnum::discriminant(to_poly(coeffs)));
      },
      py::arg("coeffs"), "Coefficients low degree first.");

  auto oracle = m.def_submodule("oracle", "Brute-force checks");
  oracle.def("count_points", [](std::uint64_t p, unsigned f) {
    return from_integer(rootnum::oracle::count_points(rootnum::FqContext::make(p, f)));
  });
  oracle.def("gauss_trace_prediction", [](std::uint64_t p, unsigned f) {
    return from_integer(
        rootnum::oracle::gauss_trace_prediction(rootnum::FqContext::make(p, f)));
  });
  oracle.def("gauss_sum_square_check", [](std::uint64_t p, unsigned f) {
    return rootnum::oracle::gauss_sum_square_check(rootnum::FqContext::make(p, f));
  });
  oracle.def("parity_identity_check", [](const py::int_& p) {
    return rootnum::oracle::parity_identity_check(to_integer(p));
  });
  oracle.def("hilbert_bruteforce", [](const py::int_& a, const py::int_& b, const py::int_& ell) {
    return rootnum::oracle::hilbert_bruteforce(to_integer(a), to_integer(b), to_integer(ell));
  });
  oracle.def("pth_power_bruteforce", [](const py::int_& a, const py::int_& p) {
    return rootnum::oracle::pth_power_bruteforce(to_integer(a), to_integer(p));
  });
}
