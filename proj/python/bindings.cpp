#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "tridinv/classic.hpp"
#include "tridinv/cli/generators.hpp"
#include "tridinv/cli/methods.hpp"
#include "tridinv/core.hpp"
#include "tridinv/oracle.hpp"
#include "tridinv/ratio.hpp"

namespace py = pybind11;
using namespace tridinv;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> to_vector(const Array& a) {
  if (a.ndim() != 1) throw py::value_error("expected a 1-D array");
  return {a.data(), a.data() + a.size()};
}

Array to_numpy(const DenseMatrix& x) {
  const auto n = static_cast<py::ssize_t>(x.n());
  Array out({n, n});
  auto m = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) m(i, j) = x(i, j);
  return out;
}

DenseMatrix from_numpy(const Array& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw py::value_error("expected a square 2-D array");
  }
  const auto n = static_cast<std::size_t>(a.shape(0));
  DenseMatrix x(n);
  auto m = a.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = m(i, j);
  return x;
}

py::dict norms(const NormSet& s) {
  py::dict d;
  d["one"] = s.one;
  d["inf"] = s.inf;
  d["frobenius"] = s.frobenius;
  d["two"] = s.two;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tridinv, m) {
  m.doc() = "Inverses of tridiagonal matrices";

  py::register_exception<Error>(m, "TridinvError", PyExc_RuntimeError);

  py::class_<TridiagonalMatrix>(m, "TridiagonalMatrix")
      .def(py::init([](const Array& sub, const Array& diag, const Array& super) {
             return TridiagonalMatrix(to_vector(sub), to_vector(diag), to_vector(super));
           }),
           py::arg("sub"), py::arg("diag"), py::arg("super"))
      .def_static("toeplitz", &TridiagonalMatrix::toeplitz, py::arg("n"), py::arg("sub"),
                  py::arg("diag"), py::arg("super"))
      .def_property_readonly("n", &TridiagonalMatrix::n)
      .def_property_readonly("sub", [](const TridiagonalMatrix& a) {
        return std::vector<double>(a.sub().begin(), a.sub().end());
      })
      .def_property_readonly("diag", [](const TridiagonalMatrix& a) {
        return std::vector<double>(a.diag().begin(), a.diag().end());
      })
      .def_property_readonly("super", [](const TridiagonalMatrix& a) {
        return std::vector<double>(a.super().begin(), a.super().end());
      })
      .def("to_dense", [](const TridiagonalMatrix& a) { return to_numpy(to_dense(a)); })
      .def("__repr__", [](const TridiagonalMatrix& a) {
        return "<TridiagonalMatrix n=" + std::to_string(a.n()) + ">";
      });

  m.def("generate",
        [](const std::string& spec) { return cli::generate(cli::parse_generator(spec)); },
        py::arg("spec"),
        "Build a matrix from a generator spec such as 'paper-t10' or "
        "'random:n=50,seed=7'.");

  m.def("methods", [] {
    std::vector<std::string> out;
    for (auto method : cli::all_methods()) out.emplace_back(cli::to_string(method));
    return out;
  });

  m.def(
      "invert",
      [](const TridiagonalMatrix& a, const std::string& method) {
        const auto which = cli::parse_method(method);
        DenseMatrix x;
        {
          py::gil_scoped_release release;
          x = cli::invert(a, which);
        }
        return to_numpy(x);
      },
      py::arg("a"), py::arg("method") = "ratio-ext");

  m.def(
      "operation_count",
      [](const TridiagonalMatrix& a, const std::string& method) {
        OpCounter ops;
        (void)cli::invert(a, cli::parse_method(method), &ops);
        return ops.flops;
      },
      py::arg("a"), py::arg("method") = "ratio-ext");

  m.def(
      "residual_report",
      [](const TridiagonalMatrix& a, const Array& x) {
        const auto r = residual_report(a, from_numpy(x), "python");
        py::dict d;
        d["n"] = r.n;
        d["right"] = norms(r.right);
        d["left"] = norms(r.left);
        d["cond1"] = r.cond_1;
        d["cond2_estimate"] = r.cond_2_estimate;
        d["inverse_norm_ratio"] = r.inverse_norm_ratio;
        return d;
      },
      py::arg("a"), py::arg("x"));

  m.def(
      "condition_number",
      [](const TridiagonalMatrix& a, const std::string& kind) {
        if (kind == "one") return condition_number(a, CondKind::one);
        if (kind == "two") return condition_number(a, CondKind::two_estimate);
        throw py::value_error("kind must be 'one' or 'two'");
      },
      py::arg("a"), py::arg("kind") = "one");

  m.def(
      "predicted_zeros",
      [](const TridiagonalMatrix& a) {
        const auto n = static_cast<py::ssize_t>(a.n());
        py::array_t<bool> out({n, n});
        auto v = out.mutable_unchecked<2>();
        if (a.n() < 2) {
          v(0, 0) = false;
          return out;
        }
        const auto z = ratio::predict_zero_structure(a, ratio::compute_ratios(a));
        for (py::ssize_t i = 0; i < n; ++i)
          for (py::ssize_t j = 0; j < n; ++j) v(i, j) = z.predicted_zero(i, j);
        return out;
      },
      py::arg("a"));
}
