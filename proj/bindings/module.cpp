// Python bindings for the composition, Hamiltonian, and decomposition
// operations. Matrices cross the boundary as numpy arrays; Pauli strings as
// label strings.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paulikit/baselines.hpp"
#include "paulikit/coo.hpp"
#include "paulikit/decompose.hpp"
#include "paulikit/dense.hpp"
#include "paulikit/error.hpp"
#include "paulikit/hamiltonian.hpp"
#include "paulikit/pauli.hpp"
#include "paulikit/sparse.hpp"

namespace py = pybind11;

namespace {

using namespace paulikit;

using ComplexArray =
    py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

DenseMatrix dense_from_array(const ComplexArray& array) {
  if (array.ndim() != 2 || array.shape(0) != array.shape(1)) {
    throw Error(Errc::NonSquare, "matrix must be square");
  }
  const auto d = static_cast<std::uint64_t>(array.shape(0));
  std::vector<std::complex<double>> values(array.data(),
                                           array.data() + d * d);
  return DenseMatrix(d, std::move(values));
}

py::array_t<std::complex<double>> array_from_dense(const DenseMatrix& m) {
  const auto d = static_cast<py::ssize_t>(m.dim());
  py::array_t<std::complex<double>> out({d, d});
  std::copy(m.values().begin(), m.values().end(), out.mutable_data());
  return out;
}

py::array_t<std::uint64_t> array_from_u64(std::span<const std::uint64_t> v) {
  py::array_t<std::uint64_t> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<std::complex<double>> entries_array(const SparsePauliMatrix& p) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(p.dim()));
  auto* data = out.mutable_data();
  for (std::uint64_t row = 0; row < p.dim(); ++row) {
    data[row] = p.entry(row);
  }
  return out;
}

PauliSum sum_from_dict(const py::dict& terms) {
  PauliSum s;
  for (const auto& item : terms) {
    const auto label = item.first.cast<std::string>();
    const auto w = item.second.cast<std::complex<double>>();
    const PauliString x = PauliString::parse(label);
    if (s.terms.empty()) {
      s.qubits = x.size();
    }
    s.terms[x.label()] = w;
  }
  return s;
}

py::dict dict_from_sum(const PauliSum& s) {
  py::dict out;
  for (const auto& [label, w] : s.terms) {
    out[py::str(label)] = w;
  }
  return out;
}

DecomposeOptions make_options(double tol, double prune, bool parallel,
                              const std::optional<std::string>& force_class) {
  DecomposeOptions options;
  options.tol = tol;
  options.prune = prune;
  options.parallel = parallel;
  if (force_class) {
    const auto cls = matrix_class_from_string(*force_class);
    if (!cls) {
      throw Error(Errc::UnknownMethod,
                  "unknown matrix class '" + *force_class + "'");
    }
    options.force_class = *cls;
  }
  return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "sparse Pauli-string composition, Hamiltonians, decomposition";

  py::register_exception<Error>(m, "PauliError", PyExc_ValueError);

  py::class_<SparsePauliMatrix>(m, "SparseMatrix",
                                "one entry per row at column k(j) = j ^ mask")
      .def_property_readonly("qubits", &SparsePauliMatrix::qubits)
      .def_property_readonly("dim", &SparsePauliMatrix::dim)
      .def_property_readonly(
          "columns",
          [](const SparsePauliMatrix& p) { return array_from_u64(p.columns()); })
      .def_property_readonly("entries", &entries_array)
      .def_property_readonly("real_valued", &SparsePauliMatrix::real_valued)
      .def("to_dense",
           [](const SparsePauliMatrix& p) { return array_from_dense(to_dense(p)); });

  py::class_<CooMatrix>(m, "CooMatrix", "sorted unique (row, col, value) triplets")
      .def_property_readonly("dim", &CooMatrix::dim)
      .def_property_readonly("qubits", &CooMatrix::qubits)
      .def_property_readonly("rows",
                             [](const CooMatrix& c) {
                               std::vector<std::uint64_t> rows;
                               rows.reserve(c.triplets().size());
                               for (const Triplet& t : c.triplets())
                                 rows.push_back(t.row);
                               return array_from_u64(rows);
                             })
      .def_property_readonly("cols",
                             [](const CooMatrix& c) {
                               std::vector<std::uint64_t> cols;
                               cols.reserve(c.triplets().size());
                               for (const Triplet& t : c.triplets())
                                 cols.push_back(t.col);
                               return array_from_u64(cols);
                             })
      .def_property_readonly(
          "values",
          [](const CooMatrix& c) {
            py::array_t<std::complex<double>> out(
                static_cast<py::ssize_t>(c.triplets().size()));
            auto* data = out.mutable_data();
            for (std::size_t k = 0; k < c.triplets().size(); ++k) {
              data[k] = c.triplets()[k].value;
            }
            return out;
          })
      .def("to_dense",
           [](const CooMatrix& c) { return array_from_dense(to_dense(c)); });

  py::class_<DecomposeResult>(m, "DecomposeResult")
      .def_property_readonly(
          "terms", [](const DecomposeResult& r) { return dict_from_sum(r.sum); })
      .def_property_readonly("qubits",
                             [](const DecomposeResult& r) { return r.sum.qubits; })
      .def_property_readonly(
          "matrix_class",
          [](const DecomposeResult& r) { return std::string(to_string(r.matrix_class)); })
      .def_readonly("evaluated", &DecomposeResult::evaluated)
      .def_readonly("skipped", &DecomposeResult::skipped)
      .def_readonly("threads", &DecomposeResult::threads);

  m.def(
      "compose",
      [](const std::string& label, std::complex<double> weight) {
        return compose(PauliString::parse(label), weight);
      },
      py::arg("label"), py::arg("weight") = std::complex<double>(1.0),
      "weighted Pauli string as a sparse matrix, no multiplications");

  m.def(
      "compose_diagonal",
      [](const std::string& label, double weight) {
        return compose_diagonal(PauliString::parse(label), weight);
      },
      py::arg("label"), py::arg("weight") = 1.0,
      "diagonal composer for {I,Z}-only labels");

  m.def("kron_naive", [](const std::string& label) {
    return array_from_dense(kron_naive(PauliString::parse(label)));
  });
  m.def("kron_mixed", [](const std::string& label) {
    return array_from_dense(kron_mixed(PauliString::parse(label)));
  });
  m.def("kron_tree", [](const std::string& label) {
    return array_from_dense(kron_tree(PauliString::parse(label)));
  });

  m.def(
      "classify",
      [](const ComplexArray& matrix, double tol) {
        return std::string(to_string(classify_matrix(dense_from_array(matrix), tol)));
      },
      py::arg("matrix"), py::arg("tol") = 1e-12);

  m.def(
      "pauli_coefficient",
      [](const ComplexArray& matrix, const std::string& label) {
        return pauli_coefficient(dense_from_array(matrix),
                                 PauliString::parse(label));
      },
      py::arg("matrix"), py::arg("label"));

  m.def(
      "decompose",
      [](const ComplexArray& matrix, double tol, double prune, bool parallel,
         const std::optional<std::string>& force_class) {
        return decompose_full(dense_from_array(matrix),
                              make_options(tol, prune, parallel, force_class));
      },
      py::arg("matrix"), py::arg("tol") = 1e-12, py::arg("prune") = 0.0,
      py::arg("parallel") = false, py::arg("force_class") = std::nullopt);

  m.def(
      "recompose",
      [](const py::dict& terms) {
        return array_from_dense(recompose(sum_from_dict(terms)));
      },
      py::arg("terms"), "dense matrix of a {label: weight} dict");

  m.def(
      "build_weighted_sum",
      [](const std::vector<std::pair<std::string, std::complex<double>>>& terms) {
        std::vector<std::pair<PauliString, std::complex<double>>> parsed;
        parsed.reserve(terms.size());
        for (const auto& [label, w] : terms) {
          parsed.emplace_back(PauliString::parse(label), w);
        }
        return build_weighted_sum(parsed);
      },
      py::arg("terms"), "COO sum of weighted Pauli strings");

  m.def(
      "build_ising",
      [](const std::vector<double>& alpha,
         const std::vector<std::tuple<std::size_t, std::size_t, double>>&
             couplings) {
        const DiagonalMatrix d =
            build_ising(IsingCoefficients::from_triplets(alpha, couplings));
        py::array_t<double> out(static_cast<py::ssize_t>(d.values.size()));
        std::copy(d.values.begin(), d.values.end(), out.mutable_data());
        return out;
      },
      py::arg("alpha"),
      py::arg("couplings") =
          std::vector<std::tuple<std::size_t, std::size_t, double>>{},
      "diagonal of the Ising Hamiltonian");

  m.def(
      "pauli_exponential",
      [](double theta, const std::string& label) {
        return pauli_exponential(theta, PauliString::parse(label));
      },
      py::arg("theta"), py::arg("label"),
      "exp(-i theta P) with at most two entries per row");
}
