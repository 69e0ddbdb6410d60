// Independent reference implementations shared by the test suites and the
// acceptance runner. Everything here goes through the textbook dense
// routines (or Eigen), never through the code paths under test.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "paulikit/baselines.hpp"
#include "paulikit/dense.hpp"
#include "paulikit/hamiltonian.hpp"
#include "paulikit/pauli.hpp"

namespace oracles {

inline paulikit::DenseMatrix make_dense(
    std::uint64_t dim, std::vector<std::complex<double>> values) {
  return paulikit::DenseMatrix(dim, std::move(values));
}

inline paulikit::DenseMatrix dense_mul(const paulikit::DenseMatrix& a,
                                       const paulikit::DenseMatrix& b) {
  paulikit::DenseMatrix out(a.dim());
  for (std::uint64_t r = 0; r < a.dim(); ++r) {
    for (std::uint64_t k = 0; k < a.dim(); ++k) {
      const std::complex<double> v = a.at(r, k);
      if (v == 0.0) continue;
      for (std::uint64_t c = 0; c < a.dim(); ++c) {
        out.at(r, c) += v * b.at(k, c);
      }
    }
  }
  return out;
}

inline paulikit::DenseMatrix dense_identity(std::uint64_t dim) {
  paulikit::DenseMatrix out(dim);
  for (std::uint64_t r = 0; r < dim; ++r) out.at(r, r) = 1.0;
  return out;
}

inline paulikit::DenseMatrix dense_adjoint(const paulikit::DenseMatrix& m) {
  paulikit::DenseMatrix out(m.dim());
  for (std::uint64_t r = 0; r < m.dim(); ++r) {
    for (std::uint64_t c = 0; c < m.dim(); ++c) {
      out.at(c, r) = std::conj(m.at(r, c));
    }
  }
  return out;
}

// Projection coefficient tr(P(x) H) / 2^n by the full dense double loop,
// with P(x) built by the naive Kronecker fold.
inline std::complex<double> trace_coefficient(const paulikit::DenseMatrix& h,
                                              const std::string& label) {
  const paulikit::DenseMatrix p =
      paulikit::kron_naive(paulikit::PauliString::parse(label));
  std::complex<double> acc = 0.0;
  for (std::uint64_t r = 0; r < h.dim(); ++r) {
    for (std::uint64_t c = 0; c < h.dim(); ++c) {
      acc += p.at(r, c) * h.at(c, r);
    }
  }
  return acc / static_cast<double>(h.dim());
}

// Ising diagonal entry by direct spin enumeration: spin i (counted from the
// left of the label) of basis state `row` is +1 when bit n-1-i of row is 0.
inline double ising_energy(const paulikit::IsingCoefficients& c,
                           std::uint64_t row) {
  const std::size_t n = c.size();
  const auto spin = [&](std::size_t i) {
    return ((row >> (n - 1 - i)) & 1u) ? -1.0 : 1.0;
  };
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    energy += c.alpha()[i] * spin(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      energy += c.coupling(i, j) * spin(i) * spin(j);
    }
  }
  return energy;
}

// exp(-i theta P(x)) through Eigen's eigendecomposition of the hermitian
// P(x); independent of the cosine/sine closed form under test.
inline paulikit::DenseMatrix exp_oracle(double theta,
                                        const std::string& label) {
  const paulikit::DenseMatrix p =
      paulikit::kron_naive(paulikit::PauliString::parse(label));
  const auto d = static_cast<Eigen::Index>(p.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = p.at(static_cast<std::uint64_t>(r),
                     static_cast<std::uint64_t>(c));
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  Eigen::VectorXcd phases(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, -theta) *
                         solver.eigenvalues()(k));
  }
  const Eigen::MatrixXcd u = solver.eigenvectors() * phases.asDiagonal() *
                             solver.eigenvectors().adjoint();
  paulikit::DenseMatrix out(p.dim());
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      out.at(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c)) =
          u(r, c);
    }
  }
  return out;
}

}  // namespace oracles
