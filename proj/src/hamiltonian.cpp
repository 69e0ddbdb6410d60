#include "paulikit/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paulikit/error.hpp"

namespace paulikit {

IsingCoefficients::IsingCoefficients(std::vector<double> alpha)
    : alpha_(std::move(alpha)) {
  if (alpha_.empty()) {
    throw Error(Errc::EmptyTermList, "ising: no spins");
  }
  if (alpha_.size() > PauliString::kMaxLength) {
    throw Error(Errc::NTooLarge,
                "ising: " + std::to_string(alpha_.size()) +
                    " spins exceeds the limit of " +
                    std::to_string(PauliString::kMaxLength));
  }
  beta_.assign(alpha_.size() * (alpha_.size() - 1) / 2, 0.0);
}

IsingCoefficients IsingCoefficients::from_triplets(
    std::vector<double> alpha,
    std::span<const std::tuple<std::size_t, std::size_t, double>> couplings) {
  IsingCoefficients c(std::move(alpha));
  for (const auto& [i, j, value] : couplings) {
    c.set_coupling(i, j, value);
  }
  return c;
}

std::size_t IsingCoefficients::upper_index(std::size_t i, std::size_t j) const {
  const std::size_t n = alpha_.size();
  if (i >= n || j >= n) {
    throw Error(Errc::IndexOutOfRange,
                "ising: coupling (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") out of range for " +
                    std::to_string(n) + " spins");
  }
  if (i >= j) {
    throw Error(Errc::BetaShapeMismatch,
                "ising: coupling (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") must satisfy i < j");
  }
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

double IsingCoefficients::coupling(std::size_t i, std::size_t j) const {
  return beta_[upper_index(i, j)];
}

void IsingCoefficients::set_coupling(std::size_t i, std::size_t j,
                                     double value) {
  beta_[upper_index(i, j)] = value;
}

DenseMatrix to_dense(const DiagonalMatrix& d) {
  if (d.qubits > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "to_dense: " + std::to_string(d.qubits) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(kMaxDenseQubits));
  }
  DenseMatrix out(d.dim());
  for (std::uint64_t row = 0; row < d.dim(); ++row) {
    out.at(row, row) = d.values[row];
  }
  return out;
}

CooMatrix build_weighted_sum(
    std::span<const std::pair<PauliString, std::complex<double>>> terms) {
  if (terms.empty()) {
    throw Error(Errc::EmptyTermList, "weighted sum: no terms");
  }
  const std::size_t n = terms.front().first.size();
  for (const auto& [x, w] : terms) {
    if (x.size() != n) {
      throw Error(Errc::LengthMismatch,
                  "weighted sum: term '" + x.label() + "' has " +
                      std::to_string(x.size()) + " factors, expected " +
                      std::to_string(n));
    }
  }

  // Accumulate on the flattened coordinate so map order is (row, col) order.
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::map<std::uint64_t, std::complex<double>> accumulator;
  for (const auto& [x, w] : terms) {
    if (w == 0.0) continue;  // composing a zero weight is rejected
    const SparsePauliMatrix p = compose(x, w);
    for (std::uint64_t row = 0; row < dim; ++row) {
      accumulator[row * dim + p.column(row)] += p.entry(row);
    }
  }

  std::vector<Triplet> triplets;
  triplets.reserve(accumulator.size());
  for (const auto& [key, value] : accumulator) {
    triplets.push_back({key / dim, key % dim, value});
  }
  return CooMatrix(dim, std::move(triplets));
}

DiagonalMatrix build_ising(const IsingCoefficients& c) {
  const std::size_t n = c.size();
  DiagonalMatrix out{n, std::vector<double>(std::uint64_t{1} << n, 0.0)};

  const auto add_term = [&](std::vector<Pauli> axes, double w) {
    if (w == 0.0) return;
    const SparsePauliMatrix p =
        compose_diagonal(PauliString(std::move(axes)), w);
    const auto entries = p.real_entries();
    for (std::uint64_t row = 0; row < out.dim(); ++row) {
      out.values[row] += entries[row];
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Pauli> axes(n, Pauli::I);
    axes[i] = Pauli::Z;
    add_term(std::move(axes), c.alpha()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Pauli> axes(n, Pauli::I);
      axes[i] = Pauli::Z;
      axes[j] = Pauli::Z;
      add_term(std::move(axes), c.coupling(i, j));
    }
  }
  return out;
}

CooMatrix pauli_exponential(double theta, const PauliString& x) {
  const std::uint64_t dim = std::uint64_t{1} << x.size();
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  std::vector<Triplet> triplets;
  if (s == 0.0) {
    // Pure phase-free rotation: cos(theta) I, nothing to compose.
    triplets.reserve(dim);
    for (std::uint64_t row = 0; row < dim; ++row) {
      triplets.push_back({row, row, c});
    }
    return CooMatrix(dim, std::move(triplets));
  }

  const SparsePauliMatrix p = compose(x, std::complex<double>(0.0, -s));
  if (x.diagonal()) {
    // Columns coincide with rows, so the two patterns merge to one entry.
    triplets.reserve(dim);
    for (std::uint64_t row = 0; row < dim; ++row) {
      triplets.push_back({row, row, c + p.entry(row)});
    }
  } else {
    // k(row) != row for every row once any factor is anti-diagonal.
    triplets.reserve(2 * dim);
    for (std::uint64_t row = 0; row < dim; ++row) {
      const std::uint64_t k = p.column(row);
      if (k < row) {
        triplets.push_back({row, k, p.entry(row)});
        triplets.push_back({row, row, c});
      } else {
        triplets.push_back({row, row, c});
        triplets.push_back({row, k, p.entry(row)});
      }
    }
  }
  return CooMatrix(dim, std::move(triplets));
}

}  // namespace paulikit
