#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "paulikit/dense.hpp"
#include "paulikit/error.hpp"
#include "paulikit/pauli.hpp"

namespace paulikit {

/// Permutation-structured sparse matrix: exactly one stored entry per row,
/// columns a permutation of 0..2^n-1. This is the composition output format;
/// density is 2^-n by construction.
///
/// Entries of a weighted string all share one magnitude and are either all
/// real or all purely imaginary when the weight is real. When the seed value
/// ends up exactly real the entries are kept in a real-valued array and
/// widened to complex on access.
class SparsePauliMatrix {
 public:
  SparsePauliMatrix(std::size_t qubits, std::vector<std::uint64_t> columns,
                    std::vector<double> real_entries);
  SparsePauliMatrix(std::size_t qubits, std::vector<std::uint64_t> columns,
                    std::vector<std::complex<double>> entries);

  std::size_t qubits() const noexcept { return qubits_; }
  std::uint64_t dim() const noexcept { return std::uint64_t{1} << qubits_; }

  std::uint64_t column(std::uint64_t row) const { return columns_[row]; }
  std::span<const std::uint64_t> columns() const { return columns_; }

  std::complex<double> entry(std::uint64_t row) const {
    return real_storage_ ? std::complex<double>(real_[row], 0.0)
                         : complex_[row];
  }

  bool real_valued() const noexcept { return real_storage_; }
  std::span<const double> real_entries() const { return real_; }
  std::span<const std::complex<double>> complex_entries() const {
    return complex_;
  }

 private:
  std::size_t qubits_;
  bool real_storage_;
  std::vector<std::uint64_t> columns_;
  std::vector<double> real_;
  std::vector<std::complex<double>> complex_;
};

// Exact entrywise equality on (columns, entries), storage-agnostic.
bool operator==(const SparsePauliMatrix& a, const SparsePauliMatrix& b);

// Entrywise comparison with an absolute tolerance on entries; columns must
// still match exactly. Intended for weighted strings.
bool approx_equal(const SparsePauliMatrix& a, const SparsePauliMatrix& b,
                  double tol = 1e-12);

/// Compose P(x) (or weight * P(x)) as a sparse matrix without multiplying
/// anything past the seed entry: the first column index is the y-bit string
/// of x, each stage doubles the filled rows with an integer column offset
/// and a sign-propagated block copy.
SparsePauliMatrix compose(const PauliString& x,
                          std::complex<double> weight = 1.0);

/// Diagonal-only composer: x must contain only I and Z. Columns equal rows,
/// so only the sign recursion runs. Equals compose(x, weight) exactly.
SparsePauliMatrix compose_diagonal(const PauliString& x, double weight = 1.0);

DenseMatrix to_dense(const SparsePauliMatrix& p);

}  // namespace paulikit
