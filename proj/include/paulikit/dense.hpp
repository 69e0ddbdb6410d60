#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "paulikit/error.hpp"

namespace paulikit {

/// Row-major complex matrix of dimension 2^n x 2^n.
class DenseMatrix {
 public:
  // Zero matrix. dim must be a power of two >= 2.
  explicit DenseMatrix(std::uint64_t dim);

  // Takes ownership of row-major values; values.size() must equal dim*dim.
  DenseMatrix(std::uint64_t dim, std::vector<std::complex<double>> values);

  std::uint64_t dim() const noexcept { return dim_; }
  std::size_t qubits() const noexcept { return qubits_; }

  std::complex<double>& at(std::uint64_t row, std::uint64_t col) {
    return values_[row * dim_ + col];
  }
  const std::complex<double>& at(std::uint64_t row, std::uint64_t col) const {
    return values_[row * dim_ + col];
  }

  std::span<const std::complex<double>> values() const { return values_; }
  std::span<std::complex<double>> values() { return values_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::uint64_t dim_;
  std::size_t qubits_;
  std::vector<std::complex<double>> values_;
};

// Largest n for which dense 2^n x 2^n storage is still reasonable (~1 GiB).
inline constexpr std::size_t kMaxDenseQubits = 13;

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& m);

}  // namespace paulikit
