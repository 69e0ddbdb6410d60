#include "paulikit/dense.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace paulikit {

namespace {

std::size_t checked_qubits(std::uint64_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(Errc::NotPowerOfTwo,
                "matrix dimension " + std::to_string(dim) +
                    " is not a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

DenseMatrix::DenseMatrix(std::uint64_t dim)
    : dim_(dim), qubits_(checked_qubits(dim)), values_(dim * dim) {}

DenseMatrix::DenseMatrix(std::uint64_t dim,
                         std::vector<std::complex<double>> values)
    : dim_(dim), qubits_(checked_qubits(dim)), values_(std::move(values)) {
  if (values_.size() != dim_ * dim_) {
    throw Error(Errc::NonSquare,
                "expected " + std::to_string(dim_ * dim_) + " entries for a " +
                    std::to_string(dim_) + "x" + std::to_string(dim_) +
                    " matrix, got " + std::to_string(values_.size()));
  }
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch, "matrix dimensions differ");
  }
  double worst = 0.0;
  auto va = a.values();
  auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    worst = std::max(worst, std::abs(va[i] - vb[i]));
  }
  return worst;
}

double frobenius_norm(const DenseMatrix& m) {
  double sum = 0.0;
  for (const auto& v : m.values()) {
    sum += std::norm(v);
  }
  return std::sqrt(sum);
}

}  // namespace paulikit
