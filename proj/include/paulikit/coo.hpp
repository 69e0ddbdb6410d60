#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "paulikit/dense.hpp"

namespace paulikit {

struct Triplet {
  std::uint64_t row;
  std::uint64_t col;
  std::complex<double> value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// General sparse matrix in coordinate form, triplets sorted by (row, col)
/// with unique coordinates. Accumulation target for weighted Pauli sums and
/// string exponentials.
class CooMatrix {
 public:
  CooMatrix(std::uint64_t dim, std::vector<Triplet> triplets);

  std::uint64_t dim() const noexcept { return dim_; }
  std::size_t qubits() const noexcept { return qubits_; }
  std::span<const Triplet> triplets() const { return triplets_; }

 private:
  std::uint64_t dim_;
  std::size_t qubits_;
  std::vector<Triplet> triplets_;
};

DenseMatrix to_dense(const CooMatrix& m);

}  // namespace paulikit
