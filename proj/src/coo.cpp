#include "paulikit/coo.hpp"

#include <bit>
#include <string>

namespace paulikit {

CooMatrix::CooMatrix(std::uint64_t dim, std::vector<Triplet> triplets)
    : dim_(dim), triplets_(std::move(triplets)) {
  if (dim_ < 2 || !std::has_single_bit(dim_)) {
    throw Error(Errc::NotPowerOfTwo,
                "matrix dimension " + std::to_string(dim_) +
                    " is not a power of two >= 2");
  }
  qubits_ = static_cast<std::size_t>(std::countr_zero(dim_));
  for (std::size_t i = 0; i < triplets_.size(); ++i) {
    const Triplet& t = triplets_[i];
    if (t.row >= dim_ || t.col >= dim_) {
      throw Error(Errc::IndexOutOfRange, "triplet coordinate out of range");
    }
    if (i > 0) {
      const Triplet& prev = triplets_[i - 1];
      if (prev.row > t.row || (prev.row == t.row && prev.col >= t.col)) {
        throw Error(Errc::IndexOutOfRange,
                    "triplets must be sorted by (row, col) and unique");
      }
    }
  }
}

DenseMatrix to_dense(const CooMatrix& m) {
  if (m.qubits() > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "n = " + std::to_string(m.qubits()) +
                    " is too large for dense output (max " +
                    std::to_string(kMaxDenseQubits) + ")");
  }
  DenseMatrix out(m.dim());
  for (const Triplet& t : m.triplets()) {
    out.at(t.row, t.col) += t.value;
  }
  return out;
}

}  // namespace paulikit
