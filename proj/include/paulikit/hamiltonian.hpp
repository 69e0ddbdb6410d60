#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "paulikit/coo.hpp"
#include "paulikit/pauli.hpp"
#include "paulikit/sparse.hpp"

namespace paulikit {

/// Weights of the diagonal two-body Hamiltonian
///   sum_i alpha[i] Z_i + sum_{i<j} beta(i,j) Z_i Z_j,
/// where position i counts from the left of the label. beta is strictly
/// upper triangular; a symmetric coupling matrix must be folded by the
/// caller before construction.
class IsingCoefficients {
 public:
  explicit IsingCoefficients(std::vector<double> alpha);

  static IsingCoefficients from_triplets(
      std::vector<double> alpha,
      std::span<const std::tuple<std::size_t, std::size_t, double>> couplings);

  std::size_t size() const noexcept { return alpha_.size(); }
  const std::vector<double>& alpha() const noexcept { return alpha_; }

  double coupling(std::size_t i, std::size_t j) const;
  void set_coupling(std::size_t i, std::size_t j, double value);

 private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  std::vector<double> alpha_;
  std::vector<double> beta_;  // packed strictly-upper, row-major
};

/// Diagonal operator stored as its length-2^n diagonal.
struct DiagonalMatrix {
  std::size_t qubits = 0;
  std::vector<double> values;

  std::uint64_t dim() const noexcept { return std::uint64_t{1} << qubits; }
  friend bool operator==(const DiagonalMatrix&, const DiagonalMatrix&) = default;
};

DenseMatrix to_dense(const DiagonalMatrix& d);

/// Sum of weighted strings, each composed with its weight folded into the
/// seed; duplicate coordinates are summed. All strings must share one
/// length. Zero-weight terms contribute nothing and are skipped.
CooMatrix build_weighted_sum(
    std::span<const std::pair<PauliString, std::complex<double>>> terms);

/// Term-by-term diagonal composition of the Ising form, each term going
/// through the diagonal composer with its weight as the seed.
DiagonalMatrix build_ising(const IsingCoefficients& c);

/// exp(-i theta P(x)) = cos(theta) I - i sin(theta) P(x), at most two
/// entries per row (one when P(x) is diagonal: the two patterns coincide).
CooMatrix pauli_exponential(double theta, const PauliString& x);

}  // namespace paulikit
