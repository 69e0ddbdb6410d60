#include "paulikit/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace paulikit {

namespace {

// weight * (-i)^k for k in 0..3, by component swaps and negations only.
std::complex<double> rotate_seed(std::complex<double> w, unsigned k) {
  switch (k & 3u) {
    case 0: return w;
    case 1: return {w.imag(), -w.real()};   // -i * w
    case 2: return {-w.real(), -w.imag()};  // -1 * w
    default: return {-w.imag(), w.real()};  //  i * w
  }
}

void fill_columns(std::vector<std::uint64_t>& columns, const PauliString& x) {
  columns[0] = x.y_mask();
  for (std::size_t l = 0; l < x.size(); ++l) {
    const std::uint64_t step = std::uint64_t{1} << l;
    // +2^l when factor l is diagonal, -2^l otherwise (two's complement add).
    const std::uint64_t delta = y_bit(x.factor(l)) ? ~step + 1 : step;
    for (std::uint64_t j = 0; j < step; ++j) {
      columns[step + j] = columns[j] + delta;
    }
  }
}

template <typename Value>
void fill_entries(std::vector<Value>& entries, const PauliString& x,
                  Value seed) {
  entries[0] = seed;
  for (std::size_t l = 0; l < x.size(); ++l) {
    const std::uint64_t step = std::uint64_t{1} << l;
    auto lower = entries.begin();
    auto upper = entries.begin() + static_cast<std::ptrdiff_t>(step);
    if (sign_flip(x.factor(l))) {
      std::transform(lower, upper, upper, std::negate<>{});
    } else {
      std::copy(lower, upper, upper);
    }
  }
}

}  // namespace

SparsePauliMatrix::SparsePauliMatrix(std::size_t qubits,
                                     std::vector<std::uint64_t> columns,
                                     std::vector<double> real_entries)
    : qubits_(qubits),
      real_storage_(true),
      columns_(std::move(columns)),
      real_(std::move(real_entries)) {
  if (columns_.size() != dim() || real_.size() != dim()) {
    throw Error(Errc::DimensionMismatch,
                "sparse storage arrays must have 2^n entries");
  }
}

SparsePauliMatrix::SparsePauliMatrix(std::size_t qubits,
                                     std::vector<std::uint64_t> columns,
                                     std::vector<std::complex<double>> entries)
    : qubits_(qubits),
      real_storage_(false),
      columns_(std::move(columns)),
      complex_(std::move(entries)) {
  if (columns_.size() != dim() || complex_.size() != dim()) {
    throw Error(Errc::DimensionMismatch,
                "sparse storage arrays must have 2^n entries");
  }
}

bool operator==(const SparsePauliMatrix& a, const SparsePauliMatrix& b) {
  if (a.qubits() != b.qubits()) return false;
  if (!std::ranges::equal(a.columns(), b.columns())) return false;
  if (a.real_valued() && b.real_valued()) {
    return std::ranges::equal(a.real_entries(), b.real_entries());
  }
  for (std::uint64_t j = 0; j < a.dim(); ++j) {
    if (a.entry(j) != b.entry(j)) return false;
  }
  return true;
}

bool approx_equal(const SparsePauliMatrix& a, const SparsePauliMatrix& b,
                  double tol) {
  if (a.qubits() != b.qubits()) return false;
  if (!std::ranges::equal(a.columns(), b.columns())) return false;
  for (std::uint64_t j = 0; j < a.dim(); ++j) {
    if (std::abs(a.entry(j) - b.entry(j)) > tol) return false;
  }
  return true;
}

SparsePauliMatrix compose(const PauliString& x, std::complex<double> weight) {
  if (weight == 0.0) {
    throw Error(Errc::ZeroWeight, "weight must be nonzero");
  }

  const std::uint64_t dim = std::uint64_t{1} << x.size();
  std::vector<std::uint64_t> columns(dim);
  fill_columns(columns, x);

  const std::complex<double> seed =
      rotate_seed(weight, static_cast<unsigned>(x.y_count() % 4));
  if (seed.imag() == 0.0) {
    std::vector<double> entries(dim);
    fill_entries(entries, x, seed.real());
    return SparsePauliMatrix(x.size(), std::move(columns), std::move(entries));
  }
  std::vector<std::complex<double>> entries(dim);
  fill_entries(entries, x, seed);
  return SparsePauliMatrix(x.size(), std::move(columns), std::move(entries));
}

SparsePauliMatrix compose_diagonal(const PauliString& x, double weight) {
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    if (y_bit(x.axis(pos)) != 0) {
      throw Error(Errc::NonDiagonalAxis,
                  std::string("non-diagonal axis '") + pauli_char(x.axis(pos)) +
                      "' at position " + std::to_string(pos));
    }
  }
  if (weight == 0.0) {
    throw Error(Errc::ZeroWeight, "weight must be nonzero");
  }

  const std::uint64_t dim = std::uint64_t{1} << x.size();
  std::vector<std::uint64_t> columns(dim);
  std::iota(columns.begin(), columns.end(), std::uint64_t{0});

  std::vector<double> entries(dim);
  fill_entries(entries, x, weight);
  return SparsePauliMatrix(x.size(), std::move(columns), std::move(entries));
}

DenseMatrix to_dense(const SparsePauliMatrix& p) {
  if (p.qubits() > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "n = " + std::to_string(p.qubits()) +
                    " is too large for dense output (max " +
                    std::to_string(kMaxDenseQubits) + ")");
  }
  DenseMatrix out(p.dim());
  for (std::uint64_t j = 0; j < p.dim(); ++j) {
    out.at(j, p.column(j)) = p.entry(j);
  }
  return out;
}

}  // namespace paulikit
