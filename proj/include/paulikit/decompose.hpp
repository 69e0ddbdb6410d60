#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "paulikit/dense.hpp"
#include "paulikit/pauli.hpp"

namespace paulikit {

// Structure classes ordered by pruning strength. A matrix satisfying several
// relations reports the most specific one: Diagonal > Symmetric > Hermitian.
enum class MatrixClass { NonHermitian, Hermitian, Symmetric, Diagonal };

std::string_view to_string(MatrixClass c);
std::optional<MatrixClass> matrix_class_from_string(std::string_view name);

/// A Hamiltonian in the Pauli basis: label -> complex weight, labels all of
/// length `qubits`, kept sorted by the map.
struct PauliSum {
  std::size_t qubits = 0;
  std::map<std::string, std::complex<double>> terms;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;
};

// Most specific class whose defining relation holds entrywise within tol.
MatrixClass classify_matrix(const DenseMatrix& h, double tol = 1e-12);

/// Projection coefficient of h onto P(x): a single pass over the 2^n stored
/// entries of the composed string, never a dense trace. Diagonal strings go
/// through the diagonal composer.
std::complex<double> pauli_coefficient(const DenseMatrix& h,
                                       const PauliString& x);

struct DecomposeOptions {
  double tol = 1e-12;    // classification tolerance, absolute per entry
  double prune = 0.0;    // drop terms with |weight| <= prune
  bool parallel = false;
  std::optional<MatrixClass> force_class;  // bypass classification
};

struct DecomposeResult {
  PauliSum sum;
  MatrixClass matrix_class = MatrixClass::NonHermitian;
  // Candidate strings whose coefficient was computed / skipped in advance
  // by the class rule. evaluated + skipped == 4^n except for the diagonal
  // class, where only the 2^n {I,Z} strings are enumerated at all.
  std::uint64_t evaluated = 0;
  std::uint64_t skipped = 0;
  unsigned threads = 1;
};

/// Expand h in the Pauli basis. Candidate strings run in lexicographic label
/// order: {I,Z}^n for a diagonal matrix, even-y_count strings for a
/// symmetric one, all 4^n otherwise. The term map is identical whether or
/// not the work is parallelized.
DecomposeResult decompose_full(const DenseMatrix& h,
                               const DecomposeOptions& options = {});
PauliSum decompose(const DenseMatrix& h, const DecomposeOptions& options = {});

DenseMatrix recompose(const PauliSum& s);

}  // namespace paulikit
