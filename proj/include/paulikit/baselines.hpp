#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "paulikit/dense.hpp"
#include "paulikit/pauli.hpp"
#include "paulikit/sparse.hpp"

namespace paulikit {

// Row-major 2x2 matrix of a single Pauli operator.
const std::array<std::complex<double>, 4>& pauli_matrix(Pauli p);

/// Textbook left-fold Kronecker product, every block product computed
/// directly (zeros included). Reference implementation and benchmark rival.
DenseMatrix kron_naive(const PauliString& x);

/// The single-site factor I^(n-site-1) (x) sigma_axis (x) I^site, built by
/// composing an all-identity string with one substituted position.
SparsePauliMatrix sigma_factor(Pauli axis, std::size_t site, std::size_t n);

/// Mixed-product evaluation: the ordered product of the n single-site
/// factors, multiplied as permutation-structured sparse matrices and
/// rendered dense at the end.
DenseMatrix kron_mixed(const PauliString& x);

/// Bottom-up pairwise combination: adjacent factors are paired left to
/// right at every level; on an odd count the leading factor stays unpaired.
/// Intermediates stay sparse.
DenseMatrix kron_tree(const PauliString& x);

// Permutation-structured kernels used by the mixed and tree routines.
SparsePauliMatrix sparse_multiply(const SparsePauliMatrix& a,
                                  const SparsePauliMatrix& b);
SparsePauliMatrix sparse_kron(const SparsePauliMatrix& a,
                              const SparsePauliMatrix& b);

}  // namespace paulikit
