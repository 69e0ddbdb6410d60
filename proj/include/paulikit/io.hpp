#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "paulikit/decompose.hpp"
#include "paulikit/dense.hpp"

namespace paulikit::io {

// Shortest decimal representation that round-trips through a double.
std::string format_double(double v);

// Complex token: "<re>" when the imaginary part is zero, otherwise
// "<re><sign><|im|>i" (e.g. "1.5", "0-2i", "-3+0.5i").
std::string format_complex(std::complex<double> v);
std::complex<double> parse_complex(std::string_view token);

// Matrix file: header "dim <d>", then d lines of d complex tokens.
DenseMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const DenseMatrix& m);

// Pauli sum file: one "<label> <re> <im>" line per term, sorted by label.
PauliSum read_pauli_sum(std::istream& in);
void write_pauli_sum(std::ostream& out, const PauliSum& s);

}  // namespace paulikit::io
