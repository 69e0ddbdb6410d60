#include "paulikit/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "paulikit/error.hpp"

namespace paulikit::io {

namespace {

// Signed decimal (or inf/nan) with an optional leading '+', consumed fully.
double parse_double_token(std::string_view text, const std::string& context) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') {
    body.remove_prefix(1);
  }
  double value = 0.0;
  const char* end = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(body.data(), end, value);
  if (ec != std::errc{} || ptr != end || body.empty()) {
    throw Error(Errc::MalformedFile,
                context + ": cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // sign-flipped entries may carry a negative zero
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_complex(std::complex<double> v) {
  std::string out = format_double(v.real());
  const double im = v.imag();
  if (im != 0.0) {
    out += im < 0.0 ? '-' : '+';
    out += format_double(std::abs(im));
    out += 'i';
  }
  return out;
}

std::complex<double> parse_complex(std::string_view token) {
  if (token.empty()) {
    throw Error(Errc::MalformedFile, "complex token is empty");
  }
  const std::string shown(token);
  if (token.back() != 'i') {
    return {parse_double_token(token, "complex token '" + shown + "'"), 0.0};
  }

  // "<re><sign><|im|>i": the split sign is a +/- past position 0 that does
  // not continue an exponent.
  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t pos = 1; pos < body.size(); ++pos) {
    const char ch = body[pos];
    if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' &&
        body[pos - 1] != 'E') {
      if (split != std::string_view::npos) {
        throw Error(Errc::MalformedFile,
                    "complex token '" + shown + "' has more than one part sign");
      }
      split = pos;
    }
  }
  if (split == std::string_view::npos) {
    throw Error(Errc::MalformedFile,
                "complex token '" + shown +
                    "' lacks a sign before the imaginary part");
  }
  const std::string_view mag = body.substr(split + 1);
  if (!mag.empty() && (mag.front() == '+' || mag.front() == '-')) {
    throw Error(Errc::MalformedFile,
                "complex token '" + shown +
                    "' must carry the imaginary sign only once");
  }
  const double re = parse_double_token(body.substr(0, split),
                                       "complex token '" + shown + "'");
  const double im =
      parse_double_token(mag, "complex token '" + shown + "'");
  return {re, body[split] == '-' ? -im : im};
}

DenseMatrix read_matrix(std::istream& in) {
  std::string tag;
  if (!(in >> tag) || tag != "dim") {
    throw Error(Errc::MalformedFile, "matrix file must start with 'dim <d>'");
  }
  std::string dim_token;
  if (!(in >> dim_token)) {
    throw Error(Errc::MalformedFile, "matrix file is missing the dimension");
  }
  std::uint64_t dim = 0;
  const char* end = dim_token.data() + dim_token.size();
  const auto [ptr, ec] = std::from_chars(dim_token.data(), end, dim);
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::MalformedFile,
                "matrix dimension '" + dim_token + "' is not an integer");
  }
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw Error(Errc::NotPowerOfTwo,
                "matrix dimension " + std::to_string(dim) +
                    " is not a power of two >= 2");
  }
  if (static_cast<std::size_t>(std::countr_zero(dim)) > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "matrix dimension " + std::to_string(dim) +
                    " exceeds the dense limit of 2^" +
                    std::to_string(kMaxDenseQubits));
  }

  std::vector<std::complex<double>> values;
  values.reserve(dim * dim);
  std::string token;
  for (std::uint64_t k = 0; k < dim * dim; ++k) {
    if (!(in >> token)) {
      throw Error(Errc::MalformedFile,
                  "matrix file ends after " + std::to_string(k) + " of " +
                      std::to_string(dim * dim) + " entries");
    }
    values.push_back(parse_complex(token));
  }
  if (in >> token) {
    throw Error(Errc::MalformedFile,
                "matrix file has trailing content '" + token + "'");
  }
  return DenseMatrix(dim, std::move(values));
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << "dim " << m.dim() << '\n';
  for (std::uint64_t r = 0; r < m.dim(); ++r) {
    for (std::uint64_t c = 0; c < m.dim(); ++c) {
      if (c) out << ' ';
      out << format_complex(m.at(r, c));
    }
    out << '\n';
  }
}

PauliSum read_pauli_sum(std::istream& in) {
  PauliSum s;
  std::string label;
  std::string re_token;
  std::string im_token;
  while (in >> label) {
    if (!(in >> re_token >> im_token)) {
      throw Error(Errc::MalformedFile,
                  "pauli sum line for '" + label +
                      "' must read '<label> <re> <im>'");
    }
    const PauliString x = PauliString::parse(label);
    if (s.terms.empty()) {
      s.qubits = x.size();
    } else if (x.size() != s.qubits) {
      throw Error(Errc::LengthMismatch,
                  "term '" + label + "' has " + std::to_string(x.size()) +
                      " factors, expected " + std::to_string(s.qubits));
    }
    const double re = parse_double_token(re_token, "term '" + label + "'");
    const double im = parse_double_token(im_token, "term '" + label + "'");
    if (!s.terms.emplace(x.label(), std::complex<double>(re, im)).second) {
      throw Error(Errc::MalformedFile,
                  "duplicate term '" + x.label() + "'");
    }
  }
  if (s.terms.empty()) {
    throw Error(Errc::MalformedFile, "pauli sum file has no terms");
  }
  return s;
}

void write_pauli_sum(std::ostream& out, const PauliSum& s) {
  for (const auto& [label, w] : s.terms) {
    out << label << ' ' << format_double(w.real()) << ' '
        << format_double(w.imag()) << '\n';
  }
}

}  // namespace paulikit::io
