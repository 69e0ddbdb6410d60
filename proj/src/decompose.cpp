#include "paulikit/decompose.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "paulikit/error.hpp"
#include "paulikit/parallel.hpp"
#include "paulikit/sparse.hpp"

namespace paulikit {

namespace {

// Candidate ordinal -> string, base-4 digits big-endian so that ascending
// ordinals enumerate labels in lexicographic order (I < X < Y < Z).
PauliString string_from_base4(std::uint64_t ordinal, std::size_t n) {
  std::vector<Pauli> axes(n);
  for (std::size_t pos = n; pos-- > 0;) {
    axes[pos] = static_cast<Pauli>(ordinal & 3u);
    ordinal >>= 2;
  }
  return PauliString(std::move(axes));
}

// Candidate ordinal -> {I,Z} string, one bit per position, again big-endian
// so ascending ordinals stay lexicographic (I < Z).
PauliString string_from_zmask(std::uint64_t ordinal, std::size_t n) {
  std::vector<Pauli> axes(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const bool z = (ordinal >> (n - 1 - pos)) & 1u;
    axes[pos] = z ? Pauli::Z : Pauli::I;
  }
  return PauliString(std::move(axes));
}

}  // namespace

std::string_view to_string(MatrixClass c) {
  switch (c) {
    case MatrixClass::NonHermitian: return "nonhermitian";
    case MatrixClass::Hermitian: return "hermitian";
    case MatrixClass::Symmetric: return "symmetric";
    case MatrixClass::Diagonal: return "diagonal";
  }
  return "nonhermitian";
}

std::optional<MatrixClass> matrix_class_from_string(std::string_view name) {
  if (name == "nonhermitian") return MatrixClass::NonHermitian;
  if (name == "hermitian") return MatrixClass::Hermitian;
  if (name == "symmetric") return MatrixClass::Symmetric;
  if (name == "diagonal") return MatrixClass::Diagonal;
  return std::nullopt;
}

MatrixClass classify_matrix(const DenseMatrix& h, double tol) {
  const std::uint64_t d = h.dim();
  bool diagonal = true;
  bool symmetric = true;
  bool hermitian = true;
  for (std::uint64_t r = 0; r < d; ++r) {
    if (std::abs(h.at(r, r).imag()) > tol) hermitian = false;
    for (std::uint64_t c = r + 1; c < d; ++c) {
      const std::complex<double> upper = h.at(r, c);
      const std::complex<double> lower = h.at(c, r);
      if (std::abs(upper) > tol || std::abs(lower) > tol) diagonal = false;
      if (std::abs(upper - lower) > tol) symmetric = false;
      if (std::abs(upper - std::conj(lower)) > tol) hermitian = false;
    }
  }
  if (diagonal) return MatrixClass::Diagonal;
  if (symmetric) return MatrixClass::Symmetric;
  if (hermitian) return MatrixClass::Hermitian;
  return MatrixClass::NonHermitian;
}

std::complex<double> pauli_coefficient(const DenseMatrix& h,
                                       const PauliString& x) {
  if (x.size() != h.qubits()) {
    throw Error(Errc::DimensionMismatch,
                "pauli_coefficient: string has " + std::to_string(x.size()) +
                    " factors but the matrix has " +
                    std::to_string(h.qubits()) + " qubits");
  }
  const SparsePauliMatrix p = x.diagonal() ? compose_diagonal(x) : compose(x);
  const std::uint64_t d = p.dim();
  const auto columns = p.columns();
  std::complex<double> acc = 0.0;
  if (p.real_valued()) {
    const auto entries = p.real_entries();
    for (std::uint64_t j = 0; j < d; ++j) {
      acc += entries[j] * h.at(columns[j], j);
    }
  } else {
    const auto entries = p.complex_entries();
    for (std::uint64_t j = 0; j < d; ++j) {
      acc += entries[j] * h.at(columns[j], j);
    }
  }
  return acc / static_cast<double>(d);
}

DecomposeResult decompose_full(const DenseMatrix& h,
                               const DecomposeOptions& options) {
  if (h.qubits() > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "decompose: " + std::to_string(h.qubits()) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(kMaxDenseQubits));
  }
  const std::size_t n = h.qubits();
  const MatrixClass cls = options.force_class ? *options.force_class
                                              : classify_matrix(h, options.tol);

  // Candidate space: a diagonal matrix only meets the 2^n {I,Z} strings; a
  // symmetric one walks all 4^n but skips the odd-y_count ones up front.
  const bool diagonal_only = cls == MatrixClass::Diagonal;
  const bool skip_odd_y = cls == MatrixClass::Symmetric;
  const std::uint64_t total = std::uint64_t{1} << (diagonal_only ? n : 2 * n);

  unsigned threads = 1;
  if (options.parallel) {
    threads = static_cast<unsigned>(
        std::clamp<std::uint64_t>(max_worker_threads(), 1, total));
  }

  // Per-chunk output; chunks are contiguous ordinal ranges, so concatenating
  // them in order preserves the lexicographic enumeration and the term map
  // is identical to the sequential one.
  struct Chunk {
    std::vector<std::pair<std::string, std::complex<double>>> kept;
    std::uint64_t evaluated = 0;
    std::uint64_t skipped = 0;
  };
  std::vector<Chunk> chunks(threads);

  const auto work = [&](std::uint64_t lo, std::uint64_t hi, Chunk& out) {
    for (std::uint64_t ordinal = lo; ordinal < hi; ++ordinal) {
      const PauliString x = diagonal_only ? string_from_zmask(ordinal, n)
                                          : string_from_base4(ordinal, n);
      if (skip_odd_y && x.y_count() % 2 != 0) {
        ++out.skipped;
        continue;
      }
      ++out.evaluated;
      const std::complex<double> w = pauli_coefficient(h, x);
      if (std::abs(w) > options.prune) {
        out.kept.emplace_back(x.label(), w);
      }
    }
  };

  if (threads == 1) {
    work(0, total, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t base = total / threads;
    const std::uint64_t extra = total % threads;
    std::uint64_t lo = 0;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t hi = lo + base + (t < extra ? 1 : 0);
      pool.emplace_back(work, lo, hi, std::ref(chunks[t]));
      lo = hi;
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  DecomposeResult result;
  result.matrix_class = cls;
  result.threads = threads;
  result.sum.qubits = n;
  for (Chunk& chunk : chunks) {
    result.evaluated += chunk.evaluated;
    result.skipped += chunk.skipped;
    for (auto& [label, w] : chunk.kept) {
      result.sum.terms.emplace_hint(result.sum.terms.end(), std::move(label),
                                    w);
    }
  }
  return result;
}

PauliSum decompose(const DenseMatrix& h, const DecomposeOptions& options) {
  return decompose_full(h, options).sum;
}

DenseMatrix recompose(const PauliSum& s) {
  if (s.qubits == 0) {
    throw Error(Errc::EmptyString, "recompose: sum has zero qubits");
  }
  if (s.qubits > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "recompose: " + std::to_string(s.qubits) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(kMaxDenseQubits));
  }
  DenseMatrix out(std::uint64_t{1} << s.qubits);
  for (const auto& [label, w] : s.terms) {
    const PauliString x = PauliString::parse(label);
    if (x.size() != s.qubits) {
      throw Error(Errc::LengthMismatch,
                  "recompose: term '" + label + "' has " +
                      std::to_string(x.size()) + " factors, expected " +
                      std::to_string(s.qubits));
    }
    if (w == 0.0) continue;  // exact zeros contribute nothing
    const SparsePauliMatrix p = compose(x, w);
    for (std::uint64_t j = 0; j < p.dim(); ++j) {
      out.at(j, p.column(j)) += p.entry(j);
    }
  }
  return out;
}

}  // namespace paulikit
