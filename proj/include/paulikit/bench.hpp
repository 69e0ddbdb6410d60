#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "paulikit/decompose.hpp"
#include "paulikit/dense.hpp"
#include "paulikit/hamiltonian.hpp"
#include "paulikit/pauli.hpp"

namespace paulikit::bench {

enum class Suite { Compose, Decompose, Ising };

struct Config {
  std::size_t n_min = 2;
  std::size_t n_max = 6;
  std::size_t reps = 5;                // median over this many repetitions
  std::vector<std::string> methods;    // empty = all methods of the suite
  std::uint64_t seed = 12345;
  MatrixClass matrix_class = MatrixClass::NonHermitian;  // decompose suite
};

struct Record {
  std::string method;
  std::size_t n = 0;
  std::size_t reps = 0;
  double median_seconds = 0.0;
  unsigned threads = 1;
};

const std::vector<std::string>& suite_methods(Suite suite);

// Runs one suite over [n_min, n_max] x methods. Inputs are regenerated per
// repetition from a seed derived from (seed, suite, method, n, rep), so two
// runs with the same seed see identical inputs. Timing excludes generation
// and I/O; the value recorded is the median wall-clock, except for the pc
// method which is timed separately on even- and odd-y_count strings and
// averaged.
std::vector<Record> run(Suite suite, const Config& config);

// CSV with '#' comment lines (caveat, seed, thread cap) then the header
// "method,n,reps,median_seconds,threads".
void write_csv(std::ostream& out, Suite suite, const Config& config,
               const std::vector<Record>& records);

// Deterministic input generators, shared with the test suites.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c, std::uint64_t d);
PauliString random_string(std::size_t n, std::mt19937_64& rng);
PauliString random_string_with_parity(std::size_t n, bool odd_y,
                                      std::mt19937_64& rng);
PauliString random_diagonal_string(std::size_t n, std::mt19937_64& rng);
DenseMatrix random_matrix(MatrixClass cls, std::size_t n,
                          std::mt19937_64& rng);
IsingCoefficients random_ising(std::size_t n, std::mt19937_64& rng);

}  // namespace paulikit::bench
