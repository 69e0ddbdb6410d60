#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "checks.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "paulikit/bench.hpp"
#include "paulikit/error.hpp"
#include "paulikit/hamiltonian.hpp"

using namespace paulikit;
using checks::code_of;
using cplx = std::complex<double>;

namespace {

std::vector<std::pair<PauliString, cplx>> ising_terms(
    const IsingCoefficients& c) {
  const std::size_t n = c.size();
  std::vector<std::pair<PauliString, cplx>> terms;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Pauli> axes(n, Pauli::I);
    axes[i] = Pauli::Z;
    terms.emplace_back(PauliString(std::move(axes)), c.alpha()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Pauli> axes(n, Pauli::I);
      axes[i] = Pauli::Z;
      axes[j] = Pauli::Z;
      terms.emplace_back(PauliString(std::move(axes)), c.coupling(i, j));
    }
  }
  return terms;
}

}  // namespace

TEST_CASE("coupling storage is strictly upper and round-trips") {
  IsingCoefficients c(std::vector<double>{1.0, 2.0, 3.0, 4.0});
  double value = 0.25;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      c.set_coupling(i, j, value);
      value += 1.0;
    }
  }
  value = 0.25;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      REQUIRE(c.coupling(i, j) == value);
      value += 1.0;
    }
  }

  CHECK(code_of([] { IsingCoefficients(std::vector<double>{}); }) ==
        Errc::EmptyTermList);
  CHECK(code_of([&] { c.coupling(1, 1); }) == Errc::BetaShapeMismatch);
  CHECK(code_of([&] { c.coupling(2, 1); }) == Errc::BetaShapeMismatch);
  CHECK(code_of([&] { c.set_coupling(0, 4, 1.0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] {
    IsingCoefficients(std::vector<double>(31, 0.0));
  }) == Errc::NTooLarge);
}

TEST_CASE("hand-checked Ising diagonals") {
  CHECK(build_ising(IsingCoefficients({1.0})).values ==
        std::vector<double>{1.0, -1.0});

  IsingCoefficients zz({0.0, 0.0});
  zz.set_coupling(0, 1, 1.0);
  CHECK(build_ising(zz).values == std::vector<double>{1.0, -1.0, -1.0, 1.0});

  IsingCoefficients both({1.0, 2.0});
  both.set_coupling(0, 1, 3.0);
  CHECK(build_ising(both).values == std::vector<double>{6.0, -4.0, -2.0, 0.0});
}

TEST_CASE("Ising diagonals match the spin enumeration, any size") {
  std::mt19937_64 rng(79);
  for (std::size_t n = 1; n <= 8; ++n) {
    const IsingCoefficients c = bench::random_ising(n, rng);
    const DiagonalMatrix d = build_ising(c);
    REQUIRE(d.values.size() == (std::uint64_t{1} << n));
    for (std::uint64_t row = 0; row < d.dim(); ++row) {
      REQUIRE(std::abs(d.values[row] - oracles::ising_energy(c, row)) <=
              1e-12);
    }
  }
}

TEST_CASE("the Ising builder equals its weighted-sum expansion") {
  std::mt19937_64 rng(83);
  const IsingCoefficients c = bench::random_ising(4, rng);
  const auto terms = ising_terms(c);
  CHECK(max_abs_diff(to_dense(build_ising(c)),
                     to_dense(build_weighted_sum(terms))) <= 1e-12);
}

TEST_CASE("hand-checked weighted sums") {
  const std::vector<std::pair<PauliString, cplx>> z{
      {PauliString::parse("Z"), 2.0}};
  const CooMatrix zm = build_weighted_sum(z);
  REQUIRE(zm.triplets().size() == 2);
  CHECK(zm.triplets()[0] == Triplet{0, 0, 2.0});
  CHECK(zm.triplets()[1] == Triplet{1, 1, -2.0});

  // X + Z fills a full 2x2.
  const std::vector<std::pair<PauliString, cplx>> xz{
      {PauliString::parse("X"), 1.0}, {PauliString::parse("Z"), 1.0}};
  CHECK(to_dense(build_weighted_sum(xz)) ==
        oracles::make_dense(2, {1.0, 1.0, 1.0, -1.0}));

  // Cancelling terms leave explicit zeros rather than dropping structure.
  const std::vector<std::pair<PauliString, cplx>> cancel{
      {PauliString::parse("X"), 1.0}, {PauliString::parse("X"), -1.0}};
  const CooMatrix zero = build_weighted_sum(cancel);
  REQUIRE(zero.triplets().size() == 2);
  CHECK(zero.triplets()[0].value == 0.0);

  // Terms with weight exactly zero are skipped.
  const std::vector<std::pair<PauliString, cplx>> null{
      {PauliString::parse("X"), 0.0}};
  CHECK(build_weighted_sum(null).triplets().empty());
}

TEST_CASE("weighted sums agree with dense accumulation") {
  std::mt19937_64 rng(89);
  const std::size_t n = 3;
  std::vector<std::pair<PauliString, cplx>> terms;
  for (int k = 0; k < 6; ++k) {
    terms.emplace_back(bench::random_string(n, rng),
                       cplx{std::ldexp(static_cast<double>(rng() >> 11), -53),
                            std::ldexp(static_cast<double>(rng() >> 11), -53)});
  }
  DenseMatrix expected(std::uint64_t{1} << n);
  for (const auto& [x, w] : terms) {
    const DenseMatrix p = kron_naive(x);
    for (std::uint64_t r = 0; r < expected.dim(); ++r) {
      for (std::uint64_t c = 0; c < expected.dim(); ++c) {
        expected.at(r, c) += w * p.at(r, c);
      }
    }
  }
  CHECK(max_abs_diff(to_dense(build_weighted_sum(terms)), expected) <= 1e-12);
}

TEST_CASE("weighted sums reject bad inputs") {
  CHECK(code_of([] {
    build_weighted_sum(std::vector<std::pair<PauliString, cplx>>{});
  }) == Errc::EmptyTermList);
  CHECK(code_of([] {
    const std::vector<std::pair<PauliString, cplx>> mixed{
        {PauliString::parse("X"), 1.0}, {PauliString::parse("XX"), 1.0}};
    build_weighted_sum(mixed);
  }) == Errc::LengthMismatch);
}

TEST_CASE("exponential at theta = 0 is the identity") {
  const CooMatrix u = pauli_exponential(0.0, PauliString::parse("XY"));
  CHECK(to_dense(u) == oracles::dense_identity(4));
  CHECK(u.triplets().size() == 4);
}

TEST_CASE("exponentials match the eigendecomposition oracle") {
  std::mt19937_64 rng(97);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int draw = 0; draw < 5; ++draw) {
      const PauliString x = bench::random_string(n, rng);
      const double theta =
          (std::ldexp(static_cast<double>(rng() >> 11), -53) - 0.5) * 6.0;
      CHECK(max_abs_diff(to_dense(pauli_exponential(theta, x)),
                         oracles::exp_oracle(theta, x.label())) <= 1e-10);
    }
  }
  // Fixed spot check.
  CHECK(max_abs_diff(to_dense(pauli_exponential(0.3, PauliString::parse("12"))),
                     oracles::exp_oracle(0.3, "XY")) <= 1e-12);
}

TEST_CASE("exponentials are unitary and invert at negated angles") {
  std::mt19937_64 rng(101);
  const PauliString x = bench::random_string(3, rng);
  const double theta = 1.234;
  const DenseMatrix u = to_dense(pauli_exponential(theta, x));
  CHECK(max_abs_diff(oracles::dense_mul(u, oracles::dense_adjoint(u)),
                     oracles::dense_identity(u.dim())) <= 1e-12);
  const DenseMatrix v = to_dense(pauli_exponential(-theta, x));
  CHECK(max_abs_diff(oracles::dense_mul(u, v),
                     oracles::dense_identity(u.dim())) <= 1e-12);
}

TEST_CASE("exponential sparsity: two entries per row, one when diagonal") {
  const CooMatrix off = pauli_exponential(0.7, PauliString::parse("XZ"));
  CHECK(off.triplets().size() == 8);
  const CooMatrix diag = pauli_exponential(0.7, PauliString::parse("ZZ"));
  CHECK(diag.triplets().size() == 4);
  for (const Triplet& t : diag.triplets()) {
    CHECK(t.row == t.col);
  }
}

TEST_CASE("diagonal matrices render densely") {
  const DiagonalMatrix d{1, {2.0, -3.0}};
  CHECK(to_dense(d) == oracles::make_dense(2, {2.0, 0.0, 0.0, -3.0}));
}
