#include "paulikit/baselines.hpp"

#include <string>
#include <utility>
#include <vector>

namespace paulikit {

namespace {

using complexd = std::complex<double>;
constexpr complexd kI{0.0, 1.0};

const std::array<std::array<complexd, 4>, 4> kPauli2x2 = {{
    {complexd{1}, complexd{0}, complexd{0}, complexd{1}},    // I
    {complexd{0}, complexd{1}, complexd{1}, complexd{0}},    // X
    {complexd{0}, -kI, kI, complexd{0}},                     // Y
    {complexd{1}, complexd{0}, complexd{0}, complexd{-1}},   // Z
}};

void check_dense_bound(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "n = " + std::to_string(n) +
                    " is too large for dense output (max " +
                    std::to_string(kMaxDenseQubits) + ")");
  }
}

// C = A (x) B for a 2x2 right factor, every block product done directly.
DenseMatrix kron_dense_2x2(const DenseMatrix& a,
                           const std::array<complexd, 4>& b) {
  DenseMatrix c(a.dim() * 2);
  for (std::uint64_t p = 0; p < a.dim(); ++p) {
    for (std::uint64_t r = 0; r < a.dim(); ++r) {
      const complexd apr = a.at(p, r);
      c.at(2 * p + 0, 2 * r + 0) = apr * b[0];
      c.at(2 * p + 0, 2 * r + 1) = apr * b[1];
      c.at(2 * p + 1, 2 * r + 0) = apr * b[2];
      c.at(2 * p + 1, 2 * r + 1) = apr * b[3];
    }
  }
  return c;
}

SparsePauliMatrix single_axis(Pauli axis) {
  return compose(PauliString({axis}));
}

}  // namespace

const std::array<complexd, 4>& pauli_matrix(Pauli p) {
  return kPauli2x2[static_cast<std::size_t>(p)];
}

DenseMatrix kron_naive(const PauliString& x) {
  check_dense_bound(x.size());
  const auto& first = pauli_matrix(x.axis(0));
  DenseMatrix acc(2, {first[0], first[1], first[2], first[3]});
  for (std::size_t pos = 1; pos < x.size(); ++pos) {
    acc = kron_dense_2x2(acc, pauli_matrix(x.axis(pos)));
  }
  return acc;
}

SparsePauliMatrix sigma_factor(Pauli axis, std::size_t site, std::size_t n) {
  if (site >= n) {
    throw Error(Errc::IndexOutOfRange,
                "site " + std::to_string(site) + " out of range for n = " +
                    std::to_string(n));
  }
  std::vector<Pauli> axes(n, Pauli::I);
  axes[n - 1 - site] = axis;  // site counts from the right end of the label
  return compose(PauliString(std::move(axes)));
}

SparsePauliMatrix sparse_multiply(const SparsePauliMatrix& a,
                                  const SparsePauliMatrix& b) {
  if (a.qubits() != b.qubits()) {
    throw Error(Errc::DimensionMismatch, "factor dimensions differ");
  }
  const std::uint64_t dim = a.dim();
  std::vector<std::uint64_t> columns(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    columns[j] = b.column(a.column(j));
  }
  if (a.real_valued() && b.real_valued()) {
    auto va = a.real_entries();
    auto vb = b.real_entries();
    std::vector<double> entries(dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
      entries[j] = va[j] * vb[a.column(j)];
    }
    return SparsePauliMatrix(a.qubits(), std::move(columns),
                             std::move(entries));
  }
  std::vector<complexd> entries(dim);
  for (std::uint64_t j = 0; j < dim; ++j) {
    entries[j] = a.entry(j) * b.entry(a.column(j));
  }
  return SparsePauliMatrix(a.qubits(), std::move(columns), std::move(entries));
}

SparsePauliMatrix sparse_kron(const SparsePauliMatrix& a,
                              const SparsePauliMatrix& b) {
  const std::size_t qubits = a.qubits() + b.qubits();
  if (qubits > PauliString::kMaxLength) {
    throw Error(Errc::NTooLarge, "combined length exceeds the bound of " +
                                     std::to_string(PauliString::kMaxLength));
  }
  const std::uint64_t dim_b = b.dim();
  std::vector<std::uint64_t> columns(a.dim() * dim_b);
  for (std::uint64_t ja = 0; ja < a.dim(); ++ja) {
    const std::uint64_t col_base = a.column(ja) * dim_b;
    for (std::uint64_t jb = 0; jb < dim_b; ++jb) {
      columns[ja * dim_b + jb] = col_base + b.column(jb);
    }
  }
  if (a.real_valued() && b.real_valued()) {
    auto va = a.real_entries();
    auto vb = b.real_entries();
    std::vector<double> entries(a.dim() * dim_b);
    for (std::uint64_t ja = 0; ja < a.dim(); ++ja) {
      for (std::uint64_t jb = 0; jb < dim_b; ++jb) {
        entries[ja * dim_b + jb] = va[ja] * vb[jb];
      }
    }
    return SparsePauliMatrix(qubits, std::move(columns), std::move(entries));
  }
  std::vector<complexd> entries(a.dim() * dim_b);
  for (std::uint64_t ja = 0; ja < a.dim(); ++ja) {
    for (std::uint64_t jb = 0; jb < dim_b; ++jb) {
      entries[ja * dim_b + jb] = a.entry(ja) * b.entry(jb);
    }
  }
  return SparsePauliMatrix(qubits, std::move(columns), std::move(entries));
}

DenseMatrix kron_mixed(const PauliString& x) {
  check_dense_bound(x.size());
  const std::size_t n = x.size();
  SparsePauliMatrix acc = sigma_factor(x.axis(0), n - 1, n);
  for (std::size_t pos = 1; pos < n; ++pos) {
    acc = sparse_multiply(acc, sigma_factor(x.axis(pos), n - 1 - pos, n));
  }
  return to_dense(acc);
}

DenseMatrix kron_tree(const PauliString& x) {
  check_dense_bound(x.size());
  std::vector<SparsePauliMatrix> level;
  level.reserve(x.size());
  for (std::size_t pos = 0; pos < x.size(); ++pos) {
    level.push_back(single_axis(x.axis(pos)));
  }
  while (level.size() > 1) {
    std::vector<SparsePauliMatrix> next;
    next.reserve(level.size() / 2 + 1);
    std::size_t begin = 0;
    if (level.size() % 2 == 1) {
      // odd count: the leading factor rides up unpaired
      next.push_back(std::move(level[0]));
      begin = 1;
    }
    for (std::size_t i = begin; i + 1 < level.size(); i += 2) {
      next.push_back(sparse_kron(level[i], level[i + 1]));
    }
    level = std::move(next);
  }
  return to_dense(level[0]);
}

}  // namespace paulikit
