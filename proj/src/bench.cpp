#include "paulikit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "paulikit/baselines.hpp"
#include "paulikit/error.hpp"
#include "paulikit/io.hpp"
#include "paulikit/parallel.hpp"
#include "paulikit/sparse.hpp"

namespace paulikit::bench {

namespace {

// Keeps the optimizer from discarding timed results.
volatile double g_sink = 0.0;

double uniform_pm1(std::mt19937_64& rng) {
  // 53 uniform bits -> [0, 1), mapped to [-1, 1). Avoids std distributions
  // so streams are identical across standard libraries.
  return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

double median_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid]
                            : 0.5 * (samples[mid - 1] + samples[mid]);
}

// Seconds per call. The inner iteration count is calibrated on the first
// call (doubling until the batch passes ~1 ms) and reused so every
// repetition measures the same amount of work.
template <class Op>
double timed_seconds(Op&& op, std::size_t& iters) {
  using clock = std::chrono::steady_clock;
  if (iters == 0) {
    iters = 1;
    for (;;) {
      const auto t0 = clock::now();
      for (std::size_t k = 0; k < iters; ++k) op();
      const double s = std::chrono::duration<double>(clock::now() - t0).count();
      if (s >= 1e-3 || iters >= (std::size_t{1} << 20)) return s / iters;
      iters *= 2;
    }
  }
  const auto t0 = clock::now();
  for (std::size_t k = 0; k < iters; ++k) op();
  const double s = std::chrono::duration<double>(clock::now() - t0).count();
  return s / iters;
}

std::size_t method_index(Suite suite, const std::string& method) {
  const auto& names = suite_methods(suite);
  const auto it = std::find(names.begin(), names.end(), method);
  if (it == names.end()) {
    throw Error(Errc::UnknownMethod,
                "bench: method '" + method + "' is not in this suite");
  }
  return static_cast<std::size_t>(it - names.begin());
}

std::mt19937_64 rep_rng(const Config& config, Suite suite, std::size_t method,
                        std::size_t n, std::uint64_t stream) {
  return std::mt19937_64(derive_seed(config.seed,
                                     static_cast<std::uint64_t>(suite), method,
                                     n, stream));
}

// Median over reps of composing freshly drawn strings of one y-parity.
double compose_parity_median(const Config& config, std::size_t method,
                             std::size_t n, bool odd_y) {
  std::vector<double> samples;
  samples.reserve(config.reps);
  std::size_t iters = 0;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    auto rng = rep_rng(config, Suite::Compose, method, n,
                       2 * rep + (odd_y ? 1 : 0));
    const PauliString x = random_string_with_parity(n, odd_y, rng);
    samples.push_back(timed_seconds(
        [&] {
          const SparsePauliMatrix p = compose(x);
          g_sink = g_sink + static_cast<double>(p.column(0)) +
                   p.entry(0).real() + p.entry(0).imag();
        },
        iters));
  }
  return median_of(std::move(samples));
}

Record run_compose_method(const Config& config, const std::string& method,
                          std::size_t n) {
  const std::size_t id = method_index(Suite::Compose, method);
  Record record{method, n, config.reps, 0.0, 1};

  if (method == "pc") {
    // Real-valued (even y-count) and imaginary-valued (odd) strings timed
    // separately, then averaged.
    record.median_seconds = 0.5 * (compose_parity_median(config, id, n, false) +
                                   compose_parity_median(config, id, n, true));
    return record;
  }

  std::vector<double> samples;
  samples.reserve(config.reps);
  std::size_t iters = 0;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    auto rng = rep_rng(config, Suite::Compose, id, n, rep);
    if (method == "pdc") {
      const PauliString x = random_diagonal_string(n, rng);
      samples.push_back(timed_seconds(
          [&] {
            const SparsePauliMatrix p = compose_diagonal(x);
            g_sink = g_sink + p.real_entries()[0];
          },
          iters));
      continue;
    }
    if (n > kMaxDenseQubits) {
      throw Error(Errc::NTooLargeForDense,
                  "bench: method '" + method + "' renders dense; n = " +
                      std::to_string(n) + " exceeds " +
                      std::to_string(kMaxDenseQubits));
    }
    const PauliString x = random_string(n, rng);
    if (method == "naive") {
      samples.push_back(timed_seconds(
          [&] { g_sink = g_sink + kron_naive(x).at(0, 0).real(); }, iters));
    } else if (method == "mixed") {
      samples.push_back(timed_seconds(
          [&] { g_sink = g_sink + kron_mixed(x).at(0, 0).real(); }, iters));
    } else {
      samples.push_back(timed_seconds(
          [&] { g_sink = g_sink + kron_tree(x).at(0, 0).real(); }, iters));
    }
  }
  record.median_seconds = median_of(std::move(samples));
  return record;
}

Record run_decompose_method(const Config& config, const std::string& method,
                            std::size_t n) {
  const std::size_t id = method_index(Suite::Decompose, method);
  Record record{method, n, config.reps, 0.0, 1};

  DecomposeOptions options;
  options.parallel = method == "decompose-pc-par";
  options.force_class = config.matrix_class;

  std::vector<double> samples;
  samples.reserve(config.reps);
  std::size_t iters = 0;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    auto rng = rep_rng(config, Suite::Decompose, id, n, rep);
    const DenseMatrix h = random_matrix(config.matrix_class, n, rng);
    samples.push_back(timed_seconds(
        [&] {
          const DecomposeResult result = decompose_full(h, options);
          record.threads = result.threads;
          g_sink = g_sink + static_cast<double>(result.sum.terms.size());
        },
        iters));
  }
  record.median_seconds = median_of(std::move(samples));
  return record;
}

Record run_ising_method(const Config& config, const std::string& method,
                        std::size_t n) {
  const std::size_t id = method_index(Suite::Ising, method);
  Record record{method, n, config.reps, 0.0, 1};

  std::vector<double> samples;
  samples.reserve(config.reps);
  std::size_t iters = 0;
  for (std::size_t rep = 0; rep < config.reps; ++rep) {
    auto rng = rep_rng(config, Suite::Ising, id, n, rep);
    const IsingCoefficients c = random_ising(n, rng);
    if (method == "ising-pdc") {
      samples.push_back(timed_seconds(
          [&] { g_sink = g_sink + build_ising(c).values[0]; }, iters));
      continue;
    }
    // Same operator assembled through the generic weighted-sum machinery;
    // the term list is prepared outside the timed region.
    std::vector<std::pair<PauliString, std::complex<double>>> terms;
    terms.reserve(n + n * (n - 1) / 2);
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
    samples.push_back(timed_seconds(
        [&] {
          const CooMatrix coo = build_weighted_sum(terms);
          g_sink = g_sink + (coo.triplets().empty()
                                 ? 0.0
                                 : coo.triplets()[0].value.real());
        },
        iters));
  }
  record.median_seconds = median_of(std::move(samples));
  return record;
}

}  // namespace

const std::vector<std::string>& suite_methods(Suite suite) {
  static const std::vector<std::string> compose_names{"pc", "pdc", "naive",
                                                      "mixed", "tree"};
  static const std::vector<std::string> decompose_names{"decompose-pc-seq",
                                                        "decompose-pc-par"};
  static const std::vector<std::string> ising_names{"ising-pdc",
                                                    "ising-weighted"};
  switch (suite) {
    case Suite::Compose: return compose_names;
    case Suite::Decompose: return decompose_names;
    case Suite::Ising: return ising_names;
  }
  return compose_names;
}

std::vector<Record> run(Suite suite, const Config& config) {
  if (config.n_min < 1 || config.n_min > config.n_max) {
    throw Error(Errc::InvalidRange,
                "bench: invalid n range " + std::to_string(config.n_min) +
                    ".." + std::to_string(config.n_max));
  }
  if (config.n_max > PauliString::kMaxLength) {
    throw Error(Errc::NTooLarge,
                "bench: n = " + std::to_string(config.n_max) + " exceeds " +
                    std::to_string(PauliString::kMaxLength));
  }
  if (config.reps < 1) {
    throw Error(Errc::InvalidRange, "bench: reps must be >= 1");
  }
  const std::vector<std::string>& methods =
      config.methods.empty() ? suite_methods(suite) : config.methods;
  for (const std::string& method : methods) {
    method_index(suite, method);  // validate up front, before any timing
  }

  std::vector<Record> records;
  records.reserve(methods.size() * (config.n_max - config.n_min + 1));
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    for (const std::string& method : methods) {
      switch (suite) {
        case Suite::Compose:
          records.push_back(run_compose_method(config, method, n));
          break;
        case Suite::Decompose:
          records.push_back(run_decompose_method(config, method, n));
          break;
        case Suite::Ising:
          records.push_back(run_ising_method(config, method, n));
          break;
      }
    }
  }
  return records;
}

void write_csv(std::ostream& out, Suite suite, const Config& config,
               const std::vector<Record>& records) {
  const char* suite_name = suite == Suite::Compose     ? "compose"
                           : suite == Suite::Decompose ? "decompose"
                                                       : "ising";
  out << "# in-process implementations only; timings are machine- and "
         "build-specific\n";
  out << "# suite=" << suite_name << " seed=" << config.seed
      << " reps=" << config.reps;
  if (suite == Suite::Decompose) {
    out << " class=" << to_string(config.matrix_class);
  }
  out << '\n';
  out << "# thread_cap=" << max_worker_threads()
      << " (set PAULIKIT_THREADS to pin)\n";
  out << "method,n,reps,median_seconds,threads\n";
  for (const Record& r : records) {
    out << r.method << ',' << r.n << ',' << r.reps << ','
        << io::format_double(r.median_seconds) << ',' << r.threads << '\n';
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c, std::uint64_t d) {
  std::uint64_t h = base;
  for (const std::uint64_t v : {a, b, c, d}) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

PauliString random_string(std::size_t n, std::mt19937_64& rng) {
  std::vector<Pauli> axes(n);
  for (Pauli& axis : axes) {
    axis = static_cast<Pauli>(rng() & 3u);
  }
  return PauliString(std::move(axes));
}

PauliString random_string_with_parity(std::size_t n, bool odd_y,
                                      std::mt19937_64& rng) {
  std::vector<Pauli> axes(n);
  std::size_t n_y = 0;
  for (std::size_t pos = 0; pos + 1 < n; ++pos) {
    axes[pos] = static_cast<Pauli>(rng() & 3u);
    if (axes[pos] == Pauli::Y) ++n_y;
  }
  if ((n_y % 2 != 0) == odd_y) {
    // Parity already right; the last factor is drawn from {I, X, Z}.
    static constexpr Pauli non_y[3] = {Pauli::I, Pauli::X, Pauli::Z};
    axes[n - 1] = non_y[rng() % 3];
  } else {
    axes[n - 1] = Pauli::Y;
  }
  return PauliString(std::move(axes));
}

PauliString random_diagonal_string(std::size_t n, std::mt19937_64& rng) {
  std::vector<Pauli> axes(n);
  for (Pauli& axis : axes) {
    axis = (rng() & 1u) ? Pauli::Z : Pauli::I;
  }
  return PauliString(std::move(axes));
}

DenseMatrix random_matrix(MatrixClass cls, std::size_t n,
                          std::mt19937_64& rng) {
  if (n > kMaxDenseQubits) {
    throw Error(Errc::NTooLargeForDense,
                "random_matrix: " + std::to_string(n) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(kMaxDenseQubits));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseMatrix h(dim);
  switch (cls) {
    case MatrixClass::NonHermitian:
      for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) {
          h.at(r, c) = {uniform_pm1(rng), uniform_pm1(rng)};
        }
      }
      break;
    case MatrixClass::Hermitian:
      for (std::uint64_t r = 0; r < dim; ++r) {
        h.at(r, r) = uniform_pm1(rng);
        for (std::uint64_t c = r + 1; c < dim; ++c) {
          h.at(r, c) = {uniform_pm1(rng), uniform_pm1(rng)};
          h.at(c, r) = std::conj(h.at(r, c));
        }
      }
      break;
    case MatrixClass::Symmetric:
      for (std::uint64_t r = 0; r < dim; ++r) {
        h.at(r, r) = uniform_pm1(rng);
        for (std::uint64_t c = r + 1; c < dim; ++c) {
          h.at(r, c) = uniform_pm1(rng);
          h.at(c, r) = h.at(r, c);
        }
      }
      break;
    case MatrixClass::Diagonal:
      for (std::uint64_t r = 0; r < dim; ++r) {
        h.at(r, r) = uniform_pm1(rng);
      }
      break;
  }
  return h;
}

IsingCoefficients random_ising(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> alpha(n);
  for (double& a : alpha) {
    a = uniform_pm1(rng);
  }
  IsingCoefficients c(std::move(alpha));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c.set_coupling(i, j, uniform_pm1(rng));
    }
  }
  return c;
}

}  // namespace paulikit::bench
