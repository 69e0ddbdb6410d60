// Command-line front end: compose weighted Pauli strings, decompose matrix
// files into the Pauli basis, build Ising Hamiltonians, emit single-string
// exponentials, and run the benchmark suites to CSV.
//
// Exit codes: 0 success, 2 malformed input or invalid flags, 3 matrix
// dimension not a power of two.

#include <charconv>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "paulikit/bench.hpp"
#include "paulikit/decompose.hpp"
#include "paulikit/error.hpp"
#include "paulikit/hamiltonian.hpp"
#include "paulikit/io.hpp"
#include "paulikit/pauli.hpp"
#include "paulikit/sparse.hpp"

namespace {

using namespace paulikit;

template <class T>
T parse_integer(std::string_view text, const std::string& context) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::MalformedFile,
                context + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

void print_triplet(std::ostream& out, std::uint64_t row, std::uint64_t col,
                   std::complex<double> v) {
  out << row << ' ' << col << ' ' << io::format_double(v.real()) << ' '
      << io::format_double(v.imag()) << '\n';
}

DenseMatrix read_matrix_file(const std::string& path) {
  if (path == "-") {
    return io::read_matrix(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::MalformedFile, "cannot open '" + path + "'");
  }
  return io::read_matrix(in);
}

struct ComposeArgs {
  std::string label;
  std::string weight = "1";
  bool dense = false;
};

void run_compose(const ComposeArgs& args) {
  const PauliString x = PauliString::parse(args.label);
  const std::complex<double> w = io::parse_complex(args.weight);
  // {I,Z}-only labels with a real weight go through the diagonal composer.
  const SparsePauliMatrix p = (x.diagonal() && w.imag() == 0.0)
                                  ? compose_diagonal(x, w.real())
                                  : compose(x, w);
  if (args.dense) {
    io::write_matrix(std::cout, to_dense(p));
    return;
  }
  for (std::uint64_t row = 0; row < p.dim(); ++row) {
    print_triplet(std::cout, row, p.column(row), p.entry(row));
  }
}

struct DecomposeArgs {
  std::string input;
  double tol = 1e-12;
  double prune = 0.0;
  bool parallel = false;
  std::string force_class;
};

void run_decompose(const DecomposeArgs& args) {
  const DenseMatrix h = read_matrix_file(args.input);
  DecomposeOptions options;
  options.tol = args.tol;
  options.prune = args.prune;
  options.parallel = args.parallel;
  if (!args.force_class.empty()) {
    options.force_class = matrix_class_from_string(args.force_class);
  }
  const DecomposeResult result = decompose_full(h, options);
  std::cerr << "class: " << to_string(result.matrix_class) << " (evaluated "
            << result.evaluated << ", skipped " << result.skipped
            << ", threads " << result.threads << ")\n";
  io::write_pauli_sum(std::cout, result.sum);
}

struct IsingArgs {
  std::vector<double> alpha;
  std::vector<std::string> beta;
  bool dense = false;
};

void run_ising(const IsingArgs& args) {
  std::vector<std::tuple<std::size_t, std::size_t, double>> couplings;
  couplings.reserve(args.beta.size());
  for (const std::string& token : args.beta) {
    const std::size_t first = token.find(',');
    const std::size_t second =
        first == std::string::npos ? std::string::npos
                                   : token.find(',', first + 1);
    if (second == std::string::npos) {
      throw Error(Errc::MalformedFile,
                  "coupling '" + token + "' must be 'i,j,value'");
    }
    const auto i = parse_integer<std::size_t>(token.substr(0, first),
                                              "coupling '" + token + "'");
    const auto j = parse_integer<std::size_t>(
        token.substr(first + 1, second - first - 1),
        "coupling '" + token + "'");
    const std::string value_token = token.substr(second + 1);
    double value = 0.0;
    const char* end = value_token.data() + value_token.size();
    const auto [ptr, ec] = std::from_chars(value_token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
      throw Error(Errc::MalformedFile, "coupling '" + token +
                                           "': '" + value_token +
                                           "' is not a number");
    }
    couplings.emplace_back(i, j, value);
  }

  const DiagonalMatrix d =
      build_ising(IsingCoefficients::from_triplets(args.alpha, couplings));
  if (args.dense) {
    io::write_matrix(std::cout, to_dense(d));
    return;
  }
  for (std::uint64_t row = 0; row < d.dim(); ++row) {
    std::cout << row << ' ' << io::format_double(d.values[row]) << '\n';
  }
}

struct ExpArgs {
  double theta = 0.0;
  std::string label;
  bool dense = false;
};

void run_exp(const ExpArgs& args) {
  const CooMatrix u = pauli_exponential(args.theta, PauliString::parse(args.label));
  if (args.dense) {
    io::write_matrix(std::cout, to_dense(u));
    return;
  }
  for (const Triplet& t : u.triplets()) {
    print_triplet(std::cout, t.row, t.col, t.value);
  }
}

struct BenchArgs {
  std::string suite;
  std::string n_range = "2..6";
  std::size_t reps = 5;
  std::string methods;
  std::string out;
  std::uint64_t seed = 12345;
  std::string matrix_class = "nonhermitian";
};

void run_bench(const BenchArgs& args) {
  bench::Config config;
  const std::size_t dots = args.n_range.find("..");
  if (dots == std::string::npos) {
    throw Error(Errc::InvalidRange,
                "range '" + args.n_range + "' must be '<min>..<max>'");
  }
  config.n_min = parse_integer<std::size_t>(args.n_range.substr(0, dots),
                                            "range '" + args.n_range + "'");
  config.n_max = parse_integer<std::size_t>(args.n_range.substr(dots + 2),
                                            "range '" + args.n_range + "'");
  config.reps = args.reps;
  config.seed = args.seed;
  config.matrix_class = *matrix_class_from_string(args.matrix_class);
  if (!args.methods.empty()) {
    std::size_t start = 0;
    while (start <= args.methods.size()) {
      const std::size_t comma = args.methods.find(',', start);
      const std::size_t end =
          comma == std::string::npos ? args.methods.size() : comma;
      if (end > start) {
        config.methods.push_back(args.methods.substr(start, end - start));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  const bench::Suite suite = args.suite == "compose" ? bench::Suite::Compose
                             : args.suite == "decompose"
                                 ? bench::Suite::Decompose
                                 : bench::Suite::Ising;
  const std::vector<bench::Record> records = bench::run(suite, config);
  if (args.out.empty()) {
    bench::write_csv(std::cout, suite, config, records);
    return;
  }
  std::ofstream out(args.out);
  if (!out) {
    throw Error(Errc::MalformedFile, "cannot open '" + args.out + "'");
  }
  bench::write_csv(out, suite, config, records);
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"sparse Pauli-string composition, Hamiltonians, decomposition"};
  app.require_subcommand(1);
  const std::vector<std::string> class_names{"nonhermitian", "hermitian",
                                             "symmetric", "diagonal"};

  ComposeArgs compose_args;
  CLI::App* compose_cmd = app.add_subcommand(
      "compose", "compose a weighted Pauli string as sparse triplets");
  compose_cmd->add_option("label", compose_args.label,
                          "Pauli string, letters IXYZ or digits 0123")
      ->required();
  compose_cmd->add_option("--weight", compose_args.weight,
                          "complex weight token, e.g. '2.5' or '0-2i'");
  compose_cmd->add_flag("--dense", compose_args.dense,
                        "emit a matrix file instead of triplets");
  compose_cmd->callback([&] { run_compose(compose_args); });

  DecomposeArgs decompose_args;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "expand a matrix file in the Pauli basis");
  decompose_cmd->add_option("input", decompose_args.input,
                            "matrix file path, or '-' for standard input")
      ->required();
  decompose_cmd->add_option("--tol", decompose_args.tol,
                            "classification tolerance");
  decompose_cmd->add_option("--prune", decompose_args.prune,
                            "drop terms with |weight| <= this");
  decompose_cmd->add_flag("--parallel", decompose_args.parallel,
                          "split candidate strings across worker threads");
  decompose_cmd
      ->add_option("--force-class", decompose_args.force_class,
                   "bypass classification")
      ->check(CLI::IsMember(class_names));
  decompose_cmd->callback([&] { run_decompose(decompose_args); });

  IsingArgs ising_args;
  CLI::App* ising_cmd = app.add_subcommand(
      "ising", "build the diagonal of an Ising Hamiltonian");
  ising_cmd->add_option("--alpha", ising_args.alpha,
                        "per-spin field weights, comma separated")
      ->required()
      ->delimiter(',');
  ising_cmd->add_option("--beta", ising_args.beta,
                        "coupling 'i,j,value' with i < j, repeatable");
  ising_cmd->add_flag("--dense", ising_args.dense,
                      "emit a matrix file instead of 'index value' lines");
  ising_cmd->callback([&] { run_ising(ising_args); });

  ExpArgs exp_args;
  CLI::App* exp_cmd = app.add_subcommand(
      "exp", "exponential exp(-i theta P) of a Pauli string");
  exp_cmd->add_option("theta", exp_args.theta, "rotation angle in radians")
      ->required();
  exp_cmd->add_option("label", exp_args.label, "Pauli string")->required();
  exp_cmd->add_flag("--dense", exp_args.dense,
                    "emit a matrix file instead of triplets");
  exp_cmd->callback([&] { run_exp(exp_args); });

  BenchArgs bench_args;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run a benchmark suite and emit CSV");
  bench_cmd->add_option("suite", bench_args.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"compose", "decompose", "ising"}));
  bench_cmd->add_option("--n-range", bench_args.n_range,
                        "qubit range '<min>..<max>'");
  bench_cmd->add_option("--reps", bench_args.reps,
                        "repetitions per (method, n)");
  bench_cmd->add_option("--methods", bench_args.methods,
                        "comma-separated subset of the suite's methods");
  bench_cmd->add_option("--out", bench_args.out,
                        "CSV output path (default: standard output)");
  bench_cmd->add_option("--seed", bench_args.seed, "input generator seed");
  bench_cmd->add_option("--class", bench_args.matrix_class,
                        "matrix class for the decompose suite")
      ->check(CLI::IsMember(class_names));
  bench_cmd->callback([&] { run_bench(bench_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::NotPowerOfTwo ? 3 : 2;
  }
  return 0;
}
