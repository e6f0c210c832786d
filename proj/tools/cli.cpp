#include "cli.hpp"

#include "hankel/acsa.hpp"
#include "hankel/dense_oracle.hpp"
#include "hankel/errors.hpp"
#include "hankel/fft_products.hpp"
#include "hankel/generators.hpp"
#include "hankel/multistart.hpp"
#include "hankel/objective.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unistd.h>

#ifndef HANKEL_VERSION
#define HANKEL_VERSION "dev"
#endif

namespace hankel::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// A user mistake that maps to exit code 1 with a one-line message.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned worker_threads() {
  if (const char* env = std::getenv("HANKEL_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<unsigned>(value);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0') {
      throw UsageError(flag + ": '" + item + "' is not a number");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(flag + " needs at least one value");
  return values;
}

Eigen::VectorXd to_vector(const std::vector<double>& values) {
  return Eigen::Map<const Eigen::VectorXd>(values.data(),
                                           static_cast<Index>(values.size()));
}

json vector_json(const Eigen::VectorXd& x) {
  json arr = json::array();
  for (Index i = 0; i < x.size(); ++i) arr.push_back(x[i]);
  return arr;
}

// Flags shared by subcommands that build a tensor from a family or a file.
struct TensorSource {
  std::string family;
  std::string input;
  std::optional<int> order;
  std::optional<Index> dim;
  double epsilon = 0.0;
  std::optional<std::uint64_t> tensor_seed;

  void add_to(CLI::App* app, bool allow_input) {
    app->add_option("--family", family,
                    "sin | param | vandermonde | hilbert | random");
    if (allow_input) {
      app->add_option("--input", input,
                      "generating vector file (.txt one per line, or .json)");
    }
    app->add_option("--order", order, "tensor order m");
    app->add_option("--dim", dim, "tensor dimension n");
    app->add_option("--epsilon", epsilon, "parameter of the param family");
    app->add_option("--tensor-seed", tensor_seed,
                    "seed of the random family (defaults to --seed)");
  }

  HankelSpec build(std::uint64_t default_seed) const {
    if (!family.empty() && !input.empty()) {
      throw UsageError("give either --family or --input, not both");
    }
    if (!input.empty()) return read_generator_file(input, order, dim);
    if (family.empty()) throw UsageError("a tensor source is required: --family or --input");
    const auto fam = parse_family(family);
    if (!fam) {
      throw UsageError("unknown family '" + family +
                       "'; expected sin, param, vandermonde, hilbert or random");
    }
    FamilySpec fs;
    fs.family = *fam;
    if (*fam == Family::ParamEps) {
      fs.order = order.value_or(4);
      fs.dim = dim.value_or(4);
    } else {
      if (!order || !dim) {
        throw UsageError("--family " + family + " needs --order and --dim");
      }
      fs.order = *order;
      fs.dim = *dim;
    }
    fs.epsilon = epsilon;
    fs.seed = tensor_seed.value_or(default_seed);
    return generate(fs);
  }

  json manifest(const HankelSpec& spec, std::uint64_t default_seed) const {
    json j;
    if (!input.empty()) {
      j["input"] = input;
    } else {
      j["family"] = family;
      if (family == "param") j["epsilon"] = epsilon;
      if (family == "random") j["tensor_seed"] = tensor_seed.value_or(default_seed);
    }
    j["m"] = spec.order();
    j["n"] = spec.dim();
    return j;
  }
};

BTensorKind parse_btensor(const std::string& name) {
  if (name == "z") return BTensorKind::ZIdentity;
  if (name == "h") return BTensorKind::HIdentity;
  throw UsageError("--btensor must be z or h, got '" + name + "'");
}

Extreme parse_extreme(const std::string& name) {
  if (name == "min") return Extreme::Min;
  if (name == "max") return Extreme::Max;
  throw UsageError("--extreme must be min or max, got '" + name + "'");
}

Method parse_method(const std::string& name) {
  if (name == "acsa") return Method::Acsa;
  if (name == "power") return Method::PowerMethod;
  throw UsageError("--method must be acsa or power, got '" + name + "'");
}

json options_json(const SolverOptions& o) {
  return json{{"eta", o.eta},
              {"beta", o.beta},
              {"alpha_max", o.alpha_max},
              {"alpha_1", o.alpha_1},
              {"tol_rel", o.tol_rel},
              {"grad_floor", o.grad_floor},
              {"max_iter", o.max_iter},
              {"max_backtracks", o.max_backtracks},
              {"starts", o.starts},
              {"seed", o.seed}};
}

std::string trace_csv(const std::vector<IterationRecord>& trace) {
  std::string csv = "k,lambda,grad_norm,alpha,backtracks\n";
  for (const auto& r : trace) {
    csv += std::to_string(r.k) + ',' + format_double(r.lambda) + ',' +
           format_double(r.grad_norm) + ',' + format_double(r.alpha) + ',' +
           std::to_string(r.backtracks) + '\n';
  }
  return csv;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  TensorSource source;
  std::string btensor = "z";
  std::string extreme = "min";
  std::string method = "acsa";
  SolverOptions opts;
  std::string out_path;
  std::string trace_path;
  std::string vector_path;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto t_start = Clock::now();
  const HankelSpec spec = a.source.build(a.opts.seed);
  const double t_generate = seconds_since(t_start);

  SolverOptions opts = a.opts;
  opts.extreme = parse_extreme(a.extreme);
  const BTensorKind kind = parse_btensor(a.btensor);
  const Method method = parse_method(a.method);
  if (spec.order() % 2 != 0) {
    throw UsageError("order " + std::to_string(spec.order()) +
                     " is odd; the eigenvalue solvers need an even order");
  }
  opts.validate();

  const auto t_solve = Clock::now();
  const MultistartReport report =
      multistart(spec, kind, opts, worker_threads(), {}, method);
  const double solve_seconds = seconds_since(t_solve);

  json result;
  const EigenResult* best = report.best_result();
  if (best) {
    result["lambda"] = best->lambda;
    if (spec.dim() <= kInlineVectorLimit) result["x"] = vector_json(best->x);
    result["residual"] = best->residual;
    result["iterations"] = best->iterations;
    result["termination"] = std::string(to_string(best->termination));
    result["best_start"] = *report.best;
  } else {
    result["lambda"] = nullptr;
    result["termination"] = "FAILED";
  }
  json occ = json::array();
  for (const auto& bin : report.occurrences) {
    occ.push_back({{"lambda", bin.lambda},
                   {"count", bin.count},
                   {"percentage", bin.percentage}});
  }
  result["occurrences"] = occ;
  json starts = json::array();
  for (const auto& s : report.starts) {
    json row{{"index", s.index}, {"seed", s.seed}};
    if (s.result) {
      row["lambda"] = s.result->lambda;
      row["residual"] = s.result->residual;
      row["iterations"] = s.result->iterations;
      row["termination"] = std::string(to_string(s.result->termination));
    } else {
      row["error"] = s.error;
    }
    starts.push_back(row);
  }
  result["starts"] = starts;

  const auto t_write = Clock::now();
  if (best && !a.vector_path.empty()) {
    write_vector_file(a.vector_path, best->x);
    result["vector_file"] = a.vector_path;
  }
  if (best && !a.trace_path.empty()) {
    write_file_atomically(a.trace_path, trace_csv(best->trace));
  }

  json manifest;
  manifest["tool"] = "hankel-eig";
  manifest["version"] = HANKEL_VERSION;
  manifest["command"] = "solve";
  manifest["source"] = a.source.manifest(spec, a.opts.seed);
  manifest["btensor"] = a.btensor;
  manifest["extreme"] = a.extreme;
  manifest["method"] = a.method;
  manifest["options"] = options_json(opts);
  manifest["timings_s"] = {{"generate", t_generate},
                           {"solve", solve_seconds},
                           {"write", seconds_since(t_write)}};
  result["manifest"] = manifest;

  const std::string text = result.dump(2) + "\n";
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file_atomically(a.out_path, text);
  }
  if (!report.any_success) {
    err << "error: no start converged (" << report.starts.size()
        << " starts); best available result reported\n";
    return kExitAllStartsFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  TensorSource source;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "txt";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const HankelSpec spec = a.source.build(a.seed);
  std::string text;
  if (a.format == "txt") {
    for (Index k = 0; k < spec.generator().size(); ++k) {
      text += format_double(spec.generator()[k]) + '\n';
    }
  } else if (a.format == "json") {
    json j{{"m", spec.order()},
           {"n", spec.dim()},
           {"v", vector_json(spec.generator())}};
    text = j.dump() + "\n";
  } else {
    throw UsageError("--format must be txt or json, got '" + a.format + "'");
  }
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file_atomically(a.out_path, text);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int order = 0;
  Index dim = 0;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string generator;
  std::string point;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  constexpr double kTolerance = 1e-10;
  auto rel = [](double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
  };
  std::mt19937_64 rng(a.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto gaussian = [&](Index n) {
    Eigen::VectorXd v(n);
    for (Index i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
  };

  if (a.order < 1 || a.dim < 1) {
    throw UsageError("--order and --dim must be positive");
  }
  const Index len = HankelSpec::generator_length(a.order, a.dim);
  if (oracle::entry_count(a.order, a.dim, oracle::kDefaultEntryCap) >
      oracle::kDefaultEntryCap) {
    err << "error: " << a.dim << "^" << a.order
        << " entries exceed the dense oracle cap of "
        << oracle::kDefaultEntryCap << "\n";
    return kExitUsage;
  }
  const bool fixed = !a.generator.empty() || !a.point.empty();
  if (fixed && (a.generator.empty() || a.point.empty())) {
    throw UsageError("--v and --x must be given together");
  }

  double worst_xm = 0.0, worst_xm1 = 0.0;
  const int trials = fixed ? 1 : a.trials;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd v = fixed ? to_vector(parse_number_list(a.generator, "--v"))
                              : gaussian(len);
    Eigen::VectorXd x = fixed ? to_vector(parse_number_list(a.point, "--x"))
                              : gaussian(a.dim);
    const HankelSpec spec(a.order, a.dim, v);
    if (x.size() != a.dim) {
      throw UsageError("--x has " + std::to_string(x.size()) +
                       " entries, expected " + std::to_string(a.dim));
    }
    const SpectralCache cache = make_cache(spec);
    const auto dense = oracle::materialize(spec);
    const double fast_xm = hankel_xm(cache, spec, x);
    const double dense_xm = oracle::dense_xm(dense, x);
    const Eigen::VectorXd fast_xm1 = hankel_xm1(cache, spec, x);
    const Eigen::VectorXd dense_xm1 = oracle::dense_xm1(dense, x);
    worst_xm = std::max(worst_xm, rel(fast_xm, dense_xm));
    for (Index i = 0; i < a.dim; ++i) {
      worst_xm1 = std::max(worst_xm1, rel(fast_xm1[i], dense_xm1[i]));
    }
    if (fixed) {
      out << "fft   H x^m = " << format_double(fast_xm) << "\n"
          << "dense H x^m = " << format_double(dense_xm) << "\n";
    }
  }
  const double worst = std::max(worst_xm, worst_xm1);
  out << "m=" << a.order << " n=" << a.dim << " trials=" << trials << "\n"
      << "max relative error H x^m:     " << format_double(worst_xm) << "\n"
      << "max relative error H x^{m-1}: " << format_double(worst_xm1) << "\n"
      << (worst <= kTolerance ? "PASS" : "FAIL") << " (tolerance 1e-10)\n";
  return worst <= kTolerance ? kExitOk : kExitUsage;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  int order = 4;
  std::string dims;
  int reps = 20;
  std::string family = "vandermonde";
  std::string btensor = "z";
  std::string extreme = "max";
  bool skip_solve = false;
  int max_iter = 1000;
  std::uint64_t seed = 0;
  std::string out_path;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  if (a.reps < 1) throw UsageError("--reps must be at least 1");
  const auto fam = parse_family(a.family);
  if (!fam || *fam == Family::ParamEps) {
    throw UsageError("--family must be sin, vandermonde, hilbert or random");
  }
  const BTensorKind kind = parse_btensor(a.btensor);
  std::string csv = "family,m,n,product_time_s,solve_time_s,iters\n";
  for (double dim_value : parse_number_list(a.dims, "--dims")) {
    const auto n = static_cast<Index>(dim_value);
    if (n < 1 || static_cast<double>(n) != dim_value) {
      throw UsageError("--dims entries must be positive integers");
    }
    const HankelSpec spec = generate({*fam, a.order, n, 0.0, a.seed});
    const SpectralCache cache = make_cache(spec);
    const Eigen::VectorXd x = random_unit_vector(n, a.seed);
    std::vector<double> times;
    for (int r = 0; r < a.reps; ++r) {
      const auto t0 = Clock::now();
      const Eigen::VectorXd y = hankel_xm1(cache, spec, x);
      times.push_back(seconds_since(t0));
      if (!std::isfinite(y[0])) throw std::runtime_error("non-finite product");
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 == 1
                              ? times[times.size() / 2]
                              : 0.5 * (times[times.size() / 2 - 1] +
                                       times[times.size() / 2]);
    std::string solve_time = "", iters = "";
    if (!a.skip_solve && spec.order() % 2 == 0) {
      SolverOptions opts;
      opts.extreme = parse_extreme(a.extreme);
      opts.max_iter = a.max_iter;
      opts.seed = a.seed;
      const auto t0 = Clock::now();
      const EigenResult r = solve(spec, cache, kind, opts);
      solve_time = format_double(seconds_since(t0));
      iters = std::to_string(r.iterations);
    }
    csv += a.family + ',' + std::to_string(a.order) + ',' + std::to_string(n) +
           ',' + format_double(median) + ',' + solve_time + ',' + iters + '\n';
  }
  if (a.out_path.empty()) {
    out << csv;
  } else {
    write_file_atomically(a.out_path, csv);
  }
  return kExitOk;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!f) throw UsageError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw UsageError("cannot move output into " + path.string() + ": " +
                     ec.message());
  }
}

void write_vector_file(const std::filesystem::path& path,
                       const Eigen::VectorXd& x) {
  static_assert(std::endian::native == std::endian::little,
                "vector files are little-endian");
  std::string bytes = "HNKV";
  const std::uint32_t version = 1;
  const std::uint64_t length = static_cast<std::uint64_t>(x.size());
  bytes.append(reinterpret_cast<const char*>(&version), sizeof version);
  bytes.append(reinterpret_cast<const char*>(&length), sizeof length);
  bytes.append(reinterpret_cast<const char*>(x.data()),
               static_cast<std::size_t>(x.size()) * sizeof(double));
  write_file_atomically(path, bytes);
}

Eigen::VectorXd read_vector_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path.string());
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t length = 0;
  f.read(magic, 4);
  f.read(reinterpret_cast<char*>(&version), sizeof version);
  f.read(reinterpret_cast<char*>(&length), sizeof length);
  if (!f || std::memcmp(magic, "HNKV", 4) != 0 || version != 1) {
    throw UsageError(path.string() + " is not an HNKV version 1 vector file");
  }
  Eigen::VectorXd x(static_cast<Index>(length));
  f.read(reinterpret_cast<char*>(x.data()),
         static_cast<std::streamsize>(length * sizeof(double)));
  if (!f) throw UsageError(path.string() + " is truncated");
  return x;
}

HankelSpec read_generator_file(const std::filesystem::path& path,
                               std::optional<int> order,
                               std::optional<Index> dim) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file " + path.string());
  std::stringstream buffer;
  buffer << f.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");

  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError(path.string() + ": malformed JSON: " + e.what());
    }
    if (!j.contains("m") || !j.contains("n") || !j.contains("v") ||
        !j["v"].is_array()) {
      throw UsageError(path.string() + ": JSON input needs keys m, n and v");
    }
    const int m = j["m"].get<int>();
    const Index n = j["n"].get<Index>();
    if ((order && *order != m) || (dim && *dim != n)) {
      throw UsageError(path.string() + " describes order " + std::to_string(m) +
                       " dimension " + std::to_string(n) +
                       ", which disagrees with --order/--dim");
    }
    std::vector<double> v;
    for (const auto& item : j["v"]) {
      if (!item.is_number()) throw UsageError(path.string() + ": v holds a non-number");
      v.push_back(item.get<double>());
    }
    return HankelSpec(m, n, to_vector(v));
  }

  if (!order || !dim) {
    throw UsageError("text input " + path.string() + " needs --order and --dim");
  }
  std::vector<double> v;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(b, e - b + 1);
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      throw UsageError(path.string() + ":" + std::to_string(lineno) + ": '" +
                       token + "' is not a number");
    }
    v.push_back(value);
  }
  return HankelSpec(*order, *dim, to_vector(v));
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Extreme Z-, H- and generalized eigenpairs of Hankel tensors"};
  app.set_version_flag("--version", HANKEL_VERSION);
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "compute an extreme eigenpair");
  solve_args.source.add_to(solve_cmd, /*allow_input=*/true);
  solve_cmd->add_option("--btensor", solve_args.btensor, "z (Z-eigen) or h (H-eigen)");
  solve_cmd->add_option("--extreme", solve_args.extreme, "min or max");
  solve_cmd->add_option("--method", solve_args.method,
                        "acsa, or power for the shifted power method baseline");
  solve_args.opts.starts = 10;
  solve_cmd->add_option("--starts", solve_args.opts.starts, "random starts")
      ->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.opts.seed, "base RNG seed");
  solve_cmd->add_option("--eta", solve_args.opts.eta, "sufficient-decrease constant");
  solve_cmd->add_option("--beta", solve_args.opts.beta, "backtracking factor");
  solve_cmd->add_option("--alpha-max", solve_args.opts.alpha_max, "initial step cap");
  solve_cmd->add_option("--tol", solve_args.opts.tol_rel,
                        "relative eigenvalue change tolerance (scaled by sqrt n)");
  solve_cmd->add_option("--max-iter", solve_args.opts.max_iter, "iteration limit");
  solve_cmd->add_option("--out", solve_args.out_path, "result JSON (stdout if absent)");
  solve_cmd->add_option("--trace", solve_args.trace_path, "trace CSV of the best start");
  solve_cmd->add_option("--emit-vector", solve_args.vector_path,
                        "binary eigenvector file (HNKV format)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "write a benchmark generating vector");
  gen_args.source.add_to(gen_cmd, /*allow_input=*/false);
  gen_cmd->add_option("--seed", gen_args.seed, "seed of the random family");
  gen_cmd->add_option("--out", gen_args.out_path, "output file (stdout if absent)");
  gen_cmd->add_option("--format", gen_args.format, "txt or json");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "check FFT products against dense enumeration");
  verify_cmd->add_option("--order", verify_args.order, "tensor order m")->required();
  verify_cmd->add_option("--dim", verify_args.dim, "tensor dimension n")->required();
  verify_cmd->add_option("--trials", verify_args.trials, "random (v, x) pairs");
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed");
  verify_cmd->add_option("--v", verify_args.generator,
                         "fixed generating vector, comma separated");
  verify_cmd->add_option("--x", verify_args.point, "fixed vector, comma separated");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "time products and solves versus n");
  bench_cmd->add_option("--order", bench_args.order, "tensor order m");
  bench_cmd->add_option("--dims", bench_args.dims, "comma separated dimensions")
      ->required();
  bench_cmd->add_option("--reps", bench_args.reps, "product repetitions (median)");
  bench_cmd->add_option("--family", bench_args.family, "tensor family");
  bench_cmd->add_option("--btensor", bench_args.btensor, "z or h");
  bench_cmd->add_option("--extreme", bench_args.extreme, "min or max");
  bench_cmd->add_flag("--skip-solve", bench_args.skip_solve, "only time products");
  bench_cmd->add_option("--max-iter", bench_args.max_iter, "solver iteration limit");
  bench_cmd->add_option("--seed", bench_args.seed, "RNG seed");
  bench_cmd->add_option("--out", bench_args.out_path, "CSV file (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << HANKEL_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen_args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out, err);
    if (bench_cmd->parsed()) return cmd_bench(bench_args, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Spec validation, option validation, odd orders.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitAllStartsFailed;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hankel::cli
