#include "hankel/multistart.hpp"

#include "hankel/fft_products.hpp"
#include "hankel/power_method.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace hankel {

bool is_success(Termination t) {
  return t == Termination::Converged || t == Termination::ZeroGradient;
}

const EigenResult* MultistartReport::best_result() const {
  if (!best) return nullptr;
  return &*starts[*best].result;
}

std::vector<EigenvalueBin> bin_eigenvalues(std::vector<double> lambdas,
                                           Extreme extreme, double tolerance) {
  std::vector<EigenvalueBin> bins;
  if (lambdas.empty()) return bins;
  std::sort(lambdas.begin(), lambdas.end());
  const double total = static_cast<double>(lambdas.size());
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= lambdas.size(); ++i) {
    if (i == lambdas.size() || lambdas[i] - lambdas[i - 1] > tolerance) {
      const std::size_t count = i - begin;
      const std::size_t mid = begin + count / 2;
      const double median = count % 2 == 1
                                ? lambdas[mid]
                                : 0.5 * (lambdas[mid - 1] + lambdas[mid]);
      bins.push_back({median, static_cast<int>(count),
                      100.0 * static_cast<double>(count) / total});
      begin = i;
    }
  }
  if (extreme == Extreme::Max) std::reverse(bins.begin(), bins.end());
  return bins;
}

MultistartReport multistart(const HankelSpec& spec, const ReferenceTensor& b,
                            const SolverOptions& opts, unsigned threads,
                            const std::vector<Eigen::VectorXd>& initial_points,
                            Method method) {
  require_even_order(spec);
  opts.validate();
  if (method == Method::PowerMethod && !b.kind()) {
    throw std::invalid_argument(
        "the power method baseline needs a built-in reference tensor");
  }
  const SpectralCache cache = make_cache(spec);
  const auto starts = static_cast<std::size_t>(opts.starts);

  MultistartReport report;
  report.starts.resize(starts);

  auto run_one = [&](std::size_t i) {
    StartOutcome& out = report.starts[i];
    out.index = static_cast<int>(i);
    out.seed = opts.seed + i;
    SolverOptions local = opts;
    local.seed = out.seed;
    std::optional<Eigen::VectorXd> x1;
    if (i < initial_points.size()) x1 = initial_points[i];
    try {
      out.result = method == Method::Acsa
                       ? solve(spec, cache, b, local, x1)
                       : power_method_baseline(spec, cache, *b.kind(), local, x1);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(starts)));
  if (workers == 1 || opts.on_step) {
    for (std::size_t i = 0; i < starts; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < starts; i = next++) run_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<double> lambdas;
  auto better = [&](double a, double c) {
    return opts.extreme == Extreme::Min ? a < c : a > c;
  };
  std::optional<std::size_t> best_any;
  for (std::size_t i = 0; i < starts; ++i) {
    const auto& r = report.starts[i].result;
    if (!r) continue;
    lambdas.push_back(r->lambda);
    if (!best_any || better(r->lambda, report.starts[*best_any].result->lambda)) {
      best_any = i;
    }
    if (is_success(r->termination)) {
      report.any_success = true;
      if (!report.best ||
          better(r->lambda, report.starts[*report.best].result->lambda)) {
        report.best = i;
      }
    }
  }
  if (!report.best) report.best = best_any;
  report.occurrences = bin_eigenvalues(std::move(lambdas), opts.extreme);
  return report;
}

}  // namespace hankel
