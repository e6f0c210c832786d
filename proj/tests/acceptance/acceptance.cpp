// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include "hankel/acsa.hpp"
#include "hankel/dense_oracle.hpp"
#include "hankel/fft_products.hpp"
#include "hankel/generators.hpp"
#include "hankel/multistart.hpp"
#include "hankel/objective.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hankel;
using Clock = std::chrono::steady_clock;

struct Outcome {
  Outcome() { detail.precision(10); }

  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

Eigen::VectorXd gaussian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Index i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

double rel(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

// ------------------------------------------------------------------ AC1

void oracle_equivalence(Outcome& o) {
  std::mt19937_64 rng(1);
  double worst = 0.0;
  for (int m = 2; m <= 6; ++m) {
    for (Index n = 1; n <= 8; ++n) {
      for (int t = 0; t < 50; ++t) {
        const HankelSpec spec(m, n, gaussian(HankelSpec::generator_length(m, n), rng));
        const Eigen::VectorXd x = gaussian(n, rng);
        const SpectralCache cache = make_cache(spec);
        const auto dense = oracle::materialize(spec);
        worst = std::max(worst, rel(hankel_xm(cache, spec, x), oracle::dense_xm(dense, x)));
        const Eigen::VectorXd fast = hankel_xm1(cache, spec, x);
        const Eigen::VectorXd slow = oracle::dense_xm1(dense, x);
        for (Index i = 0; i < n; ++i) worst = std::max(worst, rel(fast[i], slow[i]));
      }
    }
  }
  o.detail << "max rel err " << worst;
  o.require(worst <= 1e-10, "exceeds 1e-10");
}

// ------------------------------------------------------------------ AC2

void sine_example(Outcome& o) {
  const HankelSpec spec = generate({Family::Sin, 4, 5});
  SolverOptions opts;
  opts.extreme = Extreme::Min;
  opts.starts = 100;
  opts.seed = 2024;
  const MultistartReport r = multistart(spec, BTensorKind::ZIdentity, opts);
  const EigenResult* best = r.best_result();
  o.require(best != nullptr, "no result");
  if (!best) return;
  bool second = false;
  for (const auto& s : r.starts) {
    if (s.result && std::abs(s.result->lambda + 3.920428) <= 1e-4) second = true;
  }
  o.detail << "best " << best->lambda << ";";
  for (const auto& bin : r.occurrences) {
    o.detail << " " << bin.lambda << " (" << bin.percentage << "%)";
  }
  o.require(std::abs(best->lambda + 8.846335) <= 1e-4, "best off");
  o.require(second, "-3.920428 never found");
}

// ------------------------------------------------------------------ AC3

void vandermonde_table(Outcome& o) {
  struct Row {
    int m;
    Index n;
    double table;
  };
  const Row rows[] = {{4, 10, 9.487902e2}, {4, 100, 1.013475e5},
                      {4, 1000, 1.019800e7}, {6, 10, 2.922505e4}};
  for (const Row& row : rows) {
    const HankelSpec spec = generate({Family::Vandermonde, row.m, row.n});
    SolverOptions opts;
    opts.extreme = Extreme::Max;
    opts.starts = 5;
    opts.seed = 17;
    const MultistartReport r = multistart(spec, BTensorKind::ZIdentity, opts);
    const EigenResult* best = r.best_result();
    if (!best) {
      o.require(false, "no result");
      continue;
    }
    const double ref = vandermonde_reference(row.m, row.n);
    const double vs_table = std::abs(best->lambda - row.table) / row.table;
    const double vs_ref = std::abs(best->lambda - ref) / ref;
    o.detail << " (" << row.m << "," << row.n << ") " << best->lambda;
    const std::string tag = "(" + std::to_string(row.m) + "," + std::to_string(row.n) + ")";
    o.require(vs_table <= 1e-5, tag + " vs table");
    o.require(vs_ref <= 1e-6, tag + " vs reference");
  }
}

// ------------------------------------------------------------------ AC4

void epsilon_sweep(Outcome& o) {
  for (BTensorKind kind : {BTensorKind::ZIdentity, BTensorKind::HIdentity}) {
    const char* name = kind == BTensorKind::ZIdentity ? "Z" : "H";
    double previous = -std::numeric_limits<double>::infinity();
    o.detail << " " << name << ":";
    for (int p = 0; p <= 10; ++p) {
      const double eps = std::pow(10.0, -p);
      const HankelSpec spec = generate({Family::ParamEps, 4, 4, eps});
      SolverOptions opts;
      opts.extreme = Extreme::Min;
      opts.starts = 30;
      opts.seed = 5;
      const EigenResult* best = nullptr;
      const MultistartReport r = multistart(spec, kind, opts);
      best = r.best_result();
      if (!best) {
        o.require(false, std::string(name) + " no result");
        continue;
      }
      const double lambda = best->lambda;
      o.detail << " " << lambda;
      o.require(lambda < 0.0, std::string(name) + " eps=1e-" + std::to_string(p) + " not negative");
      o.require(lambda > previous, std::string(name) + " eps=1e-" + std::to_string(p) + " not increasing");
      previous = lambda;
    }
  }
  const HankelSpec spec = generate({Family::ParamEps, 4, 4, 0.0});
  SolverOptions opts;
  opts.extreme = Extreme::Min;
  opts.starts = 30;
  opts.seed = 5;
  const MultistartReport r = multistart(spec, BTensorKind::ZIdentity, opts);
  const EigenResult* best = r.best_result();
  o.require(best && best->lambda >= -1e-6, "eps=0 Z not PSD");
  if (best) o.detail << " Z(eps=0): " << best->lambda;
}

// ------------------------------------------------------------------ AC5

void hilbert_bounds_check(Outcome& o) {
  for (int m : {4, 6}) {
    for (Index n : {10, 100, 1000}) {
      const HankelSpec spec = generate({Family::Hilbert, m, n});
      const HilbertBounds bounds = hilbert_bounds(m, n);
      SolverOptions opts;
      opts.extreme = Extreme::Max;
      opts.starts = 5;
      opts.seed = 3;
      for (BTensorKind kind : {BTensorKind::ZIdentity, BTensorKind::HIdentity}) {
        const bool z = kind == BTensorKind::ZIdentity;
        const MultistartReport r = multistart(spec, kind, opts);
        const EigenResult* best = r.best_result();
        const double bound = z ? bounds.z_bound : bounds.h_bound;
        const std::string tag = std::string(z ? "Z" : "H") + "(" +
                                std::to_string(m) + "," + std::to_string(n) + ")";
        if (!best) {
          o.require(false, tag + " no result");
          continue;
        }
        o.detail << " " << tag << " " << best->lambda / bound;
        o.require(best->lambda > 0.0, tag + " not positive");
        o.require(best->lambda <= bound * (1.0 + 1e-8), tag + " above bound");
      }
    }
  }
  o.detail << " (ratios to bound)";
}

// ------------------------------------------------------------------ AC6

void invariant_suite(Outcome& o) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> dim(5, 50);
  long steps = 0;
  double worst_norm = 0.0, worst_len = 0.0, worst_tan = 0.0, worst_res = 0.0;
  int monotone_fail = 0, decrease_fail = 0;
  for (int instance = 0; instance < 20; ++instance) {
    const int m = instance % 2 == 0 ? 4 : 6;
    const Index n = dim(rng);
    const HankelSpec spec = generate({Family::Random, m, n, 0.0, rng()});
    const SpectralCache cache = make_cache(spec);
    const ReferenceTensor b =
        (instance / 2) % 2 == 0 ? BTensorKind::ZIdentity : BTensorKind::HIdentity;
    SolverOptions opts;
    opts.extreme = (instance / 4) % 2 == 0 ? Extreme::Min : Extreme::Max;
    opts.seed = rng();
    const double sign = opts.extreme == Extreme::Min ? 1.0 : -1.0;
    auto tangency = [](const ObjectiveEval& e, const Eigen::VectorXd& x) {
      return std::abs(x.dot(e.g)) / (1.0 + e.g.norm());
    };
    opts.on_step = [&](const StepView& s) {
      ++steps;
      worst_norm = std::max(worst_norm, std::abs(s.x_next.norm() - 1.0));
      if (!(sign * s.eval_next.f < sign * s.eval.f)) ++monotone_fail;
      const double gg = s.eval.g.squaredNorm();
      if (!(sign * (s.eval_next.f - s.eval.f) <= -opts.eta * s.alpha * gg)) ++decrease_fail;
      worst_len = std::max(worst_len, std::abs((s.x_next - s.x).norm() -
                                               step_length(s.eval.g, s.alpha)));
      worst_tan = std::max({worst_tan, tangency(s.eval, s.x),
                            tangency(s.eval_next, s.x_next)});
    };
    const EigenResult r = solve(spec, cache, b, opts);
    const ObjectiveEval e = evaluate(spec, cache, b, r.x);
    const double identity = e.bxm / m * e.g.norm();
    const double res = residual(spec, cache, b, r.x, r.lambda);
    worst_res = std::max(worst_res, std::abs(res - identity) /
                                        std::max(identity, 1e-300));
    worst_norm = std::max(worst_norm, std::abs(r.x.norm() - 1.0));
  }
  o.detail << steps << " steps; norm drift " << worst_norm << ", step-length err "
           << worst_len << ", tangency " << worst_tan << ", residual identity "
           << worst_res;
  o.require(worst_norm <= 1e-10, "unit norm");
  o.require(monotone_fail == 0, "strict monotonicity");
  o.require(decrease_fail == 0, "sufficient decrease");
  o.require(worst_len <= 1e-10, "step length");
  o.require(worst_tan <= 1e-12, "tangency");
  o.require(worst_res <= 1e-12, "residual identity");
}

// ------------------------------------------------------------------ AC7

void derivative_checks(Outcome& o) {
  std::mt19937_64 rng(7);
  const int m = 4;
  const Index n = 5;
  double worst_g = 0.0, worst_h = 0.0;
  for (BTensorKind kind : {BTensorKind::ZIdentity, BTensorKind::HIdentity}) {
    const HankelSpec spec(m, n, gaussian(HankelSpec::generator_length(m, n), rng));
    const SpectralCache cache = make_cache(spec);
    const auto dense = oracle::materialize(spec);
    const ReferenceTensor b = kind;
    const Eigen::VectorXd x = gaussian(n, rng).normalized();
    const ObjectiveEval e = evaluate(spec, cache, b, x);

    const double h = 1e-5;
    for (int t = 0; t < 10; ++t) {
      Eigen::VectorXd d = gaussian(n, rng);
      d -= d.dot(x) * x;
      d.normalize();
      auto f_at = [&](double s) {
        const Eigen::VectorXd y = std::cos(s) * x + std::sin(s) * d;
        return evaluate(spec, cache, b, y.normalized()).f;
      };
      const double fd = (f_at(h) - f_at(-h)) / (2 * h);
      const double exact = e.g.dot(d);
      worst_g = std::max(worst_g, std::abs(fd - exact) / std::abs(exact));
    }

    const Eigen::MatrixXd hess = oracle::dense_hessian(dense, kind, x);
    Eigen::MatrixXd fd(n, n);
    const double hh = 1e-6;
    for (Index j = 0; j < n; ++j) {
      Eigen::VectorXd step = Eigen::VectorXd::Zero(n);
      step[j] = hh;
      fd.col(j) = (oracle::dense_gradient(dense, kind, x + step) -
                   oracle::dense_gradient(dense, kind, x - step)) /
                  (2 * hh);
    }
    worst_h = std::max(worst_h, (hess - fd).norm() / hess.norm());
  }
  o.detail << "gradient rel err " << worst_g << ", Hessian rel err " << worst_h;
  o.require(worst_g <= 1e-6, "gradient");
  o.require(worst_h <= 1e-5, "Hessian");
}

// ------------------------------------------------------------------ AC8

void baseline_agreement(Outcome& o) {
  struct Case {
    const char* name;
    FamilySpec family;
    Extreme extreme;
  };
  const Case cases[] = {{"sine min", {Family::Sin, 4, 5}, Extreme::Min},
                        {"vandermonde max", {Family::Vandermonde, 4, 10}, Extreme::Max}};
  for (const Case& c : cases) {
    const HankelSpec spec = generate(c.family);
    SolverOptions opts;
    opts.extreme = c.extreme;
    opts.starts = 20;
    opts.seed = 8;
    const MultistartReport acsa = multistart(spec, BTensorKind::ZIdentity, opts);
    const MultistartReport power = multistart(spec, BTensorKind::ZIdentity, opts, 0, {},
                                              Method::PowerMethod);
    if (!acsa.best_result() || !power.best_result()) {
      o.require(false, std::string(c.name) + " no result");
      continue;
    }
    const double a = acsa.best_result()->lambda;
    const double p = power.best_result()->lambda;
    o.detail << " " << c.name << ": acsa " << a << " power " << p << ";";
    o.require(std::abs(a - p) <= 1e-3, c.name);
  }
}

// ------------------------------------------------------------------ AC9

double median_product_time(Index n, int reps) {
  const HankelSpec spec = generate({Family::Vandermonde, 4, n});
  const SpectralCache cache = make_cache(spec);
  const Eigen::VectorXd x = random_unit_vector(n, 9);
  volatile double sink = hankel_xm1(cache, spec, x)[0];  // warm-up
  std::vector<double> times;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    const Eigen::VectorXd y = hankel_xm1(cache, spec, x);
    times.push_back(std::chrono::duration<double>(Clock::now() - t0).count());
    sink = y[0];
  }
  (void)sink;
  std::sort(times.begin(), times.end());
  return 0.5 * (times[reps / 2 - 1] + times[reps / 2]);
}

void scaling(Outcome& o) {
  const double small = median_product_time(Index{1} << 16, 20);
  const double large = median_product_time(Index{1} << 17, 20);
  o.detail << "median " << small << " s at 2^16, " << large << " s at 2^17, ratio "
           << large / small;
  o.require(large <= 3.0 * small, "ratio above 3");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_s;  // 0: no limit
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"AC1", "FFT products match dense enumeration", 60, oracle_equivalence},
      {"AC2", "sine tensor minimum Z-eigenvalues", 30, sine_example},
      {"AC3", "Vandermonde largest Z-eigenvalues", 120, vandermonde_table},
      {"AC4", "parameterized tensor epsilon sweep", 120, epsilon_sweep},
      {"AC5", "Hilbert eigenvalue bounds", 180, hilbert_bounds_check},
      {"AC6", "solver invariants", 120, invariant_suite},
      {"AC7", "gradient and Hessian derivative checks", 30, derivative_checks},
      {"AC8", "shifted power method agreement", 60, baseline_agreement},
      {"AC9", "product time scaling", 0, scaling},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0) o.require(secs <= c.limit_s, "over time limit");
    if (!o.pass) ++failed;
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
