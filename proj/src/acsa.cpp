#include "hankel/acsa.hpp"

#include "hankel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace hankel {

std::string_view to_string(Extreme e) {
  return e == Extreme::Min ? "min" : "max";
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::Converged: return "CONVERGED";
    case Termination::MaxIter: return "MAX_ITER";
    case Termination::LinesearchStall: return "LINESEARCH_STALL";
    case Termination::ZeroGradient: return "ZERO_GRADIENT";
  }
  return "UNKNOWN";
}

void SolverOptions::validate() const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("invalid solver option: " + what);
  };
  if (!(eta > 0.0 && eta <= 0.5)) fail("eta must lie in (0, 1/2]");
  if (!(beta > 0.0 && beta < 1.0)) fail("beta must lie in (0, 1)");
  if (!(alpha_1 > 0.0)) fail("alpha_1 must be positive");
  if (!(alpha_1 <= alpha_max)) fail("alpha_1 must not exceed alpha_max");
  if (!(tol_rel >= 0.0)) fail("tol_rel must be non-negative");
  if (!(grad_floor >= 0.0)) fail("grad_floor must be non-negative");
  if (max_iter < 0) fail("max_iter must be non-negative");
  if (max_backtracks < 0) fail("max_backtracks must be non-negative");
  if (starts < 1) fail("starts must be at least 1");
}

void require_even_order(const HankelSpec& spec) {
  if (spec.order() % 2 != 0) {
    throw UnsupportedOrderError(
        "eigenvalue solvers need an even tensor order, got " +
        std::to_string(spec.order()));
  }
}

Eigen::VectorXd cayley_step(const Eigen::VectorXd& x, const Eigen::VectorXd& p,
                            double alpha, Extreme extreme) {
  const double t2 = alpha * alpha * p.squaredNorm();
  const double denom = 1.0 + t2;
  const double c = (1.0 - t2) / denom;
  const double s = 2.0 * alpha / denom;
  Eigen::VectorXd next = extreme == Extreme::Min ? Eigen::VectorXd(c * x - s * p)
                                                 : Eigen::VectorXd(c * x + s * p);
  const double norm = next.norm();
  if (std::abs(norm - 1.0) > 1e-14) next /= norm;
  return next;
}

double step_length(const Eigen::VectorXd& p, double alpha) {
  const double t = alpha * p.norm();
  return 2.0 * t / std::sqrt(1.0 + t * t);
}

SearchOutcome curvilinear_search(const HankelSpec& spec,
                                 const SpectralCache& cache,
                                 const ReferenceTensor& b,
                                 const Eigen::VectorXd& x,
                                 const ObjectiveEval& eval, double alpha_bar,
                                 const SolverOptions& opts) {
  const double g2 = eval.g.squaredNorm();
  double alpha = alpha_bar;
  for (int l = 0; l <= opts.max_backtracks; ++l) {
    Eigen::VectorXd next = cayley_step(x, eval.g, alpha, opts.extreme);
    ObjectiveEval next_eval = evaluate(spec, cache, b, next);
    const double bound = opts.eta * alpha * g2;
    const bool ok = opts.extreme == Extreme::Min
                        ? next_eval.f <= eval.f - bound && next_eval.f < eval.f
                        : next_eval.f >= eval.f + bound && next_eval.f > eval.f;
    if (ok) {
      return {true, alpha, std::move(next), std::move(next_eval), l};
    }
    alpha *= opts.beta;
  }
  return {false, 0.0, x, eval, opts.max_backtracks};
}

double bb_initial_step(const Eigen::VectorXd& dx, const Eigen::VectorXd& dp,
                       double alpha_max, double previous) {
  const double dp_norm = dp.norm();
  if (dp_norm == 0.0) return previous;
  return std::clamp(dx.norm() / dp_norm, 1e-10, alpha_max);
}

Eigen::VectorXd random_unit_vector(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd x(n);
  double norm = 0.0;
  while (norm == 0.0) {
    for (Index i = 0; i < n; ++i) x[i] = normal(rng);
    norm = x.norm();
  }
  return x / norm;
}

EigenResult solve(const HankelSpec& spec, const ReferenceTensor& b,
                  const SolverOptions& opts,
                  const std::optional<Eigen::VectorXd>& x1) {
  require_even_order(spec);
  return solve(spec, make_cache(spec), b, opts, x1);
}

EigenResult solve(const HankelSpec& spec, const SpectralCache& cache,
                  const ReferenceTensor& b, const SolverOptions& opts,
                  const std::optional<Eigen::VectorXd>& x1) {
  require_even_order(spec);
  opts.validate();
  const Index n = spec.dim();

  Eigen::VectorXd x;
  if (x1) {
    if (x1->size() != n) {
      throw std::invalid_argument("initial point has length " +
                                  std::to_string(x1->size()) + ", expected " +
                                  std::to_string(n));
    }
    const double norm = x1->norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw std::invalid_argument("initial point must be finite and nonzero");
    }
    x = *x1 / norm;
  } else {
    x = random_unit_vector(n, opts.seed);
  }

  ObjectiveEval eval = evaluate(spec, cache, b, x);
  const double stop_tol = opts.tol_rel * std::sqrt(static_cast<double>(n));
  double alpha_bar = opts.alpha_1;

  EigenResult result;
  int stall_backtracks = 0;
  while (true) {
    const double grad_norm = eval.g.norm();
    if (grad_norm <= opts.grad_floor * std::max(1.0, std::abs(eval.f))) {
      result.termination = Termination::ZeroGradient;
      break;
    }
    if (result.iterations >= opts.max_iter) {
      result.termination = Termination::MaxIter;
      break;
    }
    SearchOutcome step =
        curvilinear_search(spec, cache, b, x, eval, alpha_bar, opts);
    if (!step.accepted) {
      result.termination = Termination::LinesearchStall;
      stall_backtracks = step.backtracks;
      break;
    }
    ++result.iterations;
    result.trace.push_back(
        {result.iterations, eval.f, grad_norm, step.alpha, step.backtracks});
    if (opts.on_step) {
      opts.on_step({result.iterations, x, eval, step.x, step.eval, step.alpha,
                    step.backtracks});
    }

    alpha_bar = bb_initial_step(step.x - x, step.eval.g - eval.g,
                                opts.alpha_max, alpha_bar);
    const double previous = eval.f;
    x = std::move(step.x);
    eval = std::move(step.eval);
    if (std::abs(eval.f - previous) / std::max(1.0, std::abs(previous)) <
        stop_tol) {
      result.termination = Termination::Converged;
      break;
    }
  }

  result.trace.push_back(
      {result.iterations + 1, eval.f, eval.g.norm(), 0.0, stall_backtracks});
  result.lambda = eval.f;
  result.residual = residual(spec, cache, b, x, eval.f);
  result.x = std::move(x);
  return result;
}

}  // namespace hankel
