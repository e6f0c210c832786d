#pragma once

#include "hankel/fft_products.hpp"
#include "hankel/hankel_spec.hpp"
#include "hankel/objective.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace hankel {

enum class Extreme { Min, Max };

enum class Termination { Converged, MaxIter, LinesearchStall, ZeroGradient };

std::string_view to_string(Extreme e);
std::string_view to_string(Termination t);

/// One accepted step of the curvilinear search, with every vector involved.
/// Handed to SolverOptions::on_step for diagnostics; references are only
/// valid during the callback.
struct StepView {
  int k;
  const Eigen::VectorXd& x;
  const ObjectiveEval& eval;
  const Eigen::VectorXd& x_next;
  const ObjectiveEval& eval_next;
  double alpha;
  int backtracks;
};

struct SolverOptions {
  double eta = 1e-3;         ///< sufficient-decrease constant, in (0, 1/2]
  double beta = 0.5;         ///< backtracking factor, in (0, 1)
  double alpha_max = 1e4;    ///< cap on the initial step of each search
  double alpha_1 = 1.0;      ///< initial step of the first search
  double tol_rel = 1e-12;    ///< stop once |dl| / max(1, |l|) < tol_rel sqrt(n)
  double grad_floor = 1e-13; ///< ||g|| <= grad_floor max(1, |l|) ends the run
  int max_iter = 1000;
  int max_backtracks = 60;
  Extreme extreme = Extreme::Min;
  int starts = 1;
  std::uint64_t seed = 0;
  std::function<void(const StepView&)> on_step;

  /// Throws std::invalid_argument naming the first bad field.
  void validate() const;
};

struct IterationRecord {
  int k = 0;
  double lambda = 0.0;
  double grad_norm = 0.0;
  double alpha = 0.0;   ///< accepted step; 0 on the terminal row
  int backtracks = 0;
};

struct EigenResult {
  double lambda = 0.0;
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
  Termination termination = Termination::MaxIter;
  std::vector<IterationRecord> trace;
};

/// The Cayley-transform update on the unit sphere,
///
///   x+ = [(1 - a^2 |p|^2) x -/+ 2 a p] / (1 + a^2 |p|^2),
///
/// with the minus sign for Min and plus for Max. p must be tangent at x.
/// The result is renormalized if its norm drifts more than 1e-14 from one.
Eigen::VectorXd cayley_step(const Eigen::VectorXd& x, const Eigen::VectorXd& p,
                            double alpha, Extreme extreme);

/// ||cayley_step(x, p, alpha) - x|| in closed form: 2 a |p| / sqrt(1 + a^2 |p|^2).
double step_length(const Eigen::VectorXd& p, double alpha);

struct SearchOutcome {
  bool accepted = false;
  double alpha = 0.0;
  Eigen::VectorXd x;
  ObjectiveEval eval;
  int backtracks = 0;
};

/// Backtracks alpha = beta^l * alpha_bar from l = 0 until
///
///   f(x+) <= f(x) - eta alpha ||g||^2   (Min)
///   f(x+) >= f(x) + eta alpha ||g||^2   (Max)
///
/// also requiring a strict change in f so that the iterates stay strictly
/// monotone in floating point. After opts.max_backtracks reductions the
/// search gives up and returns accepted == false.
SearchOutcome curvilinear_search(const HankelSpec& spec,
                                 const SpectralCache& cache,
                                 const ReferenceTensor& b,
                                 const Eigen::VectorXd& x,
                                 const ObjectiveEval& eval, double alpha_bar,
                                 const SolverOptions& opts);

/// Next initial step ||dx|| / ||dp||, clamped to [1e-10, alpha_max]. Returns
/// `previous` when ||dp|| == 0.
double bb_initial_step(const Eigen::VectorXd& dx, const Eigen::VectorXd& dp,
                       double alpha_max, double previous);

/// A Gaussian vector drawn from `seed`, normalized. Zero draws are redrawn.
Eigen::VectorXd random_unit_vector(Index n, std::uint64_t seed);

/// Curvilinear search for an extreme generalized eigenpair of an even-order
/// Hankel tensor. Without x1 the start is random_unit_vector(n, opts.seed).
///
/// The trace has one row per accepted step (the point it started from) and a
/// final row for the returned point, so its lambda column is strictly
/// monotone in the direction of opts.extreme.
EigenResult solve(const HankelSpec& spec, const ReferenceTensor& b,
                  const SolverOptions& opts,
                  const std::optional<Eigen::VectorXd>& x1 = std::nullopt);

/// Same, reusing an existing spectral cache.
EigenResult solve(const HankelSpec& spec, const SpectralCache& cache,
                  const ReferenceTensor& b, const SolverOptions& opts,
                  const std::optional<Eigen::VectorXd>& x1 = std::nullopt);

/// Throws UnsupportedOrderError for odd orders.
void require_even_order(const HankelSpec& spec);

}  // namespace hankel
