#pragma once

#include "hankel/acsa.hpp"
#include "hankel/fft_products.hpp"
#include "hankel/hankel_spec.hpp"
#include "hankel/objective.hpp"

#include <Eigen/Core>

#include <optional>

namespace hankel {

struct PowerMethodOptions {
  /// Target lower bound on the eigenvalues of the shifted, sign-adjusted
  /// Hessian; larger values converge more slowly but more safely.
  double tau = 1e-6;
  /// The adaptive shift needs a dense n x n eigenvalue problem per step, so
  /// the baseline refuses dimensions above this.
  Index max_dim = 4096;
};

/// Adaptive shifted symmetric higher-order power method for generalized
/// eigenpairs, used to cross-check ACSA.
///
/// Each step forms the Hessian of the degree-m extension ||x||^m f(x),
/// picks the smallest shift making it (sign-adjusted) convex, and
/// normalizes the shifted gradient. H x^{m-1}, H x^{m-2} come from the same
/// FFT embedding as ACSA. Uses opts.extreme, seed, max_iter, tol_rel and
/// grad_floor; the line-search fields are ignored. Trace rows store the shift
/// in `alpha`.
EigenResult power_method_baseline(
    const HankelSpec& spec, BTensorKind kind, const SolverOptions& opts,
    const std::optional<Eigen::VectorXd>& x1 = std::nullopt,
    const PowerMethodOptions& pm = {});

EigenResult power_method_baseline(
    const HankelSpec& spec, const SpectralCache& cache, BTensorKind kind,
    const SolverOptions& opts,
    const std::optional<Eigen::VectorXd>& x1 = std::nullopt,
    const PowerMethodOptions& pm = {});

/// H x^{m-2} as a dense matrix, from its Hankel generator.
Eigen::MatrixXd hankel_xm2_matrix(const SpectralCache& cache,
                                  const HankelSpec& spec,
                                  const Eigen::VectorXd& x);

}  // namespace hankel
