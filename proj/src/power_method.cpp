#include "hankel/power_method.hpp"

#include "hankel/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hankel {

Eigen::MatrixXd hankel_xm2_matrix(const SpectralCache& cache,
                                  const HankelSpec& spec,
                                  const Eigen::VectorXd& x) {
  const Eigen::VectorXd w = hankel_xm2_generator(cache, spec, x);
  const Index n = spec.dim();
  Eigen::MatrixXd out(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = w[i + j];
  }
  return out;
}

EigenResult power_method_baseline(const HankelSpec& spec, BTensorKind kind,
                                  const SolverOptions& opts,
                                  const std::optional<Eigen::VectorXd>& x1,
                                  const PowerMethodOptions& pm) {
  require_even_order(spec);
  return power_method_baseline(spec, make_cache(spec), kind, opts, x1, pm);
}

EigenResult power_method_baseline(const HankelSpec& spec,
                                  const SpectralCache& cache, BTensorKind kind,
                                  const SolverOptions& opts,
                                  const std::optional<Eigen::VectorXd>& x1,
                                  const PowerMethodOptions& pm) {
  require_even_order(spec);
  opts.validate();
  const Index n = spec.dim();
  if (n > pm.max_dim) {
    throw std::invalid_argument("power method baseline is limited to dimension " +
                                std::to_string(pm.max_dim) + ", got " +
                                std::to_string(n));
  }
  const int m = spec.order();
  const double md = m;
  const double sign = opts.extreme == Extreme::Max ? 1.0 : -1.0;
  const ReferenceTensor b(kind);

  Eigen::VectorXd x;
  if (x1) {
    if (x1->size() != n || !(x1->norm() > 0.0)) {
      throw std::invalid_argument("initial point must be nonzero with length " +
                                  std::to_string(n));
    }
    x = x1->normalized();
  } else {
    x = random_unit_vector(n, opts.seed);
  }

  const double stop_tol = opts.tol_rel * std::sqrt(static_cast<double>(n));
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  EigenResult result;
  ObjectiveEval eval = evaluate(spec, cache, b, x);
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

    // Hessian of ||x||^m f(x) at a unit x.
    Eigen::MatrixXd hess = quotient_hessian(
        m, eval.hxm, eval.hxm1, hankel_xm2_matrix(cache, spec, x), eval.bxm,
        eval.bxm1, b_xm2(kind, m, x));
    hess += md * (x * eval.g.transpose() + eval.g * x.transpose());
    hess += eval.f * md * (identity + (md - 2.0) * (x * x.transpose()));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(
        sign * hess, Eigen::EigenvaluesOnly);
    const double lowest = eig.eigenvalues()[0];
    const double shift = sign * std::max(0.0, (pm.tau - lowest) / md);

    Eigen::VectorXd next =
        sign * (eval.hxm1 - eval.f * eval.bxm1 + (eval.f + shift) * eval.bxm * x);
    // Even order: x and -x are the same eigenvector; keep the orientation.
    if (next.dot(x) < 0.0) next = -next;
    const double norm = next.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      result.termination = Termination::LinesearchStall;
      break;
    }
    next /= norm;

    ++result.iterations;
    result.trace.push_back({result.iterations, eval.f, grad_norm, shift, 0});
    const double previous = eval.f;
    x = std::move(next);
    eval = evaluate(spec, cache, b, x);
    if (std::abs(eval.f - previous) / std::max(1.0, std::abs(previous)) <
        stop_tol) {
      result.termination = Termination::Converged;
      break;
    }
  }
  result.trace.push_back({result.iterations + 1, eval.f, eval.g.norm(), 0.0, 0});
  result.lambda = eval.f;
  result.residual = residual(spec, cache, b, x, eval.f);
  result.x = std::move(x);
  return result;
}

}  // namespace hankel
