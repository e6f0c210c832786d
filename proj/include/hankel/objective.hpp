#pragma once

#include "hankel/fft_products.hpp"
#include "hankel/hankel_spec.hpp"

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <string>

namespace hankel {

/// Positive definite reference tensors with closed-form products.
///   ZIdentity (E): E x^{m-1} = ||x||^{m-2} x, giving Z-eigenpairs.
///   HIdentity (I): (I x^{m-1})_i = x_i^{m-1}, giving H-eigenpairs.
enum class BTensorKind { ZIdentity, HIdentity };

double b_xm(BTensorKind kind, int m, const Eigen::VectorXd& x);
Eigen::VectorXd b_xm1(BTensorKind kind, int m, const Eigen::VectorXd& x);
/// B x^{m-2} as a dense n x n matrix; only the dense Hessian and the power
/// method baseline need it.
Eigen::MatrixXd b_xm2(BTensorKind kind, int m, const Eigen::VectorXd& x);

/// The B in H x^{m-1} = lambda B x^{m-1}.
///
/// Either one of the built-in kinds or a user-supplied pair of callables
/// computing B x^m and B x^{m-1}; the caller vouches for positive
/// definiteness of custom tensors.
class ReferenceTensor {
 public:
  using XmFn = std::function<double(int, const Eigen::VectorXd&)>;
  using Xm1Fn = std::function<Eigen::VectorXd(int, const Eigen::VectorXd&)>;

  ReferenceTensor(BTensorKind kind);  // NOLINT(google-explicit-constructor)
  ReferenceTensor(std::string name, XmFn xm, Xm1Fn xm1);

  double xm(int m, const Eigen::VectorXd& x) const;
  Eigen::VectorXd xm1(int m, const Eigen::VectorXd& x) const;

  /// Set for the built-in kinds, empty for custom tensors.
  std::optional<BTensorKind> kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  std::optional<BTensorKind> kind_;
  std::string name_;
  XmFn xm_;
  Xm1Fn xm1_;
};

/// Everything known about f(x) = H x^m / B x^m at one point of the sphere.
struct ObjectiveEval {
  double f = 0.0;  ///< the running eigenvalue estimate
  Eigen::VectorXd g;  ///< gradient, tangent to the sphere at x
  double hxm = 0.0;
  double bxm = 0.0;
  Eigen::VectorXd hxm1;
  Eigen::VectorXd bxm1;
};

/// f and its gradient g = (m / B x^m) (H x^{m-1} - f B x^{m-1}).
/// The radial rounding component is projected out, so x'g = 0 to machine
/// precision.
///
/// x must be a unit vector (to 1e-8). Throws InvalidReferenceTensorError
/// when B x^m <= 0, which I produces for odd m.
ObjectiveEval evaluate(const HankelSpec& spec, const SpectralCache& cache,
                       const ReferenceTensor& b, const Eigen::VectorXd& x);

/// Euclidean Hessian of H x^m / B x^m assembled from the contractions
///
///   m(m-1) H x^{m-2} / B x^m
///   - [m(m-1) H x^m B x^{m-2} + m^2 (H x^{m-1} oo B x^{m-1})] / (B x^m)^2
///   + m^2 H x^m (B x^{m-1} oo B x^{m-1}) / (B x^m)^3
///
/// where a oo b = a b^T + b a^T.
Eigen::MatrixXd quotient_hessian(int m, double hxm, const Eigen::VectorXd& hxm1,
                                 const Eigen::MatrixXd& hxm2, double bxm,
                                 const Eigen::VectorXd& bxm1,
                                 const Eigen::MatrixXd& bxm2);

/// ||H x^{m-1} - lambda B x^{m-1}||.
double residual(const HankelSpec& spec, const SpectralCache& cache,
                const ReferenceTensor& b, const Eigen::VectorXd& x,
                double lambda);

}  // namespace hankel
