#pragma once

#include "hankel/hankel_spec.hpp"
#include "hankel/objective.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace hankel {

/// Brute-force reference path. Everything here enumerates all index tuples
/// in odometer order; nothing exploits symmetry or structure.
namespace oracle {

inline constexpr std::size_t kDefaultEntryCap = 10'000'000;

/// A fully materialized order-m, dimension-n tensor, row-major over the
/// multi-index (last index fastest).
struct DenseSymmetricTensor {
  int order = 0;
  Index dim = 0;
  std::vector<double> entries;

  /// Entry at a 0-based multi-index of length `order`.
  double at(const std::vector<Index>& index) const;
};

/// Number of entries n^m, or cap+1 if that would exceed `cap`.
std::size_t entry_count(int order, Index dim, std::size_t cap);

/// Writes out every h_{i1..im} = v[i1+...+im]. Throws CapExceededError
/// when n^m > cap.
DenseSymmetricTensor materialize(const HankelSpec& spec,
                                 std::size_t cap = kDefaultEntryCap);

double dense_xm(const DenseSymmetricTensor& t, const Eigen::VectorXd& x);
Eigen::VectorXd dense_xm1(const DenseSymmetricTensor& t,
                          const Eigen::VectorXd& x);
Eigen::MatrixXd dense_xm2(const DenseSymmetricTensor& t,
                          const Eigen::VectorXd& x);

/// Euclidean Hessian of f(x) = T x^m / B x^m (see quotient_hessian) from
/// dense contractions. Throws InvalidReferenceTensorError if
/// B x^m <= 0.
Eigen::MatrixXd dense_hessian(const DenseSymmetricTensor& t, BTensorKind b,
                              const Eigen::VectorXd& x);

/// The gradient of the same quotient from dense contractions; x need not be
/// a unit vector.
Eigen::VectorXd dense_gradient(const DenseSymmetricTensor& t, BTensorKind b,
                               const Eigen::VectorXd& x);

}  // namespace oracle
}  // namespace hankel
