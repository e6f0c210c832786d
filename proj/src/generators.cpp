#include "hankel/generators.hpp"

#include "hankel/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace hankel {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Sin: return "sin";
    case Family::ParamEps: return "param";
    case Family::Vandermonde: return "vandermonde";
    case Family::Hilbert: return "hilbert";
    case Family::Random: return "random";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Sin, Family::ParamEps, Family::Vandermonde,
                   Family::Hilbert, Family::Random}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (family == Family::ParamEps && (order != 4 || dim != 4)) {
    throw InvalidSpecError("the param family is fourth order, four dimensional;"
                           " got order " + std::to_string(order) +
                           " and dimension " + std::to_string(dim));
  }
  if (order < 2) {
    throw InvalidSpecError("tensor order must be at least 2");
  }
  if (dim < 1) {
    throw InvalidSpecError("tensor dimension must be at least 1");
  }
  if (family == Family::Vandermonde && dim < 2) {
    throw InvalidSpecError("the Vandermonde family needs dimension >= 2");
  }
  if (!std::isfinite(epsilon)) {
    throw InvalidSpecError("epsilon must be finite");
  }
}

HankelSpec generate(const FamilySpec& fs) {
  fs.validate();
  const Index len = HankelSpec::generator_length(fs.order, fs.dim);
  Eigen::VectorXd v(len);
  switch (fs.family) {
    case Family::Sin:
      for (Index k = 0; k < len; ++k) {
        v[k] = std::sin(static_cast<double>(fs.order + k));
      }
      break;
    case Family::ParamEps:
      v << 8.0 - fs.epsilon, 0, 2, 0, 1, 0, 1, 0, 1, 0, 2, 0, 8.0 - fs.epsilon;
      break;
    case Family::Vandermonde: {
      const double n = static_cast<double>(fs.dim);
      const double a = n / (n - 1.0);
      const double b = (1.0 - n) / n;
      // |b| < 1, so b^k decays to zero without harm.
      double ak = 1.0, bk = 1.0;
      for (Index k = 0; k < len; ++k) {
        v[k] = ak + bk;
        ak *= a;
        bk *= b;
      }
      break;
    }
    case Family::Hilbert:
      for (Index k = 0; k < len; ++k) v[k] = 1.0 / static_cast<double>(k + 1);
      break;
    case Family::Random: {
      std::mt19937_64 rng(fs.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      for (Index k = 0; k < len; ++k) v[k] = normal(rng);
      break;
    }
  }
  return HankelSpec(fs.order, fs.dim, std::move(v));
}

double vandermonde_reference(int order, Index dim) {
  if (dim % 2 != 0 || dim < 2) {
    throw InvalidSpecError("the Vandermonde reference value needs an even "
                           "dimension, got " + std::to_string(dim));
  }
  if (order % 2 != 0 || order < 2) {
    throw InvalidSpecError("the Vandermonde reference value needs an even "
                           "order, got " + std::to_string(order));
  }
  // ||u1||^2 = (a^{2n} - 1) / (a^2 - 1) with a = 1 + 1/(n-1); both factors
  // are formed without cancellation.
  const double n = static_cast<double>(dim);
  const double log_a = std::log1p(1.0 / (n - 1.0));
  const double numer = std::expm1(2.0 * n * log_a);
  const double denom = (2.0 * n - 1.0) / ((n - 1.0) * (n - 1.0));
  const double sq_norm = numer / denom;
  return std::pow(sq_norm, order / 2);
}

Eigen::VectorXd vandermonde_eigenvector(Index dim) {
  const double a = static_cast<double>(dim) / static_cast<double>(dim - 1);
  Eigen::VectorXd u(dim);
  double ak = 1.0;
  for (Index i = 0; i < dim; ++i) {
    u[i] = ak;
    ak *= a;
  }
  return u.normalized();
}

HilbertBounds hilbert_bounds(int order, Index dim) {
  const double n = static_cast<double>(dim);
  const double s = std::sin(std::numbers::pi / n);
  return {std::pow(n, order / 2.0) * s, std::pow(n, order - 1.0) * s};
}

}  // namespace hankel
