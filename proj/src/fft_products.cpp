#include "hankel/fft_products.hpp"

#include "fourier_plan.hpp"
#include "hankel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace hankel {

namespace {

using detail::ComplexVector;

constexpr double kImagTolerance = 1e-8;

void check_inputs(const SpectralCache& cache, const HankelSpec& spec,
                  const Eigen::VectorXd& x) {
  if (cache.embedding_size() != spec.embedding_size() ||
      cache.order() != spec.order() || cache.dim() != spec.dim()) {
    throw std::invalid_argument("spectral cache was built for another tensor");
  }
  if (x.size() != spec.dim()) {
    throw std::invalid_argument("vector has length " + std::to_string(x.size()) +
                                ", tensor dimension is " +
                                std::to_string(spec.dim()));
  }
}

ComplexVector padded_spectrum(const SpectralCache& cache,
                              const Eigen::VectorXd& x) {
  ComplexVector y(static_cast<std::size_t>(cache.embedding_size()));
  for (Index i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(i)] = x[i];
  ComplexVector fy;
  cache.plan().forward(y, fy);
  return fy;
}

// z^p by repeated multiplication; p >= 0.
std::complex<double> int_power(std::complex<double> z, int p) {
  std::complex<double> r(1.0, 0.0);
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}

void check_scalar(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > kImagTolerance * std::max(1.0, std::abs(z.real()))) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": imaginary residue " << z.imag() << " against real part "
       << z.real() << " (embedding size mismatch?)";
    throw NumericalConsistencyError(os.str());
  }
}

Eigen::VectorXd real_head(const ComplexVector& z, Index count,
                          const char* what) {
  Eigen::VectorXd out(count);
  double scale = 1.0;
  double worst = 0.0;
  for (Index i = 0; i < count; ++i) {
    const auto& zi = z[static_cast<std::size_t>(i)];
    out[i] = zi.real();
    scale = std::max(scale, std::abs(zi.real()));
    worst = std::max(worst, std::abs(zi.imag()));
  }
  if (worst > kImagTolerance * scale) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": imaginary residue " << worst << " against scale " << scale
       << " (embedding size mismatch?)";
    throw NumericalConsistencyError(os.str());
  }
  return out;
}

}  // namespace

SpectralCache make_cache(const HankelSpec& spec) {
  SpectralCache cache;
  cache.order_ = spec.order();
  cache.dim_ = spec.dim();
  const auto len = static_cast<std::size_t>(spec.embedding_size());
  cache.plan_ = std::make_shared<const detail::FourierPlan>(len);
  ComplexVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = spec.generator()[static_cast<Index>(i)];
  }
  cache.plan_->inverse(v, cache.diagonal_);
  return cache;
}

HankelProducts hankel_products(const SpectralCache& cache,
                               const HankelSpec& spec,
                               const Eigen::VectorXd& x) {
  check_inputs(cache, spec, x);
  const int m = spec.order();
  const ComplexVector fy = padded_spectrum(cache, x);
  const auto& d = cache.diagonal();

  ComplexVector w(fy.size());
  std::complex<double> xm(0.0, 0.0);
  for (std::size_t k = 0; k < fy.size(); ++k) {
    w[k] = d[k] * int_power(fy[k], m - 1);
    xm += w[k] * fy[k];
  }
  check_scalar(xm, "H x^m");

  ComplexVector cw;
  cache.plan().forward(w, cw);
  return {xm.real(), real_head(cw, spec.dim(), "H x^{m-1}")};
}

double hankel_xm(const SpectralCache& cache, const HankelSpec& spec,
                 const Eigen::VectorXd& x) {
  check_inputs(cache, spec, x);
  const int m = spec.order();
  const ComplexVector fy = padded_spectrum(cache, x);
  const auto& d = cache.diagonal();
  std::complex<double> xm(0.0, 0.0);
  for (std::size_t k = 0; k < fy.size(); ++k) {
    xm += d[k] * int_power(fy[k], m);
  }
  check_scalar(xm, "H x^m");
  return xm.real();
}

Eigen::VectorXd hankel_xm1(const SpectralCache& cache, const HankelSpec& spec,
                           const Eigen::VectorXd& x) {
  check_inputs(cache, spec, x);
  const int m = spec.order();
  const ComplexVector fy = padded_spectrum(cache, x);
  const auto& d = cache.diagonal();
  ComplexVector w(fy.size());
  for (std::size_t k = 0; k < fy.size(); ++k) {
    w[k] = d[k] * int_power(fy[k], m - 1);
  }
  ComplexVector cw;
  cache.plan().forward(w, cw);
  return real_head(cw, spec.dim(), "H x^{m-1}");
}

Eigen::VectorXd hankel_xm2_generator(const SpectralCache& cache,
                                     const HankelSpec& spec,
                                     const Eigen::VectorXd& x) {
  check_inputs(cache, spec, x);
  const int m = spec.order();
  const ComplexVector fy = padded_spectrum(cache, x);
  const auto& d = cache.diagonal();
  ComplexVector w(fy.size());
  for (std::size_t k = 0; k < fy.size(); ++k) {
    w[k] = d[k] * int_power(fy[k], m - 2);
  }
  ComplexVector cw;
  cache.plan().forward(w, cw);
  // i + j <= 2n-2 < l for every m >= 2, so no index wraps around.
  return real_head(cw, 2 * spec.dim() - 1, "H x^{m-2}");
}

}  // namespace hankel
