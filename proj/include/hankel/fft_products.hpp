#pragma once

#include "hankel/hankel_spec.hpp"

#include <Eigen/Core>

#include <complex>
#include <memory>
#include <vector>

namespace hankel {

namespace detail {
class FourierPlan;
}

/// Spectral data of the anti-circulant embedding of a Hankel tensor.
///
/// The order-m, l-dimensional anti-circulant tensor C with generator v is
/// diagonalized by the l-point Fourier matrix, C = D F^m, with
/// diag(D) = ifft(v). Every Hankel tensor is the leading n x ... x n block of
/// its C, so both contractions reduce to a handful of length-l FFTs.
///
/// Convention: forward DFT unnormalized, inverse DFT carries 1/l.
///
/// Immutable after construction and cheap to copy; copies share the FFT
/// plans. Safe to use from several threads at once.
class SpectralCache {
 public:
  Index embedding_size() const { return static_cast<Index>(diagonal_.size()); }
  int order() const { return order_; }
  Index dim() const { return dim_; }

  /// ifft(v), the diagonal of D.
  const std::vector<std::complex<double>>& diagonal() const { return diagonal_; }

  const detail::FourierPlan& plan() const { return *plan_; }

 private:
  friend SpectralCache make_cache(const HankelSpec& spec);

  int order_ = 0;
  Index dim_ = 0;
  std::vector<std::complex<double>> diagonal_;
  std::shared_ptr<const detail::FourierPlan> plan_;
};

SpectralCache make_cache(const HankelSpec& spec);

/// H x^m and H x^{m-1} from a single forward FFT of the padded x.
struct HankelProducts {
  double xm = 0.0;
  Eigen::VectorXd xm1;
};

/// H x^m, computed as sum_k d_k (fft(y))_k^m with y = [x; 0].
///
/// Throws NumericalConsistencyError if the imaginary part exceeds
/// 1e-8 * max(1, |real part|).
double hankel_xm(const SpectralCache& cache, const HankelSpec& spec,
                 const Eigen::VectorXd& x);

/// H x^{m-1}: the leading n entries of fft(d o fft(y)^{o(m-1)}).
///
/// The imaginary residue is checked entrywise against
/// 1e-8 * max(1, max_i |real part_i|).
Eigen::VectorXd hankel_xm1(const SpectralCache& cache, const HankelSpec& spec,
                           const Eigen::VectorXd& x);

/// Both products sharing one fft(y) and one trailing FFT.
HankelProducts hankel_products(const SpectralCache& cache,
                               const HankelSpec& spec,
                               const Eigen::VectorXd& x);

/// The 2n-1 entries w with (H x^{m-2})_{ij} = w[i+j] (0-based).
///
/// H x^{m-2} is itself a Hankel matrix; this returns its generator, not the
/// n x n matrix. Costs one extra FFT over hankel_products.
Eigen::VectorXd hankel_xm2_generator(const SpectralCache& cache,
                                     const HankelSpec& spec,
                                     const Eigen::VectorXd& x);

}  // namespace hankel
