#include "fourier_plan.hpp"

#include <fftw3.h>

#include <cassert>
#include <mutex>
#include <stdexcept>

namespace hankel::detail {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_complex* as_fftw(const std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(p));
}

}  // namespace

FourierPlan::FourierPlan(std::size_t length) : length_(length) {
  if (length_ == 0) throw std::invalid_argument("FFT length must be positive");
  // Scratch buffers only shape the plan; FFTW_UNALIGNED lets us execute on
  // arbitrary std::vector storage later.
  ComplexVector in(length_), out(length_);
  const int n = static_cast<int>(length_);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  std::lock_guard<std::mutex> lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_1d(n, as_fftw(in.data()), as_fftw(out.data()),
                                   FFTW_FORWARD, flags);
  backward_plan_ = fftw_plan_dft_1d(n, as_fftw(in.data()), as_fftw(out.data()),
                                    FFTW_BACKWARD, flags);
  if (forward_plan_ == nullptr || backward_plan_ == nullptr) {
    throw std::runtime_error("FFTW failed to create a plan");
  }
}

FourierPlan::~FourierPlan() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

void FourierPlan::forward(const ComplexVector& in, ComplexVector& out) const {
  assert(in.size() == length_);
  out.resize(length_);
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(in.data()),
                   as_fftw(out.data()));
}

void FourierPlan::inverse(const ComplexVector& in, ComplexVector& out) const {
  assert(in.size() == length_);
  out.resize(length_);
  fftw_execute_dft(static_cast<fftw_plan>(backward_plan_), as_fftw(in.data()),
                   as_fftw(out.data()));
  const double scale = 1.0 / static_cast<double>(length_);
  for (auto& z : out) z *= scale;
}

}  // namespace hankel::detail
