#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankel::detail {

using ComplexVector = std::vector<std::complex<double>>;

// Forward/backward complex DFT plans of one fixed length. The forward
// transform is unnormalized; the backward one is scaled by 1/length so that
// inverse(forward(y)) == y.
//
// Plans are created under a process-wide lock (the FFTW planner is not
// reentrant); execution is reentrant and may run from any thread.
class FourierPlan {
 public:
  explicit FourierPlan(std::size_t length);
  ~FourierPlan();

  FourierPlan(const FourierPlan&) = delete;
  FourierPlan& operator=(const FourierPlan&) = delete;

  std::size_t length() const { return length_; }

  void forward(const ComplexVector& in, ComplexVector& out) const;
  void inverse(const ComplexVector& in, ComplexVector& out) const;

 private:
  std::size_t length_;
  void* forward_plan_;
  void* backward_plan_;
};

}  // namespace hankel::detail
