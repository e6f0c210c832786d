#pragma once

#include "hankel/hankel_spec.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace hankel {

/// Benchmark tensor families.
///   Sin:         v_k = sin(m + k)
///   ParamEps:    v = (8-e, 0, 2, 0, 1, 0, 1, 0, 1, 0, 2, 0, 8-e), m = n = 4
///   Vandermonde: v_k = a^k + b^k with a = n/(n-1), b = (1-n)/n
///   Hilbert:     v_k = 1/(k+1)
///   Random:      i.i.d. standard normal entries (test fodder)
enum class Family { Sin, ParamEps, Vandermonde, Hilbert, Random };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::Sin;
  int order = 4;
  Index dim = 5;
  double epsilon = 0.0;     ///< ParamEps only
  std::uint64_t seed = 0;   ///< Random only

  /// Throws InvalidSpecError.
  void validate() const;
};

HankelSpec generate(const FamilySpec& fs);

/// ||u1||^m with u1 = (1, a, ..., a^{n-1}), a = n/(n-1): the largest
/// Z-eigenvalue of the Vandermonde tensor when n is even. Throws
/// InvalidSpecError for odd n or odd m.
double vandermonde_reference(int order, Index dim);

/// u1 / ||u1||, the eigenvector belonging to vandermonde_reference.
Eigen::VectorXd vandermonde_eigenvector(Index dim);

struct HilbertBounds {
  double z_bound;  ///< n^{m/2} sin(pi/n)
  double h_bound;  ///< n^{m-1} sin(pi/n)
};

/// Upper bounds on the largest Z- and H-eigenvalues of the even-order
/// Hilbert tensor.
HilbertBounds hilbert_bounds(int order, Index dim);

}  // namespace hankel
