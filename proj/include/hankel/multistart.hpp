#pragma once

#include "hankel/acsa.hpp"
#include "hankel/hankel_spec.hpp"
#include "hankel/objective.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hankel {

enum class Method { Acsa, PowerMethod };

struct StartOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  std::optional<EigenResult> result;  ///< empty if the start threw
  std::string error;
};

/// Eigenvalues found within `kBinTolerance` of each other, chained.
struct EigenvalueBin {
  double lambda = 0.0;  ///< median of the members
  int count = 0;
  double percentage = 0.0;  ///< of the starts that returned a result
};

struct MultistartReport {
  std::vector<StartOutcome> starts;  ///< in start-index order
  /// Best extreme first (ascending for Min, descending for Max).
  std::vector<EigenvalueBin> occurrences;
  /// The start whose lambda is most extreme among those that terminated with
  /// CONVERGED or ZERO_GRADIENT; falls back to any start with a result.
  std::optional<std::size_t> best;
  /// True when at least one start ended CONVERGED or ZERO_GRADIENT.
  bool any_success = false;

  const EigenResult* best_result() const;
};

inline constexpr double kBinTolerance = 1e-6;

bool is_success(Termination t);

/// Runs opts.starts independent solves, start i seeded with opts.seed + i.
/// Start i < initial_points.size() begins from that point instead of a
/// random one. A start that throws is recorded and does not stop the others.
///
/// `threads` caps the worker count (0 means hardware concurrency). Results
/// do not depend on it.
MultistartReport multistart(const HankelSpec& spec, const ReferenceTensor& b,
                            const SolverOptions& opts, unsigned threads = 0,
                            const std::vector<Eigen::VectorXd>& initial_points = {},
                            Method method = Method::Acsa);

/// Groups eigenvalues for occurrence counting.
std::vector<EigenvalueBin> bin_eigenvalues(std::vector<double> lambdas,
                                           Extreme extreme,
                                           double tolerance = kBinTolerance);

}  // namespace hankel
