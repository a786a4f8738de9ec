#ifndef RELGW_VERIFY_HPP
#define RELGW_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "relgw/seeds.hpp"
#include "relgw/solver.hpp"

namespace relgw {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Computed through max(2, max_degree).
  int max_degree = 2;
  SlabCoefficients slab = default_slab_table();
  std::optional<int> triple_bound;
  unsigned jobs = 1;
};

struct VerifyOutcome {
  std::vector<CheckResult> checks;
  /// Empty when the computation itself failed.
  std::optional<ComputeResult> computed;

  bool all_passed() const;
};

/// Known low-degree values, the degree-2 linear relations, the seed formula
/// against associativity, the associativity and grading sweeps, the
/// (3d-1)^2 ratio of the seed pair and punctured/ring coherence.
VerifyOutcome run_golden_checks(const VerifyOptions& options);

/// (theta_p theta_q) theta_r == theta_p (theta_q theta_r) at truncation
/// `bound` for 1 <= p, q, r <= max_index.  Returns the first failing
/// triple as a message, or nullopt.
std::optional<std::string> associativity_failure(const InvariantTable& table, int bound, int max_index);

/// Coefficient of t^d theta_r in theta_p * theta_q against the gluing
/// formula, for all graded (p, q, r, d), r >= 1, 1 <= d <= solved degree,
/// p, q <= 3d.  Returns the first mismatch, or nullopt.
std::optional<std::string> puncture_ring_mismatch(const InvariantTable& table);

}  // namespace relgw

#endif  // RELGW_VERIFY_HPP
