#ifndef RELGW_SOLVER_HPP
#define RELGW_SOLVER_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relgw/errors.hpp"
#include "relgw/invariant_table.hpp"
#include "relgw/linform.hpp"
#include "relgw/seeds.hpp"

namespace relgw {

/// Where an equation came from: the t^{t_power} theta_{theta_index}
/// coefficient of (theta_p theta_q) theta_r - theta_p (theta_q theta_r).
struct Provenance {
  int p = 0;
  int q = 0;
  int r = 0;
  int theta_index = 0;
  int t_power = 0;

  std::string str() const;
  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

/// lhs_minus_rhs = 0, normalized so the leading coefficient is 1.
struct Equation {
  LinForm lhs_minus_rhs;
  Provenance provenance;

  std::string str() const;
};

struct SolveReport {
  int degree = 0;
  int triple_bound = 0;
  std::size_t num_unknowns = 0;  // excludes pinned invariants
  std::size_t num_equations = 0;
  std::size_t rank = 0;
  bool consistent = false;
  Assignment pinned;
  /// Every degree-d invariant, pinned ones included.
  Assignment solution;
  std::vector<Equation> equations;
};

class SolveError : public Error {
 public:
  enum class Reason { RankDeficient, Inconsistent, LowerDegreeResidue };

  SolveError(Reason reason, int degree, const std::string& detail, SolveReport report = {},
             std::vector<UnknownId> free_unknowns = {}, std::optional<Provenance> violated = std::nullopt);

  Reason reason() const { return reason_; }
  int degree() const { return degree_; }
  const SolveReport& report() const { return report_; }
  const std::vector<UnknownId>& free_unknowns() const { return free_; }
  const std::optional<Provenance>& violated() const { return violated_; }

 private:
  Reason reason_;
  int degree_;
  SolveReport report_;
  std::vector<UnknownId> free_;
  std::optional<Provenance> violated_;
};

/// The t^d theta_s coefficient of (theta_p theta_q) theta_r - theta_p (theta_q theta_r)
/// with degree-d invariants symbolic.  Not normalized.
LinForm associativity_row(int degree, const InvariantTable& table, int p, int q, int r, int s,
                          const Assignment& pins = {});

/// Every nonzero, deduplicated t^d row over the triples 1 <= p, q, r <= triple_bound,
/// sorted by provenance.  Rows at t^k, k < d must vanish identically; a
/// nonzero one throws SolveError(LowerDegreeResidue).  `jobs` > 1 splits
/// the triples across threads without changing the result.
std::vector<Equation> generate_equations(int degree, const InvariantTable& table, int triple_bound,
                                         const Assignment& pins = {}, unsigned jobs = 1);

struct EliminationResult {
  std::size_t rank = 0;
  /// Only filled when the system is consistent and of full column rank.
  Assignment solution;
  std::vector<UnknownId> free_unknowns;
  /// Index into the input rows of a row reduced to 0 = nonzero.
  std::optional<std::size_t> inconsistent_row;
};

/// Gauss-Jordan elimination over Q of rows  sum c_i x_i + c_0 = 0.
/// Throws Error if a row mentions an unknown outside `unknowns`.
EliminationResult eliminate(const std::vector<LinForm>& rows, const std::vector<UnknownId>& unknowns);

struct Seeds {
  Rational top;     // N_{3d-1,1}
  Rational bottom;  // N_{1,3d-1}
};

/// Solves the degree-d system with the given invariants held fixed.
/// Needs the table solved through d - 1.  Throws SolveError when the
/// system is rank deficient or inconsistent.
SolveReport solve_with_pins(int degree, const InvariantTable& table, const Assignment& pins, int triple_bound,
                            unsigned jobs = 1);

/// solve_with_pins with N_{3d-1,1} := seeds.top and N_{1,3d-1} := seeds.bottom.
SolveReport solve_degree(int degree, const InvariantTable& table, const Seeds& seeds, int triple_bound,
                         unsigned jobs = 1);

struct ComputeOptions {
  /// Defaults to 3d at degree d.
  std::optional<int> triple_bound;
  unsigned jobs = 1;
  /// How many times the triple bound may be raised by one on rank deficiency.
  int max_bound_escalation = 3;
  std::function<void(const std::string&)> log;
};

struct ComputeResult {
  InvariantTable table;
  std::vector<SolveReport> reports;
};

/// Seeds, solves and commits degrees 1..max_degree in order.
/// Throws MissingCoefficient before any work if the slab table is short.
ComputeResult compute_up_to(int max_degree, const SlabCoefficients& slab, const ComputeOptions& options = {});

/// 25 N_{1,5} = N_{5,1}, 2 N_{2,4} = 5 N_{1,5} + 2, N_{3,3} = 5 N_{1,5} + 4,
/// N_{4,2} = 10 N_{1,5} + 4.  False if degree 2 is unsolved.
bool verify_degree_two_relations(const InvariantTable& table);

}  // namespace relgw

#endif  // RELGW_SOLVER_HPP
