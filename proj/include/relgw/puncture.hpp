#ifndef RELGW_PUNCTURE_HPP
#define RELGW_PUNCTURE_HPP

#include <vector>

#include "relgw/invariant_table.hpp"
#include "relgw/rational.hpp"

namespace relgw {

/// N_{pqr}^d: contact orders p and q at two marked points and -r at the
/// point-constrained puncture, curve class d*H.  Legal iff p + q - r = 3d.
struct PuncturedQuery {
  int p = 0;
  int q = 0;
  int r = 0;
  int d = 0;

  bool graded() const { return p + q - r == 3 * d; }
};

/// d = 0: 1 iff r = p + q.  r = 0: N_{pq0}^d.  Otherwise the gluing formula
///   (q - r) N_{p,q-r} + (p - r) N_{q,p-r}.
/// Throws GradingViolation for an ungraded query unless allow_offgrade,
/// in which case it returns 0.  Throws Error on negative contact orders.
Rational punctured_invariant(const PuncturedQuery& query, const InvariantTable& table, bool allow_offgrade = false);

struct PuncturedRow {
  PuncturedQuery query;
  Rational value;
};

/// Every legal query of degree d with 0 <= p, q <= cap, ordered by (p, q).
std::vector<PuncturedRow> punctured_table(int degree, const InvariantTable& table, int cap);

}  // namespace relgw

#endif  // RELGW_PUNCTURE_HPP
