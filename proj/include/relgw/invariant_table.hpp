#ifndef RELGW_INVARIANT_TABLE_HPP
#define RELGW_INVARIANT_TABLE_HPP

#include <map>
#include <utility>

#include "relgw/linform.hpp"
#include "relgw/rational.hpp"

namespace relgw {

/// Solved invariants of (P^2, smooth cubic), degree by degree.
///
/// Keys that are illegal (a contact order <= 0, or 3 not dividing a + b)
/// are never stored; lookups resolve them to 0 by rule.  In particular
/// N_{0,b} and N_{0,b,0}^d vanish, which is what makes theta_0 the identity
/// of the ring.
///
/// The table grows one degree at a time through commit_degree() and is
/// never modified retroactively.
class InvariantTable {
 public:
  int solved_through_degree() const { return solved_; }

  /// N_{a,b}.  Throws UnsolvedDegree if (a+b)/3 > solved_through_degree().
  Rational two_point(int a, int b) const;
  /// N_{ab0}^{(a+b)/3}, symmetric in (a, b).  Same error rule.
  Rational three_point_r0(int a, int b) const;

  /// Symbolic lookups for the degree-d system: lower degrees come back as
  /// constants, degree d as the bare unknown, higher degrees throw.
  LinForm two_point_form(int a, int b, int symbolic_degree) const;
  LinForm three_point_r0_form(int a, int b, int symbolic_degree) const;

  /// Extends the table by degree d = solved_through_degree() + 1.  The
  /// solution must contain exactly unknowns_at_degree(d).  Throws CommitError.
  void commit_degree(int degree, const Assignment& solution);

  const std::map<std::pair<int, int>, Rational>& two_point_values() const { return two_point_; }
  /// Keyed by (a, b) with a <= b.
  const std::map<std::pair<int, int>, Rational>& three_point_values() const { return three_point_; }

  /// Total number of stored invariants.
  std::size_t size() const { return two_point_.size() + three_point_.size(); }

  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;

 private:
  int solved_ = 0;
  std::map<std::pair<int, int>, Rational> two_point_;
  std::map<std::pair<int, int>, Rational> three_point_;
};

/// N_{pqr}^0: 1 when r = p + q, 0 otherwise.
Rational degree_zero_three_point(int p, int q, int r);

/// True when (a, b) names a stored invariant: a, b >= 1 and 3 | (a + b).
constexpr bool is_legal_key(int a, int b) { return a >= 1 && b >= 1 && (a + b) % 3 == 0; }

}  // namespace relgw

#endif  // RELGW_INVARIANT_TABLE_HPP
