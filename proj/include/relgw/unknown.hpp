#ifndef RELGW_UNKNOWN_HPP
#define RELGW_UNKNOWN_HPP

#include <compare>
#include <string>
#include <vector>

namespace relgw {

enum class InvariantKind { TwoPoint, ThreePointR0 };

/// Names one invariant of the degree-d system.
///
/// TwoPoint(a, b) is N_{a,b}: contact order a at a free point of the cubic and
/// b at a fixed point.  It is not symmetric.  ThreePointR0(a, b, d) is
/// N_{ab0}^d, symmetric in (a, b), so it is stored with a <= b.
///
/// Ordering is (kind, degree, a, b): two-point invariants first, then by
/// degree, then by the first contact order.
class UnknownId {
 public:
  /// Throws Error unless a, b >= 1 and 3 | (a + b).
  static UnknownId two_point(int a, int b);
  /// Throws Error unless a, b >= 1 and 3 | (a + b).  Swaps so that a <= b.
  static UnknownId three_point_r0(int a, int b);

  InvariantKind kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int degree() const { return degree_; }

  /// "N_{a,b}" or "N_{a,b,0}^{d}".
  std::string key() const;

  friend auto operator<=>(const UnknownId&, const UnknownId&) = default;
  friend bool operator==(const UnknownId&, const UnknownId&) = default;

 private:
  UnknownId(InvariantKind kind, int degree, int a, int b) : kind_(kind), degree_(degree), a_(a), b_(b) {}

  InvariantKind kind_;
  int degree_;
  int a_;
  int b_;
};

/// Parses the output of UnknownId::key().  Throws ParseError.
UnknownId parse_unknown_key(const std::string& key);

/// Every legal invariant of degree d >= 1, in canonical order:
/// N_{a,3d-a} for a = 1..3d-1, then N_{a,3d-a,0}^d for a = 1..floor(3d/2).
std::vector<UnknownId> unknowns_at_degree(int degree);

}  // namespace relgw

#endif  // RELGW_UNKNOWN_HPP
