#include "relgw/puncture.hpp"

#include <string>

#include "relgw/errors.hpp"

namespace relgw {

Rational punctured_invariant(const PuncturedQuery& query, const InvariantTable& table, bool allow_offgrade) {
  const auto [p, q, r, d] = query;
  if (p < 0 || q < 0 || r < 0 || d < 0) {
    throw Error("contact orders and degree must be non-negative");
  }
  if (!query.graded()) {
    if (allow_offgrade) return Rational(0);
    throw GradingViolation("grading violation: p + q - r = " + std::to_string(p + q - r) + " but 3d = " +
                           std::to_string(3 * d));
  }
  if (d == 0) return degree_zero_three_point(p, q, r);
  if (r == 0) return table.three_point_r0(p, q);
  return Rational(q - r) * table.two_point(p, q - r) + Rational(p - r) * table.two_point(q, p - r);
}

std::vector<PuncturedRow> punctured_table(int degree, const InvariantTable& table, int cap) {
  std::vector<PuncturedRow> out;
  for (int p = 0; p <= cap; ++p) {
    for (int q = 0; q <= cap; ++q) {
      const int r = p + q - 3 * degree;
      if (r < 0) continue;
      const PuncturedQuery query{p, q, r, degree};
      out.push_back({query, punctured_invariant(query, table)});
    }
  }
  return out;
}

}  // namespace relgw
