#include "relgw/invariant_table.hpp"

#include <algorithm>
#include <string>

#include "relgw/errors.hpp"

namespace relgw {

Rational InvariantTable::two_point(int a, int b) const {
  if (!is_legal_key(a, b)) return Rational(0);
  const int degree = (a + b) / 3;
  if (degree > solved_) throw UnsolvedDegree(degree, solved_);
  return two_point_.at({a, b});
}

Rational InvariantTable::three_point_r0(int a, int b) const {
  if (!is_legal_key(a, b)) return Rational(0);
  const int degree = (a + b) / 3;
  if (degree > solved_) throw UnsolvedDegree(degree, solved_);
  return three_point_.at(std::minmax(a, b));
}

LinForm InvariantTable::two_point_form(int a, int b, int symbolic_degree) const {
  if (!is_legal_key(a, b)) return LinForm();
  const int degree = (a + b) / 3;
  if (degree == symbolic_degree) return LinForm::unknown(UnknownId::two_point(a, b));
  if (degree > symbolic_degree) throw UnsolvedDegree(degree, symbolic_degree - 1);
  return LinForm(two_point(a, b));
}

LinForm InvariantTable::three_point_r0_form(int a, int b, int symbolic_degree) const {
  if (!is_legal_key(a, b)) return LinForm();
  const int degree = (a + b) / 3;
  if (degree == symbolic_degree) return LinForm::unknown(UnknownId::three_point_r0(a, b));
  if (degree > symbolic_degree) throw UnsolvedDegree(degree, symbolic_degree - 1);
  return LinForm(three_point_r0(a, b));
}

void InvariantTable::commit_degree(int degree, const Assignment& solution) {
  if (degree != solved_ + 1) {
    throw CommitError("cannot commit degree " + std::to_string(degree) + ": table is solved through " +
                      std::to_string(solved_));
  }
  const auto expected = unknowns_at_degree(degree);
  for (const auto& id : expected) {
    if (!solution.contains(id)) throw CommitError("missing unknown " + id.key() + " at degree " + std::to_string(degree));
  }
  if (solution.size() != expected.size()) {
    for (const auto& [id, value] : solution) {
      if (std::find(expected.begin(), expected.end(), id) == expected.end()) {
        throw CommitError("unexpected unknown " + id.key() + " at degree " + std::to_string(degree));
      }
    }
  }
  for (const auto& [id, value] : solution) {
    auto& store = id.kind() == InvariantKind::TwoPoint ? two_point_ : three_point_;
    store.emplace(std::pair{id.a(), id.b()}, value);
  }
  solved_ = degree;
}

Rational degree_zero_three_point(int p, int q, int r) { return r == p + q ? Rational(1) : Rational(0); }

}  // namespace relgw
