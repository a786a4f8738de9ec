#ifndef RELGW_LINFORM_HPP
#define RELGW_LINFORM_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "relgw/rational.hpp"
#include "relgw/unknown.hpp"

namespace relgw {

using Assignment = std::map<UnknownId, Rational>;

/// Affine linear form  constant + sum_i c_i * x_i  over the rationals.
/// Zero coefficients are never stored.
class LinForm {
 public:
  LinForm() = default;
  LinForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT(google-explicit-constructor)
  LinForm(int constant) : constant_(constant) {}                  // NOLINT(google-explicit-constructor)

  static LinForm unknown(const UnknownId& id, Rational coefficient = Rational(1));

  const Rational& constant() const { return constant_; }
  const std::map<UnknownId, Rational>& terms() const { return terms_; }
  Rational coefficient(const UnknownId& id) const;

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

  LinForm operator-() const;
  LinForm& operator+=(const LinForm& rhs);
  LinForm& operator-=(const LinForm& rhs);
  LinForm& operator*=(const Rational& factor);
  /// Throws NonlinearTerm when both operands carry unknowns.
  LinForm& operator*=(const LinForm& rhs);

  friend LinForm operator+(LinForm lhs, const LinForm& rhs) { return lhs += rhs; }
  friend LinForm operator-(LinForm lhs, const LinForm& rhs) { return lhs -= rhs; }
  friend LinForm operator*(LinForm lhs, const LinForm& rhs) { return lhs *= rhs; }
  friend LinForm operator*(LinForm lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LinForm operator*(const Rational& lhs, LinForm rhs) { return rhs *= lhs; }

  friend bool operator==(const LinForm&, const LinForm&) = default;
  /// Total order: constant first, then the term maps lexicographically.
  friend std::strong_ordering operator<=>(const LinForm& lhs, const LinForm& rhs);

  /// Replaces the assigned unknowns by their values; others stay symbolic.
  LinForm substitute(const Assignment& values) const;
  /// Value under a complete assignment; nullopt if some unknown is unassigned.
  std::optional<Rational> evaluate(const Assignment& values) const;

  /// Scales so that the first stored term has coefficient 1 (or, for a
  /// nonzero constant form, so that the constant is 1).
  LinForm normalized() const;

  /// "2 N_{1,2} + N_{1,2,0}^1 - 2 N_{2,1} + 8"; "0" for the zero form.
  std::string str() const;

 private:
  void add_term(const UnknownId& id, const Rational& coefficient);

  Rational constant_;
  std::map<UnknownId, Rational> terms_;
};

}  // namespace relgw

#endif  // RELGW_LINFORM_HPP
