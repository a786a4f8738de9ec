#include "relgw/rational.hpp"

#include <cctype>
#include <ostream>

#include "relgw/errors.hpp"

namespace relgw {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, 1);
  value_ /= den;
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  Rational out;
  if (slash == std::string_view::npos) {
    out.value_ = mpq_class(parse_integer(text));
    return out;
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DivisionByZero();
  out.value_ = mpq_class(num, den);
  out.value_.canonicalize();
  return out;
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace relgw
