#include "relgw/linform.hpp"

#include "relgw/errors.hpp"

namespace relgw {

LinForm LinForm::unknown(const UnknownId& id, Rational coefficient) {
  LinForm out;
  out.add_term(id, coefficient);
  return out;
}

Rational LinForm::coefficient(const UnknownId& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinForm::add_term(const UnknownId& id, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(id, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

LinForm LinForm::operator-() const {
  LinForm out = *this;
  out *= Rational(-1);
  return out;
}

LinForm& LinForm::operator+=(const LinForm& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [id, c] : rhs.terms_) add_term(id, c);
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [id, c] : rhs.terms_) add_term(id, -c);
  return *this;
}

LinForm& LinForm::operator*=(const Rational& factor) {
  if (factor.is_zero()) {
    constant_ = Rational(0);
    terms_.clear();
    return *this;
  }
  constant_ *= factor;
  for (auto& [id, c] : terms_) c *= factor;
  return *this;
}

LinForm& LinForm::operator*=(const LinForm& rhs) {
  if (!is_constant() && !rhs.is_constant()) throw NonlinearTerm("(" + str() + ") * (" + rhs.str() + ")");
  if (rhs.is_constant()) return *this *= rhs.constant_;
  LinForm out = rhs;
  out *= constant_;
  return *this = std::move(out);
}

std::strong_ordering operator<=>(const LinForm& lhs, const LinForm& rhs) {
  if (auto c = lhs.constant_ <=> rhs.constant_; c != 0) return c;
  auto li = lhs.terms_.begin();
  auto ri = rhs.terms_.begin();
  for (; li != lhs.terms_.end() && ri != rhs.terms_.end(); ++li, ++ri) {
    if (auto c = li->first <=> ri->first; c != 0) return c;
    if (auto c = li->second <=> ri->second; c != 0) return c;
  }
  if (li == lhs.terms_.end() && ri == rhs.terms_.end()) return std::strong_ordering::equal;
  return li == lhs.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

LinForm LinForm::substitute(const Assignment& values) const {
  LinForm out(constant_);
  for (const auto& [id, c] : terms_) {
    if (auto it = values.find(id); it != values.end()) {
      out.constant_ += c * it->second;
    } else {
      out.add_term(id, c);
    }
  }
  return out;
}

std::optional<Rational> LinForm::evaluate(const Assignment& values) const {
  LinForm out = substitute(values);
  if (!out.is_constant()) return std::nullopt;
  return out.constant_;
}

LinForm LinForm::normalized() const {
  if (terms_.empty()) return constant_.is_zero() ? LinForm() : LinForm(Rational(1));
  LinForm out = *this;
  out *= Rational(1) / terms_.begin()->second;
  return out;
}

std::string LinForm::str() const {
  std::string out;
  auto append = [&out](const Rational& c, const std::string& symbol) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (symbol.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != Rational(1)) out += magnitude.str() + " ";
      out += symbol;
    }
  };
  for (const auto& [id, c] : terms_) append(c, id.key());
  if (!constant_.is_zero() || out.empty()) append(constant_, "");
  return out;
}

}  // namespace relgw
