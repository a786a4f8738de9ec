#include "relgw/theta_ring.hpp"

#include <atomic>

namespace relgw {

namespace {

std::atomic<std::uint64_t> g_graded_terms{0};
std::atomic<std::uint64_t> g_grading_violations{0};

std::string monomial(int p, int k, Notation notation) {
  std::string out;
  if (k == 1) out = "t ";
  if (k > 1) out = "t^" + std::to_string(k) + " ";
  out += notation == Notation::Unicode ? "θ_" : "theta_";
  return out + std::to_string(p);
}

// Sign is returned separately so the caller can render " - ".
std::pair<bool, std::string> coefficient_text(const Rational& c) {
  const Rational magnitude = c.abs();
  return {c.sign() < 0, magnitude == Rational(1) ? std::string() : magnitude.str()};
}

std::pair<bool, std::string> coefficient_text(const LinForm& c) {
  if (c.is_constant()) return coefficient_text(c.constant());
  if (c.terms().size() == 1 && c.constant().is_zero()) {
    const auto& [id, coeff] = *c.terms().begin();
    const Rational magnitude = coeff.abs();
    return {coeff.sign() < 0, (magnitude == Rational(1) ? "" : magnitude.str() + " ") + id.key()};
  }
  return {false, "(" + c.str() + ")"};
}

template <class Scalar>
std::string render(const ThetaElement<Scalar>& x, Notation notation) {
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [p, series] = *it;
    for (int k = 0; k <= series.bound(); ++k) {
      const Scalar c = series[k];
      if (c.is_zero()) continue;
      auto [negative, text] = coefficient_text(c);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (!text.empty()) out += text + " ";
      out += monomial(p, k, notation);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

GradingStats grading_stats() { return {g_graded_terms.load(), g_grading_violations.load()}; }

void reset_grading_stats() {
  g_graded_terms = 0;
  g_grading_violations = 0;
}

bool record_graded_term(int p, int q, int r, int k) {
  g_graded_terms.fetch_add(1, std::memory_order_relaxed);
  if (p + q - r == 3 * k) return true;
  g_grading_violations.fetch_add(1, std::memory_order_relaxed);
  return false;
}

std::string to_string(const ThetaElement<Rational>& x, Notation notation) { return render(x, notation); }
std::string to_string(const ThetaElement<LinForm>& x, Notation notation) { return render(x, notation); }

}  // namespace relgw
