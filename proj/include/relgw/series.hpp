#ifndef RELGW_SERIES_HPP
#define RELGW_SERIES_HPP

#include <algorithm>
#include <vector>

#include "relgw/errors.hpp"

namespace relgw {

/// Polynomial in t truncated at an inclusive degree bound.  Scalar is
/// Rational or LinForm; both provide +, -, *, == and is_zero().
template <class Scalar>
class TruncSeries {
 public:
  explicit TruncSeries(int bound) : coeffs_(static_cast<std::size_t>(std::max(bound, 0)) + 1) {}

  /// c * t^k, or the zero series when k > bound.
  static TruncSeries monomial(int bound, int k, Scalar c) {
    TruncSeries out(bound);
    if (k >= 0 && k <= bound) out.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
    return out;
  }

  int bound() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of t^k; zero for k outside [0, bound].
  Scalar operator[](int k) const {
    if (k < 0 || k > bound()) return Scalar();
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Adds c * t^k; silently dropped when k > bound.
  void add(int k, const Scalar& c) {
    if (k < 0 || k > bound()) return;
    coeffs_[static_cast<std::size_t>(k)] += c;
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
  }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    check_bound(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& rhs) {
    check_bound(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }

  TruncSeries operator-() const {
    TruncSeries out(bound());
    out -= *this;
    return out;
  }

  /// Cauchy product; only pairs with i + j <= bound are ever multiplied.
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
    lhs.check_bound(rhs);
    const int n = lhs.bound();
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
      const Scalar& a = lhs.coeffs_[static_cast<std::size_t>(i)];
      if (a.is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        const Scalar& b = rhs.coeffs_[static_cast<std::size_t>(j)];
        if (b.is_zero()) continue;
        out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
      }
    }
    return out;
  }

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_bound(const TruncSeries& rhs) const {
    if (rhs.bound() != bound()) throw BoundMismatch(bound(), rhs.bound());
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace relgw

#endif  // RELGW_SERIES_HPP
