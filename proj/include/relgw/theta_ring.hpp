#ifndef RELGW_THETA_RING_HPP
#define RELGW_THETA_RING_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relgw/invariant_table.hpp"
#include "relgw/linform.hpp"
#include "relgw/rational.hpp"
#include "relgw/series.hpp"

namespace relgw {

/// Element of R = (+)_p theta_p Q[t], truncated in t.  Maps a generator
/// index p >= 0 to the series multiplying theta_p; zero series are dropped.
template <class Scalar>
class ThetaElement {
 public:
  using Series = TruncSeries<Scalar>;

  explicit ThetaElement(int bound) : bound_(bound) {}

  /// theta_p with coefficient 1 * t^0.
  static ThetaElement theta(int p, int bound) {
    ThetaElement out(bound);
    out.add_term(p, 0, Scalar(1));
    return out;
  }

  int bound() const { return bound_; }
  const std::map<int, Series>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::vector<int> support() const {
    std::vector<int> out;
    for (const auto& [p, s] : terms_) out.push_back(p);
    return out;
  }

  /// Coefficient of t^k theta_p.
  Scalar coefficient(int p, int k) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second[k];
  }

  Series series(int p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Series(bound_) : it->second;
  }

  void add_term(int p, int k, const Scalar& c) {
    if (c.is_zero() || k > bound_) return;
    Series s(bound_);
    s.add(k, c);
    add(p, s);
  }

  void add(int p, const Series& s) {
    if (s.bound() != bound_) throw BoundMismatch(bound_, s.bound());
    if (s.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, s);
    if (inserted) return;
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }

  ThetaElement& operator+=(const ThetaElement& rhs) {
    if (rhs.bound_ != bound_) throw BoundMismatch(bound_, rhs.bound_);
    for (const auto& [p, s] : rhs.terms_) add(p, s);
    return *this;
  }

  ThetaElement& operator-=(const ThetaElement& rhs) {
    if (rhs.bound_ != bound_) throw BoundMismatch(bound_, rhs.bound_);
    for (const auto& [p, s] : rhs.terms_) add(p, -s);
    return *this;
  }

  friend ThetaElement operator+(ThetaElement lhs, const ThetaElement& rhs) { return lhs += rhs; }
  friend ThetaElement operator-(ThetaElement lhs, const ThetaElement& rhs) { return lhs -= rhs; }
  friend bool operator==(const ThetaElement&, const ThetaElement&) = default;

 private:
  int bound_;
  std::map<int, Series> terms_;
};

/// Source of the structure constants.  A mode decides what scalar the ring
/// is built over and how N_{a,b} and N_{ab0}^d are looked up.
template <class M>
concept LookupMode = requires(const M& mode, int a, int b) {
  typename M::Scalar;
  { mode.two_point(a, b) } -> std::convertible_to<typename M::Scalar>;
  { mode.three_point_r0(a, b) } -> std::convertible_to<typename M::Scalar>;
};

/// Solved values only.  Lookups past the solved degree throw UnsolvedDegree.
struct ConcreteMode {
  using Scalar = Rational;
  const InvariantTable* table;

  explicit ConcreteMode(const InvariantTable& t) : table(&t) {}
  Rational two_point(int a, int b) const { return table->two_point(a, b); }
  Rational three_point_r0(int a, int b) const { return table->three_point_r0(a, b); }
};

/// Degree-d invariants become unknowns, except those fixed in `pins`.
struct SymbolicMode {
  using Scalar = LinForm;
  const InvariantTable* table;
  int degree;
  Assignment pins;

  SymbolicMode(const InvariantTable& t, int d, Assignment pinned = {})
      : table(&t), degree(d), pins(std::move(pinned)) {}
  LinForm two_point(int a, int b) const { return table->two_point_form(a, b, degree).substitute(pins); }
  LinForm three_point_r0(int a, int b) const {
    return table->three_point_r0_form(a, b, degree).substitute(pins);
  }
};

/// Counters for the grading check run on every term mul_basis emits:
/// a term t^k theta_r of theta_p * theta_q must have p + q - r = 3k.
struct GradingStats {
  std::uint64_t terms = 0;
  std::uint64_t violations = 0;
};

GradingStats grading_stats();
void reset_grading_stats();
/// Records one emitted term; returns false on a violation.
bool record_graded_term(int p, int q, int r, int k);

/// theta_p * theta_q truncated at `bound`:
///
///   theta_{p+q} + N_{pq0} t^{(p+q)/3} theta_0
///     + sum_{r=1}^{max(p,q)} [(q-r) N_{p,q-r} + (p-r) N_{q,p-r}] t^{(p+q-r)/3} theta_r
///
/// Terms whose t-exponent is fractional or exceeds the bound are dropped
/// before any lookup happens.
template <LookupMode M>
ThetaElement<typename M::Scalar> mul_basis(int p, int q, int bound, const M& mode) {
  using Scalar = typename M::Scalar;
  ThetaElement<Scalar> out(bound);
  auto emit = [&](int r, int k, const Scalar& c) {
    if (c.is_zero()) return;
    record_graded_term(p, q, r, k);
    out.add_term(r, k, c);
  };

  emit(p + q, 0, Scalar(1));
  if ((p + q) % 3 == 0 && (p + q) / 3 <= bound && p + q > 0) {
    emit(0, (p + q) / 3, Scalar(mode.three_point_r0(p, q)));
  }
  const int top = std::max(p, q);
  for (int r = 1; r <= top; ++r) {
    const int weight = p + q - r;
    if (weight % 3 != 0 || weight / 3 > bound) continue;
    Scalar c = Scalar(mode.two_point(p, q - r)) * Rational(q - r);
    c += Scalar(mode.two_point(q, p - r)) * Rational(p - r);
    emit(r, weight / 3, c);
  }
  return out;
}

/// Bilinear product with a memo of basis products.  Not thread-safe; use
/// one instance per thread.
template <LookupMode M>
class ThetaMultiplier {
 public:
  using Scalar = typename M::Scalar;
  using Element = ThetaElement<Scalar>;

  ThetaMultiplier(M mode, int bound) : mode_(std::move(mode)), bound_(bound) {}

  int bound() const { return bound_; }
  const M& mode() const { return mode_; }

  const Element& basis(int p, int q) {
    auto key = std::pair{p, q};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, mul_basis(p, q, bound_, mode_)).first;
    return it->second;
  }

  Element theta(int p) const { return Element::theta(p, bound_); }

  Element mul(const Element& x, const Element& y) {
    if (x.bound() != bound_) throw BoundMismatch(bound_, x.bound());
    if (y.bound() != bound_) throw BoundMismatch(bound_, y.bound());
    Element out(bound_);
    for (const auto& [p, xs] : x.terms()) {
      for (const auto& [q, ys] : y.terms()) {
        const auto factor = xs * ys;
        if (factor.is_zero()) continue;
        for (const auto& [r, bs] : basis(p, q).terms()) out.add(r, factor * bs);
      }
    }
    return out;
  }

 private:
  M mode_;
  int bound_;
  std::map<std::pair<int, int>, Element> cache_;
};

template <LookupMode M>
ThetaElement<typename M::Scalar> mul(const ThetaElement<typename M::Scalar>& x,
                                     const ThetaElement<typename M::Scalar>& y, const M& mode) {
  if (x.bound() != y.bound()) throw BoundMismatch(x.bound(), y.bound());
  ThetaMultiplier<M> ring(mode, x.bound());
  return ring.mul(x, y);
}

enum class Notation { Unicode, Ascii };

/// "θ_6 + 2 t θ_3 + 30 t^2 θ_0": descending generator, ascending t-power.
/// Ascii notation writes "theta_6".  The zero element prints as "0".
std::string to_string(const ThetaElement<Rational>& x, Notation notation = Notation::Unicode);
std::string to_string(const ThetaElement<LinForm>& x, Notation notation = Notation::Unicode);

}  // namespace relgw

#endif  // RELGW_THETA_RING_HPP
