#ifndef RELGW_SEEDS_HPP
#define RELGW_SEEDS_HPP

#include <filesystem>
#include <map>
#include <string>

#include "relgw/rational.hpp"

namespace relgw {

/// Open Gromov-Witten invariants n_{d*l + h} of local P^2, i.e. the
/// t^d coefficients of the slab function.  These are inputs, not computed.
class SlabCoefficients {
 public:
  SlabCoefficients() = default;
  explicit SlabCoefficients(std::map<int, Rational> values);

  /// Throws MissingCoefficient when d is not configured.
  const Rational& at(int degree) const;
  bool contains(int degree) const { return values_.contains(degree); }
  /// Largest D such that every degree 1..D is configured.
  int covered_through() const;

  void set(int degree, Rational value);
  /// Entries of `other` replace or extend ours.
  void merge(const SlabCoefficients& other);

  const std::map<int, Rational>& values() const { return values_; }

 private:
  std::map<int, Rational> values_;
};

/// -2t + 5t^2 - 32t^3 + 286t^4 - 3038t^5.
SlabCoefficients default_slab_table();

/// Parses {"slab": {"1": "-2", ...}}.  Values may be strings ("num/den") or
/// integers.  Throws ParseError.
SlabCoefficients parse_slab_json(const std::string& text);

/// The defaults overlaid with the entries of a JSON slab file.
SlabCoefficients load_slab_file(const std::filesystem::path& path);

/// N_{3d-1,1} = (-1)^{3d} (3d - 1) n_d.
Rational seed_top(int degree, const SlabCoefficients& slab);

/// N_{1,3d-1} = N_{3d-1,1} / (3d - 1)^2.
Rational seed_bottom(int degree, const Rational& top);

}  // namespace relgw

#endif  // RELGW_SEEDS_HPP
