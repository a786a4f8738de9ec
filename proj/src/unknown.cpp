#include "relgw/unknown.hpp"

#include <regex>
#include <utility>

#include "relgw/errors.hpp"

namespace relgw {

namespace {

void check_legal(int a, int b) {
  if (a < 1 || b < 1 || (a + b) % 3 != 0) {
    throw Error("illegal invariant key (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

UnknownId UnknownId::two_point(int a, int b) {
  check_legal(a, b);
  return UnknownId(InvariantKind::TwoPoint, (a + b) / 3, a, b);
}

UnknownId UnknownId::three_point_r0(int a, int b) {
  check_legal(a, b);
  if (a > b) std::swap(a, b);
  return UnknownId(InvariantKind::ThreePointR0, (a + b) / 3, a, b);
}

std::string UnknownId::key() const {
  std::string out = "N_{" + std::to_string(a_) + "," + std::to_string(b_);
  if (kind_ == InvariantKind::TwoPoint) return out + "}";
  return out + ",0}^" + std::to_string(degree_);
}

UnknownId parse_unknown_key(const std::string& key) {
  static const std::regex two(R"(N_\{(\d+),(\d+)\})");
  static const std::regex three(R"(N_\{(\d+),(\d+),0\}\^(\d+))");
  std::smatch m;
  try {
    if (std::regex_match(key, m, two)) return UnknownId::two_point(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(key, m, three)) {
      auto id = UnknownId::three_point_r0(std::stoi(m[1]), std::stoi(m[2]));
      if (id.degree() != std::stoi(m[3])) throw ParseError("degree mismatch in key '" + key + "'");
      return id;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad invariant key '" + key + "': " + e.what());
  }
  throw ParseError("bad invariant key '" + key + "'");
}

std::vector<UnknownId> unknowns_at_degree(int degree) {
  std::vector<UnknownId> out;
  if (degree < 1) return out;
  const int total = 3 * degree;
  for (int a = 1; a < total; ++a) out.push_back(UnknownId::two_point(a, total - a));
  for (int a = 1; 2 * a <= total; ++a) out.push_back(UnknownId::three_point_r0(a, total - a));
  return out;
}

}  // namespace relgw
