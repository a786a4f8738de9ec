#ifndef RELGW_SERIALIZE_HPP
#define RELGW_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "relgw/invariant_table.hpp"
#include "relgw/puncture.hpp"
#include "relgw/solver.hpp"
#include "relgw/theta_ring.hpp"

namespace relgw {

using Json = nlohmann::ordered_json;

// Rationals are always written as "num/den" strings (den omitted when 1).

/// {"solved_through_degree": D,
///  "two_point": [{"a":..,"b":..,"value":".."}],
///  "three_point_r0": [{"a":..,"b":..,"d":..,"value":".."}]}
/// Rows are ordered by degree, then by a.
Json table_to_json(const InvariantTable& table);

/// Inverse of table_to_json.  Every legal key of every degree up to
/// solved_through_degree must be present exactly once.  Throws ParseError.
InvariantTable table_from_json(const Json& doc);

/// Header "kind,a,b,d,value"; kind is two_point or three_point_r0.
std::string table_to_csv(const InvariantTable& table);

/// {"terms": [{"p":.., "series": [{"k":.., "value":".."}]}]}, descending p.
Json theta_to_json(const ThetaElement<Rational>& x);

/// Counts, rank and solution map; the equations themselves only on request.
Json report_to_json(const SolveReport& report, bool include_equations = false);

Json punctured_to_json(const std::vector<PuncturedRow>& rows);
/// Header "p,q,r,d,value".
std::string punctured_to_csv(const std::vector<PuncturedRow>& rows);

}  // namespace relgw

#endif  // RELGW_SERIALIZE_HPP
