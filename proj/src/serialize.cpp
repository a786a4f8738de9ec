#include "relgw/serialize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relgw/errors.hpp"

namespace relgw {

namespace {

using Key = std::pair<int, int>;

std::vector<std::pair<Key, Rational>> by_degree(const std::map<Key, Rational>& values) {
  std::vector<std::pair<Key, Rational>> out(values.begin(), values.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.first + x.first.second < y.first.first + y.first.second;
  });
  return out;
}

int get_int(const Json& row, const char* field) {
  if (!row.contains(field) || !row[field].is_number_integer()) {
    throw ParseError(std::string("row field '") + field + "' must be an integer: " + row.dump());
  }
  return row[field].get<int>();
}

Rational get_value(const Json& row) {
  if (!row.contains("value")) throw ParseError("row without value: " + row.dump());
  const auto& v = row["value"];
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("row value must be a \"num/den\" string: " + row.dump());
}

}  // namespace

Json table_to_json(const InvariantTable& table) {
  Json doc;
  doc["solved_through_degree"] = table.solved_through_degree();
  doc["two_point"] = Json::array();
  for (const auto& [key, value] : by_degree(table.two_point_values())) {
    doc["two_point"].push_back({{"a", key.first}, {"b", key.second}, {"value", value.str()}});
  }
  doc["three_point_r0"] = Json::array();
  for (const auto& [key, value] : by_degree(table.three_point_values())) {
    doc["three_point_r0"].push_back(
        {{"a", key.first}, {"b", key.second}, {"d", (key.first + key.second) / 3}, {"value", value.str()}});
  }
  return doc;
}

InvariantTable table_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("table must be a JSON object");
  if (!doc.contains("solved_through_degree") || !doc["solved_through_degree"].is_number_integer()) {
    throw ParseError("table needs an integer solved_through_degree");
  }
  const int solved = doc["solved_through_degree"].get<int>();
  if (solved < 0) throw ParseError("solved_through_degree must be >= 0");

  std::map<int, Assignment> per_degree;
  auto place = [&](const UnknownId& id, Rational value) {
    if (id.degree() > solved) {
      throw ParseError(id.key() + " is above solved_through_degree " + std::to_string(solved));
    }
    if (!per_degree[id.degree()].emplace(id, std::move(value)).second) {
      throw ParseError("duplicate entry for " + id.key());
    }
  };
  auto rows = [&](const char* field) -> const Json& {
    static const Json empty = Json::array();
    if (!doc.contains(field)) return empty;
    if (!doc[field].is_array()) throw ParseError(std::string("'") + field + "' must be an array");
    return doc[field];
  };

  try {
    for (const auto& row : rows("two_point")) {
      place(UnknownId::two_point(get_int(row, "a"), get_int(row, "b")), get_value(row));
    }
    for (const auto& row : rows("three_point_r0")) {
      const auto id = UnknownId::three_point_r0(get_int(row, "a"), get_int(row, "b"));
      if (get_int(row, "d") != id.degree()) throw ParseError("wrong degree in " + row.dump());
      place(id, get_value(row));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }

  InvariantTable table;
  for (int d = 1; d <= solved; ++d) {
    try {
      table.commit_degree(d, per_degree[d]);
    } catch (const CommitError& e) {
      throw ParseError(e.what());
    }
  }
  return table;
}

std::string table_to_csv(const InvariantTable& table) {
  std::ostringstream out;
  out << "kind,a,b,d,value\n";
  for (const auto& [key, value] : by_degree(table.two_point_values())) {
    out << "two_point," << key.first << ',' << key.second << ',' << (key.first + key.second) / 3 << ','
        << value << '\n';
  }
  for (const auto& [key, value] : by_degree(table.three_point_values())) {
    out << "three_point_r0," << key.first << ',' << key.second << ',' << (key.first + key.second) / 3 << ','
        << value << '\n';
  }
  return out.str();
}

Json theta_to_json(const ThetaElement<Rational>& x) {
  Json doc;
  doc["terms"] = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    Json series = Json::array();
    for (int k = 0; k <= it->second.bound(); ++k) {
      const Rational c = it->second[k];
      if (!c.is_zero()) series.push_back({{"k", k}, {"value", c.str()}});
    }
    doc["terms"].push_back({{"p", it->first}, {"series", std::move(series)}});
  }
  return doc;
}

Json report_to_json(const SolveReport& report, bool include_equations) {
  Json doc;
  doc["degree"] = report.degree;
  doc["triple_bound"] = report.triple_bound;
  doc["num_unknowns"] = report.num_unknowns;
  doc["num_equations"] = report.num_equations;
  doc["rank"] = report.rank;
  doc["consistent"] = report.consistent;
  Json pinned = Json::object();
  for (const auto& [id, value] : report.pinned) pinned[id.key()] = value.str();
  doc["pinned"] = std::move(pinned);
  Json solution = Json::object();
  for (const auto& [id, value] : report.solution) solution[id.key()] = value.str();
  doc["solution"] = std::move(solution);
  if (include_equations) {
    Json eqs = Json::array();
    for (const auto& e : report.equations) {
      const auto& w = e.provenance;
      eqs.push_back({{"equation", e.lhs_minus_rhs.str() + " = 0"},
                     {"provenance", {w.p, w.q, w.r, w.theta_index, w.t_power}}});
    }
    doc["equations"] = std::move(eqs);
  }
  return doc;
}

Json punctured_to_json(const std::vector<PuncturedRow>& rows) {
  Json doc = Json::array();
  for (const auto& row : rows) {
    const auto& q = row.query;
    doc.push_back({{"p", q.p}, {"q", q.q}, {"r", q.r}, {"d", q.d}, {"value", row.value.str()}});
  }
  return doc;
}

std::string punctured_to_csv(const std::vector<PuncturedRow>& rows) {
  std::ostringstream out;
  out << "p,q,r,d,value\n";
  for (const auto& row : rows) {
    const auto& q = row.query;
    out << q.p << ',' << q.q << ',' << q.r << ',' << q.d << ',' << row.value << '\n';
  }
  return out.str();
}

}  // namespace relgw
