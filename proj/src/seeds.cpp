#include "relgw/seeds.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relgw/errors.hpp"

namespace relgw {

SlabCoefficients::SlabCoefficients(std::map<int, Rational> values) : values_(std::move(values)) {}

const Rational& SlabCoefficients::at(int degree) const {
  auto it = values_.find(degree);
  if (it == values_.end()) throw MissingCoefficient(degree);
  return it->second;
}

int SlabCoefficients::covered_through() const {
  int d = 0;
  while (values_.contains(d + 1)) ++d;
  return d;
}

void SlabCoefficients::set(int degree, Rational value) {
  if (degree < 1) throw ParseError("slab degree must be >= 1, got " + std::to_string(degree));
  values_[degree] = std::move(value);
}

void SlabCoefficients::merge(const SlabCoefficients& other) {
  for (const auto& [d, v] : other.values_) values_[d] = v;
}

SlabCoefficients default_slab_table() {
  return SlabCoefficients({{1, Rational(-2)}, {2, Rational(5)}, {3, Rational(-32)}, {4, Rational(286)},
                           {5, Rational(-3038)}});
}

SlabCoefficients parse_slab_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("slab file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("slab") || !doc["slab"].is_object()) {
    throw ParseError("slab file must be an object with a \"slab\" object");
  }
  SlabCoefficients out;
  for (const auto& [key, value] : doc["slab"].items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("slab key is not an integer degree: '" + key + "'");
    }
    if (value.is_string()) {
      out.set(degree, Rational::parse(value.get<std::string>()));
    } else if (value.is_number_integer()) {
      out.set(degree, Rational(value.get<long>()));
    } else {
      throw ParseError("slab value for d=" + key + " must be a string or an integer");
    }
  }
  return out;
}

SlabCoefficients load_slab_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open slab file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SlabCoefficients out = default_slab_table();
  out.merge(parse_slab_json(buffer.str()));
  return out;
}

Rational seed_top(int degree, const SlabCoefficients& slab) {
  const int e = 3 * degree;
  const Rational sign = e % 2 == 0 ? Rational(1) : Rational(-1);
  return sign * Rational(e - 1) * slab.at(degree);
}

Rational seed_bottom(int degree, const Rational& top) {
  const long m = 3L * degree - 1;
  return top / Rational(m * m);
}

}  // namespace relgw
