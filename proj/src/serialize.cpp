#include "kyoung/serialize.hpp"

#include <stdexcept>

namespace kyoung {

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  p = Partition(j.get<std::vector<int>>());
}

nlohmann::json rational_to_json(const Rational& r) { return {r.numerator(), r.denominator()}; }

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
  return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

nlohmann::json point_to_json(const Point& p) {
  auto j = nlohmann::json::array();
  for (const auto& x : p) j.push_back(rational_to_json(x));
  return j;
}

Point point_from_json(const nlohmann::json& j) {
  Point p;
  for (const auto& x : j) p.push_back(rational_from_json(x));
  return p;
}

nlohmann::json alcove_to_json(const Alcove& a) { return a.vertices; }

nlohmann::json core_sum_to_json(const CoreSum& s) {
  auto j = nlohmann::json::array();
  for (const auto& [core, coeff] : s.terms()) j.push_back({{"core", core}, {"coeff", coeff}});
  return j;
}

CoreSum core_sum_from_json(const nlohmann::json& j, int k) {
  CoreSum s(k);
  for (const auto& term : j) s += CoreSum(Core(term.at("core").get<Partition>(), k), term.at("coeff").get<std::int64_t>());
  return s;
}

}  // namespace kyoung
