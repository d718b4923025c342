#pragma once

#include <json.hpp>

#include "kyoung/alcove.hpp"
#include "kyoung/nilcoxeter.hpp"

namespace kyoung {

// Partitions, words and weights are plain integer arrays; rationals are
// [numerator, denominator] pairs; core sums are arrays of {core, coeff}.

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json alcove_to_json(const Alcove& a);

nlohmann::json core_sum_to_json(const CoreSum& s);
CoreSum core_sum_from_json(const nlohmann::json& j, int k);

}  // namespace kyoung
