#pragma once

#include <json.hpp>

#include "stdist/coxeter.hpp"
#include "stdist/period.hpp"
#include "stdist/rational.hpp"
#include "stdist/residue.hpp"
#include "stdist/tree.hpp"

namespace stdist::io::detail {

using nlohmann::json;

json rational_json(const Rational& value);
json rational_list_json(const std::vector<Rational>& values);

json coxeter_system_json(const coxeter::CoxeterSystem& system);
json growth_series_json(const coxeter::GrowthSeries& series);
json period_result_json(const period::PeriodResult& result);
json orbit_report_json(const residue::OrbitReport& report);
json tree_json(const tree::TreePair& tree);

std::string dump(const json& document);

}  // namespace stdist::io::detail
