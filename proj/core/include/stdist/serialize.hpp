#pragma once

// JSON and CSV renderings of the toolkit's values.
//
// Every JSON document carries "schema_version" and "kind". Exact rationals are
// {"num": n, "den": d} in lowest terms with d > 0; a component that does not
// fit in a signed 64-bit integer is written as a decimal string instead.
// An infinite Coxeter matrix entry is written as 0.

#include <string>

#include "stdist/coxeter.hpp"
#include "stdist/period.hpp"
#include "stdist/rational.hpp"
#include "stdist/residue.hpp"
#include "stdist/tree.hpp"

namespace stdist::io {

inline constexpr int kSchemaVersion = 1;

std::string to_json(const coxeter::CoxeterSystem& system);
std::string to_json(const coxeter::GrowthSeries& series);
std::string to_json(const period::PeriodResult& result);
std::string to_json(const residue::OrbitReport& report);
std::string to_json(const tree::TreePair& tree);

// Throws InvalidArgumentError on malformed input or a schema mismatch.
coxeter::GrowthSeries growth_series_from_json(const std::string& text);

// CSV with header "edge_id,num,den".
std::string cocycle_to_csv(const tree::EdgeCocycle& cocycle);

}  // namespace stdist::io
