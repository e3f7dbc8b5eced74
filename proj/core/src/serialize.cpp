#include "stdist/serialize.hpp"

#include <limits>
#include <sstream>

#include "json_detail.hpp"
#include "stdist/errors.hpp"

namespace stdist::io {

namespace detail {

namespace {

json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return value.str();
}

}  // namespace

json rational_json(const Rational& value) {
  return json{{"num", integer_json(boost::multiprecision::numerator(value))},
              {"den", integer_json(boost::multiprecision::denominator(value))}};
}

json rational_list_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(rational_json(v));
  return out;
}

json coxeter_system_json(const coxeter::CoxeterSystem& system) {
  json generators = json::array();
  for (const auto& g : system.generators()) {
    json linear = json::array();
    json translation = json::array();
    for (int i = 0; i < g.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < g.dim(); ++j) row.push_back(g.linear(i, j));
      linear.push_back(row);
      translation.push_back(g.translation(i));
    }
    generators.push_back({{"linear", linear}, {"translation", translation}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"kind", "coxeter_system"},
              {"family", std::string(1, coxeter::family_letter(system.type().family))},
              {"rank", system.rank()},
              {"coxeter_matrix", system.coxeter_matrix()},
              {"generators", generators}};
}

json growth_series_json(const coxeter::GrowthSeries& series) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "growth_series"},
              {"family", std::string(1, coxeter::family_letter(series.type.family))},
              {"rank", series.type.rank},
              {"truncation", series.truncation()},
              {"source", series.source == coxeter::SeriesSource::Enumerated ? "enumerated"
                                                                            : "closed-form"},
              {"coefficients", series.coefficients}};
}

json period_result_json(const period::PeriodResult& result) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "period_result"},
              {"family", std::string(1, coxeter::family_letter(result.type.family))},
              {"rank", result.type.rank},
              {"q_F", result.q_F},
              {"q_E", result.q_E},
              {"closed_form", rational_json(result.closed_form_value)},
              {"partial_sums", rational_list_json(result.partial_sums)},
              {"tail_bound", result.tail ? rational_json(*result.tail) : json(nullptr)}};
}

json orbit_report_json(const residue::OrbitReport& report) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", "orbit_report"},
              {"moves", report.moves},
              {"elements", report.elements},
              {"orbit_count", report.orbit_count},
              {"orbit_sizes", report.orbit_sizes},
              {"representatives", report.representatives}};
}

json tree_json(const tree::TreePair& tree) {
  json vertices = json::array();
  for (const auto& v : tree.vertices())
    vertices.push_back({{"id", v.id},
                        {"label", v.label},
                        {"in_F", v.in_F},
                        {"interior", v.interior},
                        {"level", v.level}});
  json edges = json::array();
  for (const auto& e : tree.edges())
    edges.push_back({{"id", e.id},
                     {"endpoints", {e.inner, e.outer}},
                     {"in_F", e.in_F},
                     {"gallery_distance", e.gallery_distance},
                     {"delta", e.delta}});
  return json{{"schema_version", kSchemaVersion},
              {"kind", "tree_pair"},
              {"q_F", tree.q_F()},
              {"q_E", tree.q_E()},
              {"depth", tree.depth()},
              {"root_edge", tree.root_edge()},
              {"vertices", vertices},
              {"edges", edges}};
}

std::string dump(const json& document) { return document.dump(2) + "\n"; }

}  // namespace detail

std::string to_json(const coxeter::CoxeterSystem& system) {
  return detail::dump(detail::coxeter_system_json(system));
}
std::string to_json(const coxeter::GrowthSeries& series) {
  return detail::dump(detail::growth_series_json(series));
}
std::string to_json(const period::PeriodResult& result) {
  return detail::dump(detail::period_result_json(result));
}
std::string to_json(const residue::OrbitReport& report) {
  return detail::dump(detail::orbit_report_json(report));
}
std::string to_json(const tree::TreePair& tree) { return detail::dump(detail::tree_json(tree)); }

coxeter::GrowthSeries growth_series_from_json(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion)
      throw InvalidArgumentError("unsupported schema_version");
    if (doc.at("kind").get<std::string>() != "growth_series")
      throw InvalidArgumentError("document is not a growth_series");
    coxeter::GrowthSeries series;
    series.type.family = coxeter::parse_family(doc.at("family").get<std::string>());
    series.type.rank = doc.at("rank").get<int>();
    coxeter::validate_type(series.type);
    const std::string source = doc.at("source").get<std::string>();
    if (source == "enumerated") {
      series.source = coxeter::SeriesSource::Enumerated;
    } else if (source == "closed-form") {
      series.source = coxeter::SeriesSource::ClosedForm;
    } else {
      throw InvalidArgumentError("unknown series source '" + source + "'");
    }
    series.coefficients = doc.at("coefficients").get<std::vector<std::uint64_t>>();
    if (series.coefficients.empty() || series.coefficients.front() != 1)
      throw InvalidArgumentError("growth series must start with a_0 = 1");
    if (series.truncation() != doc.at("truncation").get<int>())
      throw InvalidArgumentError("truncation does not match the coefficient count");
    return series;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("malformed growth series JSON: ") + e.what());
  }
}

std::string cocycle_to_csv(const tree::EdgeCocycle& cocycle) {
  std::ostringstream out;
  out << "edge_id,num,den\n";
  for (std::size_t e = 0; e < cocycle.size(); ++e) {
    const Rational& v = cocycle.values()[e];
    out << e << ',' << boost::multiprecision::numerator(v) << ','
        << boost::multiprecision::denominator(v) << '\n';
  }
  return out.str();
}

}  // namespace stdist::io
