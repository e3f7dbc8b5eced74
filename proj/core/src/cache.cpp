#include "stdist/cache.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "stdist/errors.hpp"
#include "stdist/serialize.hpp"

namespace stdist::io {

GrowthCache::GrowthCache(std::filesystem::path directory, std::ostream* warnings)
    : directory_(std::move(directory)), warnings_(warnings) {}

std::string GrowthCache::key(coxeter::CoxeterType type, int max_length) {
  return "growth-" + coxeter::to_string(type) + "-K" + std::to_string(max_length);
}

std::filesystem::path GrowthCache::path_for(coxeter::CoxeterType type, int max_length) const {
  return directory_ / (key(type, max_length) + ".json");
}

std::optional<coxeter::GrowthSeries> GrowthCache::get(coxeter::CoxeterType type,
                                                      int max_length) const {
  const std::filesystem::path path = path_for(type, max_length);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    coxeter::GrowthSeries series = growth_series_from_json(buffer.str());
    if (!(series.type == type) || series.truncation() != max_length)
      throw InvalidArgumentError("entry describes a different series");
    return series;
  } catch (const InvalidArgumentError& e) {
    if (warnings_ != nullptr)
      *warnings_ << "warning: ignoring corrupt cache entry " << path.string() << ": " << e.what()
                 << '\n';
    return std::nullopt;
  }
}

void GrowthCache::put(const coxeter::GrowthSeries& series) const {
  std::filesystem::create_directories(directory_);
  const std::filesystem::path target = path_for(series.type, series.truncation());
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + temp.string());
    out << to_json(series);
    if (!out) throw std::runtime_error("failed writing cache file " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

coxeter::GrowthSeries cached_growth(const coxeter::CoxeterSystem& system, int max_length,
                                    const GrowthCache* cache, std::size_t element_budget) {
  if (cache != nullptr) {
    if (auto hit = cache->get(system.type(), max_length)) return *hit;
  }
  coxeter::GrowthSeries series = coxeter::growth_coefficients(system, max_length, element_budget);
  if (cache != nullptr) cache->put(series);
  return series;
}

}  // namespace stdist::io
