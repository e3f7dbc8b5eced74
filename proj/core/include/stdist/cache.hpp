#pragma once

// Disk cache of growth series, one JSON file per (type, K).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "stdist/coxeter.hpp"

namespace stdist::io {

class GrowthCache {
 public:
  // Warnings about unreadable entries go to `warnings` (may be null).
  explicit GrowthCache(std::filesystem::path directory, std::ostream* warnings = nullptr);

  const std::filesystem::path& directory() const { return directory_; }

  // "growth-A2-K6"
  static std::string key(coxeter::CoxeterType type, int max_length);
  std::filesystem::path path_for(coxeter::CoxeterType type, int max_length) const;

  // A corrupt or mismatching entry is a miss and emits a warning.
  std::optional<coxeter::GrowthSeries> get(coxeter::CoxeterType type, int max_length) const;

  // Atomic: writes a temporary file in the cache directory, then renames it.
  void put(const coxeter::GrowthSeries& series) const;

 private:
  std::filesystem::path directory_;
  std::ostream* warnings_;
};

// Cache lookup, else enumeration followed by a cache write. `cache` may be null.
coxeter::GrowthSeries cached_growth(const coxeter::CoxeterSystem& system, int max_length,
                                    const GrowthCache* cache,
                                    std::size_t element_budget = coxeter::kDefaultElementBudget);

}  // namespace stdist::io
