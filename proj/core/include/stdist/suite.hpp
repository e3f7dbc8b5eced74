#pragma once

// Named verification checks, grouped by the module they exercise, and the
// consolidated suite that runs all of them.

#include <cstdint>
#include <string>
#include <vector>

#include "stdist/cache.hpp"
#include "stdist/coxeter.hpp"
#include "stdist/period.hpp"
#include "stdist/residue.hpp"
#include "stdist/tree.hpp"

namespace stdist::io {

using Status = period::CheckStatus;

std::string status_name(Status status);

struct CheckResult {
  std::string name;
  std::string reference;  // the mathematical statement being checked
  Status status = Status::Fail;
  std::string witness;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  void add(std::string name, std::string reference, Status status, std::string witness);
  void add(std::string name, std::string reference, bool ok, std::string witness);
  void append(const SuiteReport& other);
  int failures() const;
  bool passed() const { return failures() == 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

// Growth series sanity: a_0 = 1, a_1 = d + 1, positivity, counting bound.
SuiteReport growth_checks(const coxeter::GrowthSeries& series, int bound_depth);

// Closed form vs partial sums within the tail bound, lambda bounds, L1 diagnostic.
SuiteReport period_checks(const coxeter::GrowthSeries& series, std::int64_t q_F);

// Structure, census, Iwahori harmonicity and decay, tree period, sign sampling.
SuiteReport tree_checks(const tree::TreePair& tree, std::uint64_t seed, int sign_pairs = 50);

// Dimension one, profile formulas, layer-by-layer reconstruction.
SuiteReport invariant_checks(const tree::TreePair& tree);

// Orbit counts, move audits, fraction identity, non-square witness.
SuiteReport orbit_checks(const residue::FiniteFieldPair& fields);

// Omega is a group of diagram automorphisms and epsilon is a homomorphism on it.
SuiteReport omega_checks(coxeter::CoxeterType type);

// Types whose Omega is checked by the suite.
std::vector<coxeter::CoxeterType> omega_test_types();

struct SuiteOptions {
  const GrowthCache* cache = nullptr;
  std::uint64_t seed = kDefaultSeed;
  std::size_t element_budget = coxeter::kDefaultElementBudget;
};

// Every acceptance check at its pinned tolerance.
SuiteReport run_suite(const SuiteOptions& options);

std::string render_text(const SuiteReport& report);
std::string render_csv(const SuiteReport& report);

}  // namespace stdist::io
