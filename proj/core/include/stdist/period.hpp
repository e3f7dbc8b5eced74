#pragma once

// Sphere sizes and the period of the Iwahori-spherical harmonic cocycle over
// the F-rational sub-building, as an exact alternating series and in closed form.
//
// The Iwahori cocycle takes the value (-1/q_E)^k on chambers at gallery
// distance k from the base chamber, and the F-building has a_k q_F^k chambers
// at distance k, so the period is sum_k a_k (-1/q_F)^k with q_E = q_F^2.

#include <cstdint>
#include <optional>
#include <vector>

#include "stdist/coxeter.hpp"
#include "stdist/rational.hpp"

namespace stdist::period {

using coxeter::CoxeterType;
using coxeter::GrowthSeries;

// q must be a prime power >= 2; throws InvalidArgumentError otherwise.
void validate_prime_power(std::int64_t q);
bool is_prime_power(std::int64_t q);

// a_k * q^k chambers at gallery distance k in a building of thickness q.
BigInt sphere_size(const GrowthSeries& series, std::int64_t q, int k);

struct CountingBoundRow {
  int k = 0;
  std::uint64_t coefficient = 0;  // a_k
  BigInt bound;                   // (d+1) d^(k-1)
  BigInt slack;                   // bound - a_k (negative on violation)
  bool holds = false;
};

struct CountingBoundReport {
  std::vector<CountingBoundRow> rows;  // k = 1..K
  bool all_hold() const;
};

// a_k <= (d+1) d^(k-1) for 1 <= k <= K; violations are reported, not thrown.
CountingBoundReport check_counting_bound(const GrowthSeries& series, int d, int max_k);

// partial[m] = sum_{k <= m} a_k (-1/q_F)^k.
std::vector<Rational> period_series(const GrowthSeries& series, std::int64_t q_F, int max_k);

// W_fin(t) prod_i 1/(1 - t^{m_i}) evaluated at t = -1/q_F.
Rational period_closed_form(coxeter::Family family, int rank, std::int64_t q_F);

// Majorant for sum_{k > K} a_k q_F^-k by a geometric series whose ratio is the
// largest of the last three ratios a_{k+1} / (a_k q_F), k < K. Throws
// InvalidArgumentError when K < 1 and ModelError when that ratio is >= 1.
Rational tail_bound(const GrowthSeries& series, std::int64_t q_F, int max_k);

struct PeriodResult {
  CoxeterType type;
  std::int64_t q_F = 2;
  std::int64_t q_E = 4;  // always q_F^2
  Rational closed_form_value;
  std::vector<Rational> partial_sums;  // indexed by truncation k
  std::optional<Rational> tail;        // tail_bound at the last truncation
};

PeriodResult compute_period(const GrowthSeries& series, std::int64_t q_F);

enum class CheckStatus { Pass, Fail, NotApplicable };

struct BoundsReport {
  CheckStatus status = CheckStatus::NotApplicable;
  Rational lower;  // 1 - (d+1)/q_F
  Rational value;
};

// 1 > lambda > 1 - (d+1)/q_F, applicable only when q_F > d.
BoundsReport check_theorem_bounds(const PeriodResult& result);

// |closed form - partial_sums[K]| <= tail.
bool closed_form_within_tail(const PeriodResult& result);

struct L1Report {
  std::vector<Rational> partial_sums;  // sum_{k <= m} a_k q_F^-k
  std::vector<Rational> term_ratios;   // a_{k+1} / (a_k q_F)
  bool converges = false;
};

// Absolute series sum_k a_k q_F^k q_E^-k. Affine growth is polynomial, so this
// converges for every q_F >= 2, not only for q_F > d.
L1Report l1_diagnostic(const GrowthSeries& series, std::int64_t q_F, int max_k);

}  // namespace stdist::period
