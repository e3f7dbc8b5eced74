#include "stdist/period.hpp"

#include <algorithm>

#include "stdist/errors.hpp"

namespace stdist::period {

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

void validate_prime_power(std::int64_t q) {
  if (!is_prime_power(q))
    throw InvalidArgumentError("q = " + std::to_string(q) + " is not a prime power >= 2");
}

namespace {

void check_truncation(const GrowthSeries& series, int k, const char* what) {
  if (k < 0 || k > series.truncation())
    throw InvalidArgumentError(std::string(what) + ": k = " + std::to_string(k) +
                               " outside the series truncation 0.." +
                               std::to_string(series.truncation()));
}

BigInt big_pow(std::int64_t base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

BigInt sphere_size(const GrowthSeries& series, std::int64_t q, int k) {
  check_truncation(series, k, "sphere_size");
  return BigInt(series.coefficients[k]) * big_pow(q, k);
}

bool CountingBoundReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountingBoundRow& r) { return r.holds; });
}

CountingBoundReport check_counting_bound(const GrowthSeries& series, int d, int max_k) {
  check_truncation(series, max_k, "check_counting_bound");
  CountingBoundReport report;
  for (int k = 1; k <= max_k; ++k) {
    CountingBoundRow row;
    row.k = k;
    row.coefficient = series.coefficients[k];
    row.bound = BigInt(d + 1) * big_pow(d, k - 1);
    row.slack = row.bound - BigInt(row.coefficient);
    row.holds = row.slack >= 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Rational> period_series(const GrowthSeries& series, std::int64_t q_F, int max_k) {
  validate_prime_power(q_F);
  check_truncation(series, max_k, "period_series");
  const Rational step = make_rational(-1, q_F);
  std::vector<Rational> partial;
  Rational term_weight = 1;
  Rational sum = 0;
  for (int k = 0; k <= max_k; ++k) {
    sum += Rational(BigInt(series.coefficients[k])) * term_weight;
    partial.push_back(sum);
    term_weight *= step;
  }
  return partial;
}

Rational period_closed_form(coxeter::Family family, int rank, std::int64_t q_F) {
  validate_prime_power(q_F);
  const Rational t = make_rational(-1, q_F);
  const coxeter::IntPolynomial finite = coxeter::poincare_finite(family, rank);
  Rational value = 0;
  Rational power = 1;
  for (std::int64_t c : finite) {
    value += Rational(BigInt(c)) * power;
    power *= t;
  }
  for (int m : coxeter::exponents(family, rank)) value /= Rational(1) - rational_pow(t, m);
  return value;
}

Rational tail_bound(const GrowthSeries& series, std::int64_t q_F, int max_k) {
  validate_prime_power(q_F);
  check_truncation(series, max_k, "tail_bound");
  if (max_k < 1) throw InvalidArgumentError("tail_bound needs at least one term ratio (K >= 1)");
  Rational ratio = 0;
  for (int k = std::max(0, max_k - 3); k < max_k; ++k) {
    const Rational r(BigInt(series.coefficients[k + 1]),
                     BigInt(series.coefficients[k]) * BigInt(q_F));
    ratio = std::max(ratio, r);
  }
  if (ratio >= 1)
    throw ModelError("tail ratio " + to_string(ratio) + " >= 1; geometric majorant diverges");
  const Rational last_term(BigInt(series.coefficients[max_k]), big_pow(q_F, max_k));
  return last_term * ratio / (Rational(1) - ratio);
}

PeriodResult compute_period(const GrowthSeries& series, std::int64_t q_F) {
  validate_prime_power(q_F);
  PeriodResult result;
  result.type = series.type;
  result.q_F = q_F;
  result.q_E = q_F * q_F;
  result.closed_form_value = period_closed_form(series.type.family, series.type.rank, q_F);
  result.partial_sums = period_series(series, q_F, series.truncation());
  if (series.truncation() >= 1) result.tail = tail_bound(series, q_F, series.truncation());
  return result;
}

BoundsReport check_theorem_bounds(const PeriodResult& result) {
  BoundsReport report;
  const int d = result.type.rank;
  report.value = result.closed_form_value;
  report.lower = Rational(1) - make_rational(d + 1, result.q_F);
  if (result.q_F <= d) {
    report.status = CheckStatus::NotApplicable;
    return report;
  }
  const bool holds = Rational(1) > report.value && report.value > report.lower && report.lower >= 0;
  report.status = holds ? CheckStatus::Pass : CheckStatus::Fail;
  return report;
}

bool closed_form_within_tail(const PeriodResult& result) {
  if (!result.tail || result.partial_sums.empty()) return false;
  return abs(result.closed_form_value - result.partial_sums.back()) <= *result.tail;
}

L1Report l1_diagnostic(const GrowthSeries& series, std::int64_t q_F, int max_k) {
  validate_prime_power(q_F);
  check_truncation(series, max_k, "l1_diagnostic");
  L1Report report;
  Rational sum = 0;
  for (int k = 0; k <= max_k; ++k) {
    sum += Rational(BigInt(series.coefficients[k]), big_pow(q_F, k));
    report.partial_sums.push_back(sum);
    if (k < max_k)
      report.term_ratios.emplace_back(BigInt(series.coefficients[k + 1]),
                                      BigInt(series.coefficients[k]) * BigInt(q_F));
  }
  // Polynomial growth: the term ratio tends to 1/q_F < 1.
  report.converges = report.term_ratios.empty() || report.term_ratios.back() < 1;
  return report;
}

}  // namespace stdist::period
