#include "stdist/suite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stdist/errors.hpp"
#include "stdist/tree_automorphism.hpp"

namespace stdist::io {

std::string status_name(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

void SuiteReport::add(std::string name, std::string reference, Status status, std::string witness) {
  checks.push_back({std::move(name), std::move(reference), status, std::move(witness)});
}

void SuiteReport::add(std::string name, std::string reference, bool ok, std::string witness) {
  add(std::move(name), std::move(reference), ok ? Status::Pass : Status::Fail, std::move(witness));
}

void SuiteReport::append(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.status == Status::Fail; }));
}

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << ']';
  return out.str();
}

std::string join(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << to_string(values[i]);
  out << ']';
  return out.str();
}

std::string type_tag(coxeter::CoxeterType type) { return "~" + coxeter::to_string(type); }

}  // namespace

SuiteReport growth_checks(const coxeter::GrowthSeries& series, int bound_depth) {
  SuiteReport report;
  const std::string tag = type_tag(series.type);
  const int d = series.type.rank;
  const auto& a = series.coefficients;
  const bool shape = !a.empty() && a[0] == 1 && (a.size() < 2 || a[1] == static_cast<std::uint64_t>(d + 1)) &&
                     std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c > 0; });
  report.add("growth-shape " + tag, "a_0 = 1, a_1 = d+1, a_k > 0", shape, join(a));

  const int depth = std::min(bound_depth, series.truncation());
  const period::CountingBoundReport bound = period::check_counting_bound(series, d, depth);
  std::ostringstream slack;
  for (const auto& row : bound.rows) slack << (row.k > 1 ? "," : "") << row.slack;
  report.add("counting-bound " + tag + " k<=" + std::to_string(depth),
             "a_k <= (d+1) d^(k-1), i.e. N_F(k) <= (d+1) d^(k-1) q_F^k", bound.all_hold(),
             "slack [" + slack.str() + "]");
  return report;
}

SuiteReport period_checks(const coxeter::GrowthSeries& series, std::int64_t q_F) {
  SuiteReport report;
  const std::string tag = type_tag(series.type) + " q_F=" + std::to_string(q_F) + " K=" +
                          std::to_string(series.truncation());
  const period::PeriodResult result = period::compute_period(series, q_F);
  const Rational gap = abs(result.closed_form_value - result.partial_sums.back());
  report.add("series-vs-closed-form " + tag,
             "|W(-1/q_F) - S_K| <= geometric tail majorant", period::closed_form_within_tail(result),
             "lambda=" + to_string(result.closed_form_value) + " gap=" + to_string(gap) +
                 " tail=" + (result.tail ? to_string(*result.tail) : std::string("none")));

  const period::BoundsReport bounds = period::check_theorem_bounds(result);
  report.add("period-bounds " + tag, "1 > lambda(f) > 1 - (d+1)/q_F >= 0 when q_F > d",
             bounds.status,
             "lower=" + to_string(bounds.lower) + " lambda=" + to_string(bounds.value));

  if (bounds.status != Status::NotApplicable && result.partial_sums.size() >= 2) {
    const bool envelope = result.partial_sums[0] > result.closed_form_value &&
                          result.closed_form_value > result.partial_sums[1];
    report.add("alternating-envelope " + tag, "S_0 > lambda > S_1", envelope,
               "S_0=" + to_string(result.partial_sums[0]) + " S_1=" + to_string(result.partial_sums[1]));
  }

  const period::L1Report l1 = period::l1_diagnostic(series, q_F, series.truncation());
  report.add("l1-convergence " + tag, "sum_k a_k q_F^k q_E^-k converges", l1.converges,
             "partial=" + to_string(l1.partial_sums.back()));
  return report;
}

SuiteReport tree_checks(const tree::TreePair& tree, std::uint64_t seed, int sign_pairs) {
  SuiteReport report;
  const std::string tag = "q_F=" + std::to_string(tree.q_F()) + " depth=" + std::to_string(tree.depth());

  const tree::StructureReport structure = tree::verify_structure(tree);
  report.add("tree-structure " + tag,
             "panels: q_E+1 chambers, q_F+1 of them in X_F; |Sigma_F(k)| = 2 q_F^k, |Sigma_E(k)| = 2 q_E^k",
             structure.ok(),
             structure.ok() ? "F census " + join(structure.f_sphere_sizes) : structure.violations.front());

  const tree::EdgeCocycle iwahori = tree::iwahori_cocycle(tree);
  const tree::HarmonicityReport harmonic = tree::verify_harmonic(tree, iwahori);
  report.add("iwahori-harmonic " + tag, "sum over chambers at each panel of f = 0", harmonic.harmonic(),
             std::to_string(harmonic.violations.size()) + " violations over " +
                 std::to_string(harmonic.interior_checked) + " interior panels, " +
                 std::to_string(harmonic.boundary_skipped) + " boundary panels skipped");

  const Rational decay = tree::decay_check(tree, iwahori);
  report.add("iwahori-decay " + tag, "|f(C)| <= K_f q_E^-d(C0,C) with K_f = 1", decay == 1,
             "max |f| q_E^d = " + to_string(decay));

  const std::vector<Rational> sums = tree::tree_period(tree, iwahori);
  const Rational expected = make_rational(tree.q_F() - 1, tree.q_F() + 1);
  bool increments = true;
  for (int k = 1; k <= tree.depth(); ++k) {
    const Rational increment = sums[k] - sums[k - 1];
    const Rational predicted = Rational(2) * rational_pow(make_rational(-tree.q_F(), tree.q_E()), k);
    increments = increments && increment == predicted;
  }
  report.add("tree-period-increments " + tag, "sum over Sigma_F(k) of f = 2 q_F^k (-1/q_E)^k", increments,
             "S = " + join(sums));
  const Rational tail = Rational(2) * rational_pow(make_rational(1, tree.q_F()), tree.depth() + 1) /
                        (Rational(1) - make_rational(1, tree.q_F()));
  const bool converges = abs(sums.back() - expected) <= tail && sums[0] > expected && expected > sums[1];
  report.add("tree-period-limit " + tag, "lambda(f) = 1 - 2/(q_F+1), S_0 > lambda > S_1", converges,
             "S_L=" + to_string(sums.back()) + " lambda=" + to_string(expected));

  if (sign_pairs > 0) {
    const tree::SignSampleReport sign = tree::sample_sign_homomorphism(tree, sign_pairs, seed);
    report.add("tree-sign-homomorphism " + tag,
               "epsilon(gh) = epsilon(g) epsilon(h), epsilon(swap of e0) = -1",
               sign.failures == 0 && sign.pairs_checked >= sign_pairs && sign.swap_sign == -1,
               std::to_string(sign.pairs_checked) + " pairs, " + std::to_string(sign.failures) +
                   " failures, swap sign " + std::to_string(sign.swap_sign));
  }
  return report;
}

SuiteReport invariant_checks(const tree::TreePair& tree) {
  SuiteReport report;
  const std::string tag = "q_F=" + std::to_string(tree.q_F()) + " depth=" + std::to_string(tree.depth());
  tree::InvariantSolution solution;
  try {
    solution = tree::invariant_solver(tree);
  } catch (const ModelError& e) {
    report.add("invariant-dimension " + tag, "dim of invariant harmonic cocycles = 1", false, e.what());
    return report;
  }
  report.add("invariant-dimension " + tag, "dim of invariant harmonic cocycles = 1",
             solution.dimension == 1, "dimension " + std::to_string(solution.dimension));

  const std::int64_t q_F = tree.q_F();
  const std::int64_t q_E = tree.q_E();
  bool profile_ok = solution.profile.size() >= 2 && solution.profile[0] == 1 &&
                    solution.profile[1] == make_rational(-(q_F + 1), q_E - q_F);
  for (std::size_t k = 1; profile_ok && k + 1 < solution.profile.size(); ++k)
    profile_ok = solution.profile[k + 1] == -solution.profile[k] / Rational(q_E);
  report.add("invariant-profile " + tag,
             "c_1 = -(q_F+1)/(q_E-q_F), c_(d+1) = -c_d/q_E", profile_ok, "c = " + join(solution.profile));

  bool recursion_ok = true;
  tree::LayerValues layer;
  layer.delta = 0;
  for (tree::EdgeId e : tree::distance_layer(tree, 0)) layer.values.emplace(e, Rational(1));
  for (std::size_t k = 1; k < solution.profile.size() && recursion_ok; ++k) {
    layer = tree::reconstruct_layer(tree, layer);
    recursion_ok = !layer.values.empty() &&
                   std::all_of(layer.values.begin(), layer.values.end(),
                               [&](const auto& kv) { return kv.second == solution.profile[k]; });
  }
  report.add("invariant-recursion " + tag,
             "omega on Ch(X_F, d+1) = -(sum over C_M^d) / |C_M^(d+1)|", recursion_ok,
             "reconstructed " + std::to_string(solution.profile.size() - 1) + " layers");
  return report;
}

SuiteReport orbit_checks(const residue::FiniteFieldPair& fields) {
  SuiteReport report;
  const int q = fields.q();
  const std::string tag = "q=" + std::to_string(q);
  const residue::OrbitReport affine = residue::affine_square_orbits(fields);
  const int total = q * q - q;
  const int size_sum = std::accumulate(affine.orbit_sizes.begin(), affine.orbit_sizes.end(), 0);

  std::ostringstream sizes;
  for (std::size_t i = 0; i < affine.orbit_sizes.size(); ++i)
    sizes << (i ? "," : "") << affine.orbit_sizes[i];

  const residue::MoveAudit affine_audit = residue::audit_moves(fields, residue::affine_square_moves(fields));
  report.add("affine-moves-bijective " + tag, "x -> a^2 x + b permutes k_E - k_F",
             affine_audit.injective && affine_audit.lands_outside_base,
             std::to_string(affine_audit.applications) + " applications");

  if (fields.characteristic() == 2) {
    report.add("affine-square-transitive " + tag, "char 2: every element of k_F is a square",
               affine.orbit_count == 1 && size_sum == total, "orbit sizes [" + sizes.str() + "]");
    return report;
  }

  const bool two_halves = affine.orbit_count == 2 && affine.orbit_sizes[0] == total / 2 &&
                          affine.orbit_sizes[1] == total / 2;
  report.add("affine-square-two-orbits " + tag, "(k_F^*)^2 has index 2", two_halves,
             "orbit sizes [" + sizes.str() + "]");

  const std::vector<residue::Element> roots = residue::square_roots_of_base(fields);
  const residue::Element x0 = residue::select_x0(fields);
  const residue::Element c = residue::twist_constant(fields, x0);
  const residue::OrbitReport closure = residue::inversion_closure_orbits(fields, x0);
  bool independent = true;
  for (residue::Element other : roots)
    independent = independent && residue::inversion_closure_orbits(fields, other).orbit_count == 1;
  report.add("inversion-closure-transitive " + tag, "all C_x, x in k_E - k_F, in one orbit",
             closure.orbit_count == 1 && closure.orbit_sizes[0] == total && independent,
             "x0=" + residue::element_to_string(fields, x0) + " c=" + std::to_string(c) + ", " +
                 std::to_string(roots.size()) + " choices of x0 checked");

  const residue::MoveAudit inversion_audit = residue::audit_moves(fields, residue::inversion_moves(fields, x0));
  report.add("inversion-moves-bijective " + tag, "x -> 1/(a^2 x c + b) lands in k_E - k_F, injective",
             inversion_audit.injective && inversion_audit.lands_outside_base,
             std::to_string(inversion_audit.applications) + " applications");

  const residue::FractionIdentityReport identity = residue::verify_fraction_identity(fields, c);
  report.add("fraction-identity " + tag,
             "1/(a^2xc+b) = (a^2xc-b)/(a^4c-b^2) = (x-b/(a^2c))/(a^2-b^2/(a^2c))", identity.holds(),
             std::to_string(identity.checked) + " checked, " + std::to_string(identity.skipped) +
                 " skipped");

  try {
    const residue::NonsquareWitness w = residue::exists_nonsquare_value(fields, c);
    report.add("nonsquare-witness " + tag, "exists a, b with a^2 - b^2/(a^2c) not a square", true,
               "a=" + std::to_string(w.a) + " b=" + std::to_string(w.b) + " value=" +
                   std::to_string(w.value));
  } catch (const ModelError& e) {
    report.add("nonsquare-witness " + tag, "exists a, b with a^2 - b^2/(a^2c) not a square", false,
               e.what());
  }
  return report;
}

SuiteReport omega_checks(coxeter::CoxeterType type) {
  SuiteReport report;
  const std::vector<coxeter::OmegaElement> group = coxeter::omega_group(type.family, type.rank);
  const coxeter::CoxeterSystem system = coxeter::build_affine_system(type);
  bool closed = true;
  bool abelian = true;
  bool homomorphism = true;
  bool automorphisms = true;
  for (const auto& x : group) {
    automorphisms = automorphisms && coxeter::preserves_coxeter_matrix(x, system.coxeter_matrix());
    for (const auto& y : group) {
      const coxeter::OmegaElement xy = x.compose(y);
      closed = closed && std::find(group.begin(), group.end(), xy) != group.end();
      abelian = abelian && xy == y.compose(x);
      homomorphism = homomorphism && coxeter::epsilon_of_omega(xy) ==
                                         coxeter::epsilon_of_omega(x) * coxeter::epsilon_of_omega(y);
    }
  }
  std::ostringstream signs;
  for (std::size_t i = 0; i < group.size(); ++i)
    signs << (i ? "," : "") << coxeter::epsilon_of_omega(group[i]);
  report.add("omega-sign-homomorphism " + type_tag(type),
             "Omega abelian, acts by diagram automorphisms, epsilon(xy) = epsilon(x) epsilon(y)",
             closed && abelian && homomorphism && automorphisms,
             "|Omega|=" + std::to_string(group.size()) + " signs [" + signs.str() + "]");
  return report;
}

std::vector<coxeter::CoxeterType> omega_test_types() {
  using coxeter::Family;
  std::vector<coxeter::CoxeterType> types;
  for (int d = 1; d <= 8; ++d) types.push_back({Family::A, d});
  for (int d = 3; d <= 8; ++d) types.push_back({Family::B, d});
  for (int d = 2; d <= 8; ++d) types.push_back({Family::C, d});
  for (int d = 4; d <= 8; ++d) types.push_back({Family::D, d});
  for (int d = 6; d <= 8; ++d) types.push_back({Family::E, d});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  return types;
}

SuiteReport run_suite(const SuiteOptions& options) {
  using coxeter::Family;
  SuiteReport report;

  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const Rational value = period::period_closed_form(Family::A, 1, q);
    report.add("rank-one-period q_F=" + std::to_string(q), "lambda(f) = 1 - 2/(q_F+1)",
               value == make_rational(q - 1, q + 1), "lambda=" + to_string(value));
  }

  const std::vector<coxeter::CoxeterType> period_types{
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::C, 2}, {Family::G, 2}};
  for (const auto& type : period_types) {
    const coxeter::CoxeterSystem system = coxeter::build_affine_system(type);
    const coxeter::GrowthSeries series =
        cached_growth(system, 12, options.cache, options.element_budget);
    report.append(growth_checks(series, 8));
    if (type.rank == 1) {
      bool tight = true;
      for (const auto& row : period::check_counting_bound(series, 1, 8).rows) tight = tight && row.slack == 0;
      report.add("counting-bound-equality ~A1", "N_F(k) = 2 q_F^k", tight, join(series.coefficients));
    }
    for (std::int64_t q : {2, 3, 4, 5}) report.append(period_checks(series, q));
  }

  for (std::int64_t q : {2, 3}) report.append(tree_checks(tree::build_tree_pair(q, 6), options.seed, 0));
  for (std::int64_t q : {2, 3}) {
    const tree::TreePair small = tree::build_tree_pair(q, 4);
    const tree::SignSampleReport sign = tree::sample_sign_homomorphism(small, 50, options.seed);
    report.add("tree-sign-homomorphism q_F=" + std::to_string(q) + " depth=4",
               "epsilon(gh) = epsilon(g) epsilon(h), epsilon(swap of e0) = -1",
               sign.failures == 0 && sign.pairs_checked >= 50 && sign.swap_sign == -1,
               std::to_string(sign.pairs_checked) + " pairs, " + std::to_string(sign.failures) +
                   " failures, swap sign " + std::to_string(sign.swap_sign));
  }
  for (std::int64_t q : {2, 3, 4, 5}) report.append(invariant_checks(tree::build_tree_pair(q, q <= 3 ? 5 : 3)));

  for (const auto& [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {5, 1}, {7, 1}, {3, 2}})
    report.append(orbit_checks(residue::build_fields(p, n)));

  for (const auto& type : omega_test_types()) report.append(omega_checks(type));
  return report;
}

std::string render_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "N/A ";
    out << '[' << tag << "] " << c.name << "  {" << c.reference << "}  " << c.witness << '\n';
  }
  out << report.checks.size() << " checks, " << report.failures() << " failed\n";
  return out.str();
}

std::string render_csv(const SuiteReport& report) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "name,status,reference,witness\n";
  for (const auto& c : report.checks)
    out << quote(c.name) << ',' << status_name(c.status) << ',' << quote(c.reference) << ','
        << quote(c.witness) << '\n';
  return out.str();
}

}  // namespace stdist::io
