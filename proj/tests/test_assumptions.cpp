#include "kuranet/assumptions.hpp"

#include <cmath>

#include "doctest.h"
#include "kuranet/errors.hpp"
#include "kuranet/rng.hpp"

using namespace kuranet;

namespace {

WeightedGraph k2() { return validate(2, {{0, 1}, {1, 0}}); }

ModelParams k2_params(double k) {
  ModelParams p;
  p.coupling_k = k;
  p.m = 1.0 / (k * k);
  p.alpha = 1.0 / (k * k);
  p.omega_natural = {5e-4, -5e-4};
  return p;
}

bool reports_equal(const AssumptionReport& a, const AssumptionReport& b) {
  if (a.conditions.size() != b.conditions.size()) return false;
  for (std::size_t i = 0; i < a.conditions.size(); ++i) {
    const auto& x = a.conditions[i];
    const auto& y = b.conditions[i];
    if (x.id != y.id || x.lhs != y.lhs || x.rhs != y.rhs || x.holds != y.holds ||
        x.margin != y.margin)
      return false;
  }
  return a.c1 == b.c1 && a.e1_initial == b.e1_initial && a.t_star == b.t_star &&
         a.all_hold == b.all_hold;
}

}  // namespace

TEST_CASE("report structure: six ordered condition records") {
  const auto g = k2();
  OscState s0{0.0, {0.1, -0.1}, {0.0, 0.0}};
  const auto report = check_assumption_a(s0, k2_params(200.0), g, 1.2, 1.0);
  REQUIRE(report.conditions.size() == 6);
  const char* ids[] = {"c1", "c2", "c3", "c4", "c5", "c6"};
  for (int i = 0; i < 6; ++i) CHECK(report.conditions[i].id == ids[i]);
  bool conjunction = true;
  for (const auto& c : report.conditions) conjunction = conjunction && c.holds;
  CHECK(report.all_hold == conjunction);
  CHECK(!report.ec_convention.empty());
}

TEST_CASE("ordering violation fails c1 with a negative margin") {
  const auto g = k2();
  OscState s0{0.0, {0.0, 0.0}, {0.0, 0.0}};
  const auto report = check_assumption_a(s0, k2_params(200.0), g, 1.0, 1.2);
  CHECK_FALSE(report.conditions[0].holds);
  CHECK(report.conditions[0].margin < 0.0);
  CHECK(report.conditions[0].margin == doctest::Approx(1.0 - 1.2).epsilon(1e-15));
  CHECK_FALSE(report.all_hold);
}

TEST_CASE("m = 1 fails c2's second clause") {
  const auto g = k2();
  OscState s0{0.0, {0.0, 0.0}, {0.0, 0.0}};
  ModelParams p;
  p.coupling_k = 200.0;
  p.m = 1.0;
  p.alpha = 1e-5;
  p.omega_natural = {0.0, 0.0};
  const auto report = check_assumption_a(s0, p, g, 1.2, 1.0);
  CHECK_FALSE(report.conditions[1].holds);
  CHECK(report.conditions[1].margin == 0.0);  // binding clause is m < 1
  CHECK(report.conditions[1].lhs == 1.0);
  CHECK(report.conditions[1].rhs == 1.0);
}

TEST_CASE("domain errors for out-of-range thresholds") {
  const auto g = k2();
  OscState s0{0.0, {0.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(check_assumption_a(s0, k2_params(200.0), g, 3.2, 1.0), Error);
  CHECK_THROWS_AS(check_assumption_a(s0, k2_params(200.0), g, 3.0, 1.6), Error);
  CHECK_THROWS_AS(check_assumption_a(s0, k2_params(200.0), g, 0.0, 1.0), Error);
}

TEST_CASE("disconnected graphs are rejected") {
  const auto g = validate(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
  OscState s0{0.0, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  ModelParams p = k2_params(200.0);
  p.omega_natural = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(check_assumption_a(s0, p, g, 1.2, 1.0), Error);
}

TEST_CASE("checker is pure") {
  const auto g = k2();
  OscState s0{0.0, {0.13, -0.13}, {0.0, 0.0}};
  const auto a = check_assumption_a(s0, k2_params(194.6195068359375), g, 1.2, 1.0);
  const auto b = check_assumption_a(s0, k2_params(194.6195068359375), g, 1.2, 1.0);
  CHECK(reports_equal(a, b));
}

TEST_CASE("margins vary continuously with K") {
  const auto g = k2();
  OscState s0{0.0, {0.13, -0.13}, {0.0, 0.0}};
  const double k = 194.6195068359375;
  const auto base = check_assumption_a(s0, k2_params(k), g, 1.2, 1.0);
  const auto bumped = check_assumption_a(s0, k2_params(k * (1.0 + 1e-9)), g, 1.2, 1.0);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& x = base.conditions[i];
    const auto& y = bumped.conditions[i];
    const double scale_l = std::max(1.0, std::abs(x.lhs));
    const double scale_r = std::max(1.0, std::abs(x.rhs));
    CHECK(std::abs(y.lhs - x.lhs) <= 1e-6 * scale_l);
    CHECK(std::abs(y.rhs - x.rhs) <= 1e-6 * scale_r);
  }
}

TEST_CASE("all_hold implies the energy-lemma hypothesis") {
  const auto g = k2();
  OscState s0{0.0, {0.13, -0.13}, {0.0, 0.0}};
  const auto report = check_assumption_a(s0, k2_params(194.6195068359375), g, 1.2, 1.0);
  REQUIRE(report.all_hold);
  const ModelParams p = k2_params(194.6195068359375);
  CHECK(p.m * std::sqrt(p.coupling_k) < 0.125);
}

TEST_CASE("suggest_regime finds a coupling for the trivial instance") {
  // Identical oscillators at a common phase: E1(0) = 0 at every grid point.
  const auto g = k2();
  OscState s0{0.0, {0.0, 0.0}, {0.0, 0.0}};
  const std::vector<double> omega_nat{0.0, 0.0};
  const auto result = suggest_regime(s0, g, omega_nat, 3.0, 1.0, KGrid{1.0, 2.0, 30});
  REQUIRE(result.found.has_value());
  CHECK(result.found->m == 1.0 / (result.found->coupling_k * result.found->coupling_k));
  CHECK(result.found->alpha == result.found->m);
  CHECK(result.found_report->all_hold);
  CHECK(result.rows.back().all_hold);
  for (std::size_t i = 0; i + 1 < result.rows.size(); ++i)
    CHECK_FALSE(result.rows[i].all_hold);  // first hit, in grid order
}

TEST_CASE("E1(0) is recomputed along the grid") {
  const auto g = k2();
  OscState s0{0.0, {0.13, -0.13}, {0.0, 0.0}};
  const std::vector<double> omega_nat{5e-4, -5e-4};
  const auto result = suggest_regime(s0, g, omega_nat, 1.2, 1.0, KGrid{1.0, 1.5, 40});
  REQUIRE(result.found.has_value());
  CHECK(result.found->coupling_k == doctest::Approx(194.6195068359375).epsilon(1e-12));
  // E1(0) = (1 - m sqrt(K)) * sum of squared phase gaps; m sqrt(K) shrinks
  // along the grid so E1(0) climbs toward the bare quadratic form.
  const double bare = 2.0 * 0.26 * 0.26;
  CHECK(result.found_report->e1_initial < bare);
  CHECK(result.found_report->e1_initial ==
        doctest::Approx(bare * (1.0 - result.found->m *
                                          std::sqrt(result.found->coupling_k)))
            .epsilon(1e-12));
}

TEST_CASE("near-antipodal initial phases exhaust the grid") {
  const auto g = k2();
  OscState s0{0.0, {0.0, 3.1}, {0.0, 0.0}};
  const std::vector<double> omega_nat{0.0, 0.0};
  const auto result = suggest_regime(s0, g, omega_nat, 3.0, 1.0, KGrid{1.0, 2.0, 40});
  CHECK_FALSE(result.found.has_value());
  REQUIRE(result.last_report.has_value());
  CHECK_FALSE(result.last_report->all_hold);
  CHECK_FALSE(result.last_report->conditions[0].holds);  // E1(0) >= D0^2/8 throughout
  CHECK(result.rows.size() == 40);
}

TEST_CASE("a single tiny-K grid point is exhausted") {
  const auto g = k2();
  OscState s0{0.0, {0.1, -0.1}, {0.0, 0.0}};
  const auto result = suggest_regime(s0, g, {0.0, 0.0}, 3.0, 1.0, KGrid{1.0, 2.0, 1});
  CHECK_FALSE(result.found.has_value());
  CHECK(result.rows.size() == 1);
}

TEST_CASE("grid validation") {
  const auto g = k2();
  OscState s0{0.0, {0.1, -0.1}, {0.0, 0.0}};
  CHECK_THROWS_AS(suggest_regime(s0, g, {0, 0}, 3.0, 1.0, KGrid{0.5, 2.0, 5}), Error);
  CHECK_THROWS_AS(suggest_regime(s0, g, {0, 0}, 3.0, 1.0, KGrid{1.0, 1.0, 5}), Error);
  CHECK_THROWS_AS(suggest_regime(s0, g, {0, 0}, 3.0, 1.0, KGrid{1.0, 2.0, 0}), Error);
}
