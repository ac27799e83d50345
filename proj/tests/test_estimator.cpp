#include <cmath>
#include <limits>

#include "doctest.h"
#include "loja/bounds.hpp"
#include "loja/estimator.hpp"
#include "loja/systems.hpp"
#include "loja/text.hpp"
#include "loja/witness.hpp"

using namespace loja;

namespace {

MinRecord rec(double r, double m) { return MinRecord{r, m, {r}, Face{0, 1}}; }

// Dense grid over the faces of the 2-D cube {max(|x1|,|x2|) = r}.
double grid_cube_min(const MaxSystem& sys, double r, double h) {
  double best = std::numeric_limits<double>::infinity();
  const int steps = static_cast<int>(std::lround(2 * r / h));
  for (int i = 0; i <= steps; ++i) {
    const double u = -r + i * h;
    for (const double s : {-r, r}) {
      best = std::min(best, eval_max_float(sys, std::vector<double>{u, s}));
      best = std::min(best, eval_max_float(sys, std::vector<double>{s, u}));
    }
  }
  return best;
}

RadiusSchedule decades(double from, double to, int count, Regime regime) {
  return RadiusSchedule{from, std::pow(to / from, 1.0 / (count - 1)), count, regime};
}

OptConfig config(int starts, std::uint64_t seed) {
  OptConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  return cfg;
}

bool same_records(const EstimateReport& a, const EstimateReport& b) {
  if (a.records.size() != b.records.size()) return false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    if (a.records[i].radius != b.records[i].radius ||
        a.records[i].min_value != b.records[i].min_value ||
        a.records[i].argmin != b.records[i].argmin || !(a.records[i].face == b.records[i].face)) {
      return false;
    }
  }
  return a.slope == b.slope && a.intercept == b.intercept && a.residual == b.residual;
}

}  // namespace

TEST_CASE("min_on_cube matches a dense grid on the worst case") {
  const MaxSystem sys = absolute_system(worst_case(2, 2));
  const double grid = grid_cube_min(sys, 0.1, 1e-4);
  const MinRecord m = min_on_cube(sys, 0.1, config(32, 3));
  CHECK(m.min_value <= grid);
  CHECK(m.min_value == doctest::Approx(grid).epsilon(0.02));
  CHECK(m.min_value == doctest::Approx(1e-4).epsilon(0.03));
  CHECK(std::abs(m.argmin[0]) == doctest::Approx(0.01).epsilon(0.02));
  CHECK(std::abs(m.argmin[1]) == 0.1);
  CHECK(m.face.coordinate == 1);
}

TEST_CASE("min_on_cube simple systems") {
  const MinRecord disk = min_on_cube(MaxSystem({parse_poly("x1^2 + x2^2")}), 1.0, config(8, 1));
  CHECK(disk.min_value == doctest::Approx(1.0).epsilon(1e-12));
  const MinRecord lin = min_on_cube(MaxSystem({parse_poly("x1")}), 0.5, config(4, 1));
  CHECK(lin.min_value == -0.5);
  CHECK(lin.face == Face{0, -1});
  CHECK(lin.argmin == std::vector<double>{-0.5});
}

TEST_CASE("max f_i of the raw worst case is not positive on cubes") {
  // max(x1^2, x1 - x2^2) vanishes on the x2 axis; only max |f_i| is positive.
  const MinRecord m = min_on_cube(worst_case(2, 2), 0.1, config(16, 5));
  CHECK(m.min_value <= 0);
}

TEST_CASE("MinRecord invariants") {
  const MaxSystem sys = absolute_system(worst_case(3, 2));
  for (const double r : {0.3, 0.02}) {
    const MinRecord m = min_on_cube(sys, r, config(8, 42));
    double norm = 0;
    for (const double v : m.argmin) norm = std::max(norm, std::abs(v));
    CHECK(std::abs(norm - r) <= 1e-12 * r);
    CHECK(m.min_value == eval_max_float(sys, m.argmin));
    CHECK(m.argmin[m.face.coordinate] == m.face.sign * r);
  }
}

TEST_CASE("fit_loglog") {
  const std::vector<MinRecord> quartic{rec(0.1, 1e-4), rec(0.01, 1e-8), rec(0.001, 1e-12)};
  auto fit = fit_loglog(quartic);
  CHECK(fit.slope == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  CHECK(fit.residual == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));

  fit = fit_loglog(std::vector<MinRecord>{rec(1, 5), rec(10, 5), rec(100, 5)});
  CHECK(fit.slope == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-12));

  fit = fit_loglog(std::vector<MinRecord>{rec(0.1, 2e-4), rec(0.01, 2e-8), rec(0.001, 2e-12)});
  CHECK(fit.slope == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-9));

  CHECK_THROWS_AS(fit_loglog(std::vector<MinRecord>{rec(1, 1), rec(2, 2)}), TooFewPoints);
  CHECK_THROWS_AS(fit_loglog(std::vector<MinRecord>{rec(1, 1), rec(2, 0), rec(3, 1)}),
                  NonPositiveMin);
  CHECK_THROWS_AS(fit_loglog(std::vector<MinRecord>{rec(1, 1), rec(1, 2), rec(3, 1)}),
                  DegenerateRadii);
}

TEST_CASE("schedule and config validation") {
  CHECK_THROWS_AS((RadiusSchedule{0.1, 0.5, 2, Regime::Local}.validate()), DomainError);
  CHECK_THROWS_AS((RadiusSchedule{0.1, 2.0, 5, Regime::Local}.validate()), DomainError);
  CHECK_THROWS_AS((RadiusSchedule{10, 0.5, 5, Regime::Infinity}.validate()), DomainError);
  CHECK_THROWS_AS((RadiusSchedule{-1, 0.5, 5, Regime::Local}.validate()), DomainError);
  CHECK_NOTHROW((RadiusSchedule{10, 2, 5, Regime::Infinity}.validate()));
  const auto radii = RadiusSchedule{1, 0.5, 4, Regime::Local}.radii();
  CHECK(radii == std::vector<double>{1, 0.5, 0.25, 0.125});
  OptConfig bad;
  bad.starts = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS(min_on_cube(worst_case(2, 2), 0.0, OptConfig{}), DomainError);
}

TEST_CASE("estimate_exponent on the worst case and the hyperbola") {
  const auto local = decades(1e-1, 1e-3, 8, Regime::Local);
  const auto r22 = estimate_exponent(absolute_system(worst_case(2, 2)), local, config(64, 7));
  CHECK(r22.slope == doctest::Approx(4.0).epsilon(0.3 / 4.0));
  CHECK(r22.exponent_estimate == r22.slope);
  CHECK(r22.constant_estimate == doctest::Approx(std::exp(r22.intercept)));
  CHECK(r22.bound_ok);
  CHECK(r22.loja_bound == loja_bound(2, 2));
  CHECK(std::is_sorted(r22.records.begin(), r22.records.end(),
                       [](const MinRecord& a, const MinRecord& b) { return a.radius < b.radius; }));

  const auto r23 = estimate_exponent(absolute_system(worst_case(2, 3)), local, config(64, 7));
  CHECK(std::abs(r23.slope - 9.0) <= 0.7);

  const MaxSystem hyperbola({parse_poly("(x1*x2 - 1)^2 + x1^2")});
  const auto inf = estimate_exponent(hyperbola, decades(10, 1e4, 8, Regime::Infinity), config(64, 7));
  CHECK(std::abs(inf.slope + 2.0) <= 0.3);
  CHECK(inf.bound_ok);
  CHECK(inf.d == 4);
}

TEST_CASE("large starting radius on the worst case still fits") {
  // max |f_i| is positive off the origin, so no violation; curvature shows in
  // the residual.
  const auto r = estimate_exponent(absolute_system(worst_case(2, 2)),
                                   RadiusSchedule{10, 0.5, 10, Regime::Local}, config(16, 7));
  CHECK(r.residual > 0.0);
  CHECK(r.bound_ok);
}

TEST_CASE("HypothesisViolated surfaces the failing point") {
  try {
    estimate_exponent(worst_case(2, 2), decades(1e-1, 1e-3, 5, Regime::Local), config(16, 7));
    FAIL("expected HypothesisViolated");
  } catch (const HypothesisViolated& e) {
    CHECK(e.record().min_value <= 0);
    CHECK(e.record().argmin.size() == 2);
  }
}

TEST_CASE("estimates are deterministic and independent of the thread count") {
  const MaxSystem sys = absolute_system(worst_case(3, 2));
  const auto sched = decades(0.2, 0.01, 5, Regime::Local);
  OptConfig one = config(12, 99);
  one.threads = 1;
  OptConfig many = one;
  many.threads = 3;
  const auto a = estimate_exponent(sys, sched, one);
  const auto b = estimate_exponent(sys, sched, one);
  const auto c = estimate_exponent(sys, sched, many);
  CHECK(same_records(a, b));
  CHECK(same_records(a, c));
}

TEST_CASE("doubling the starts never raises a cube minimum") {
  const MaxSystem sys = absolute_system(worst_case(3, 2));
  for (const double r : {0.5, 0.1, 0.01}) {
    double previous = std::numeric_limits<double>::infinity();
    for (const int starts : {1, 2, 4, 8, 16}) {
      const double m = min_on_cube(sys, r, config(starts, 17)).min_value;
      REQUIRE(m <= previous);
      previous = m;
    }
  }
}

TEST_CASE("fitted slopes agree with witness exponents on the family grid") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    for (std::int64_t d = 2; d <= 3; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      const MaxSystem sys = absolute_system(worst_case(n, d));
      const double witness =
          system_curve_order(sys, canonical_worst_curve(n, d)).exponent_bound.get_d();
      const auto est = estimate_exponent(sys, decades(0.1, 1e-3, 6, Regime::Local), config(32, 11));
      CHECK(est.slope >= witness - 0.5);
      CHECK(witness >= est.slope - 0.5);
      CHECK(est.slope <= loja_bound(n, d).get_d() + est.slack);
      CHECK(est.bound_ok);
    }
  }
}
