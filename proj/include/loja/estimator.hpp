#ifndef LOJA_ESTIMATOR_HPP
#define LOJA_ESTIMATOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "loja/curve.hpp"
#include "loja/errors.hpp"
#include "loja/poly.hpp"

namespace loja {

// Geometric radii r_k = r_start * ratio^k, k = 0..count-1. Local schedules
// shrink (ratio in (0,1)), Infinity schedules grow (ratio > 1).
struct RadiusSchedule {
  double r_start = 0.1;
  double ratio = 0.5;
  int count = 8;
  Regime regime = Regime::Local;

  // Throws DomainError on an invalid schedule.
  void validate() const;
  std::vector<double> radii() const;
};

struct OptConfig {
  int starts = 32;          // random starts per face
  int max_iters = 4000;     // polls per local search
  double step_init = 0.25;  // initial step, relative to the radius
  double step_tol = 1e-300; // stop below step_tol * radius
  std::uint64_t seed = 0;
  unsigned threads = 0;     // 0: hardware concurrency

  void validate() const;
};

// Face {x : x_coordinate = sign * r} of the cube max_i |x_i| = r.
struct Face {
  std::size_t coordinate;
  int sign;

  friend bool operator==(const Face&, const Face&) = default;
};

struct MinRecord {
  double radius;
  double min_value;
  std::vector<double> argmin;
  Face face;
};

struct LogLogFit {
  double slope;
  double intercept;
  double residual;  // root mean square of the regression residuals
};

// slack = residual_factor * residual + base.
struct BoundCheck {
  double residual_factor = 3.0;
  double base = 0.25;
};

struct EstimateReport {
  Regime regime;
  std::vector<MinRecord> records;  // ascending radius
  double slope;
  double intercept;
  double residual;
  double exponent_estimate;
  double constant_estimate;  // exp(intercept)
  std::size_t n;             // variables
  std::uint64_t d;           // largest member degree (at least 1)
  BigInt loja_bound;         // B(n-1) d^n
  double slack;
  // Local: slope <= loja_bound + slack. Infinity: slope >= -loja_bound - slack.
  bool bound_ok;
};

class NonPositiveMin : public Error {
 public:
  explicit NonPositiveMin(MinRecord record);
  const MinRecord& record() const noexcept { return record_; }

 private:
  MinRecord record_;
};

// Phi <= 0 somewhere on a tested cube: the positivity hypothesis fails in
// the scheduled range. `record` holds the offending point.
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(MinRecord record);
  const MinRecord& record() const noexcept { return record_; }

 private:
  MinRecord record_;
};

// Approximate minimum of Phi over {max_i |x_i| = r}: multi-start compass
// search on each of the 2n faces. Deterministic for a given cfg.seed and
// independent of cfg.threads.
MinRecord min_on_cube(const MaxSystem& sys, double r, const OptConfig& cfg);

// Least squares line through (ln r_k, ln m_k).
LogLogFit fit_loglog(std::span<const MinRecord> records);

EstimateReport estimate_exponent(const MaxSystem& sys, const RadiusSchedule& sched,
                                 const OptConfig& cfg, const BoundCheck& check = {});

}  // namespace loja

#endif  // LOJA_ESTIMATOR_HPP
