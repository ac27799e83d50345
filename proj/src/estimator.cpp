#include "loja/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "loja/bounds.hpp"

namespace loja {

namespace {

// Members with coefficients rounded once to binary64. Term layout and
// evaluation order mirror MultiPoly::eval_float, so values agree bit for bit.
class FloatSystem {
 public:
  explicit FloatSystem(const MaxSystem& sys) : nvars_(sys.nvars()) {
    for (const auto& p : sys.polys()) {
      Member m;
      for (const auto& [e, c] : p.terms()) {
        Term t{c.get_d(), {}};
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (e[i] != 0) t.powers.emplace_back(i, e[i]);
        }
        m.push_back(std::move(t));
      }
      members_.push_back(std::move(m));
    }
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return members_.size(); }

  // Member values into `out`; NaN is mapped to +infinity.
  void eval(std::span<const double> x, std::span<double> out) const {
    for (std::size_t k = 0; k < members_.size(); ++k) {
      double sum = 0.0;
      for (const auto& t : members_[k]) {
        double term = t.coeff;
        for (const auto& [i, e] : t.powers) term *= ipow(x[i], e);
        sum += term;
      }
      out[k] = std::isnan(sum) ? std::numeric_limits<double>::infinity() : sum;
    }
  }

 private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::size_t, Exponent>> powers;
  };
  using Member = std::vector<Term>;

  std::size_t nvars_;
  std::vector<Member> members_;
};

// Member values sorted in descending order. The first entry is Phi; the rest
// break ties, so that lowering a non-maximal member still counts as progress
// when two members are balanced at a kink.
class Leximax {
 public:
  explicit Leximax(const FloatSystem& sys) : sys_(sys), values_(sys.size()) {}

  const std::vector<double>& operator()(std::span<const double> x) {
    sys_.eval(x, values_);
    std::sort(values_.begin(), values_.end(), std::greater<>());
    return values_;
  }

 private:
  const FloatSystem& sys_;
  std::vector<double> values_;
};

bool leximax_less(const std::vector<double>& a, const std::vector<double>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

// Fixed splitting rule: the stream for (face, start) depends only on these
// indices and the seed, never on the number of starts or threads.
std::uint64_t sub_seed(std::uint64_t seed, std::size_t face, std::size_t start) {
  std::uint64_t z = splitmix64(seed);
  z = splitmix64(z ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(face) + 1)));
  z = splitmix64(z ^ (0x8CB92BA72F3D8DD7ULL * (static_cast<std::uint64_t>(start) + 1)));
  return z;
}

// Uniform in [0, 1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11U) * 0x1.0p-53;
}

struct Candidate {
  double value;
  std::vector<double> point;
};

// Compass search on one face. Coordinates other than face.coordinate move in
// [-r, r]; the step doubles after an improving poll and halves otherwise.
Candidate search_face(const FloatSystem& sys, double r, Face face,
                      std::uint64_t seed, const OptConfig& cfg) {
  const std::size_t n = sys.nvars();
  std::mt19937_64 rng(seed);
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = i == face.coordinate ? face.sign * r : r * (2.0 * unit_uniform(rng) - 1.0);
  }
  Leximax objective(sys);
  std::vector<double> best = objective(x);
  if (n == 1) return {best.front(), x};

  double step = cfg.step_init * r;
  const double min_step = cfg.step_tol * r;
  for (int iter = 0; iter < cfg.max_iters && step >= min_step; ++iter) {
    bool improved = false;
    bool moved_any = false;
    for (std::size_t k = 0; k < n && !improved; ++k) {
      if (k == face.coordinate) continue;
      const double origin = x[k];
      for (const double dir : {1.0, -1.0}) {
        const double trial = std::clamp(origin + dir * step, -r, r);
        if (trial == origin) continue;
        moved_any = true;
        x[k] = trial;
        const auto& values = objective(x);
        if (leximax_less(values, best)) {
          best = values;
          improved = true;
          break;
        }
        x[k] = origin;
      }
    }
    if (!moved_any) break;  // step below the floating-point resolution
    step = improved ? std::min(2.0 * step, 2.0 * r) : 0.5 * step;
  }
  return {best.front(), x};
}

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(),
                                      b.point.end());
}

unsigned resolve_threads(unsigned requested, std::size_t tasks) {
  unsigned t = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(tasks, 1)));
}

MinRecord min_on_cube_compiled(const FloatSystem& sys, double r, const OptConfig& cfg) {
  const std::size_t n = sys.nvars();
  const std::size_t faces = 2 * n;
  // A face of a 1-dimensional cube is a single point.
  const std::size_t starts = n == 1 ? 1 : static_cast<std::size_t>(cfg.starts);
  const std::size_t tasks = faces * starts;
  std::vector<std::optional<Candidate>> results(tasks);

  auto run = [&](std::size_t task) {
    const std::size_t face_index = task / starts;
    const std::size_t start = task % starts;
    const Face face{face_index / 2, face_index % 2 == 0 ? -1 : 1};
    results[task] = search_face(sys, r, face, sub_seed(cfg.seed, face_index, start), cfg);
  };

  const unsigned threads = resolve_threads(cfg.threads, tasks);
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) run(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) run(t);
      });
    }
  }

  std::size_t best = 0;
  for (std::size_t t = 1; t < tasks; ++t) {
    if (candidate_less(*results[t], *results[best])) best = t;
  }
  const std::size_t face_index = best / starts;
  return MinRecord{r, results[best]->value, std::move(results[best]->point),
                   Face{face_index / 2, face_index % 2 == 0 ? -1 : 1}};
}

}  // namespace

void RadiusSchedule::validate() const {
  if (!(r_start > 0) || !std::isfinite(r_start)) {
    throw DomainError("r_start must be a positive finite number");
  }
  if (count < 3) throw DomainError("a schedule needs at least 3 radii");
  if (regime == Regime::Local && !(ratio > 0 && ratio < 1)) {
    throw DomainError("local schedules need ratio in (0, 1)");
  }
  if (regime == Regime::Infinity && !(ratio > 1 && std::isfinite(ratio))) {
    throw DomainError("infinity schedules need ratio > 1");
  }
  const auto r = radii();
  for (std::size_t k = 1; k < r.size(); ++k) {
    const bool monotone = regime == Regime::Local ? r[k] < r[k - 1] : r[k] > r[k - 1];
    if (!monotone || !(r[k] > 0) || !std::isfinite(r[k])) {
      throw DomainError("radii are not strictly monotone in floating point");
    }
  }
}

std::vector<double> RadiusSchedule::radii() const {
  std::vector<double> r;
  r.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) r.push_back(r_start * std::pow(ratio, k));
  return r;
}

void OptConfig::validate() const {
  if (starts < 1) throw DomainError("starts must be >= 1");
  if (max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (!(step_init > 0)) throw DomainError("step_init must be positive");
  if (!(step_tol > 0)) throw DomainError("step_tol must be positive");
}

NonPositiveMin::NonPositiveMin(MinRecord record)
    : Error("NonPositiveMin", "cube minimum " + std::to_string(record.min_value) +
                                  " at radius " + std::to_string(record.radius) +
                                  " is not positive"),
      record_(std::move(record)) {}

HypothesisViolated::HypothesisViolated(MinRecord record)
    : Error("HypothesisViolated",
            "Phi <= 0 on the cube of radius " + std::to_string(record.radius)),
      record_(std::move(record)) {}

MinRecord min_on_cube(const MaxSystem& sys, double r, const OptConfig& cfg) {
  if (!(r > 0) || !std::isfinite(r)) throw DomainError("radius must be positive");
  cfg.validate();
  return min_on_cube_compiled(FloatSystem(sys), r, cfg);
}

LogLogFit fit_loglog(std::span<const MinRecord> records) {
  if (records.size() < 3) throw TooFewPoints("log-log fit needs at least 3 records");
  std::vector<double> radii;
  for (const auto& rec : records) {
    if (!(rec.min_value > 0)) throw NonPositiveMin(rec);
    if (!(rec.radius > 0)) throw DomainError("radii must be positive");
    radii.push_back(rec.radius);
  }
  std::sort(radii.begin(), radii.end());
  if (std::adjacent_find(radii.begin(), radii.end()) != radii.end()) {
    throw DegenerateRadii("log-log fit needs distinct radii");
  }

  const auto m = static_cast<double>(records.size());
  double sx = 0, sy = 0;
  for (const auto& rec : records) {
    sx += std::log(rec.radius);
    sy += std::log(rec.min_value);
  }
  const double mx = sx / m;
  const double my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& rec : records) {
    const double dx = std::log(rec.radius) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(rec.min_value) - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0;
  for (const auto& rec : records) {
    const double res = std::log(rec.min_value) - (intercept + slope * std::log(rec.radius));
    ss += res * res;
  }
  return {slope, intercept, std::sqrt(ss / m)};
}

EstimateReport estimate_exponent(const MaxSystem& sys, const RadiusSchedule& sched,
                                 const OptConfig& cfg, const BoundCheck& check) {
  sched.validate();
  cfg.validate();
  const FloatSystem compiled(sys);
  std::vector<MinRecord> records;
  for (const double r : sched.radii()) {
    MinRecord rec = min_on_cube_compiled(compiled, r, cfg);
    if (!(rec.min_value > 0)) throw HypothesisViolated(std::move(rec));
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(),
            [](const MinRecord& a, const MinRecord& b) { return a.radius < b.radius; });
  const LogLogFit fit = fit_loglog(records);

  const std::size_t n = sys.nvars();
  const std::uint64_t d = std::max<std::uint64_t>(sys.max_degree().value_or(1), 1);
  BigInt bound = loja_bound(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  const double bound_value = bound.get_d();
  const double slack = check.residual_factor * fit.residual + check.base;
  const bool ok = sched.regime == Regime::Local ? fit.slope <= bound_value + slack
                                                : fit.slope >= -bound_value - slack;
  return EstimateReport{sched.regime,
                        std::move(records),
                        fit.slope,
                        fit.intercept,
                        fit.residual,
                        fit.slope,
                        std::exp(fit.intercept),
                        n,
                        d,
                        std::move(bound),
                        slack,
                        ok};
}

}  // namespace loja
