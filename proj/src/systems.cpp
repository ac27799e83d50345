#include "loja/systems.hpp"

#include <string>

#include "loja/errors.hpp"

namespace loja {

namespace {

void require_worst_case_args(std::int64_t n, std::int64_t d) {
  if (n < 1) throw DomainError("n must be >= 1 (got " + std::to_string(n) + ")");
  if (d < 2) throw DomainError("d must be >= 2 (got " + std::to_string(d) + ")");
  if (n > 64) throw DomainError("n must be <= 64");
  if (d > 1'000'000) throw DomainError("d must be <= 1000000");
}

// Views p in `nvars` variables; dropped variables must be unused.
MultiPoly resize_vars(const MultiPoly& p, std::size_t nvars) {
  if (nvars >= p.nvars()) return p.embed(nvars);
  MultiPoly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    terms.emplace(ExpVec(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars)), c);
  }
  return MultiPoly(nvars, std::move(terms));
}

}  // namespace

MaxSystem worst_case(std::int64_t n, std::int64_t d) {
  require_worst_case_args(n, d);
  const auto nv = static_cast<std::size_t>(n);
  const auto deg = static_cast<std::uint64_t>(d);
  std::vector<MultiPoly> polys;
  polys.push_back(pow(MultiPoly::variable(nv, 0), deg));
  for (std::size_t i = 1; i < nv; ++i) {
    polys.push_back(MultiPoly::variable(nv, i - 1) - pow(MultiPoly::variable(nv, i), deg));
  }
  return MaxSystem(std::move(polys));
}

MaxSystem absolute_system(const MaxSystem& sys) {
  std::vector<MultiPoly> polys;
  polys.reserve(2 * sys.size());
  for (const auto& p : sys.polys()) {
    polys.push_back(p);
    polys.push_back(negate(p));
  }
  return MaxSystem(std::move(polys));
}

MultiPoly pemantle_lift(const MultiPoly& base, std::int64_t d,
                        const std::optional<MultiPoly>& ell) {
  if (d < 2) throw DomainError("d must be >= 2 (got " + std::to_string(d) + ")");
  const std::size_t n = base.nvars();
  const MultiPoly form = ell.value_or(MultiPoly::variable(n, n - 1));
  for (std::size_t i = n; i < form.nvars(); ++i) {
    if (form.uses_variable(i)) {
      throw VariableLeak("linear form mentions x" + std::to_string(i + 1) +
                         " but the base polynomial has " + std::to_string(n) +
                         " variables");
    }
  }
  if (form.total_degree() != std::optional<std::uint64_t>(1)) {
    throw NotLinear("linear form must have total degree 1");
  }
  const MultiPoly lifted_form = resize_vars(form, n + 1);
  const MultiPoly tail =
      lifted_form - pow(MultiPoly::variable(n + 1, n), static_cast<std::uint64_t>(d));
  return base.embed(n + 1) + tail * tail;
}

MaxSystem mixed_degree_counterexample(std::int64_t n, std::int64_t d) {
  const MultiPoly f = sum_of_squares(worst_case(n, d));
  const auto nv = static_cast<std::size_t>(n) + 1;
  return MaxSystem({f.embed(nv), MultiPoly::variable(nv, nv - 1)});
}

MaxSystem semialg_psi(const SemiAlgSpec& spec) {
  if (spec.f.empty()) throw EmptySystem("semi-algebraic objective family is empty");
  std::vector<MultiPoly> polys(spec.f);
  for (const auto& g : spec.g) polys.push_back(g);
  for (const auto& g : spec.g) polys.push_back(negate(g));
  for (const auto& h : spec.h) polys.push_back(negate(h));
  return MaxSystem(std::move(polys));
}

}  // namespace loja
