// loja: effective Lojasiewicz bounds, exponent witnesses and estimates.
//
// Every subcommand except `generate` prints one JSON object on stdout.
// Exit codes: 0 success (findings included), 1 domain or input errors,
// 2 usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loja/bounds.hpp"
#include "loja/estimator.hpp"
#include "loja/systems.hpp"
#include "loja/text.hpp"
#include "loja/witness.hpp"
#include "report.hpp"

namespace {

using nlohmann::json;
using namespace loja;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  if (text.find_first_not_of(" \t") == std::string::npos) return items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty entry in list '" + text + "'");
    items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw DomainError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split_list(text)) {
    const MultiPoly c = parse_poly(item);
    if (c.total_degree().value_or(0) != 0) {
      throw DomainError("not a rational number: '" + item + "'");
    }
    out.push_back(c.is_zero() ? Rational(0) : c.terms().begin()->second);
  }
  return out;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("LOJA_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    const long v = std::stol(raw);
    return v > 0 ? static_cast<unsigned>(v) : 0U;
  } catch (const std::exception&) {
    throw DomainError(std::string("LOJA_THREADS must be an integer, got '") + raw + "'");
  }
}

json report(const std::string& command, json inputs, json outputs) {
  return {{"command", command},
          {"version", LOJA_VERSION},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)}};
}

struct BoundArgs {
  std::int64_t n = 0;
  std::int64_t d = 0;
  bool single = false;
};

json cmd_bound(const BoundArgs& a) {
  json out = cli::to_json(make_bound_report(a.n, a.d));
  out["conjectured_exponent"] = to_string(pow(BigInt(static_cast<long>(a.d)),
                                              static_cast<std::uint64_t>(a.n)));
  out["single"] = a.single;
  if (a.single) out["gwoz_applies"] = true;
  return out;
}

struct CountArgs {
  std::int64_t n = 0;
  std::string degrees;
  std::int64_t c = 1;
  bool closed = false;
  std::int64_t k = 0;
  std::int64_t d = 0;
};

json cmd_count(const CountArgs& a) {
  const auto degrees = parse_int_list(a.degrees);
  const BigInt series = critical_count_series(a.n, degrees, a.c);
  json out = {{"series", to_string(series)}};
  if (a.closed) {
    const BigInt closed = critical_count_closed(a.n, a.k, a.d);
    out["closed"] = to_string(closed);
    out["equal"] = closed == series;
  }
  return out;
}

struct WitnessArgs {
  std::string system;
  std::string curve_a;
  std::string curve_s;
  std::string regime = "local";
  bool abs = false;
};

json cmd_witness(const WitnessArgs& a, json& inputs) {
  MaxSystem sys = parse_system_file(read_file(a.system));
  if (a.abs) sys = absolute_system(sys);
  inputs["parsed_system"] = cli::to_json(sys);
  const auto exps = parse_int_list(a.curve_a);
  auto coeffs = a.curve_s.empty() ? std::vector<Rational>(exps.size(), Rational(1))
                                  : parse_rational_list(a.curve_s);
  const MonomialCurve curve(exps, std::move(coeffs), parse_regime(a.regime));
  try {
    return cli::to_json(system_curve_order(sys, curve));
  } catch (const NotEventuallyPositive& e) {
    json members = json::array();
    for (const auto& o : e.member_orders()) members.push_back(cli::to_json(o));
    return {{"status", "NotEventuallyPositive"},
            {"regime", a.regime},
            {"message", e.what()},
            {"member_orders", members}};
  }
}

struct EstimateArgs {
  std::string system;
  RadiusSchedule sched;
  std::string regime = "local";
  OptConfig cfg;
  std::string csv;
  bool abs = false;
};

json cmd_estimate(EstimateArgs a, json& inputs) {
  MaxSystem sys = parse_system_file(read_file(a.system));
  if (a.abs) sys = absolute_system(sys);
  inputs["parsed_system"] = cli::to_json(sys);
  a.sched.regime = parse_regime(a.regime);
  a.cfg.threads = threads_from_env();
  try {
    const EstimateReport report = estimate_exponent(sys, a.sched, a.cfg);
    if (!a.csv.empty()) {
      std::ofstream out(a.csv, std::ios::binary);
      if (!out) throw Error("IoError", "cannot write '" + a.csv + "'");
      out << cli::records_csv(report);
    }
    return cli::to_json(report);
  } catch (const HypothesisViolated& e) {
    json out = cli::to_json(e.record());
    out["status"] = "HypothesisViolated";
    out["message"] = e.what();
    return out;
  }
}

MultiPoly single_poly(const MaxSystem& sys, const std::string& what) {
  if (sys.size() != 1) throw DomainError(what + " must contain exactly one polynomial");
  return sys.polys().front();
}

std::vector<MultiPoly> optional_members(const std::string& path) {
  if (path.empty()) return {};
  return parse_system_file(read_file(path)).polys();
}

// Members of all three families padded to a common variable count.
SemiAlgSpec load_semialg(const std::string& f, const std::string& g, const std::string& h) {
  SemiAlgSpec spec{parse_system_file(read_file(f)).polys(), optional_members(g),
                   optional_members(h)};
  std::size_t nvars = 1;
  for (const auto* family : {&spec.f, &spec.g, &spec.h}) {
    for (const auto& p : *family) nvars = std::max(nvars, p.nvars());
  }
  for (auto* family : {&spec.f, &spec.g, &spec.h}) {
    for (auto& p : *family) p = p.embed(nvars);
  }
  return spec;
}

void print_error_report(const std::string& command, const json& inputs, const Error& e) {
  json out = {{"command", command},
              {"version", LOJA_VERSION},
              {"inputs", inputs},
              {"error", cli::error_json(e)}};
  std::cout << out.dump(2) << '\n';
  std::cerr << "loja " << command << ": " << e.kind() << ": " << e.what() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective Lojasiewicz exponents: bounds, witnesses, estimates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(LOJA_VERSION));

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Closed-form exponent bounds");
  bound_cmd->add_option("--n", bound.n, "number of variables")->required();
  bound_cmd->add_option("--d", bound.d, "degree bound")->required();
  bound_cmd->add_flag("--single", bound.single, "a single polynomial (Gwozdziewicz bound applies)");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Critical-point counts on complete intersections");
  count_cmd->add_option("--n", count.n, "ambient dimension")->required();
  count_cmd->add_option("--degrees", count.degrees, "hypersurface degrees, comma separated");
  count_cmd->add_option("--c", count.c, "degree of the function")->required();
  auto* closed_flag = count_cmd->add_flag("--closed", count.closed, "also evaluate the closed form");
  auto* k_opt = count_cmd->add_option("--k", count.k, "number of hypersurfaces (closed form)");
  auto* d_opt = count_cmd->add_option("--d", count.d, "common degree (closed form)");
  k_opt->needs(closed_flag);
  d_opt->needs(closed_flag);

  WitnessArgs witness;
  auto* witness_cmd = app.add_subcommand("witness", "Exact exponent lower bound along a monomial curve");
  witness_cmd->add_option("--system", witness.system, "system file")->required();
  witness_cmd->add_option("--curve-a", witness.curve_a, "curve exponents, comma separated")->required();
  witness_cmd->add_option("--curve-s", witness.curve_s, "curve coefficients (default all 1)");
  witness_cmd->add_option("--regime", witness.regime, "local or infinity")
      ->check(CLI::IsMember({"local", "infinity"}));
  witness_cmd->add_flag("--abs", witness.abs, "use max |f_i| instead of max f_i");

  EstimateArgs est;
  est.cfg.starts = 32;
  auto* estimate_cmd = app.add_subcommand("estimate", "Empirical exponent on max-norm cubes");
  estimate_cmd->add_option("--system", est.system, "system file")->required();
  estimate_cmd->add_option("--r-start", est.sched.r_start, "first radius")->required();
  estimate_cmd->add_option("--ratio", est.sched.ratio, "geometric ratio between radii")->required();
  estimate_cmd->add_option("--count", est.sched.count, "number of radii")->required();
  estimate_cmd->add_option("--regime", est.regime, "local or infinity")
      ->check(CLI::IsMember({"local", "infinity"}));
  estimate_cmd->add_option("--starts", est.cfg.starts, "random starts per face");
  estimate_cmd->add_option("--seed", est.cfg.seed, "random seed");
  estimate_cmd->add_option("--max-iters", est.cfg.max_iters, "polls per local search");
  estimate_cmd->add_option("--step-init", est.cfg.step_init, "initial step relative to the radius");
  estimate_cmd->add_option("--step-tol", est.cfg.step_tol, "final step relative to the radius");
  estimate_cmd->add_option("--csv", est.csv, "write per-radius records as CSV");
  estimate_cmd->add_flag("--abs", est.abs, "use max |f_i| instead of max f_i");

  auto* generate_cmd = app.add_subcommand("generate", "Emit a system file for a named family");
  generate_cmd->require_subcommand(1);
  std::int64_t gen_n = 0;
  std::int64_t gen_d = 0;
  bool gen_sos = false;
  bool gen_abs = false;
  auto* gen_worst = generate_cmd->add_subcommand("worst-case", "x1^d, x_{i-1} - x_i^d");
  gen_worst->add_option("--n", gen_n)->required();
  gen_worst->add_option("--d", gen_d)->required();
  auto* sos_flag = gen_worst->add_flag("--sos", gen_sos, "emit F = sum f_i^2");
  gen_worst->add_flag("--abs", gen_abs, "emit {f_i, -f_i} so that the max is max |f_i|")
      ->excludes(sos_flag);
  std::string pem_base;
  std::string pem_ell;
  auto* gen_pem = generate_cmd->add_subcommand("pemantle", "F + (ell - x_{n+1}^d)^2");
  gen_pem->add_option("--base", pem_base, "system file holding F")->required();
  gen_pem->add_option("--d", gen_d)->required();
  gen_pem->add_option("--ell", pem_ell, "linear form in x1..xn (default xn)");
  auto* gen_mixed = generate_cmd->add_subcommand("mixed", "{F, x_{n+1}}");
  gen_mixed->add_option("--n", gen_n)->required();
  gen_mixed->add_option("--d", gen_d)->required();
  std::string sa_f, sa_g, sa_h;
  auto* gen_semi = generate_cmd->add_subcommand("semialg", "max{f_i, g_j, -g_j, -h_k}");
  gen_semi->set_help_flag("--help", "Print this help message and exit");  // frees --h
  gen_semi->add_option("--f", sa_f, "objective system file")->required();
  gen_semi->add_option("--g", sa_g, "equations g_j = 0");
  gen_semi->add_option("--h", sa_h, "inequalities h_k >= 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::string command;
  json inputs;
  try {
    if (bound_cmd->parsed()) {
      command = "bound";
      inputs = {{"n", bound.n}, {"d", bound.d}, {"single", bound.single}};
      std::cout << report(command, inputs, cmd_bound(bound)).dump(2) << '\n';
    } else if (count_cmd->parsed()) {
      command = "count";
      inputs = {{"n", count.n}, {"degrees", count.degrees}, {"c", count.c}, {"closed", count.closed}};
      if (count.closed) {
        if (k_opt->count() == 0 || d_opt->count() == 0) {
          std::cerr << "count --closed needs --k and --d\n";
          return kExitUsage;
        }
        inputs["k"] = count.k;
        inputs["d"] = count.d;
      }
      std::cout << report(command, inputs, cmd_count(count)).dump(2) << '\n';
    } else if (witness_cmd->parsed()) {
      command = "witness";
      inputs = {{"system", witness.system},
                {"curve_a", witness.curve_a},
                {"curve_s", witness.curve_s},
                {"regime", witness.regime},
                {"abs", witness.abs}};
      json outputs = cmd_witness(witness, inputs);
      std::cout << report(command, inputs, outputs).dump(2) << '\n';
    } else if (estimate_cmd->parsed()) {
      command = "estimate";
      inputs = {{"system", est.system},
                {"r_start", est.sched.r_start},
                {"ratio", est.sched.ratio},
                {"count", est.sched.count},
                {"regime", est.regime},
                {"starts", est.cfg.starts},
                {"seed", est.cfg.seed},
                {"max_iters", est.cfg.max_iters},
                {"step_init", est.cfg.step_init},
                {"step_tol", est.cfg.step_tol},
                {"abs", est.abs}};
      if (!est.csv.empty()) inputs["csv"] = est.csv;
      json outputs = cmd_estimate(est, inputs);
      std::cout << report(command, inputs, outputs).dump(2) << '\n';
    } else if (generate_cmd->parsed()) {
      command = "generate";
      if (gen_worst->parsed()) {
        const MaxSystem sys = worst_case(gen_n, gen_d);
        if (gen_sos) {
          std::cout << print_system_file(MaxSystem({sum_of_squares(sys)}));
        } else {
          std::cout << print_system_file(gen_abs ? absolute_system(sys) : sys);
        }
      } else if (gen_pem->parsed()) {
        const MultiPoly base = single_poly(parse_system_file(read_file(pem_base)), "--base");
        std::optional<MultiPoly> ell;
        if (!pem_ell.empty()) ell = parse_poly(pem_ell);
        std::cout << print_system_file(MaxSystem({pemantle_lift(base, gen_d, ell)}));
      } else if (gen_mixed->parsed()) {
        std::cout << print_system_file(mixed_degree_counterexample(gen_n, gen_d));
      } else if (gen_semi->parsed()) {
        std::cout << print_system_file(semialg_psi(load_semialg(sa_f, sa_g, sa_h)));
      }
    }
  } catch (const Error& e) {
    if (command == "generate") {
      std::cerr << "loja generate: " << e.kind() << ": " << e.what() << '\n';
    } else {
      print_error_report(command, inputs, e);
    }
    return kExitDomain;
  }
  return 0;
}
