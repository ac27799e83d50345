#include "report.hpp"

#include <cstdio>
#include <sstream>

#include "loja/text.hpp"

namespace loja::cli {

namespace {

std::string exact(const double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json face_json(const Face& face) {
  return {{"variable", face.coordinate + 1}, {"sign", face.sign}};
}

}  // namespace

json to_json(const BoundReport& r) {
  json out = {{"n", r.n},
              {"d", r.d},
              {"loja_bound", to_string(r.loja_bound)},
              {"gwoz_bound", to_string(r.gwoz_bound)},
              {"worst_case_exponent", nullptr},
              {"sos_exponent", nullptr}};
  if (r.worst_case_exponent) out["worst_case_exponent"] = to_string(*r.worst_case_exponent);
  if (r.sos_exponent) out["sos_exponent"] = to_string(*r.sos_exponent);
  return out;
}

json to_json(const std::optional<ComponentOrder>& order) {
  if (!order) return nullptr;
  return {{"order", order->order}, {"leading_coeff", to_string(order->leading_coeff)}};
}

json to_json(const WitnessReport& r) {
  json members = json::array();
  for (const auto& o : r.member_orders) members.push_back(to_json(o));
  return {{"status", "ok"},
          {"regime", std::string(to_string(r.regime))},
          {"phi_order", r.phi_order},
          {"norm_order", r.norm_order},
          {"exponent_bound", to_string(r.exponent_bound)},
          {"dominating_index", r.dominating_index},
          {"member_orders", members}};
}

json to_json(const MinRecord& r) {
  return {{"radius", r.radius},
          {"min_value", r.min_value},
          {"argmin", r.argmin},
          {"face", face_json(r.face)}};
}

json to_json(const EstimateReport& r) {
  json records = json::array();
  for (const auto& rec : r.records) records.push_back(to_json(rec));
  return {{"status", "ok"},
          {"regime", std::string(to_string(r.regime))},
          {"records", records},
          {"slope", r.slope},
          {"intercept", r.intercept},
          {"residual", r.residual},
          {"exponent_estimate", r.exponent_estimate},
          {"constant_estimate", r.constant_estimate},
          {"n", r.n},
          {"d", r.d},
          {"loja_bound", to_string(r.loja_bound)},
          {"slack", r.slack},
          {"bound_ok", r.bound_ok}};
}

json to_json(const MaxSystem& sys) {
  json polys = json::array();
  for (const auto& p : sys.polys()) polys.push_back(print_poly(p));
  return {{"nvars", sys.nvars()}, {"polys", polys}};
}

json error_json(const Error& error) {
  json out = {{"kind", error.kind()}, {"message", error.what()}};
  if (const auto* positioned = dynamic_cast<const PositionedError*>(&error)) {
    out["position"] = positioned->position();
  }
  if (const auto* syntax = dynamic_cast<const SyntaxError*>(&error)) {
    out["expected"] = syntax->expected();
  }
  return out;
}

std::string records_csv(const EstimateReport& report) {
  std::ostringstream out;
  out << "radius,min_value,face_variable,face_sign";
  for (std::size_t i = 0; i < report.n; ++i) out << ",x" << i + 1;
  out << '\n';
  for (const auto& rec : report.records) {
    out << exact(rec.radius) << ',' << exact(rec.min_value) << ','
        << rec.face.coordinate + 1 << ',' << rec.face.sign;
    for (const double x : rec.argmin) out << ',' << exact(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace loja::cli
