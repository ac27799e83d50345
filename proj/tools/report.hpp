#ifndef LOJA_TOOLS_REPORT_HPP
#define LOJA_TOOLS_REPORT_HPP

#include <string>

#include "json.hpp"
#include "loja/bounds.hpp"
#include "loja/errors.hpp"
#include "loja/estimator.hpp"
#include "loja/poly.hpp"
#include "loja/witness.hpp"

namespace loja::cli {

using nlohmann::json;

// Exact quantities travel as strings ("p/q" or "p"); floats as numbers.
json to_json(const BoundReport& report);
json to_json(const WitnessReport& report);
json to_json(const std::optional<ComponentOrder>& order);
json to_json(const MinRecord& record);
json to_json(const EstimateReport& report);
json to_json(const MaxSystem& sys);
json error_json(const Error& error);

// Rows: radius,min_value,face_variable,face_sign,x1..xn, ascending radius.
std::string records_csv(const EstimateReport& report);

}  // namespace loja::cli

#endif
