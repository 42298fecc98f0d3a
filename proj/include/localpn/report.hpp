#pragma once

#include <json.hpp>

#include "localpn/admissibility.hpp"
#include "localpn/asymptotics.hpp"
#include "localpn/fitting.hpp"
#include "localpn/lode.hpp"
#include "localpn/model.hpp"
#include "localpn/qseries.hpp"
#include "localpn/zlaurent.hpp"

namespace localpn {

// insertion-ordered JSON keeps report bytes deterministic
using Json = nlohmann::ordered_json;

// rationals as "num/den" strings, cyclotomics as {"m":..., "coeffs":[...]}
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"var":"q","trunc":N,"coeffs":[...]}
Json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// {"trunc":N,"zmax":M,"rows":[{"d":d,"zmin":-d,"coeffs":[...]}]}
Json qzseries_to_json(const QZSeries& s);

// {"check":...,"status":"pass"|"fail","first_mismatch":{...}|null}
Json verify_report_to_json(const VerifyReport& r);

// {"m":...,"base":"f"|"linear-factor","terms":[{"j":...,"e":...,"c":...}]}
Json gn_element_to_json(const GnElement& e);

// {"n":...,"lambda":...,"results":[{"i":...,"k":...,"status":...,"element":...}]}
Json conjecture_report_to_json(const ConjectureReport& r);

// per-entry condition checks plus the executor outcome
Json condition_report_to_json(const ConditionReport& r);

// A-table entries keyed "A00".."A13" as factored rational-function strings
Json lode_to_json(const LOdeSystem& sys);

// operator table: {"level":...,"f":[...],"entries":[{"l","p","num":[...],"fexp":e}]}
Json level_operator_to_json(const LevelOperator& op);
LevelOperator level_operator_from_json(const Json& j);

// "(num)*(3*L-4)^-k" when den = c * f^k, else "(num)/(den)"
std::string ratfunc_factored_str(const RationalFunction& rf, const Poly& f);

} // namespace localpn
