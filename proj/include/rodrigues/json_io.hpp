#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "rodrigues/analytic.hpp"
#include "rodrigues/bilateral.hpp"
#include "rodrigues/ode.hpp"
#include "rodrigues/poly.hpp"
#include "rodrigues/report.hpp"
#include "rodrigues/sym_coeff.hpp"

namespace rodrigues {

using nlohmann::json;

// Rationals are written as "p/q" strings (or "p" when integral) and read
// from strings or JSON integers.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// [{"La": e1, "Lb": e2, "n": e3, "coef": "p/q"}, ...]
json sym_coeff_to_json(const SymCoeff& c);
SymCoeff sym_coeff_from_json(const json& j);

// One SymCoeff term list per power of x, lowest first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json analytic_to_json(const AnalyticFunction& f);
AnalyticFunction analytic_from_json(const json& j);

json family_to_json(const FamilySpec& family);
FamilySpec family_from_json(const json& j);
FamilySpec load_family(const std::filesystem::path& path);

json bilateral_spec_to_json(const BilateralSpec& spec);
BilateralSpec bilateral_spec_from_json(const json& j);
BilateralSpec load_bilateral_spec(const std::filesystem::path& path);

json ode_to_json(const OdeSpec& ode);
OdeSpec ode_from_json(const json& j);

json report_to_json(const VerificationReport& report);

// Parses a file into JSON, mapping parse errors to InputError.
json read_json_file(const std::filesystem::path& path);

}  // namespace rodrigues
