#include "rodrigues/json_io.hpp"

#include <fstream>
#include <sstream>
#include <initializer_list>
#include <string_view>

#include "rodrigues/errors.hpp"

namespace rodrigues {

namespace {

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
}

void reject_unknown_keys(const json& j, std::initializer_list<std::string_view> allowed,
                         std::string_view what) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw InputError("unknown key '" + key + "' in " + std::string(what));
  }
}

std::vector<Rational> rationals_from_json(const json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rational_to_json(r));
  return out;
}

int int_from_json(const json& j, std::string_view key) {
  if (!j.is_number_integer()) throw InputError("'" + std::string(key) + "' must be an integer");
  return j.get<int>();
}

const char* builtin_name(BuiltinKind k) {
  switch (k) {
    case BuiltinKind::exp: return "exp";
    case BuiltinKind::sin: return "sin";
    case BuiltinKind::cos: return "cos";
  }
  return "?";
}

json base_to_json(const LogBase& b) {
  if (b.is_symbolic()) return "symbolic";
  std::ostringstream os;
  os.precision(17);
  os << b.value();
  return os.str();
}

LogBase base_from_json(const json& j, std::string_view key) {
  if (j.is_number()) return LogBase::numeric(j.get<double>());
  if (!j.is_string()) throw InputError("'" + std::string(key) + "' must be \"symbolic\" or a decimal string");
  const auto s = j.get<std::string>();
  if (s == "symbolic") return LogBase::symbolic();
  if (s == "e") return LogBase::euler();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw InputError("'" + std::string(key) + "': cannot parse '" + s + "' as a decimal");
  return LogBase::numeric(value);
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json sym_coeff_to_json(const SymCoeff& c) {
  json out = json::array();
  for (const auto& [m, r] : c.terms())
    out.push_back({{"La", m.la}, {"Lb", m.lb}, {"n", m.n}, {"coef", rational_to_json(r)}});
  return out;
}

SymCoeff sym_coeff_from_json(const json& j) {
  if (!j.is_array()) throw InputError("coefficient must be an array of terms");
  SymCoeff out;
  for (const auto& t : j) {
    require_object(t, "coefficient term");
    reject_unknown_keys(t, {"La", "Lb", "n", "coef"}, "coefficient term");
    if (!t.contains("coef")) throw InputError("coefficient term lacks 'coef'");
    const auto exponent = [&](const char* key) -> std::uint16_t {
      if (!t.contains(key)) return 0;
      const int e = int_from_json(t.at(key), key);
      if (e < 0 || e > 0xffff) throw InputError("exponent out of range");
      return static_cast<std::uint16_t>(e);
    };
    out += SymCoeff::term(Monomial{exponent("La"), exponent("Lb"), exponent("n")},
                          rational_from_json(t.at("coef")));
  }
  return out;
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(sym_coeff_to_json(c));
  return out;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
  std::vector<SymCoeff> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(sym_coeff_from_json(c));
  return Poly(std::move(coeffs));
}

json analytic_to_json(const AnalyticFunction& f) {
  if (const auto* p = std::get_if<PolynomialFn>(&f.value())) return {{"poly", rationals_to_json(p->coeffs)}};
  if (const auto* b = std::get_if<BuiltinFn>(&f.value()))
    return {{"builtin", builtin_name(b->kind)}, {"scale", rational_to_json(b->scale)}};
  const auto& t = std::get<TaylorTableFn>(f.value());
  return {{"taylor", {{"at", rational_to_json(t.at)}, {"coeffs", rationals_to_json(t.coeffs)}}}};
}

AnalyticFunction analytic_from_json(const json& j) {
  require_object(j, "function descriptor");
  if (j.contains("poly")) {
    reject_unknown_keys(j, {"poly"}, "polynomial descriptor");
    auto coeffs = rationals_from_json(j.at("poly"), "'poly'");
    if (coeffs.empty()) throw InputError("'poly' needs at least one coefficient");
    return AnalyticFunction::polynomial(std::move(coeffs));
  }
  if (j.contains("builtin")) {
    reject_unknown_keys(j, {"builtin", "scale"}, "builtin descriptor");
    const auto& name = j.at("builtin");
    if (!name.is_string()) throw InputError("'builtin' must be a string");
    const auto s = name.get<std::string>();
    BuiltinKind kind;
    if (s == "exp") kind = BuiltinKind::exp;
    else if (s == "sin") kind = BuiltinKind::sin;
    else if (s == "cos") kind = BuiltinKind::cos;
    else throw InputError("unknown builtin '" + s + "' (expected exp, sin or cos)");
    const Rational scale = j.contains("scale") ? rational_from_json(j.at("scale")) : Rational(1);
    return AnalyticFunction::builtin(kind, scale);
  }
  if (j.contains("taylor")) {
    reject_unknown_keys(j, {"taylor"}, "taylor descriptor");
    const auto& t = j.at("taylor");
    require_object(t, "'taylor'");
    reject_unknown_keys(t, {"at", "coeffs"}, "'taylor'");
    if (!t.contains("coeffs")) throw InputError("'taylor' lacks 'coeffs'");
    const Rational at = t.contains("at") ? rational_from_json(t.at("at")) : Rational(0);
    return AnalyticFunction::taylor(at, rationals_from_json(t.at("coeffs"), "'coeffs'"));
  }
  throw InputError("function descriptor needs one of 'poly', 'builtin', 'taylor'");
}

json family_to_json(const FamilySpec& family) {
  return {{"phi1", analytic_to_json(family.phi1)},
          {"phi2", analytic_to_json(family.phi2)},
          {"psi", analytic_to_json(family.psi)},
          {"alpha", base_to_json(family.alpha)},
          {"beta", base_to_json(family.beta)}};
}

FamilySpec family_from_json(const json& j) {
  require_object(j, "family spec");
  reject_unknown_keys(j, {"phi1", "phi2", "psi", "alpha", "beta"}, "family spec");
  for (const char* key : {"phi1", "phi2", "psi", "alpha", "beta"})
    if (!j.contains(key)) throw InputError(std::string("family spec lacks '") + key + "'");
  FamilySpec family{analytic_from_json(j.at("phi1")), analytic_from_json(j.at("phi2")),
                    analytic_from_json(j.at("psi")), base_from_json(j.at("alpha"), "alpha"),
                    base_from_json(j.at("beta"), "beta")};
  family.validate();
  return family;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

FamilySpec load_family(const std::filesystem::path& path) { return family_from_json(read_json_file(path)); }

json bilateral_spec_to_json(const BilateralSpec& spec) {
  json omega;
  if (const auto* ab = std::get_if<ApostolBernoulliOmega>(&spec.omega)) {
    omega = {{"apostol_bernoulli", {{"order", ab->order}, {"lambda", rational_to_json(ab->lambda)}}}};
  } else if (const auto* theta = std::get_if<ThetaOmega>(&spec.omega)) {
    omega = {{"theta", family_to_json(theta->family)}};
  } else {
    json table = json::array();
    for (const auto& p : std::get<TableOmega>(spec.omega).values) {
      json row = json::array();
      for (const auto& c : p.coeffs()) {
        const auto r = c.as_rational();
        if (!r) throw PreconditionError("table entries must have rational coefficients");
        row.push_back(rational_to_json(*r));
      }
      table.push_back(std::move(row));
    }
    omega = {{"table", std::move(table)}};
  }
  json a = std::holds_alternative<InverseFactorial>(spec.a)
               ? json("inverse_factorial")
               : rationals_to_json(std::get<std::vector<Rational>>(spec.a));
  return {{"omega", std::move(omega)}, {"a", std::move(a)}, {"mu", spec.mu}, {"nu", spec.nu}, {"p", spec.p}};
}

BilateralSpec bilateral_spec_from_json(const json& j) {
  require_object(j, "bilateral spec");
  reject_unknown_keys(j, {"omega", "a", "mu", "nu", "p"}, "bilateral spec");
  if (!j.contains("omega")) throw InputError("bilateral spec lacks 'omega'");
  BilateralSpec spec;

  const auto& omega = j.at("omega");
  require_object(omega, "'omega'");
  if (omega.size() != 1) throw InputError("'omega' needs exactly one of apostol_bernoulli, theta, table");
  if (omega.contains("apostol_bernoulli")) {
    const auto& ab = omega.at("apostol_bernoulli");
    require_object(ab, "'apostol_bernoulli'");
    reject_unknown_keys(ab, {"order", "lambda"}, "'apostol_bernoulli'");
    ApostolBernoulliOmega v;
    if (ab.contains("order")) {
      const int order = int_from_json(ab.at("order"), "order");
      if (order < 0) throw InputError("'order' must be nonnegative");
      v.order = static_cast<unsigned>(order);
    }
    if (ab.contains("lambda")) v.lambda = rational_from_json(ab.at("lambda"));
    spec.omega = v;
  } else if (omega.contains("theta")) {
    spec.omega = ThetaOmega{family_from_json(omega.at("theta"))};
  } else if (omega.contains("table")) {
    const auto& table = omega.at("table");
    if (!table.is_array() || table.empty()) throw InputError("'table' must be a nonempty array");
    TableOmega v;
    for (const auto& row : table) v.values.push_back(Poly::from_rationals(rationals_from_json(row, "table entry")));
    spec.omega = std::move(v);
  } else {
    throw InputError("'omega' needs exactly one of apostol_bernoulli, theta, table");
  }

  if (j.contains("a")) {
    const auto& a = j.at("a");
    if (a.is_string()) {
      if (a.get<std::string>() != "inverse_factorial")
        throw InputError("'a' must be \"inverse_factorial\" or a list of rationals");
      spec.a = InverseFactorial{};
    } else {
      spec.a = rationals_from_json(a, "'a'");
    }
  }
  if (j.contains("mu")) spec.mu = int_from_json(j.at("mu"), "mu");
  if (j.contains("nu")) spec.nu = int_from_json(j.at("nu"), "nu");
  if (j.contains("p")) spec.p = int_from_json(j.at("p"), "p");
  spec.validate();
  return spec;
}

BilateralSpec load_bilateral_spec(const std::filesystem::path& path) {
  return bilateral_spec_from_json(read_json_file(path));
}

json ode_to_json(const OdeSpec& ode) {
  json coeffs = json::array();
  for (std::size_t j = 0; j < ode.coeffs.size(); ++j)
    coeffs.push_back({{"j", j}, {"poly", poly_to_json(ode.coeffs[j])}});
  return {{"order", ode.order}, {"coeffs", std::move(coeffs)}};
}

OdeSpec ode_from_json(const json& j) {
  require_object(j, "ODE");
  reject_unknown_keys(j, {"order", "coeffs"}, "ODE");
  if (!j.contains("order") || !j.contains("coeffs")) throw InputError("ODE needs 'order' and 'coeffs'");
  OdeSpec ode;
  ode.order = int_from_json(j.at("order"), "order");
  if (ode.order < 0) throw InputError("ODE order must be nonnegative");
  ode.coeffs.resize(static_cast<std::size_t>(ode.order) + 1);
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw InputError("'coeffs' must be an array");
  for (const auto& entry : coeffs) {
    require_object(entry, "ODE coefficient");
    reject_unknown_keys(entry, {"j", "poly"}, "ODE coefficient");
    const int idx = int_from_json(entry.at("j"), "j");
    if (idx < 0 || idx > ode.order) throw InputError("ODE coefficient index out of range");
    ode.coeffs[static_cast<std::size_t>(idx)] = poly_from_json(entry.at("poly"));
  }
  return ode;
}

json report_to_json(const VerificationReport& report) {
  json out = {{"identity", report.identity},
              {"status", to_string(report.status)},
              {"order", report.order},
              {"first_failure", nullptr}};
  if (report.first_failure) {
    const auto& f = *report.first_failure;
    json ff = json::object();
    if (f.n) ff["n"] = *f.n;
    if (f.t_order) ff["t_order"] = *f.t_order;
    if (f.eta_order) ff["eta_order"] = *f.eta_order;
    if (f.y_power) ff["y_power"] = *f.y_power;
    if (f.x_power) ff["x_power"] = *f.x_power;
    if (f.coefficient) ff["coefficient"] = sym_coeff_to_json(*f.coefficient);
    out["first_failure"] = std::move(ff);
  }
  if (report.seed) out["seed"] = *report.seed;
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace rodrigues
