#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rodrigues/bilateral.hpp"
#include "rodrigues/errors.hpp"
#include "rodrigues/genfun.hpp"
#include "rodrigues/json_io.hpp"
#include "rodrigues/kernel.hpp"
#include "rodrigues/ode.hpp"
#include "rodrigues/random.hpp"
#include "rodrigues/recurrence.hpp"

namespace rodrigues::cli {

namespace {

constexpr int n_max_guard = 64;

enum class Format { json, csv, pretty };

struct RunConfig {
  std::string command;
  std::string family_path;
  std::string spec_path;
  int n = 0;
  int n_max = 12;
  int order_t = 16;
  int order_eta = 8;
  int m = 0;
  int count = 20;
  int jet_order = 8;
  std::string suite = "all";
  Format format = Format::json;
  std::uint64_t seed = 1;
  bool numeric = false;
  bool force = false;
  std::vector<double> points{-1.0, -0.5, 0.0, 0.5, 1.0};
};

void check_orders(const RunConfig& c) {
  if (c.n < 0 || c.n_max < 0 || c.order_t < 0 || c.order_eta < 0)
    throw InputError("orders and indices must be nonnegative");
  if (!c.force && (c.n > n_max_guard || c.n_max > n_max_guard))
    throw InputError("index above " + std::to_string(n_max_guard) + "; pass --force to allow it");
}

FamilySpec require_family(const RunConfig& c) {
  if (c.family_path.empty()) throw InputError("--family is required");
  return load_family(c.family_path);
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

void emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      out << (reports.size() == 1 ? arr.front() : arr).dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "identity,status,order,n,t_order,eta_order,x_power,coefficient,seed,notes\n";
      for (const auto& r : reports) {
        const FirstFailure f = r.first_failure.value_or(FirstFailure{});
        std::string notes;
        for (const auto& note : r.notes) notes += (notes.empty() ? "" : "; ") + note;
        out << csv_field(r.identity) << "," << to_string(r.status) << "," << r.order << ","
            << opt_str(f.n) << "," << opt_str(f.t_order) << "," << opt_str(f.eta_order) << ","
            << opt_str(f.x_power) << "," << csv_field(f.coefficient ? f.coefficient->str() : "") << ","
            << opt_str(r.seed) << "," << csv_field(notes) << "\n";
      }
      break;
    case Format::pretty:
      for (const auto& r : reports) {
        out << r.identity << ": " << to_string(r.status) << " (order " << r.order << ")";
        if (r.seed) out << " seed=" << *r.seed;
        if (r.first_failure) {
          const auto& f = *r.first_failure;
          out << " first failure:";
          if (f.n) out << " n=" << *f.n;
          if (f.t_order) out << " t^" << *f.t_order;
          if (f.eta_order) out << " eta^" << *f.eta_order;
          if (f.y_power) out << " y^" << *f.y_power;
          if (f.x_power) out << " x^" << *f.x_power;
          if (f.coefficient) out << " coefficient " << f.coefficient->str();
        }
        for (const auto& note : r.notes) out << " [" << note << "]";
        out << "\n";
      }
      break;
  }
}

int exit_for(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::failed) return exit_violation;
  return exit_ok;
}

int cmd_compute(const RunConfig& c, std::ostream& out) {
  check_orders(c);
  const FamilySpec family = require_family(c);
  if (c.numeric) {
    json values = json::array();
    if (c.format == Format::csv) out << "n,x,theta\n";
    for (int k = 0; k <= c.n; ++k) {
      for (double x : c.points) {
        const double v = theta_eval(family, k, x);
        switch (c.format) {
          case Format::json: values.push_back({{"n", k}, {"x", x}, {"theta", v}}); break;
          case Format::csv: out << k << "," << x << "," << v << "\n"; break;
          case Format::pretty: out << "Theta_" << k << "(" << x << ") = " << v << "\n"; break;
        }
      }
    }
    if (c.format == Format::json) out << json{{"values", values}}.dump(2) << "\n";
    return exit_ok;
  }
  const auto kernels = reduced_kernels(family, c.n);
  switch (c.format) {
    case Format::json: {
      json arr = json::array();
      for (std::size_t k = 0; k < kernels.size(); ++k)
        arr.push_back({{"n", k}, {"degree", std::max(kernels[k].degree(), -1)}, {"q", poly_to_json(kernels[k])}});
      out << json{{"kernels", arr}}.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "n,degree,q\n";
      for (std::size_t k = 0; k < kernels.size(); ++k)
        out << k << "," << std::max(kernels[k].degree(), -1) << "," << csv_field(kernels[k].str()) << "\n";
      break;
    case Format::pretty:
      for (std::size_t k = 0; k < kernels.size(); ++k) out << "q_" << k << "(x) = " << kernels[k].str() << "\n";
      break;
  }
  return exit_ok;
}

int cmd_genfun(const RunConfig& c, std::ostream& out) {
  check_orders(c);
  const FamilySpec family = require_family(c);
  const std::vector<VerificationReport> reports{verify_genfun(family, c.order_t)};
  emit_reports(reports, c.format, out);
  return exit_for(reports);
}

int ode_order(const RunConfig& c, const FamilySpec& family) {
  if (c.m > 0) return c.m;
  return std::max(family_polys(family).phi2.degree(), 0);
}

OdeSpec specialize(const OdeSpec& ode, const FamilySpec& family) {
  OdeSpec out = ode;
  for (auto& p : out.coeffs) p = specialize_logs(p, family);
  return out;
}

// The worked examples fix alpha = beta = e; symbolic families are compared
// after substituting La = Lb = 1.
std::optional<std::pair<std::string, OdeSpec>> reference_for(const FamilySpec& family) {
  const auto log_ok = [](const LogBase& b) {
    return b.is_symbolic() || b.exact_log() == std::optional<Rational>(Rational(1));
  };
  if (!family.is_polynomial() || !family.psi_is_one() || !log_ok(family.alpha) || !log_ok(family.beta))
    return std::nullopt;
  const FamilyPolys polys = family_polys(family);
  const Poly x2 = Poly::x() * Poly::x();
  if (polys.phi1 == x2 && polys.phi2 == x2) return std::make_pair("hermite", hermite_reference_ode());
  const Poly minus_x4 = -(x2 * x2);
  if (polys.phi1 == minus_x4 && polys.phi2 == minus_x4)
    return std::make_pair("quartic", quartic_reference_ode());
  return std::nullopt;
}

std::vector<VerificationReport> ode_reports(const RunConfig& c, const FamilySpec& family) {
  const int m = ode_order(c, family);
  const OdeSpec ode = synthesize_ode(family, m);
  std::vector<VerificationReport> reports;

  VerificationReport residual_report;
  residual_report.identity = "ode_residual";
  residual_report.order = c.n_max;
  if (family_polys(family).phi1.degree() <= 0)
    residual_report.notes.emplace_back("phi1 is constant");
  for (int n = 0; n <= c.n_max; ++n) {
    const Poly r = ode_residual(ode, family, n);
    if (r.is_zero()) continue;
    FirstFailure f;
    f.n = n;
    residual_report.status = Status::failed;
    residual_report.first_failure = f;
    break;
  }
  reports.push_back(std::move(residual_report));

  if (m >= 2 && m <= 4) {
    VerificationReport closed;
    closed.identity = "ode_closed_form";
    closed.order = m;
    if (closed_form_ode(family, m) != ode) closed.status = Status::failed;
    reports.push_back(std::move(closed));
  }

  if (const auto ref = reference_for(family)) {
    VerificationReport example;
    example.identity = "ode_reference";
    example.order = m;
    example.notes.push_back("compared with the " + ref->first + " worked example");
    const OdeSpec unit_logs =
        ode.substitute(Symbol::log_alpha, Rational(1)).substitute(Symbol::log_beta, Rational(1));
    if (!(unit_logs == ref->second)) example.status = Status::failed;
    reports.push_back(std::move(example));
  }
  return reports;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  check_orders(c);
  std::vector<VerificationReport> reports;

  if (c.suite == "random") {
    std::mt19937_64 rng(c.seed);
    RandomFamilyOptions options;
    for (int i = 0; i < c.count; ++i) {
      const FamilySpec family = random_family(rng, options);
      std::vector<VerificationReport> batch{verify_genfun(family, c.order_t)};
      for (auto& r : sweep(family, c.n_max)) batch.push_back(std::move(r));
      for (auto& r : batch) {
        r.identity = "random[" + std::to_string(i) + "]:" + r.identity;
        r.seed = c.seed;
        reports.push_back(std::move(r));
      }
    }
    emit_reports(reports, c.format, out);
    return exit_for(reports);
  }

  const FamilySpec family = require_family(c);
  const auto add_sweep = [&](std::span<const RecurrenceId> ids) {
    for (auto& r : sweep(family, c.n_max, ids)) reports.push_back(std::move(r));
  };

  if (!family.is_polynomial()) {
    // Only the derivative ladder can be checked on jets; the other identities need exact polynomials.
    if (c.suite != "all" && c.suite != "thm23")
      throw PreconditionError("suite '" + c.suite + "' needs polynomial phi1, phi2 and psi");
    reports.push_back(verify_thm23_jets(family, c.n_max, Rational(0), c.jet_order));
    emit_reports(reports, c.format, out);
    return exit_for(reports);
  }

  if (c.suite == "all") {
    reports.push_back(verify_genfun(family, c.order_t));
    add_sweep(all_recurrences);
    if (family.psi_is_one() && family_polys(family).phi2.degree() >= 1)
      for (auto& r : ode_reports(c, family)) reports.push_back(std::move(r));
  } else if (c.suite == "genfun") {
    reports.push_back(verify_genfun(family, c.order_t));
  } else if (c.suite == "recurrences") {
    add_sweep(all_recurrences);
  } else if (const auto id = parse_recurrence_id(c.suite)) {
    if (*id == RecurrenceId::cor22 && !family.psi_is_one()) throw PreconditionError("cor22 requires psi = 1");
    const RecurrenceId ids[] = {*id};
    add_sweep(ids);
  } else if (c.suite == "ode") {
    reports = ode_reports(c, family);
  } else if (c.suite == "bilateral") {
    if (c.spec_path.empty()) throw InputError("--spec is required for the bilateral suite");
    reports.push_back(verify_bilateral(load_bilateral_spec(c.spec_path), family, c.order_t, c.order_eta));
  } else {
    throw InputError("unknown suite '" + c.suite + "'");
  }
  emit_reports(reports, c.format, out);
  return exit_for(reports);
}

std::string derivative_name(int j) {
  if (j == 0) return "y";
  if (j <= 3) return "y" + std::string(static_cast<std::size_t>(j), '\'');
  return "y^(" + std::to_string(j) + ")";
}

int cmd_ode(const RunConfig& c, std::ostream& out) {
  const FamilySpec family = require_family(c);
  const OdeSpec ode = specialize(synthesize_ode(family, ode_order(c, family)), family);
  switch (c.format) {
    case Format::json: out << ode_to_json(ode).dump(2) << "\n"; break;
    case Format::csv:
      out << "j,poly\n";
      for (std::size_t j = 0; j < ode.coeffs.size(); ++j) out << j << "," << csv_field(ode.coeffs[j].str()) << "\n";
      break;
    case Format::pretty:
      for (int j = ode.order; j >= 0; --j) {
        const Poly& p = ode.coeffs[static_cast<std::size_t>(j)];
        if (p.is_zero()) continue;
        if (j != ode.order) out << "\n  + ";
        out << "(" << p.str() << ") " << derivative_name(j);
      }
      out << " = 0\n";
      break;
  }
  return exit_ok;
}

int cmd_bilateral(const RunConfig& c, std::ostream& out) {
  check_orders(c);
  const FamilySpec family = require_family(c);
  if (c.spec_path.empty()) throw InputError("--spec is required");
  const BilateralSpec spec = load_bilateral_spec(c.spec_path);
  const std::vector<VerificationReport> reports{verify_bilateral(spec, family, c.order_t, c.order_eta)};
  emit_reports(reports, c.format, out);
  return exit_for(reports);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rodrigues-type function families: kernels, identities, ODEs, bilateral series"};
  app.require_subcommand(1);
  RunConfig c;

  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", c.family_path, "Family spec (JSON)");
    sub->add_option("--format", c.format, "Output format: json, csv or pretty")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_flag("--force", c.force, "Allow indices above 64");
  };

  auto* compute = app.add_subcommand("compute", "Print reduced kernels q_0..q_n or numeric Theta values");
  add_common(compute);
  compute->add_option("--n", c.n, "Largest index")->required();
  compute->add_flag("--numeric", c.numeric, "Evaluate Theta_k at sample points (numeric alpha, beta)");
  compute->add_option("--points", c.points, "Sample points for --numeric")->delimiter(',');

  auto* genfun = app.add_subcommand("genfun", "Verify the generating function to order N in t");
  add_common(genfun);
  genfun->add_option("--order-t", c.order_t, "Truncation order in t");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  verify->add_option("--suite", c.suite,
                     "all, genfun, recurrences, aa9, aa10, cor21, thm23, aa11, cor22, ode, bilateral, random");
  verify->add_option("--n-max", c.n_max, "Largest index for recurrences and ODE residuals");
  verify->add_option("--order-t", c.order_t, "Truncation order in t");
  verify->add_option("--order-eta", c.order_eta, "Truncation order in eta");
  verify->add_option("--m", c.m, "ODE order (defaults to deg phi2)");
  verify->add_option("--spec", c.spec_path, "Bilateral spec (JSON)");
  verify->add_option("--seed", c.seed, "Seed for the random suite");
  verify->add_option("--count", c.count, "Number of families in the random suite");
  verify->add_option("--jet-order", c.jet_order, "Jet order at x0 = 0 for non-polynomial families");

  auto* ode = app.add_subcommand("ode", "Synthesize the annihilating ODE (psi = 1)");
  add_common(ode);
  ode->add_option("--m", c.m, "ODE order (defaults to deg phi2)");

  auto* bilateral = app.add_subcommand("bilateral", "Verify a bilateral generating function");
  add_common(bilateral);
  bilateral->add_option("--spec", c.spec_path, "Bilateral spec (JSON)")->required();
  bilateral->add_option("--order-t", c.order_t, "Truncation order in t");
  bilateral->add_option("--order-eta", c.order_eta, "Truncation order in eta");

  c.order_t = 16;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  try {
    if (compute->parsed()) return cmd_compute(c, out);
    if (genfun->parsed()) return cmd_genfun(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (ode->parsed()) return cmd_ode(c, out);
    if (bilateral->parsed()) {
      // Bilateral checks default to N = K = 8 unless given.
      if (bilateral->count("--order-t") == 0) c.order_t = 8;
      return cmd_bilateral(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace rodrigues::cli
