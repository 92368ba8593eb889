#include "rodrigues/ode.hpp"

#include "rodrigues/errors.hpp"
#include "rodrigues/kernel.hpp"

namespace rodrigues {

OdeSpec OdeSpec::substitute(Symbol s, const Rational& value) const {
  OdeSpec out{order, {}};
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) out.coeffs.push_back(c.substitute(s, value));
  return out;
}

std::vector<LadderOperator> ladders(const Poly& phi1, int j_max) {
  if (j_max < 0) throw PreconditionError("ladder index must be nonnegative");
  const Poly la_phi1_prime = phi1.derivative() * log_alpha();
  std::vector<LadderOperator> out;
  out.push_back(LadderOperator{0, {Poly(1)}});
  for (int j = 0; j < j_max; ++j) {
    const auto& a = out.back().coeffs;
    std::vector<Poly> next(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      next[i + 1] += a[i];
      next[i] += a[i].derivative() - la_phi1_prime * a[i];
    }
    out.push_back(LadderOperator{j + 1, std::move(next)});
  }
  return out;
}

LadderOperator ladder(const FamilySpec& family, int j) {
  auto all = ladders(as_poly(family.phi1), j);
  return std::move(all.back());
}

namespace {

// C(n + top, k) as a polynomial in the index symbol.
SymCoeff shifted_binomial(int top, int k) {
  SymCoeff acc(1);
  for (int r = 0; r < k; ++r) acc *= index_symbol() + SymCoeff(Rational(top - r));
  return acc * factorial(static_cast<unsigned>(k)).inverse();
}

FamilyPolys ode_family(const FamilySpec& family, int m) {
  if (m < 1) throw PreconditionError("ODE order must be at least 1");
  if (!family.psi_is_one()) throw PreconditionError("requires psi = 1");
  FamilyPolys polys = family_polys(family);
  if (polys.phi2.degree() != m)
    throw PreconditionError("deg phi2 is " + std::to_string(std::max(polys.phi2.degree(), -1)) +
                            ", expected " + std::to_string(m));
  return polys;
}

}  // namespace

OdeSpec synthesize_ode(const FamilySpec& family, int m) {
  const FamilyPolys polys = ode_family(family, m);
  const auto lad = ladders(polys.phi1, m);
  OdeSpec ode{m, lad[static_cast<std::size_t>(m)].coeffs};
  Poly phi2_d = polys.phi2.derivative();
  for (int k = 0; k < m; ++k) {
    const SymCoeff weight = shifted_binomial(m - 1, k) * log_beta();
    const auto& a = lad[static_cast<std::size_t>(m - 1 - k)].coeffs;
    for (std::size_t i = 0; i < a.size(); ++i) ode.coeffs[i] += (phi2_d * a[i]) * weight;
    phi2_d = phi2_d.derivative();
  }
  return ode;
}

OdeSpec closed_form_ode(const FamilySpec& family, int m, Transcription transcription) {
  if (m < 2 || m > 4) throw PreconditionError("closed forms exist for m = 2, 3, 4 only");
  const FamilyPolys polys = ode_family(family, m);

  std::vector<Poly> f1{polys.phi1};
  std::vector<Poly> f2{polys.phi2};
  for (int k = 1; k <= 4; ++k) {
    f1.push_back(f1.back().derivative());
    f2.push_back(f2.back().derivative());
  }
  const SymCoeff A = log_alpha();
  const SymCoeff B = log_beta();
  const SymCoeff n = index_symbol();
  const auto num = [](long v) { return SymCoeff(Rational(v)); };
  const auto frac = [](long p, long q) { return SymCoeff(Rational(p, q)); };
  const auto pw = [](const SymCoeff& s, int e) {
    SymCoeff out(1);
    for (int i = 0; i < e; ++i) out *= s;
    return out;
  };
  const SymCoeff n1 = n + num(1);
  const SymCoeff n2 = n + num(2);
  const SymCoeff n3 = n + num(3);

  OdeSpec ode{m, std::vector<Poly>(static_cast<std::size_t>(m) + 1)};
  ode.coeffs[static_cast<std::size_t>(m)] = Poly(1);
  if (m == 2) {
    ode.coeffs[1] = f2[1] * B - f1[1] * (num(2) * A);
    ode.coeffs[0] = f1[1] * f1[1] * pw(A, 2) - f1[2] * A - f1[1] * f2[1] * (A * B) + f2[2] * (n1 * B);
  } else if (m == 3) {
    ode.coeffs[2] = f2[1] * B - f1[1] * (num(3) * A);
    ode.coeffs[1] = f2[2] * (n2 * B) - f1[2] * (num(3) * A) - f1[1] * f2[1] * (num(2) * A * B) +
                    f1[1] * f1[1] * (num(3) * pw(A, 2));
    ode.coeffs[0] = -(f1[1] * f1[1] * f1[1] * pw(A, 3)) + f2[1] * f1[1] * f1[1] * (pw(A, 2) * B) +
                    f1[1] * f1[2] * (num(3) * pw(A, 2)) - f1[3] * A - f1[2] * f2[1] * (A * B) -
                    f2[2] * f1[1] * (n2 * A * B) + f2[3] * (frac(1, 2) * n1 * n2 * B);
  } else {
    const SymCoeff sq_sign = transcription == Transcription::corrected ? num(3) : num(-3);
    ode.coeffs[3] = f2[1] * B - f1[1] * (num(4) * A);
    ode.coeffs[2] = f1[1] * f1[1] * (num(6) * pw(A, 2)) - f1[1] * f2[1] * (num(3) * A * B) -
                    f1[2] * (num(6) * A) + f2[2] * (n3 * B);
    ode.coeffs[1] = -(f1[1] * f1[1] * f1[1] * (num(4) * pw(A, 3))) +
                    f2[1] * f1[1] * f1[1] * (num(3) * pw(A, 2) * B) +
                    f1[1] * f1[2] * (num(12) * pw(A, 2)) - f1[3] * (num(4) * A) -
                    f1[2] * f2[1] * (num(3) * A * B) - f2[2] * f1[1] * (num(2) * n3 * A * B) +
                    f2[3] * (frac(1, 2) * n2 * n3 * B);
    ode.coeffs[0] = f1[1] * f1[1] * f1[1] * f1[1] * pw(A, 4) -
                    f1[1] * f1[1] * f1[1] * f2[1] * (pw(A, 3) * B) -
                    f1[1] * f1[1] * f1[2] * (num(6) * pw(A, 3)) +
                    f1[1] * f1[3] * (num(4) * pw(A, 2)) +
                    f1[1] * f1[2] * f2[1] * (num(3) * pw(A, 2) * B) - f1[3] * f2[1] * (A * B) +
                    f1[2] * f1[2] * (sq_sign * pw(A, 2)) - f1[4] * A +
                    f1[1] * f1[1] * f2[2] * (n3 * pw(A, 2) * B) - f1[2] * f2[2] * (n3 * A * B) -
                    f1[1] * f2[3] * (frac(1, 2) * n2 * n3 * A * B) +
                    f2[4] * (frac(1, 6) * n1 * n2 * n3 * B);
  }
  return ode;
}

Poly ode_residual(const OdeSpec& ode, const FamilySpec& family, int n) {
  if (n < 0) throw PreconditionError("kernel index must be nonnegative");
  if (ode.coeffs.size() != static_cast<std::size_t>(ode.order) + 1)
    throw PreconditionError("ODE needs order + 1 coefficients");
  const FamilyPolys polys = family_polys(family);
  const OdeSpec concrete = ode.substitute(Symbol::index, Rational(n));
  Poly derivative = reduced_kernels(polys, n).back();
  Poly acc;
  for (int j = 0; j <= ode.order; ++j) {
    if (j > 0) derivative = reduced_derivative(derivative, polys);
    acc += concrete.coeffs[static_cast<std::size_t>(j)] * derivative;
  }
  return acc;
}

namespace {

Poly from_terms(std::initializer_list<std::pair<unsigned, SymCoeff>> terms) {
  Poly p;
  for (const auto& [power, c] : terms) p += Poly::monomial(c, power);
  return p;
}

}  // namespace

OdeSpec hermite_reference_ode() {
  const SymCoeff n = index_symbol();
  return OdeSpec{2, {Poly(n * Rational(2)), from_terms({{1, SymCoeff(-2)}}), Poly(1)}};
}

OdeSpec quartic_reference_ode() {
  const SymCoeff n = index_symbol();
  const SymCoeff n2 = n * n;
  const auto c = [](long v) { return SymCoeff(Rational(v)); };
  return OdeSpec{
      4,
      {from_terms({{8, n * Rational(-192)},
                   {4, (n2 + n * Rational(8)) * Rational(-48)},
                   {0, n * (n2 + n * Rational(6) + c(11)) * Rational(-4)}}),
       from_terms({{9, c(64)},
                   {5, c(144) - n * Rational(96)},
                   {1, (n2 + n * Rational(5) - c(2)) * Rational(-12)}}),
       from_terms({{6, c(48)}, {2, (n - c(3)) * Rational(-12)}}),
       from_terms({{3, c(12)}}),
       Poly(1)}};
}

}  // namespace rodrigues
