#pragma once

#include <string>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/poly.hpp"

namespace rodrigues {

/// Linear operator sum_j c_j(x) d^j/dx^j, monic (c_m = 1).
struct OdeSpec {
  int order = 0;
  std::vector<Poly> coeffs;  // c_0 .. c_m

  OdeSpec substitute(Symbol s, const Rational& value) const;
  friend bool operator==(const OdeSpec&, const OdeSpec&) = default;
};

/// Theta_{n+j} = sum_i coeffs[i] Theta_n^{(i)}.
struct LadderOperator {
  int j = 0;
  std::vector<Poly> coeffs;  // a_{j,0} .. a_{j,j}
};

LadderOperator ladder(const FamilySpec& family, int j);
std::vector<LadderOperator> ladders(const Poly& phi1, int j_max);

/// m-th order equation annihilating Theta_n (psi = 1, deg phi2 = m), with
/// the index kept as the ring symbol n. Built by writing the psi = 1
/// recurrence at index n + m - 1 and replacing each Theta_{n+j} by its
/// ladder operator.
OdeSpec synthesize_ode(const FamilySpec& family, int m);

// Whether the degree-4 closed form uses the sign printed in the original
// statement for the La^2 (phi1'')^2 term, which does not annihilate Theta_n.
enum class Transcription { corrected, as_printed };

/// Closed forms for deg phi2 in {2, 3, 4}, built term by term.
OdeSpec closed_form_ode(const FamilySpec& family, int m,
                        Transcription transcription = Transcription::corrected);

/// sum_j c_j D^j q_n with D(q) = q' + (La phi1' - Lb phi2') q and the index
/// symbol replaced by n. Zero iff the operator annihilates Theta_n.
Poly ode_residual(const OdeSpec& ode, const FamilySpec& family, int n);

// Printed worked examples, in (x, n) with La = Lb = 1.
OdeSpec hermite_reference_ode();
OdeSpec quartic_reference_ode();

}  // namespace rodrigues
