#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rodrigues/analytic.hpp"
#include "rodrigues/binomial_table.hpp"
#include "rodrigues/report.hpp"

namespace rodrigues {

// The recurrences satisfied by every family:
//   aa9    psi-weighted ladder in t (from psi(x+t) dF/dt)
//   aa10   the same in x (from psi(x+t) dF/dx)
//   cor21  aa9 minus aa10, left-hand sides only
//   thm23  Theta'_n = Theta_{n+1} + La phi1' Theta_n
//   aa11   the mixed relation linking dF/dt and dF/dx
//   cor22  Theta_{n+1} = -Lb sum_k C(n,k) phi2^{(k+1)} Theta_{n-k}, psi = 1 only
enum class RecurrenceId { aa9, aa10, cor21, thm23, aa11, cor22 };

inline constexpr RecurrenceId all_recurrences[] = {RecurrenceId::aa9,  RecurrenceId::aa10,
                                                   RecurrenceId::cor21, RecurrenceId::thm23,
                                                   RecurrenceId::aa11, RecurrenceId::cor22};

const char* to_string(RecurrenceId id);
std::optional<RecurrenceId> parse_recurrence_id(std::string_view name);

/// LHS - RHS of the identity at index n with every Theta_m replaced by its
/// reduced kernel q_m and every Theta'_m by reduced_derivative(q_m).
Poly residual(RecurrenceId id, const FamilySpec& family, int n);

// Kernel-level entry point: `kernels` must hold q_0..q_{n+1}.
Poly residual_from_kernels(RecurrenceId id, const FamilyPolys& polys,
                           std::span<const Poly> kernels, int n,
                           const BinomialTable& binom = BinomialTable{});

/// One report per identity covering n = 0..n_max. cor22 is reported as
/// skipped when psi != 1.
std::vector<VerificationReport> sweep(const FamilySpec& family, int n_max);
std::vector<VerificationReport> sweep(const FamilySpec& family, int n_max,
                                      std::span<const RecurrenceId> ids,
                                      const BinomialTable& binom = BinomialTable{});

// thm23 checked on Taylor jets at x0, so non-polynomial data is covered.
// max_abs is 0 or +inf for exact jets.
struct JetResidual {
  bool exact = false;
  double max_abs = 0.0;
  // Largest coefficient among the terms of the identity; tolerances scale with it.
  double scale = 1.0;
};
JetResidual thm23_jet_residual(const FamilySpec& family, int n, const Rational& x0, int order);
// THM23 on jets for n = 0..n_max; numeric jets pass when
// max |residual| <= tol * max(1, scale).
VerificationReport verify_thm23_jets(const FamilySpec& family, int n_max, const Rational& x0, int order,
                                     double tol = 1e-10);

}  // namespace rodrigues
