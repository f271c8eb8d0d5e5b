#pragma once

// Height invariant (h1, h2) of the two focus-focus points N x S (h1) and
// S x N (h2). Heights are symplectic volumes divided by 2 pi, measured in
// units of min(R1, R2).

#include <optional>
#include <string_view>

#include "semitoric/model.hpp"
#include "semitoric/reduced.hpp"

namespace semitoric {

struct GammaCoeffs {
  double gA = 0.0;
  double gB = 0.0;
  double gC = 0.0;
  double gD = 0.0;
};

/// Evaluated at (s1, s2, R = R2/R1). DomainError if gamma_B < 0.
GammaCoeffs gamma_coefficients(const ModelParams& params);

/// Integral of 1/sqrt(alpha x^2 + beta x + gamma) from 0 to the smaller
/// root (-beta - sqrt(beta^2 - 4 alpha gamma)) / (2 alpha).
double integral_NA(double alpha, double beta, double gamma);

/// Integral of 1/((delta - x) sqrt(alpha x^2 + beta x + gamma)) over the same
/// range. Uses the arctan form when -gamma - delta(beta + alpha delta) > 0 and
/// the log form otherwise.
double integral_NB(double alpha, double beta, double gamma, double delta);

/// Same, with r = -gamma - delta(beta + alpha delta) supplied by a caller
/// that can form it without cancellation.
double integral_NB(double alpha, double beta, double gamma, double delta, double r);

/// The log form evaluated in complex arithmetic; equals integral_NB on both
/// branches. Returns the real part.
double integral_NB_log(double alpha, double beta, double gamma, double delta);

/// Upper limit shared by N_A and N_B.
double integral_upper_limit(double alpha, double beta, double gamma);

enum class CaseId { I, II, III, IV, V };
std::string_view to_string(CaseId c);

/// Band on |s1 - 1/2| and |s2 - R/(R+1)| for case III.
inline constexpr double kCaseBand = 1e-12;

/// I: s1 < 1/2, s2 < R/(R+1); II: s1 < 1/2, s2 > R/(R+1); III: on either
/// line; IV: s1 > 1/2, s2 < R/(R+1); V: s1 > 1/2, s2 > R/(R+1).
CaseId case_id(const ModelParams& params);

/// Both evaluation routes of F.
struct FEvaluation {
  double value = 0.0;       // V1 N_A + V2 N_B(2) + V3 N_B(2R) route
  double cross_check = 0.0; // arctan / log route
  double discrepancy = 0.0;
};

inline constexpr double kFAgreement = 1e-8;
// Both routes lose accuracy like 1/|d| next to the case-III lines, where
// d = (2 s1 - 1)(R (s2 - 1) + s2); the allowed gap grows accordingly.
inline constexpr double kFAgreementNearLine = 1e-10;

/// F(s1, s2, R) for R > 1. DomainError on case III or gamma_A <= 0;
/// ConsistencyError when the two routes differ by more than
/// kFAgreement + kFAgreementNearLine / |d|.
FEvaluation closed_form_F_detailed(double s1, double s2, double R);
double closed_form_F(double s1, double s2, double R);

enum class HeightMethod { closed_form, quadrature, both };
std::string_view to_string(HeightMethod m);

struct HeightInvariant {
  double h1 = 1.0;
  double h2 = 1.0;
  CaseId case_ns = CaseId::III;
  HeightMethod method = HeightMethod::closed_form;
  // gamma_A = -E/R1^2 below kIllConditioned, or |d| below kNearCaseLine:
  // the closed form loses accuracy.
  bool ill_conditioned = false;
  // |h1_closed - h1_quadrature| when both were computed.
  std::optional<double> discrepancy;
};

inline constexpr double kIllConditioned = 1e-6;
inline constexpr double kNearCaseLine = 1e-6;

bool is_ill_conditioned(const ModelParams& params);

/// DegenerateError unless E < 0 outside the degeneracy band.
HeightInvariant height_closed(const ModelParams& params);

struct OracleResult {
  double value = 0.0;
  double error_estimate = 0.0;
  // max(|c| - 1, 0) over quadrature nodes where B - (H_crit - A)^2 > 0,
  // c = (H_crit - A)/sqrt(B) before clamping.
  double max_arccos_excursion = 0.0;
  int subdivisions = 0;
  int pieces = 0;
};

inline constexpr double kOracleTolerance = 1e-9;

/// Area of {H_0 < H_crit} in the reduced space of the label at l = 0,
/// divided by 2 pi, computed by adaptive quadrature of the q2-measure.
OracleResult height_oracle_detailed(SingLabel label, const ModelParams& params,
                                    double tol = kOracleTolerance);
double height_oracle(SingLabel label, const ModelParams& params, double tol = kOracleTolerance);

/// Dispatch on method. For `quadrature`, h1 and h2 come from separate
/// oracle runs; for `both`, (h1, h2) are the closed form values and
/// discrepancy is filled in.
HeightInvariant compute_height(const ModelParams& params, HeightMethod method,
                               double tol = kOracleTolerance);

}  // namespace semitoric
