#pragma once

// The one-degree-of-freedom models obtained by reducing by the L-action near
// N x S and S x N, in R1-scaled units. H = A_l(p2) + sqrt(B_l(p2)) cos q2.
//
// NS chart:  z1 = 1 + l - p2,  z2 = p2/R - 1,  L/R1 = l + 1 - R
// SN chart:  z1 = l - 1 + p2,  z2 = 1 - p2/R,  L/R1 = l + R - 1
// (the SN chart is the reflected one, q2 -> -q2, p2 -> 2R - p2, so both
// physical intervals start at p2 = 0 when l = 0).

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "semitoric/model.hpp"
#include "semitoric/numerics.hpp"

namespace semitoric {

enum class SingLabel { NS, SN };

std::string_view to_string(SingLabel label);

struct ReducedPoint {
  double l = 0.0;
  double q2 = 0.0;
  double p2 = 0.0;
};

double reduced_A(SingLabel label, double l, double p2, const ModelParams& params);
double reduced_B(SingLabel label, double l, double p2, const ModelParams& params);

/// A + sqrt(max(B, 0)) cos q2.
double reduced_H(SingLabel label, const ReducedPoint& pt, const ModelParams& params);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// p2-range where B_l >= 0. NS needs l in [-2, 2R], SN needs l in [-2R, 2].
Interval physical_interval(SingLabel label, double l, double R);

/// Range of admissible l for the label.
Interval level_range(SingLabel label, double R);

/// H at the focus-focus candidate of the label: +(1-2s1)(1-2s2) for NS,
/// -(1-2s1)(1-2s2) for SN.
double critical_value(SingLabel label, const ModelParams& params);

/// P = B - (h + H_crit - A)^2, which vanishes where the level (l, h) touches
/// the edge of the reduced space.
double poly_P(SingLabel label, double l, double h, double p2, const ModelParams& params);

/// Coefficients of P in p2, highest degree first.
std::array<double, 5> poly_P_coefficients(SingLabel label, double l, double h,
                                          const ModelParams& params);

/// Unscaled L of the level l and back.
double level_to_L(SingLabel label, double l, const ModelParams& params);
double L_to_level(SingLabel label, double L, const ModelParams& params);

/// A point of S^2 x S^2 reducing to `pt`; theta1 picks the point on the orbit.
PhasePoint lift_to_phase_space(SingLabel label, const ReducedPoint& pt,
                               const ModelParams& params, double theta1 = 0.0);

/// Roots of P_0 = p2^2 Q(p2) / R^2 in closed form: (0, 0, zeta3, zeta4). The
/// same roots are recomputed with numerics::quartic_roots and the call throws
/// ConsistencyError if zeta3 or zeta4 differ by more than kRootAgreement.
/// DomainError when s1 - s1^2 + s2 - s2^2 = 0 (corner couplings).
struct P0Roots {
  std::array<double, 4> zeta{};
  numerics::QuarticRoots numeric;
  double max_deviation = 0.0;  // over zeta3, zeta4
};

inline constexpr double kRootAgreement = 1e-9;

P0Roots roots_P0(SingLabel label, const ModelParams& params);

/// rho(l) = length of the NS physical interval, for R > 1, on [-2, 2R].
struct DHFunction {
  // (l, slope just after l), ascending in l; the first entry is the left end.
  std::vector<std::pair<double, double>> breakpoints;
  double lo = 0.0;
  double hi = 0.0;

  double value(double l) const;
  double slope_after(double l) const;
  /// Exact integral (trapezoid over the pieces).
  double area() const;
};

/// DomainError unless R > 1. The profile is checked against
/// physical_interval lengths before it is returned.
DHFunction dh_function(double R);

/// Second difference (rho(l+h) - 2 rho(l) + rho(l-h)) / h of the interval
/// length, i.e. the slope jump of rho across l seen at resolution h.
double dh_slope_jump(double R, double l, double h);

}  // namespace semitoric
