#pragma once

// Rank-0 classification of the four pole products, the discriminant E, the
// rank-1 non-degeneracy criterion and the aggregated semitoric verdict.

#include <array>
#include <optional>
#include <string_view>

#include "semitoric/model.hpp"

namespace semitoric {

enum class FixedPoint { NN, NS, SN, SS };
enum class PointKind { elliptic_elliptic, focus_focus, degenerate };

std::string_view to_string(FixedPoint p);
std::string_view to_string(PointKind k);

PhasePoint fixed_point_location(FixedPoint p);

struct SingularityReport {
  FixedPoint point_id = FixedPoint::NN;
  int rank = 0;
  PointKind kind = PointKind::elliptic_elliptic;
  double E_value = 0.0;
  // sign of the discriminant that decided `kind` (D, or the A_L + A_H
  // discriminant at s1 = 1/2)
  int D_sign = 1;
};

/// The discriminant whose sign separates focus-focus from elliptic-elliptic
/// at N x S and S x N.
double discriminant_E(const ModelParams& params);

/// |E| <= degeneracy_band(params) counts as E = 0.
double degeneracy_band(const ModelParams& params);

/// Last factor of D at N x N / S x S (s1 != 1/2), divided by R1^2.
double nn_ss_reduced_discriminant(const ModelParams& params);

/// Discriminant in Y = X^2 of the characteristic polynomial of A_L + A_H at
/// s1 = 1/2; `nn_ss` selects the N x N / S x S version (positive sign).
double auxiliary_discriminant(const ModelParams& params, bool nn_ss);

/// Tolerance on s1 for taking the s1 = 1/2 branch.
inline constexpr double kHalfBranchTolerance = 1e-12;

std::array<SingularityReport, 4> classify_fixed_points(const ModelParams& params);

/// 2 if E < 0, 0 if E > 0; DegenerateError inside the band.
int n_ff(const ModelParams& params);

/// Right-hand side of the rank-1 criterion at (z1, l); the criterion holds
/// iff the value is negative. DomainError unless z1 and the induced
/// z2 = (l - R1 z1)/R2 lie in (-1, 1).
double rank1_margin(double z1, double l, const ModelParams& params);

struct SemitoricVerdict {
  bool is_semitoric = false;
  std::optional<int> n_ff;  // empty when degenerate
  bool degenerate = false;
  // Largest (least negative) rank-1 margin seen on the verification grid.
  double rank1_margin_min = 0.0;
  int rank1_samples = 0;
};

/// Distance kept from the edge of the (z1, l) strip on the rank-1 grid.
inline constexpr double kStripMargin = 1e-6;

SemitoricVerdict check_semitoric(const ModelParams& params, int grid_n);

}  // namespace semitoric
