#include "semitoric/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

std::string_view to_string(FixedPoint p) {
  switch (p) {
    case FixedPoint::NN: return "NN";
    case FixedPoint::NS: return "NS";
    case FixedPoint::SN: return "SN";
    case FixedPoint::SS: return "SS";
  }
  return "?";
}

std::string_view to_string(PointKind k) {
  switch (k) {
    case PointKind::elliptic_elliptic: return "elliptic-elliptic";
    case PointKind::focus_focus: return "focus-focus";
    case PointKind::degenerate: return "degenerate";
  }
  return "?";
}

PhasePoint fixed_point_location(FixedPoint p) {
  switch (p) {
    case FixedPoint::NN: return poles::NN;
    case FixedPoint::NS: return poles::NS;
    case FixedPoint::SN: return poles::SN;
    case FixedPoint::SS: return poles::SS;
  }
  return poles::NN;
}

double discriminant_E(const ModelParams& params) {
  const auto [R1, R2, s1, s2] = params;
  const double a = 1.0 - 2.0 * s1;
  const double tail = 8.0 * (s1 - 1.0) * (s1 - 1.0) * s1 * s1 + s2 -
                      12.0 * (s1 - 1.0) * s1 * s2 +
                      (7.0 + 12.0 * (s1 - 1.0) * s1) * s2 * s2 - 16.0 * s2 * s2 * s2 +
                      8.0 * s2 * s2 * s2 * s2;
  return R2 * R2 * a * a * (s2 - 1.0) * (s2 - 1.0) + R1 * R1 * a * a * s2 * s2 -
         2.0 * R1 * R2 * tail;
}

double degeneracy_band(const ModelParams& params) { return 1e-10 * params.R1 * params.R2; }

double nn_ss_reduced_discriminant(const ModelParams& params) {
  const double R = params.ratio();
  const double s1 = params.s1;
  const double s2 = params.s2;
  const double a = 1.0 - 2.0 * s1;
  const double inner = -16.0 * s1 * s1 * s1 + 8.0 * s1 * s1 * s1 * s1 -
                       20.0 * s1 * (s2 - 1.0) * s2 +
                       4.0 * s1 * s1 * (2.0 + 5.0 * (s2 - 1.0) * s2) +
                       (s2 - 1.0) * s2 * (1.0 + 8.0 * (s2 - 1.0) * s2);
  return R * R * a * a * (1.0 - s2) * (1.0 - s2) + a * a * s2 * s2 + 2.0 * R * inner;
}

double auxiliary_discriminant(const ModelParams& params, bool nn_ss) {
  const double s2 = params.s2;
  const double quartic =
      1.0 + 8.0 * s2 + 8.0 * s2 * s2 - 32.0 * s2 * s2 * s2 + 16.0 * s2 * s2 * s2 * s2;
  const double value = 4.0 * quartic / (params.R1 * params.R2);
  return nn_ss ? value : -value;
}

namespace {

int sign_with_band(double v, double band) {
  if (std::abs(v) <= band) return 0;
  return v > 0.0 ? 1 : -1;
}

PointKind kind_from_sign(int sign) {
  if (sign > 0) return PointKind::elliptic_elliptic;
  if (sign < 0) return PointKind::focus_focus;
  return PointKind::degenerate;
}

}  // namespace

std::array<SingularityReport, 4> classify_fixed_points(const ModelParams& params) {
  params.validate();
  const double E = discriminant_E(params);
  const double band = degeneracy_band(params);
  const bool half = std::abs(params.s1 - 0.5) <= kHalfBranchTolerance;

  // At s1 = 1/2 the discriminant D vanishes identically and the decision
  // moves to the A_L + A_H polynomial.
  const int nn_ss_sign =
      half ? sign_with_band(auxiliary_discriminant(params, true), 0.0)
           : sign_with_band(nn_ss_reduced_discriminant(params), 0.0);
  const int ns_sn_sign =
      half ? sign_with_band(auxiliary_discriminant(params, false), 0.0)
           : sign_with_band(E, band);

  std::array<SingularityReport, 4> out{};
  const std::array<FixedPoint, 4> ids = {FixedPoint::NN, FixedPoint::NS, FixedPoint::SN,
                                         FixedPoint::SS};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const bool mixed = ids[i] == FixedPoint::NS || ids[i] == FixedPoint::SN;
    const int sign = mixed ? ns_sn_sign : nn_ss_sign;
    out[i] = {ids[i], 0, kind_from_sign(sign), E, sign};
  }
  return out;
}

int n_ff(const ModelParams& params) {
  params.validate();
  const double E = discriminant_E(params);
  if (std::abs(E) <= degeneracy_band(params)) {
    std::ostringstream msg;
    msg << "degenerate: E = " << E << " lies within the degeneracy band; the system fails"
        << " to be semitoric";
    throw DegenerateError(msg.str());
  }
  return E < 0.0 ? 2 : 0;
}

double rank1_margin(double z1, double l, const ModelParams& params) {
  const double R1 = params.R1;
  const double R2 = params.R2;
  const double z2 = (l - R1 * z1) / R2;
  const double w1 = 1.0 - z1 * z1;
  const double w2 = 1.0 - z2 * z2;
  if (!(w1 > 0.0) || !(w2 > 0.0)) {
    std::ostringstream msg;
    msg << "rank1_margin: (z1, l) = (" << z1 << ", " << l
        << ") is outside the physical strip (B <= 0)";
    throw DomainError(msg.str());
  }
  const double numerator =
      R1 * R1 * w1 * w1 + 2.0 * z1 * z2 * R1 * R2 * w1 * w2 + R2 * R2 * w2 * w2;
  const double denominator = R2 * R2 * std::pow(w1, 1.5) * std::pow(w2, 1.5);
  return -numerator / denominator;
}

SemitoricVerdict check_semitoric(const ModelParams& params, int grid_n) {
  params.validate();
  if (grid_n < 2) throw DomainError("check_semitoric: grid_n must be at least 2");

  SemitoricVerdict verdict;
  try {
    verdict.n_ff = n_ff(params);
  } catch (const DegenerateError&) {
    verdict.degenerate = true;
  }

  const double lmax = params.R1 + params.R2;
  const double zlo = -1.0 + kStripMargin;
  const double llo = -lmax + kStripMargin;
  double worst = -std::numeric_limits<double>::infinity();
  int samples = 0;
  for (int i = 0; i < grid_n; ++i) {
    const double z1 = zlo + (2.0 - 2.0 * kStripMargin) * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double l = llo + (2.0 * lmax - 2.0 * kStripMargin) * j / (grid_n - 1);
      const double z2 = (l - params.R1 * z1) / params.R2;
      if (std::abs(z2) >= 1.0 - kStripMargin) continue;
      worst = std::max(worst, rank1_margin(z1, l, params));
      ++samples;
    }
  }
  verdict.rank1_margin_min = worst;
  verdict.rank1_samples = samples;
  verdict.is_semitoric = !verdict.degenerate && (samples == 0 || worst < 0.0);
  return verdict;
}

}  // namespace semitoric
