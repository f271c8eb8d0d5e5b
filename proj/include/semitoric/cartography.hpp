#pragma once

// Momentum-map image F(M) = (L, H)(S^2 x S^2) sampled column by column, and
// polygon-invariant representatives built from the DH profile.

#include <array>
#include <utility>
#include <vector>

#include "semitoric/model.hpp"
#include "semitoric/singularity.hpp"

namespace semitoric {

/// One column of the image at unscaled L.
struct EnvelopeSample {
  double L = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
};

/// Extremes of H on the level set L (unscaled). DomainError if |L| > R1 + R2.
EnvelopeSample envelope_at(const ModelParams& params, double L);

struct LabelledValue {
  FixedPoint point = FixedPoint::NN;
  MomentumValue value;
};

struct ImageBoundary {
  std::vector<EnvelopeSample> samples;     // ascending L
  std::vector<LabelledValue> ff_values;    // empty unless E < 0
  std::array<LabelledValue, 4> corner_values{};  // NN, NS, SN, SS
};

inline constexpr int kMinImageSamples = 16;

/// n + 1 evenly spaced columns over [-(R1+R2), R1+R2]. DomainError if n < 16.
ImageBoundary image_boundary(const ModelParams& params, int n);

struct Point2 {
  double l = 0.0;
  double y = 0.0;
};

/// A polygon representative in scaled units: l is the NS level of the
/// system with R = max(R1,R2)/min(R1,R2) (after Psi_3 when R1 > R2), so the
/// lateral corners sit at l = -2 and l = 2R and the focus-focus levels at
/// l = 0 and l = 2R - 2.
struct Polygon {
  std::vector<Point2> vertices;  // counter-clockwise, starting at the left corner
  std::vector<Point2> top;       // upper chain, left to right
  std::vector<Point2> bottom;    // lower chain, left to right
  std::array<int, 2> cuts{1, 1};
  bool has_cuts = true;
  std::array<double, 2> ff_l{0.0, 0.0};
  double R = 2.0;     // scaled ratio (> 1)
  double unit = 1.0;  // min(R1, R2): scaled -> unscaled factor
  int shear = 0;      // accumulated integer shear

  double top_at(double l) const;
  double bottom_at(double l) const;
  double width_at(double l) const { return top_at(l) - bottom_at(l); }

  /// Unscaled (L, y) of a scaled point.
  Point2 unscaled(const Point2& p) const;
};

/// Canonical representative: bottom chain starts at (-2, 0) with slope 0 and
/// gains slope +1 at every focus-focus level whose cut points down (-1); the
/// top chain is bottom + rho. For E > 0 `cuts` is ignored and the polygon of
/// the (s1, s2) component is returned with has_cuts = false. DegenerateError
/// inside the E = 0 band; ConsistencyError if the result is not convex with
/// integer slopes.
Polygon polygon_representative(const ModelParams& params, std::array<int, 2> cuts);

/// (l, y) -> (l, y + k (l + 2)).
Polygon act_shear(const Polygon& poly, int k);

/// Negates cut `which` (1 or 2) and rebuilds the representative, keeping the
/// accumulated shear. DomainError for which outside {1, 2} or a cut-free
/// polygon.
Polygon act_flip_cut(const Polygon& poly, int which, const ModelParams& params);

}  // namespace semitoric
