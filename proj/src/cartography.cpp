#include "semitoric/cartography.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semitoric/errors.hpp"
#include "semitoric/numerics.hpp"
#include "semitoric/reduced.hpp"

namespace semitoric {

namespace {

constexpr double kEnvelopeTol = 1e-10;

}  // namespace

EnvelopeSample envelope_at(const ModelParams& params, double L) {
  params.validate();
  const double lmax = params.R1 + params.R2;
  if (std::abs(L) > lmax * (1.0 + 1e-15)) {
    std::ostringstream msg;
    msg << "envelope_at: |L| = " << std::abs(L) << " exceeds R1 + R2 = " << lmax;
    throw DomainError(msg.str());
  }
  const double R = params.ratio();
  // The NS chart covers every level, whichever radius is larger.
  const double l = std::clamp(L_to_level(SingLabel::NS, L, params), -2.0, 2.0 * R);
  const Interval iv = physical_interval(SingLabel::NS, l, R);
  EnvelopeSample out{L, 0.0, 0.0};
  if (!(iv.length() > 0.0)) {
    out.h_min = out.h_max = reduced_A(SingLabel::NS, l, iv.lo, params);
    return out;
  }
  const auto upper = [&](double p) {
    return reduced_A(SingLabel::NS, l, p, params) +
           std::sqrt(std::max(reduced_B(SingLabel::NS, l, p, params), 0.0));
  };
  const auto lower = [&](double p) {
    return reduced_A(SingLabel::NS, l, p, params) -
           std::sqrt(std::max(reduced_B(SingLabel::NS, l, p, params), 0.0));
  };
  out.h_max = numerics::maximize_golden(upper, iv.lo, iv.hi, kEnvelopeTol).fx;
  out.h_min = numerics::minimize_golden(lower, iv.lo, iv.hi, kEnvelopeTol).fx;
  return out;
}

ImageBoundary image_boundary(const ModelParams& params, int n) {
  params.validate();
  if (n < kMinImageSamples) {
    std::ostringstream msg;
    msg << "image_boundary: n = " << n << " is below the minimum of " << kMinImageSamples;
    throw DomainError(msg.str());
  }
  ImageBoundary out;
  const double lmax = params.R1 + params.R2;
  out.samples.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double L = i == n ? lmax : -lmax + 2.0 * lmax * i / n;
    out.samples.push_back(envelope_at(params, L));
  }
  const std::array<FixedPoint, 4> ids = {FixedPoint::NN, FixedPoint::NS, FixedPoint::SN,
                                         FixedPoint::SS};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.corner_values[i] = {ids[i], momentum_map(fixed_point_location(ids[i]), params)};
  }
  if (discriminant_E(params) < -degeneracy_band(params)) {
    out.ff_values = {out.corner_values[1], out.corner_values[2]};
  }
  return out;
}

namespace {

double chain_at(const std::vector<Point2>& chain, double l) {
  if (l <= chain.front().l) return chain.front().y;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (l <= chain[i].l) {
      const Point2& a = chain[i - 1];
      const Point2& b = chain[i];
      return a.y + (b.y - a.y) * (l - a.l) / (b.l - a.l);
    }
  }
  return chain.back().y;
}

std::vector<Point2> drop_collinear(const std::vector<Point2>& chain) {
  std::vector<Point2> out;
  for (const Point2& p : chain) {
    if (!out.empty() && p.l == out.back().l) continue;
    while (out.size() >= 2) {
      const Point2& a = out[out.size() - 2];
      const Point2& b = out.back();
      const double cross = (b.l - a.l) * (p.y - a.y) - (b.y - a.y) * (p.l - a.l);
      if (std::abs(cross) > 1e-12 * (1.0 + std::abs(p.l - a.l))) break;
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<double> chain_slopes(const std::vector<Point2>& chain) {
  std::vector<double> s;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    s.push_back((chain[i].y - chain[i - 1].y) / (chain[i].l - chain[i - 1].l));
  }
  return s;
}

void assemble_vertices(Polygon& poly) {
  poly.vertices = poly.bottom;
  for (std::size_t i = poly.top.size() - 1; i-- > 1;) poly.vertices.push_back(poly.top[i]);
}

void check_shape(const Polygon& poly) {
  const auto bottom = chain_slopes(poly.bottom);
  const auto top = chain_slopes(poly.top);
  const auto is_integer = [](double s) { return std::abs(s - std::round(s)) <= 1e-12; };
  bool ok = std::all_of(bottom.begin(), bottom.end(), is_integer) &&
            std::all_of(top.begin(), top.end(), is_integer);
  for (std::size_t i = 1; i < bottom.size(); ++i) ok = ok && bottom[i] > bottom[i - 1];
  for (std::size_t i = 1; i < top.size(); ++i) ok = ok && top[i] < top[i - 1];
  if (!ok) throw ConsistencyError("polygon_representative: result is not a convex polygon "
                                  "with integer edge slopes");
}

// Component rule for E > 0: the regions around (0,0) and (1,1) give the
// (+1,-1) shape, the regions around (1,0) and (0,1) give (-1,+1).
std::array<int, 2> component_cuts(double s1, double s2, double R) {
  const bool same_side = (s1 < 0.5) == (s2 < R / (R + 1.0));
  return same_side ? std::array<int, 2>{1, -1} : std::array<int, 2>{-1, 1};
}

}  // namespace

double Polygon::top_at(double l) const { return chain_at(top, l); }
double Polygon::bottom_at(double l) const { return chain_at(bottom, l); }

Point2 Polygon::unscaled(const Point2& p) const {
  return {unit * (p.l + 1.0 - R), unit * p.y};
}

Polygon polygon_representative(const ModelParams& params, std::array<int, 2> cuts) {
  params.validate();
  for (int c : cuts) {
    if (c != 1 && c != -1) throw DomainError("polygon_representative: cuts must be +1 or -1");
  }
  const double E = discriminant_E(params);
  if (std::abs(E) <= degeneracy_band(params)) {
    std::ostringstream msg;
    msg << "polygon_representative: degenerate system (E = " << E << ")";
    throw DegenerateError(msg.str());
  }
  // Work in the frame with R > 1.
  const bool swapped = params.R1 > params.R2;
  const ModelParams frame =
      swapped ? ModelParams{params.R2, params.R1, params.s1, 1.0 - params.s2} : params;
  const double R = frame.ratio();

  Polygon poly;
  poly.R = R;
  poly.unit = frame.R1;
  poly.ff_l = {0.0, 2.0 * R - 2.0};
  poly.has_cuts = E < 0.0;
  poly.cuts = poly.has_cuts ? cuts : component_cuts(frame.s1, frame.s2, R);

  const DHFunction rho = dh_function(R);
  const std::array<double, 4> ls = {-2.0, 0.0, 2.0 * R - 2.0, 2.0 * R};
  std::vector<Point2> bottom = {{ls[0], 0.0}};
  double slope = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    bottom.push_back({ls[i], bottom.back().y + slope * (ls[i] - ls[i - 1])});
    if (i <= 2 && poly.cuts[i - 1] == -1) slope += 1.0;
  }
  std::vector<Point2> top;
  for (const Point2& p : bottom) top.push_back({p.l, p.y + rho.value(p.l)});
  poly.bottom = drop_collinear(bottom);
  poly.top = drop_collinear(top);
  assemble_vertices(poly);
  check_shape(poly);
  return poly;
}

Polygon act_shear(const Polygon& poly, int k) {
  Polygon out = poly;
  const auto shear = [k](std::vector<Point2>& pts) {
    for (Point2& p : pts) p.y += k * (p.l + 2.0);
  };
  shear(out.top);
  shear(out.bottom);
  shear(out.vertices);
  out.shear += k;
  return out;
}

Polygon act_flip_cut(const Polygon& poly, int which, const ModelParams& params) {
  if (which != 1 && which != 2) throw DomainError("act_flip_cut: which must be 1 or 2");
  if (!poly.has_cuts) throw DomainError("act_flip_cut: polygon has no cuts to flip");
  std::array<int, 2> cuts = poly.cuts;
  cuts[which - 1] = -cuts[which - 1];
  return act_shear(polygon_representative(params, cuts), poly.shear);
}

}  // namespace semitoric
