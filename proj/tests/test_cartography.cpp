#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "semitoric/cartography.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/reduced.hpp"

using namespace semitoric;

namespace {

bool same_points(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i].l - b[i].l) > 1e-12 || std::abs(a[i].y - b[i].y) > 1e-12) return false;
  }
  return true;
}

// Envelope of H at L by brute force over a (z1, theta) grid of the level set.
std::pair<double, double> envelope_grid(const ModelParams& p, double L, int n) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i <= n; ++i) {
    const double z1 = -1 + 2.0 * i / n;
    const double z2 = (L - p.R1 * z1) / p.R2;
    if (std::abs(z2) > 1) continue;
    for (double th : {0.0, oracle::kPi}) {
      const double h = oracle::H_cylindrical(0.0, z1, th, z2, p);
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  }
  return {lo, hi};
}

}  // namespace

TEST_SUITE("cartography") {

TEST_CASE("envelope: endpoints, grid oracle, toric corner") {
  const ModelParams p{1, 2, 0.3, 0.6};
  const auto top = envelope_at(p, 3.0);
  CHECK(top.h_min == top.h_max);
  CHECK(top.h_max == doctest::Approx(1 - 0.6).epsilon(1e-14));
  CHECK_THROWS_AS(envelope_at(p, 3.5), DomainError);
  for (double L : {-2.5, -1.0, 0.0, 0.4, 2.2}) {
    const auto e = envelope_at(p, L);
    const auto [lo, hi] = envelope_grid(p, L, 200000);
    CHECK(std::abs(e.h_min - lo) < 1e-6);
    CHECK(std::abs(e.h_max - hi) < 1e-6);
  }
  // (s1, s2) = (0, 0): H = z1, so the column is the z1-range on the level set
  const ModelParams c{1, 2, 0, 0};
  for (double L : {-2.0, 0.0, 1.5}) {
    const auto e = envelope_at(c, L);
    CHECK(std::abs(e.h_min - std::max(-1.0, (L - 2) / 1)) < 1e-9);
    CHECK(std::abs(e.h_max - std::min(1.0, (L + 2) / 1)) < 1e-9);
  }
}

TEST_CASE("image boundary: corners on the envelope, focus-focus inside") {
  const ModelParams p{1, 2, 0.4, 0.5};
  const auto img = image_boundary(p, 64);
  CHECK(img.samples.size() == 65);
  CHECK(img.samples.front().L == -3.0);
  CHECK(img.samples.back().L == 3.0);
  CHECK(img.samples.front().h_min == img.samples.front().h_max);
  CHECK(img.samples.back().h_min == img.samples.back().h_max);
  for (const auto& s : img.samples) CHECK(s.h_min <= s.h_max);
  REQUIRE(img.ff_values.size() == 2);
  for (const auto& f : img.ff_values) {
    const auto e = envelope_at(p, f.value.l_val);
    CHECK(f.value.h_val > e.h_min + 1e-6);
    CHECK(f.value.h_val < e.h_max - 1e-6);
  }
  CHECK(img.ff_values[0].value.l_val == -1.0);
  CHECK(img.ff_values[1].value.l_val == 1.0);
  CHECK_THROWS_AS(image_boundary(p, 15), DomainError);

  // with E > 0 the mixed poles are elliptic and sit on the boundary
  const ModelParams q{1, 2, 0.05, 0.05};
  const auto img2 = image_boundary(q, 32);
  CHECK(img2.ff_values.empty());
  for (int k : {1, 2}) {
    const auto e = envelope_at(q, img2.corner_values[k].value.l_val);
    const double h = img2.corner_values[k].value.h_val;
    CHECK(std::min(std::abs(h - e.h_min), std::abs(h - e.h_max)) < 1e-8);
  }
}

TEST_CASE("polygon representatives at R = 2") {
  const ModelParams p{1, 2, 0.5, 0.5};
  const Polygon pp = polygon_representative(p, {1, 1});
  CHECK(same_points(pp.top, {{-2, 0}, {0, 2}, {2, 2}, {4, 0}}));
  CHECK(same_points(pp.bottom, {{-2, 0}, {4, 0}}));
  CHECK(same_points(pp.vertices, {{-2, 0}, {4, 0}, {2, 2}, {0, 2}}));

  const Polygon pm = polygon_representative(p, {1, -1});
  CHECK(same_points(pm.top, {{-2, 0}, {0, 2}, {4, 2}}));
  CHECK(same_points(pm.bottom, {{-2, 0}, {2, 0}, {4, 2}}));
  CHECK(pm.ff_l[0] == 0.0);
  CHECK(pm.ff_l[1] == 2.0);
  // lateral corners at L = -(R1 + R2) and R1 + R2
  CHECK(pm.unscaled(pm.vertices.front()).l == -3.0);
  CHECK(pm.unscaled({4, 0}).l == 3.0);
  CHECK(pm.unscaled({0, 0}).l == -1.0);
  CHECK_THROWS_AS(polygon_representative(p, {1, 0}), DomainError);
}

TEST_CASE("width equals rho for every cut choice, and one kink per ff level") {
  for (double R : {1.5, 2.0, 3.5}) {
    const ModelParams p{1, R, 0.5, 0.5};
    const DHFunction rho = dh_function(R);
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        const Polygon poly = polygon_representative(p, {a, b});
        for (int i = 0; i <= 400; ++i) {
          const double l = -2 + (2 * R + 2) * i / 400;
          CHECK(std::abs(poly.width_at(l) - rho.value(l)) < 1e-12);
        }
        for (int k = 0; k < 2; ++k) {
          const double l = poly.ff_l[k], h = 1e-6;
          const auto jump = [&](auto at) {
            return (at(l + h) - at(l)) / h - (at(l) - at(l - h)) / h;
          };
          const double top = jump([&](double x) { return poly.top_at(x); });
          const double bottom = jump([&](double x) { return poly.bottom_at(x); });
          const int cut = k == 0 ? a : b;
          CHECK(std::abs(std::abs(cut > 0 ? top : bottom) - 1.0) < 1e-6);
          CHECK(std::abs(cut > 0 ? bottom : top) < 1e-6);
        }
      }
  }
}

TEST_CASE("shear and flip actions") {
  const ModelParams p{1, 2, 0.5, 0.5};
  const Polygon base = polygon_representative(p, {1, 1});
  CHECK(same_points(act_shear(base, 0).vertices, base.vertices));
  const Polygon s = act_shear(base, 1);
  for (int i = 0; i <= 60; ++i) {
    const double l = -2 + 6.0 * i / 60;
    CHECK(std::abs(s.width_at(l) - base.width_at(l)) < 1e-12);
  }
  CHECK(same_points(act_shear(act_shear(base, -1), 1).vertices, base.vertices));

  const Polygon f = act_flip_cut(base, 2, p);
  CHECK(f.cuts == std::array<int, 2>{1, -1});
  CHECK(same_points(f.vertices, polygon_representative(p, {1, -1}).vertices));
  CHECK(same_points(act_flip_cut(f, 2, p).vertices, base.vertices));
  for (int i = 0; i <= 20; ++i) {
    const double l = -2 + 2.0 * i / 10;  // left of the flipped level l = 2
    CHECK(std::abs(f.top_at(l) - base.top_at(l)) < 1e-12);
    CHECK(std::abs(f.bottom_at(l) - base.bottom_at(l)) < 1e-12);
  }
  const DHFunction rho = dh_function(2.0);
  for (int i = 0; i <= 60; ++i) {
    const double l = -2 + 6.0 * i / 60;
    CHECK(std::abs(f.width_at(l) - rho.value(l)) < 1e-12);
  }
  // shear survives a flip
  const Polygon sf = act_flip_cut(s, 1, p);
  CHECK(sf.shear == 1);
  CHECK(same_points(sf.vertices, act_shear(polygon_representative(p, {-1, 1}), 1).vertices));
  CHECK_THROWS_AS(act_flip_cut(base, 3, p), DomainError);
}

TEST_CASE("E > 0 components") {
  const ModelParams p{1, 2, 0.5, 0.5};
  const auto plus_minus = polygon_representative(p, {1, -1}).vertices;
  const auto minus_plus = polygon_representative(p, {-1, 1}).vertices;
  for (const auto& [s1, s2] : {std::pair{0.02, 0.02}, std::pair{0.98, 0.98}}) {
    const ModelParams q{1, 2, s1, s2};
    REQUIRE(discriminant_E(q) > 0);
    const Polygon poly = polygon_representative(q, {1, 1});
    CHECK_FALSE(poly.has_cuts);
    CHECK(same_points(poly.vertices, plus_minus));
    CHECK_THROWS_AS(act_flip_cut(poly, 1, q), DomainError);
  }
  for (const auto& [s1, s2] : {std::pair{0.98, 0.02}, std::pair{0.02, 0.98}}) {
    const ModelParams q{1, 2, s1, s2};
    REQUIRE(discriminant_E(q) > 0);
    CHECK(same_points(polygon_representative(q, {1, 1}).vertices, minus_plus));
  }
  // E = 0 is rejected
  const auto E = [](double s2) { return discriminant_E({1, 2, 0.1, s2}); };
  const double s2 = numerics::find_root_bisect(E, 0.0, 0.5, 1e-15);
  CHECK_THROWS_AS(polygon_representative({1, 2, 0.1, s2}, {1, 1}), DegenerateError);
}

TEST_CASE("R1 > R2 uses the swapped frame") {
  const ModelParams p{2, 1, 0.5, 0.5};
  const Polygon poly = polygon_representative(p, {1, 1});
  CHECK(poly.R == 2.0);
  CHECK(poly.unit == 1.0);
  CHECK(poly.unscaled(poly.vertices.front()).l == -3.0);
  const auto img = image_boundary(p, 32);
  CHECK(img.samples.front().L == -3.0);
}

}
