#include "semitoric/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include <Eigen/Dense>

#include "semitoric/errors.hpp"

namespace semitoric::numerics {

namespace {

// Kronrod 15-point abscissae on [-1,1]; the odd entries are the 7-point
// Gauss abscissae.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

QuadratureResult integrate_plain(const RealFunction& f, double a, double b,
                                 const QuadratureSettings& s) {
  std::priority_queue<Segment> queue;
  double total = 0.0;
  double total_error = 0.0;
  for (int i = 0; i < s.initial_panels; ++i) {
    const double lo = a + (b - a) * i / s.initial_panels;
    const double hi = i + 1 == s.initial_panels ? b : a + (b - a) * (i + 1) / s.initial_panels;
    const Segment seg = kronrod15(f, lo, hi);
    total += seg.value;
    total_error += seg.error;
    queue.push(seg);
  }
  int subdivisions = 0;

  auto tolerance = [&] { return std::max(s.abs_tol, s.rel_tol * std::abs(total)); };

  while (total_error > tolerance()) {
    if (subdivisions >= s.max_subdivisions) {
      std::ostringstream msg;
      msg.precision(6);
      msg << "integrate: no convergence on [" << a << ", " << b << "] after "
          << subdivisions << " subdivisions; value=" << total
          << " error_estimate=" << total_error << " tolerance=" << tolerance()
          << "; worst segments:";
      for (int k = 0; k < 3 && !queue.empty(); ++k) {
        const Segment w = queue.top();
        queue.pop();
        msg << " [" << w.a << ", " << w.b << "] err=" << w.error;
      }
      throw ConvergenceError(msg.str());
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // interval exhausted at machine resolution; accept what we have
      total_error -= worst.error;
      continue;
    }
    const Segment left = kronrod15(f, worst.a, mid);
    const Segment right = kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  // re-sum to shed accumulated cancellation from the running updates
  double value = 0.0;
  double error = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  return {value, error, subdivisions};
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("QuadratureSettings: tolerances must be positive");
  }
  if (max_subdivisions < 8) {
    throw DomainError("QuadratureSettings: max_subdivisions must be at least 8");
  }
  if (initial_panels < 1) throw DomainError("QuadratureSettings: initial_panels must be >= 1");
}

QuadratureResult integrate(const RealFunction& f, double a, double b,
                           const QuadratureSettings& settings) {
  settings.validate();
  if (!(a < b)) throw DomainError("integrate: requires a < b");

  const double width = b - a;
  switch (settings.endpoint_mode) {
    case EndpointMode::none:
      return integrate_plain(f, a, b, settings);
    case EndpointMode::inverse_sqrt_left:
      return integrate_plain(
          [&](double u) { return f(a + width * u * u) * 2.0 * width * u; }, 0.0, 1.0,
          settings);
    case EndpointMode::inverse_sqrt_right:
      return integrate_plain(
          [&](double u) { return f(b - width * u * u) * 2.0 * width * u; }, 0.0, 1.0,
          settings);
    case EndpointMode::both:
      return integrate_plain(
          [&](double t) {
            const double s = std::sin(t);
            const double c = std::cos(t);
            return f(a + width * s * s) * 2.0 * width * s * c;
          },
          0.0, std::numbers::pi / 2, settings);
  }
  throw DomainError("integrate: unknown endpoint mode");
}

double find_root_bisect(const RealFunction& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw DomainError("find_root_bisect: tol must be positive");
  if (a > b) std::swap(a, b);
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (std::signbit(fa) == std::signbit(fb)) {
    std::ostringstream msg;
    msg << "find_root_bisect: no sign change on [" << a << ", " << b << "] (f(a)=" << fa
        << ", f(b)=" << fb << ")";
    throw DomainError(msg.str());
  }
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

namespace {

Extremum golden_section(const RealFunction& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    if (x1 >= x2) break;
  }
  return f1 <= f2 ? Extremum{x1, f1, true} : Extremum{x2, f2, true};
}

}  // namespace

Extremum minimize_golden(const RealFunction& f, double a, double b, double tol) {
  if (!(a < b)) throw DomainError("minimize_golden: requires a < b");
  if (!(tol > 0.0)) throw DomainError("minimize_golden: tol must be positive");

  constexpr int kSeeds = 64;
  std::array<double, kSeeds> xs{};
  std::array<double, kSeeds> fs{};
  for (int i = 0; i < kSeeds; ++i) {
    xs[i] = (i == kSeeds - 1) ? b : a + (b - a) * i / (kSeeds - 1);
    fs[i] = f(xs[i]);
  }

  Extremum best{xs[0], fs[0], true};
  int basins = 0;
  for (int i = 0; i < kSeeds; ++i) {
    const bool left_ok = (i == 0) || fs[i] <= fs[i - 1];
    const bool right_ok = (i == kSeeds - 1) || fs[i] <= fs[i + 1];
    if (!(left_ok && right_ok)) continue;
    // plateaus count once
    if (i > 0 && fs[i] == fs[i - 1]) continue;
    ++basins;
    const double lo = xs[std::max(i - 1, 0)];
    const double hi = xs[std::min(i + 1, kSeeds - 1)];
    Extremum local = golden_section(f, lo, hi, tol);
    if (fs[i] < local.fx) local = {xs[i], fs[i], true};
    if (local.fx < best.fx) best = local;
  }
  best.unimodal = basins <= 1;
  return best;
}

Extremum maximize_golden(const RealFunction& f, double a, double b, double tol) {
  Extremum e = minimize_golden([&](double x) { return -f(x); }, a, b, tol);
  e.fx = -e.fx;
  return e;
}

std::array<double, 4> QuarticRoots::real() const {
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = roots[i].real();
  return out;
}

double polyval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

QuarticRoots quartic_roots(std::span<const double, 5> coeffs) {
  const double lead = coeffs[0];
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  if (lead == 0.0 || std::abs(lead) <= 1e-14 * scale) {
    throw DomainError("quartic_roots: leading coefficient vanishes");
  }

  Eigen::Matrix4d companion = Eigen::Matrix4d::Zero();
  for (int i = 1; i < 4; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < 4; ++i) companion(i, 3) = -coeffs[4 - i] / lead;

  Eigen::EigenSolver<Eigen::Matrix4d> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("quartic_roots: companion eigenvalue iteration failed");
  }

  auto p = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (double c : coeffs) acc = acc * z + c;
    return acc;
  };
  auto dp = [&](std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 4; ++i) acc = acc * z + coeffs[i] * static_cast<double>(4 - i);
    return acc;
  };

  QuarticRoots out;
  for (int i = 0; i < 4; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    const std::complex<double> slope = dp(z);
    if (std::abs(slope) > 1e-8 * std::max(1.0, std::abs(z)) * std::abs(lead)) {
      const std::complex<double> polished = z - p(z) / slope;
      if (std::abs(p(polished)) <= std::abs(p(z))) z = polished;
    }
    if (std::abs(z.imag()) <= kRealRootTolerance * std::max(1.0, std::abs(z))) {
      z = {z.real(), 0.0};
    } else {
      out.all_real = false;
    }
    out.roots[i] = z;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const std::complex<double>& x, const std::complex<double>& y) {
              if (x.real() != y.real()) return x.real() < y.real();
              return x.imag() < y.imag();
            });
  return out;
}

}  // namespace semitoric::numerics
