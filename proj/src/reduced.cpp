#include "semitoric/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semitoric/coefficients.hpp"
#include "semitoric/errors.hpp"

namespace semitoric {

std::string_view to_string(SingLabel label) {
  return label == SingLabel::NS ? "NS" : "SN";
}

namespace {

// B = c * p (p - a)(p - 2R)(p - a - 2) with a = l for NS and a = -l for SN.
double b_prefactor(const ModelParams& params) {
  const double k = coeff::coupling_k(params.s1, params.s2);
  const double R = params.ratio();
  return 4.0 * k * k / (R * R);
}

double b_shift(SingLabel label, double l) { return label == SingLabel::NS ? l : -l; }

// A = a0 + a1 p2
std::pair<double, double> a_coefficients(SingLabel label, double l, const ModelParams& params) {
  const double R = params.ratio();
  const double s2 = params.s2;
  const double f = 1.0 - 2.0 * params.s1;
  const double slope = f * (s2 - R + R * s2) / R;
  if (label == SingLabel::NS) return {f * (1.0 + l - 2.0 * s2 - l * s2), slope};
  return {f * (-1.0 + l + 2.0 * s2 - l * s2), -slope};
}

using Poly = std::vector<double>;  // highest degree first

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

double reduced_A(SingLabel label, double l, double p2, const ModelParams& params) {
  const auto [a0, a1] = a_coefficients(label, l, params);
  return a0 + a1 * p2;
}

double reduced_B(SingLabel label, double l, double p2, const ModelParams& params) {
  const double a = b_shift(label, l);
  const double R = params.ratio();
  return b_prefactor(params) * p2 * (p2 - a) * (p2 - 2.0 * R) * (p2 - a - 2.0);
}

double reduced_H(SingLabel label, const ReducedPoint& pt, const ModelParams& params) {
  const double B = reduced_B(label, pt.l, pt.p2, params);
  return reduced_A(label, pt.l, pt.p2, params) + std::sqrt(std::max(B, 0.0)) * std::cos(pt.q2);
}

Interval level_range(SingLabel label, double R) {
  return label == SingLabel::NS ? Interval{-2.0, 2.0 * R} : Interval{-2.0 * R, 2.0};
}

Interval physical_interval(SingLabel label, double l, double R) {
  const Interval range = level_range(label, R);
  if (!(l >= range.lo && l <= range.hi)) {
    std::ostringstream msg;
    msg << "physical_interval: level l = " << l << " gives an empty " << to_string(label)
        << " interval (admissible range [" << range.lo << ", " << range.hi << "])";
    throw DomainError(msg.str());
  }
  const double a = b_shift(label, l);
  return {std::max(0.0, a), std::min(2.0 * R, a + 2.0)};
}

double critical_value(SingLabel label, const ModelParams& params) {
  const double v = (1.0 - 2.0 * params.s1) * (1.0 - 2.0 * params.s2);
  return label == SingLabel::NS ? v : -v;
}

double poly_P(SingLabel label, double l, double h, double p2, const ModelParams& params) {
  const double r = h + critical_value(label, params) - reduced_A(label, l, p2, params);
  return reduced_B(label, l, p2, params) - r * r;
}

std::array<double, 5> poly_P_coefficients(SingLabel label, double l, double h,
                                          const ModelParams& params) {
  const double a = b_shift(label, l);
  const double R = params.ratio();
  Poly B = {b_prefactor(params), 0.0};
  B = multiply(B, {1.0, -a});
  B = multiply(B, {1.0, -2.0 * R});
  B = multiply(B, {1.0, -a - 2.0});
  const auto [a0, a1] = a_coefficients(label, l, params);
  const Poly r = {-a1, h + critical_value(label, params) - a0};
  const Poly r2 = multiply(r, r);
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) out[i] = B[i];
  for (int i = 0; i < 3; ++i) out[2 + i] -= r2[i];
  return out;
}

double level_to_L(SingLabel label, double l, const ModelParams& params) {
  const double R = params.ratio();
  return params.R1 * (label == SingLabel::NS ? l + 1.0 - R : l + R - 1.0);
}

double L_to_level(SingLabel label, double L, const ModelParams& params) {
  const double R = params.ratio();
  const double x = L / params.R1;
  return label == SingLabel::NS ? x - 1.0 + R : x - R + 1.0;
}

PhasePoint lift_to_phase_space(SingLabel label, const ReducedPoint& pt,
                               const ModelParams& params, double theta1) {
  const double R = params.ratio();
  const Interval iv = physical_interval(label, pt.l, R);
  if (pt.p2 < iv.lo || pt.p2 > iv.hi) {
    std::ostringstream msg;
    msg << "lift_to_phase_space: p2 = " << pt.p2 << " outside the physical interval ["
        << iv.lo << ", " << iv.hi << "]";
    throw DomainError(msg.str());
  }
  if (label == SingLabel::NS) {
    return PhasePoint::from_cylindrical(theta1, 1.0 + pt.l - pt.p2, theta1 - pt.q2,
                                        pt.p2 / R - 1.0);
  }
  return PhasePoint::from_cylindrical(theta1, pt.l - 1.0 + pt.p2, theta1 + pt.q2,
                                      1.0 - pt.p2 / R);
}

P0Roots roots_P0(SingLabel label, const ModelParams& params) {
  params.validate();
  const double s1 = params.s1;
  const double s2 = params.s2;
  const double R = params.ratio();
  const double k = coeff::coupling_k(s1, s2);
  if (k == 0.0) {
    throw DomainError("roots_P0: P_0 vanishes identically at corner couplings");
  }
  const double gB = coeff::gamma_B(s1, s2, R);
  if (gB < 0.0) {
    std::ostringstream msg;
    msg << "roots_P0: gamma_B = " << gB << " < 0, the root formula does not apply";
    throw DomainError(msg.str());
  }
  const double w = std::sqrt(gB) / (2.0 * k);
  P0Roots out;
  out.zeta = {0.0, 0.0, 1.0 + R - w, 1.0 + R + w};

  const auto c = poly_P_coefficients(label, 0.0, 0.0, params);
  out.numeric = numerics::quartic_roots(c);
  // The double root at 0 is only resolved to ~sqrt(eps); compare the two
  // roots of largest modulus against zeta3, zeta4.
  auto roots = out.numeric.roots;
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });
  std::array<double, 2> big = {roots[2].real(), roots[3].real()};
  std::sort(big.begin(), big.end());
  out.max_deviation = std::max({std::abs(big[0] - out.zeta[2]), std::abs(big[1] - out.zeta[3]),
                                std::abs(roots[2].imag()), std::abs(roots[3].imag())});
  if (out.max_deviation > kRootAgreement) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "roots_P0: closed-form roots (" << out.zeta[2] << ", " << out.zeta[3]
        << ") disagree with the quartic solver (" << big[0] << ", " << big[1] << ")";
    throw ConsistencyError(msg.str());
  }
  return out;
}

double DHFunction::value(double l) const {
  if (l <= lo || l >= hi) return 0.0;
  double v = 0.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double start = breakpoints[i].first;
    const double end = i + 1 < breakpoints.size() ? breakpoints[i + 1].first : hi;
    if (l <= end) return v + breakpoints[i].second * (l - start);
    v += breakpoints[i].second * (end - start);
  }
  return v;
}

double DHFunction::slope_after(double l) const {
  double s = 0.0;
  for (const auto& [x, slope] : breakpoints) {
    if (x > l) break;
    s = slope;
  }
  return l >= hi ? 0.0 : s;
}

double DHFunction::area() const {
  double total = 0.0;
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const double a = breakpoints[i].first;
    const double b = i + 1 < breakpoints.size() ? breakpoints[i + 1].first : hi;
    total += 0.5 * (value(a) + value(b)) * (b - a);
  }
  return total;
}

DHFunction dh_function(double R) {
  if (!(R > 1.0)) {
    std::ostringstream msg;
    msg << "dh_function: R = " << R << " must exceed 1 (apply Psi_3 first)";
    throw DomainError(msg.str());
  }
  DHFunction rho;
  rho.lo = -2.0;
  rho.hi = 2.0 * R;
  rho.breakpoints = {{-2.0, 1.0}, {0.0, 0.0}, {2.0 * R - 2.0, -1.0}};

  // Every piece is linear, so agreement at the kinks and piece midpoints
  // pins the whole profile.
  std::vector<double> probes = {rho.lo, rho.hi};
  for (std::size_t i = 0; i < rho.breakpoints.size(); ++i) {
    const double a = rho.breakpoints[i].first;
    const double b = i + 1 < rho.breakpoints.size() ? rho.breakpoints[i + 1].first : rho.hi;
    probes.push_back(a);
    probes.push_back(0.5 * (a + b));
  }
  for (double l : probes) {
    const double expected = physical_interval(SingLabel::NS, l, R).length();
    if (std::abs(rho.value(l) - expected) > 1e-12 * (1.0 + R)) {
      std::ostringstream msg;
      msg << "dh_function: profile disagrees with the interval length at l = " << l;
      throw ConsistencyError(msg.str());
    }
  }
  return rho;
}

double dh_slope_jump(double R, double l, double h) {
  const auto rho = [R](double x) { return physical_interval(SingLabel::NS, x, R).length(); };
  return (rho(l + h) - 2.0 * rho(l) + rho(l - h)) / h;
}

}  // namespace semitoric
