#include "semitoric/height.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

#include "semitoric/coefficients.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/numerics.hpp"
#include "semitoric/singularity.hpp"

namespace semitoric {

namespace {

constexpr double kPi = std::numbers::pi;

void check_quadratic(const char* who, double alpha, double beta, double gamma) {
  std::ostringstream msg;
  if (!(alpha > 0.0)) {
    msg << who << ": alpha = " << alpha << " must be positive";
  } else if (beta * beta - 4.0 * alpha * gamma < 0.0) {
    msg << who << ": beta^2 - 4 alpha gamma < 0, the quadratic has no real root";
  } else if (!(gamma >= 0.0)) {
    msg << who << ": gamma = " << gamma << " < 0, the integrand is not real at x = 0";
  } else if (!(beta + 2.0 * std::sqrt(alpha * gamma) < 0.0)) {
    msg << who << ": the smaller root of the quadratic is not positive";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

}  // namespace

GammaCoeffs gamma_coefficients(const ModelParams& params) {
  params.validate();
  const double s1 = params.s1;
  const double s2 = params.s2;
  const double R = params.ratio();
  GammaCoeffs g;
  g.gA = coeff::gamma_A(s1, s2, R);
  g.gB = coeff::gamma_B(s1, s2, R);
  if (g.gB < 0.0) {
    std::ostringstream msg;
    msg << "gamma_coefficients: gamma_B = " << g.gB << " < 0";
    throw DomainError(msg.str());
  }
  const double root = std::sqrt(g.gB);
  g.gC = coeff::gamma_C(s1, s2, R, root);
  g.gD = coeff::gamma_D(s1, s2, R, root);
  return g;
}

double integral_upper_limit(double alpha, double beta, double gamma) {
  return (-beta - std::sqrt(beta * beta - 4.0 * alpha * gamma)) / (2.0 * alpha);
}

double integral_NA(double alpha, double beta, double gamma) {
  check_quadratic("integral_NA", alpha, beta, gamma);
  const double disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
  return std::log(-disc / (beta + 2.0 * std::sqrt(alpha * gamma))) / std::sqrt(alpha);
}

double integral_NB_log(double alpha, double beta, double gamma, double delta) {
  check_quadratic("integral_NB", alpha, beta, gamma);
  using C = std::complex<double>;
  const double s = gamma + delta * (beta + alpha * delta);
  const C root_s = std::sqrt(C(s, 0.0));
  const C inner = std::sqrt(C(gamma * s, 0.0));
  const double disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
  const C arg = (-2.0 * gamma - beta * delta + 2.0 * inner) / (delta * disc);
  return (std::log(arg) / root_s).real();
}

double integral_NB(double alpha, double beta, double gamma, double delta) {
  return integral_NB(alpha, beta, gamma, delta, -gamma - delta * (beta + alpha * delta));
}

double integral_NB(double alpha, double beta, double gamma, double delta, double r) {
  check_quadratic("integral_NB", alpha, beta, gamma);
  const double disc = std::sqrt(beta * beta - 4.0 * alpha * gamma);
  const double far = (disc - beta) / (2.0 * alpha);  // larger root
  const double upper = gamma / (alpha * far);
  // r > 0 puts delta strictly between the roots, whatever rounding says
  if (!(r > 0.0) && delta >= 0.0 && delta <= upper) {
    std::ostringstream msg;
    msg << "integral_NB: delta = " << delta << " lies in the integration range [0, " << upper
        << "]";
    throw DomainError(msg.str());
  }
  if (r > 0.0 && gamma > 0.0) {
    // 2 gamma + delta (beta + disc) = 2 alpha upper (far - delta); when
    // delta is near the far root take that distance from r instead.
    const double near_gap = delta - upper;
    const double far_gap =
        near_gap > far - delta ? r / (alpha * near_gap) : far - delta;
    const double num = 2.0 * alpha * upper * far_gap;
    return 2.0 / std::sqrt(r) * std::atan(num / (2.0 * std::sqrt(gamma * r)));
  }
  if (r == 0.0) throw DomainError("integral_NB: gamma + delta (beta + alpha delta) = 0");
  return integral_NB_log(alpha, beta, gamma, delta);
}

std::string_view to_string(CaseId c) {
  switch (c) {
    case CaseId::I: return "I";
    case CaseId::II: return "II";
    case CaseId::III: return "III";
    case CaseId::IV: return "IV";
    case CaseId::V: return "V";
  }
  return "?";
}

namespace {

bool on_trivial_lines(double s1, double s2, double R) {
  return std::abs(s1 - 0.5) <= kCaseBand || std::abs(s2 - R / (R + 1.0)) <= kCaseBand;
}

}  // namespace

CaseId case_id(const ModelParams& params) {
  const double R = params.ratio();
  if (on_trivial_lines(params.s1, params.s2, R)) return CaseId::III;
  const bool left = params.s1 < 0.5;
  const bool low = params.s2 < R / (R + 1.0);
  if (left) return low ? CaseId::I : CaseId::II;
  return low ? CaseId::IV : CaseId::V;
}

FEvaluation closed_form_F_detailed(double s1, double s2, double R) {
  if (!(R > 1.0)) {
    std::ostringstream msg;
    msg << "closed_form_F: R = " << R << " must exceed 1";
    throw DomainError(msg.str());
  }
  if (on_trivial_lines(s1, s2, R)) {
    throw DomainError("closed_form_F: (s1, s2) lies on a case-III line where F is singular");
  }
  const double gA = coeff::gamma_A(s1, s2, R);
  if (!(gA > 0.0)) {
    std::ostringstream msg;
    msg << "closed_form_F: gamma_A = " << gA << " <= 0 (no focus-focus points)";
    throw DomainError(msg.str());
  }
  const double gB = coeff::gamma_B(s1, s2, R);
  const double k = -coeff::coupling_k(s1, s2);  // s1^2 - s1 + s2^2 - s2
  const double d = coeff::case_denominator(s1, s2, R);

  const double V1 = -(2.0 * s1 - 1.0) * (R * s2 - R + s2);
  const double V2 = -(-2.0 * R * s1 * s2 + 2.0 * R * s1 + R * s2 - R - 2.0 * s1 * s2 + s2);
  const double V3 = -(-2.0 * R * R * s1 * s2 + 2.0 * R * R * s1 + R * R * s2 - R * R -
                      2.0 * R * s1 * s2 + R * s2);
  const double alpha = 4.0 * k * k;
  const double beta = -8.0 * (1.0 + R) * k * k;
  const double gamma = gA;

  FEvaluation out;
  out.value = 2.0 * (V1 * integral_NA(alpha, beta, gamma) +
                     V2 * integral_NB(alpha, beta, gamma, 2.0, d * d) +
                     V3 * integral_NB(alpha, beta, gamma, 2.0 * R, d * d));

  const double rootA = std::sqrt(gA);
  const double rootB = std::sqrt(std::max(gB, 0.0));
  const double gC = coeff::gamma_C(s1, s2, R, rootB);
  const double gD = coeff::gamma_D(s1, s2, R, rootB);
  out.cross_check = 2.0 * (2.0 * std::atan(gC / (rootA * d)) +
                           2.0 * R * std::atan(gD / (rootA * d)) +
                           d / (2.0 * k) * std::log(-rootB / (2.0 * (R + 1.0) * k + rootA)));
  out.discrepancy = std::abs(out.value - out.cross_check);
  if (!(out.discrepancy <= kFAgreement + kFAgreementNearLine / std::abs(d))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "closed_form_F: evaluation routes disagree at (s1, s2, R) = (" << s1 << ", " << s2
        << ", " << R << "): " << out.value << " vs " << out.cross_check;
    throw ConsistencyError(msg.str());
  }
  return out;
}

double closed_form_F(double s1, double s2, double R) {
  return closed_form_F_detailed(s1, s2, R).value;
}

std::string_view to_string(HeightMethod m) {
  switch (m) {
    case HeightMethod::closed_form: return "closed-form";
    case HeightMethod::quadrature: return "quadrature";
    case HeightMethod::both: return "both";
  }
  return "?";
}

namespace {

void require_focus_focus(const ModelParams& params, const char* who) {
  const double E = discriminant_E(params);
  if (E > -degeneracy_band(params)) {
    std::ostringstream msg;
    msg << who << ": E = " << E
        << (std::abs(E) <= degeneracy_band(params) ? " is degenerate" : " >= 0")
        << "; the height invariant needs two focus-focus points (E < 0)";
    throw DegenerateError(msg.str());
  }
}

// h1 for R > 1 off the case-III lines.
double h1_from_F(double s1, double s2, double R) {
  const double u = (s1 - 0.5) * (s2 - R / (R + 1.0)) > 0.0 ? 1.0 : 0.0;
  return -closed_form_F(s1, s2, R) / (2.0 * kPi) + 2.0 * u;
}

}  // namespace

bool is_ill_conditioned(const ModelParams& params) {
  const double R = params.ratio();
  if (coeff::gamma_A(params.s1, params.s2, R) < kIllConditioned) return true;
  const double d = R > 1.0 ? coeff::case_denominator(params.s1, params.s2, R)
                           : coeff::case_denominator(params.s1, 1.0 - params.s2, 1.0 / R);
  return d != 0.0 && std::abs(d) < kNearCaseLine;
}

HeightInvariant height_closed(const ModelParams& params) {
  params.validate();
  require_focus_focus(params, "height_closed");
  HeightInvariant out;
  out.method = HeightMethod::closed_form;
  out.case_ns = case_id(params);
  const double R = params.ratio();
  out.ill_conditioned = is_ill_conditioned(params);
  if (out.case_ns == CaseId::III) {
    out.h1 = 1.0;
    out.h2 = 1.0;
    return out;
  }
  // For R < 1, Psi_3 swaps the spheres and turns N x S into S x N.
  out.h1 = R > 1.0 ? h1_from_F(params.s1, params.s2, R)
                   : 2.0 - h1_from_F(params.s1, 1.0 - params.s2, 1.0 / R);
  out.h2 = 2.0 - out.h1;
  return out;
}

OracleResult height_oracle_detailed(SingLabel label, const ModelParams& params, double tol) {
  params.validate();
  if (!(tol > 0.0)) throw DomainError("height_oracle: tol must be positive");
  require_focus_focus(params, "height_oracle");

  const double R = params.ratio();
  const double scale = std::min(1.0, R);
  const Interval iv = physical_interval(label, 0.0, R);
  const double hc = critical_value(label, params);
  const auto P = [&](double p) { return poly_P(label, 0.0, 0.0, p, params); };

  // Split the interval where B - (H_crit - A)^2 changes sign; the weight has
  // a square-root kink there.
  // Cell midpoints, both endpoints and a geometric run towards each
  // endpoint: a root of P can sit arbitrarily close to a turning point.
  constexpr int kScan = 256;
  std::vector<double> xs = {iv.lo, iv.hi};
  for (int i = 0; i < kScan; ++i) xs.push_back(iv.lo + iv.length() * (i + 0.5) / kScan);
  for (int k = 10; k <= 48; ++k) {
    xs.push_back(iv.lo + std::ldexp(iv.length(), -k));
    xs.push_back(iv.hi - std::ldexp(iv.length(), -k));
  }
  std::sort(xs.begin(), xs.end());
  std::vector<double> cuts = {iv.lo};
  double prev_x = xs.front();
  double prev = P(prev_x);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double x = xs[i];
    const double v = P(x);
    if ((prev < 0.0) != (v < 0.0)) {
      cuts.push_back(numerics::find_root_bisect(P, prev_x, x, 1e-15 * iv.length()));
    }
    prev_x = x;
    prev = v;
  }
  cuts.push_back(iv.hi);

  // A is linear in p. Forming H_crit - A from its value at iv.lo and the
  // slope keeps full relative accuracy where A is within an ulp of H_crit.
  const double gap0 = hc - reduced_A(label, 0.0, iv.lo, params);
  const double slope =
      (reduced_A(label, 0.0, iv.hi, params) - reduced_A(label, 0.0, iv.lo, params)) /
      iv.length();

  OracleResult out;
  out.pieces = static_cast<int>(cuts.size()) - 1;
  numerics::QuadratureSettings settings;
  settings.abs_tol = tol * 2.0 * kPi * scale / (2.0 * out.pieces);
  settings.rel_tol = tol / 10.0;
  settings.endpoint_mode = numerics::EndpointMode::both;
  settings.initial_panels = 8;

  double area = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i];
    const double b = cuts[i + 1];
    if (!(b > a)) continue;
    const double mid = 0.5 * (a + b);
    if (P(mid) > 0.0) {
      const auto weight = [&](double p) {
        const double B = reduced_B(label, 0.0, p, params);
        const double gap = gap0 - slope * (p - iv.lo);
        if (!(B > 0.0)) return gap > 0.0 ? 2.0 * kPi : 0.0;
        const double c = gap / std::sqrt(B);
        out.max_arccos_excursion = std::max(out.max_arccos_excursion, std::abs(c) - 1.0);
        return 2.0 * kPi - 2.0 * std::acos(std::clamp(c, -1.0, 1.0));
      };
      const auto r = numerics::integrate(weight, a, b, settings);
      area += r.value;
      err += r.error_estimate;
      out.subdivisions += r.subdivisions;
    } else if (gap0 - slope * (mid - iv.lo) > 0.0) {
      // whole circle below the critical level
      area += 2.0 * kPi * (b - a);
    }
  }
  out.value = area / (2.0 * kPi * scale);
  out.error_estimate = err / (2.0 * kPi * scale);
  return out;
}

double height_oracle(SingLabel label, const ModelParams& params, double tol) {
  return height_oracle_detailed(label, params, tol).value;
}

HeightInvariant compute_height(const ModelParams& params, HeightMethod method, double tol) {
  if (method == HeightMethod::closed_form) return height_closed(params);
  if (method == HeightMethod::quadrature) {
    params.validate();
    HeightInvariant out;
    out.method = method;
    out.case_ns = case_id(params);
    out.ill_conditioned = is_ill_conditioned(params);
    out.h1 = height_oracle(SingLabel::NS, params, tol);
    out.h2 = height_oracle(SingLabel::SN, params, tol);
    return out;
  }
  HeightInvariant out = height_closed(params);
  out.method = HeightMethod::both;
  out.discrepancy = std::abs(out.h1 - height_oracle(SingLabel::NS, params, tol));
  return out;
}

}  // namespace semitoric
