#pragma once

// Shared numerical kernels: adaptive Gauss-Kronrod quadrature with endpoint
// substitutions, bracketed bisection, golden-section extremisation and a
// companion-matrix quartic solver. All kernels are deterministic.

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace semitoric::numerics {

using RealFunction = std::function<double(double)>;

enum class EndpointMode {
  none,
  inverse_sqrt_left,   // x = a + (b-a) u^2
  inverse_sqrt_right,  // x = b - (b-a) u^2
  both,                // x = a + (b-a) sin^2(t)
};

struct QuadratureSettings {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
  // Equal panels the range is split into before adaptive refinement; more
  // than one guards against an error estimate fooled by a single panel.
  int initial_panels = 1;
  EndpointMode endpoint_mode = EndpointMode::none;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a,b].
/// Throws ConvergenceError (with the worst remaining sub-intervals in the
/// message) when max_subdivisions is exhausted.
QuadratureResult integrate(const RealFunction& f, double a, double b,
                           const QuadratureSettings& settings = {});

/// Bisection on a sign-changing bracket; returns the midpoint of the final
/// bracket, whose width is at most tol.
double find_root_bisect(const RealFunction& f, double a, double b, double tol);

struct Extremum {
  double x = 0.0;
  double fx = 0.0;
  // false when the seeding grid shows more than one local basin
  bool unimodal = true;
};

/// Minimum of f on [a,b]: 64-point seeding grid, then golden-section
/// refinement of every local basin found on the grid.
Extremum minimize_golden(const RealFunction& f, double a, double b, double tol);
Extremum maximize_golden(const RealFunction& f, double a, double b, double tol);

struct QuarticRoots {
  // Sorted by ascending real part, then ascending imaginary part.
  std::array<std::complex<double>, 4> roots{};
  bool all_real = true;

  /// Real parts in sorted order (meaningful when all_real).
  std::array<double, 4> real() const;
};

/// Roots of c[0] x^4 + c[1] x^3 + c[2] x^2 + c[3] x + c[4].
/// Companion-matrix eigenvalues followed by one Newton step per root.
QuarticRoots quartic_roots(std::span<const double, 5> coeffs);

/// Horner evaluation, coefficients ordered from the highest degree.
double polyval(std::span<const double> coeffs, double x);

/// Imaginary parts below this (relative to the root scale) count as real.
inline constexpr double kRealRootTolerance = 1e-7;

}  // namespace semitoric::numerics
