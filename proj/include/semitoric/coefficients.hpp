#pragma once

// Polynomial coefficients of the height computation, as functions of the
// scale-free parameters (s1, s2, R = R2/R1).

namespace semitoric::coeff {

/// gamma_A = -E / R1^2.
double gamma_A(double s1, double s2, double R);

/// gamma_B = 4 (1+R)^2 k^2 - gamma_A with k = s1 - s1^2 + s2 - s2^2.
double gamma_B(double s1, double s2, double R);

/// gamma_C and gamma_D take sqrt(gamma_B) as an argument.
double gamma_C(double s1, double s2, double R, double sqrt_gamma_B);
double gamma_D(double s1, double s2, double R, double sqrt_gamma_B);

/// s1 - s1^2 + s2 - s2^2, i.e. t3 / 2.
inline double coupling_k(double s1, double s2) { return s1 - s1 * s1 + s2 - s2 * s2; }

/// (2 s1 - 1)(R (s2 - 1) + s2); vanishes exactly on the trivial case III.
inline double case_denominator(double s1, double s2, double R) {
  return (2.0 * s1 - 1.0) * (R * (s2 - 1.0) + s2);
}

}  // namespace semitoric::coeff
