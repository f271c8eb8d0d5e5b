#include "semitoric/coefficients.hpp"

namespace semitoric::coeff {

double gamma_A(double s1, double s2, double R) {
  const double a = 1.0 - 2.0 * s1;
  return -R * R * a * a * (s2 - 1.0) * (s2 - 1.0) +
         2.0 * R *
             (8.0 * s1 * s1 * s1 * s1 - 16.0 * s1 * s1 * s1 +
              4.0 * s1 * s1 * (3.0 * s2 * s2 - 3.0 * s2 + 2.0) -
              12.0 * s1 * (s2 - 1.0) * s2 +
              s2 * (8.0 * s2 * s2 * s2 - 16.0 * s2 * s2 + 7.0 * s2 + 1.0)) -
         a * a * s2 * s2;
}

double gamma_B(double s1, double s2, double R) {
  const double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1;
  const double s2_2 = s2 * s2;
  return R * R *
             (4.0 * s1_4 - 8.0 * s1_3 + 4.0 * s1_2 * (3.0 * s2_2 - 4.0 * s2 + 2.0) -
              4.0 * s1 * (3.0 * s2_2 - 4.0 * s2 + 1.0) +
              (s2 - 1.0) * (s2 - 1.0) * (4.0 * s2_2 + 1.0)) -
         2.0 * R *
             (4.0 * s1_4 - 8.0 * s1_3 + 4.0 * s1_2 * (s2_2 - s2 + 1.0) -
              4.0 * s1 * (s2 - 1.0) * s2 +
              s2 * (4.0 * s2_2 * s2 - 8.0 * s2_2 + 3.0 * s2 + 1.0)) +
         4.0 * s1_4 - 8.0 * s1_3 + 4.0 * s1_2 * (3.0 * s2_2 - 2.0 * s2 + 1.0) +
         4.0 * s1 * s2 * (2.0 - 3.0 * s2) + s2_2 * (4.0 * s2_2 - 8.0 * s2 + 5.0);
}

double gamma_C(double s1, double s2, double R, double sqrt_gamma_B) {
  const double R2 = R * R;
  const double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1;
  const double s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_3 * s2;
  return -4 * R2 * s1_2 * s2_2 + 8 * R2 * s1_2 * s2 - 4 * R2 * s1_2 + 4 * R2 * s1 * s2_2 -
         8 * R2 * s1 * s2 + 4 * R2 * s1 - R2 * s2_2 + 2 * R2 * s2 - R2 + 8 * R * s1_4 -
         16 * R * s1_3 + 8 * R * s1_2 * s2_2 - 8 * R * s1_2 * s2 + 8 * R * s1_2 -
         8 * R * s1 * s2_2 + 8 * R * s1 * s2 + 8 * R * s2_4 - 16 * R * s2_3 +
         6 * R * s2_2 + 2 * R * s2 + 4 * sqrt_gamma_B * (-s1_2 + s1 - s2_2 + s2) -
         8 * s1_4 + 16 * s1_3 - 20 * s1_2 * s2_2 + 16 * s1_2 * s2 - 8 * s1_2 +
         20 * s1 * s2_2 - 16 * s1 * s2 - 8 * s2_4 + 16 * s2_3 - 9 * s2_2;
}

double gamma_D(double s1, double s2, double R, double sqrt_gamma_B) {
  const double R2 = R * R;
  const double s1_2 = s1 * s1, s1_3 = s1_2 * s1, s1_4 = s1_3 * s1;
  const double s2_2 = s2 * s2, s2_3 = s2_2 * s2, s2_4 = s2_3 * s2;
  return -8 * R2 * s1_4 + 16 * R2 * s1_3 - 20 * R2 * s1_2 * s2_2 + 24 * R2 * s1_2 * s2 -
         12 * R2 * s1_2 + 20 * R2 * s1 * s2_2 - 24 * R2 * s1 * s2 + 4 * R2 * s1 -
         8 * R2 * s2_4 + 16 * R2 * s2_3 - 9 * R2 * s2_2 + 2 * R2 * s2 - R2 +
         4 * R * sqrt_gamma_B * (-s1_2 + s1 - s2_2 + s2) + 8 * R * s1_4 - 16 * R * s1_3 +
         8 * R * s1_2 * s2_2 - 8 * R * s1_2 * s2 + 8 * R * s1_2 - 8 * R * s1 * s2_2 +
         8 * R * s1 * s2 + 8 * R * s2_4 - 16 * R * s2_3 + 6 * R * s2_2 + 2 * R * s2 -
         4 * s1_2 * s2_2 + 4 * s1 * s2_2 - s2_2;
}

}  // namespace semitoric::coeff
