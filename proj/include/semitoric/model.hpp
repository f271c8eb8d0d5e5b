#pragma once

// Phase space S^2 x S^2 with omega = -(R1 omega_S2 (+) R2 omega_S2), the
// momentum map (L, H), Poisson brackets and the discrete symmetries Psi_1..5.

#include <array>
#include <functional>
#include <utility>

namespace semitoric {

using Vec3 = std::array<double, 3>;

/// (R1, R2, s1, s2). Construct through make() to get the invariants checked.
struct ModelParams {
  double R1 = 1.0;
  double R2 = 2.0;
  double s1 = 0.5;
  double s2 = 0.5;

  /// R = R2 / R1.
  double ratio() const { return R2 / R1; }

  /// Throws DomainError unless R1, R2 > 0, R1 != R2 and s1, s2 in [0, 1].
  static ModelParams make(double R1, double R2, double s1, double s2);
  void validate() const;
};

/// A point of S^2 x S^2 in Cartesian coordinates, one unit vector per sphere.
struct PhasePoint {
  Vec3 first{0.0, 0.0, 1.0};
  Vec3 second{0.0, 0.0, 1.0};

  /// theta_i is the azimuth, z_i the height on sphere i.
  static PhasePoint from_cylindrical(double theta1, double z1, double theta2, double z2);
};

namespace poles {
inline constexpr PhasePoint NN{{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}};
inline constexpr PhasePoint NS{{0.0, 0.0, 1.0}, {0.0, 0.0, -1.0}};
inline constexpr PhasePoint SN{{0.0, 0.0, -1.0}, {0.0, 0.0, 1.0}};
inline constexpr PhasePoint SS{{0.0, 0.0, -1.0}, {0.0, 0.0, -1.0}};
}  // namespace poles

struct MomentumValue {
  double l_val = 0.0;
  double h_val = 0.0;
};

/// Coefficients of H = t1 z1 + t2 z2 + t3 (x1 x2 + y1 y2) + t4 z1 z2.
struct TParams {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
};

TParams t_params(const ModelParams& params);

/// Input tolerance for |x_i| = 1.
inline constexpr double kSphereTolerance = 1e-9;

/// Throws DomainError when either factor is off its unit sphere by more than tol.
void validate_point(const PhasePoint& p, double tol = kSphereTolerance);

MomentumValue momentum_map(const PhasePoint& p, const ModelParams& params);

using Observable = std::function<double(const PhasePoint&)>;

/// Ambient gradient, split per sphere.
struct Gradient {
  Vec3 first{};
  Vec3 second{};
};

Observable observable_L(const ModelParams& params);
Observable observable_H(const ModelParams& params);

Gradient gradient_L(const PhasePoint& p, const ModelParams& params);
Gradient gradient_H(const PhasePoint& p, const ModelParams& params);

inline constexpr double kGradientStep = 1e-6;

/// Central differences in R^6. Only the tangential part enters a bracket, so
/// the ambient extension of the observable is irrelevant.
Gradient fd_gradient(const Observable& f, const PhasePoint& p, double step = kGradientStep);

/// {f, g}(p) = omega(X_f, X_g) = -sum_i (1/R_i) x_i . (grad_i f x grad_i g).
double poisson_bracket(const Gradient& df, const Gradient& dg, const PhasePoint& p,
                       const ModelParams& params);

/// Finite-difference route; validates p.
double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& p,
                       const ModelParams& params, double step = kGradientStep);

using GradientField = std::function<Gradient(const PhasePoint&)>;

/// Hamiltonian flow of the function whose gradient is `grad`, integrated with
/// classical RK4 and renormalised onto the spheres after each step. The
/// vector field is xdot_i = (1/R_i) x_i x grad_i g.
PhasePoint hamiltonian_flow(const GradientField& grad, const PhasePoint& start,
                            const ModelParams& params, double time, int steps);

/// Applies Psi_index (1..5) to a point and its parameters. Psi_5 exists only
/// at s1 = 1/2 and throws DomainError elsewhere.
std::pair<PhasePoint, ModelParams> apply_symmetry(int index, const PhasePoint& p,
                                                  const ModelParams& params);

/// Sign pattern (sign_L, sign_H) with which Psi_index pulls back (L, H).
std::pair<int, int> symmetry_pullback_signs(int index);

}  // namespace semitoric
