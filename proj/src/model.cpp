#include "semitoric/model.hpp"

#include <cmath>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 normalized(const Vec3& a) {
  const double n = std::sqrt(dot(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

}  // namespace

ModelParams ModelParams::make(double R1, double R2, double s1, double s2) {
  ModelParams p{R1, R2, s1, s2};
  p.validate();
  return p;
}

void ModelParams::validate() const {
  std::ostringstream msg;
  if (!(R1 > 0.0) || !(R2 > 0.0)) {
    msg << "ModelParams: radii must be positive (R1=" << R1 << ", R2=" << R2 << ")";
  } else if (R1 == R2) {
    msg << "ModelParams: R1 == R2 gives a non-simple system";
  } else if (!(s1 >= 0.0 && s1 <= 1.0) || !(s2 >= 0.0 && s2 <= 1.0)) {
    msg << "ModelParams: couplings must lie in [0,1] (s1=" << s1 << ", s2=" << s2 << ")";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

PhasePoint PhasePoint::from_cylindrical(double theta1, double z1, double theta2, double z2) {
  const double r1 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
  const double r2 = std::sqrt(std::max(0.0, 1.0 - z2 * z2));
  return {{r1 * std::cos(theta1), r1 * std::sin(theta1), z1},
          {r2 * std::cos(theta2), r2 * std::sin(theta2), z2}};
}

TParams t_params(const ModelParams& params) {
  const double s1 = params.s1;
  const double s2 = params.s2;
  return {(1.0 - 2.0 * s1) * (1.0 - s2), (1.0 - 2.0 * s1) * s2,
          2.0 * (s1 + s2 - s1 * s1 - s2 * s2), 0.0};
}

void validate_point(const PhasePoint& p, double tol) {
  const double d1 = std::abs(std::sqrt(dot(p.first, p.first)) - 1.0);
  const double d2 = std::abs(std::sqrt(dot(p.second, p.second)) - 1.0);
  if (!(d1 <= tol) || !(d2 <= tol)) {
    std::ostringstream msg;
    msg << "PhasePoint off the unit spheres (deviations " << d1 << ", " << d2 << ")";
    throw DomainError(msg.str());
  }
}

namespace {

double eval_L(const PhasePoint& p, const ModelParams& params) {
  return params.R1 * p.first[2] + params.R2 * p.second[2];
}

double eval_H(const PhasePoint& p, const TParams& t) {
  const Vec3& a = p.first;
  const Vec3& b = p.second;
  return t.t1 * a[2] + t.t2 * b[2] + t.t3 * (a[0] * b[0] + a[1] * b[1]) +
         t.t4 * a[2] * b[2];
}

}  // namespace

MomentumValue momentum_map(const PhasePoint& p, const ModelParams& params) {
  validate_point(p);
  return {eval_L(p, params), eval_H(p, t_params(params))};
}

Observable observable_L(const ModelParams& params) {
  return [params](const PhasePoint& p) { return eval_L(p, params); };
}

Observable observable_H(const ModelParams& params) {
  const TParams t = t_params(params);
  return [t](const PhasePoint& p) { return eval_H(p, t); };
}

Gradient gradient_L(const PhasePoint&, const ModelParams& params) {
  return {{0.0, 0.0, params.R1}, {0.0, 0.0, params.R2}};
}

Gradient gradient_H(const PhasePoint& p, const ModelParams& params) {
  const TParams t = t_params(params);
  const Vec3& a = p.first;
  const Vec3& b = p.second;
  return {{t.t3 * b[0], t.t3 * b[1], t.t1 + t.t4 * b[2]},
          {t.t3 * a[0], t.t3 * a[1], t.t2 + t.t4 * a[2]}};
}

Gradient fd_gradient(const Observable& f, const PhasePoint& p, double step) {
  Gradient g;
  for (int sphere = 0; sphere < 2; ++sphere) {
    for (int k = 0; k < 3; ++k) {
      PhasePoint plus = p;
      PhasePoint minus = p;
      Vec3& vp = sphere == 0 ? plus.first : plus.second;
      Vec3& vm = sphere == 0 ? minus.first : minus.second;
      vp[k] += step;
      vm[k] -= step;
      const double d = (f(plus) - f(minus)) / (2.0 * step);
      (sphere == 0 ? g.first : g.second)[k] = d;
    }
  }
  return g;
}

double poisson_bracket(const Gradient& df, const Gradient& dg, const PhasePoint& p,
                       const ModelParams& params) {
  return -(dot(p.first, cross(df.first, dg.first)) / params.R1 +
           dot(p.second, cross(df.second, dg.second)) / params.R2);
}

double poisson_bracket(const Observable& f, const Observable& g, const PhasePoint& p,
                       const ModelParams& params, double step) {
  validate_point(p);
  return poisson_bracket(fd_gradient(f, p, step), fd_gradient(g, p, step), p, params);
}

namespace {

struct Velocity {
  Vec3 first;
  Vec3 second;
};

Velocity flow_field(const GradientField& grad, const PhasePoint& p, const ModelParams& params) {
  const Gradient g = grad(p);
  Vec3 v1 = cross(p.first, g.first);
  Vec3 v2 = cross(p.second, g.second);
  for (int k = 0; k < 3; ++k) {
    v1[k] /= params.R1;
    v2[k] /= params.R2;
  }
  return {v1, v2};
}

PhasePoint shifted(const PhasePoint& p, const Velocity& v, double h) {
  PhasePoint q = p;
  for (int k = 0; k < 3; ++k) {
    q.first[k] += h * v.first[k];
    q.second[k] += h * v.second[k];
  }
  return q;
}

}  // namespace

PhasePoint hamiltonian_flow(const GradientField& grad, const PhasePoint& start,
                            const ModelParams& params, double time, int steps) {
  if (steps < 1) throw DomainError("hamiltonian_flow: steps must be positive");
  validate_point(start);
  const double h = time / steps;
  PhasePoint x = start;
  for (int i = 0; i < steps; ++i) {
    const Velocity k1 = flow_field(grad, x, params);
    const Velocity k2 = flow_field(grad, shifted(x, k1, h / 2), params);
    const Velocity k3 = flow_field(grad, shifted(x, k2, h / 2), params);
    const Velocity k4 = flow_field(grad, shifted(x, k3, h), params);
    for (int k = 0; k < 3; ++k) {
      x.first[k] += h / 6 * (k1.first[k] + 2 * k2.first[k] + 2 * k3.first[k] + k4.first[k]);
      x.second[k] +=
          h / 6 * (k1.second[k] + 2 * k2.second[k] + 2 * k3.second[k] + k4.second[k]);
    }
    x.first = normalized(x.first);
    x.second = normalized(x.second);
  }
  return x;
}

std::pair<PhasePoint, ModelParams> apply_symmetry(int index, const PhasePoint& p,
                                                  const ModelParams& params) {
  const auto& [x1, y1, z1] = p.first;
  const auto& [x2, y2, z2] = p.second;
  const auto [R1, R2, s1, s2] = params;
  switch (index) {
    case 1:
      return {{{-x1, -y1, z1}, {-x2, -y2, z2}}, {R1, R2, s1, s2}};
    case 2:
      return {{{x1, -y1, -z1}, {x2, -y2, -z2}}, {R1, R2, 1.0 - s1, s2}};
    case 3:
      return {{{x2, y2, z2}, {x1, y1, z1}}, {R2, R1, s1, 1.0 - s2}};
    case 4:
      return {{{-x1, -y1, z1}, {x2, y2, z2}}, {R1, R2, 1.0 - s1, s2}};
    case 5:
      if (s1 != 0.5) {
        throw DomainError("apply_symmetry: Psi_5 is defined only for s1 = 1/2");
      }
      return {p, {R1, R2, s1, 1.0 - s2}};
    default:
      throw DomainError("apply_symmetry: index must be in 1..5");
  }
}

std::pair<int, int> symmetry_pullback_signs(int index) {
  switch (index) {
    case 1:
    case 3:
    case 5:
      return {1, 1};
    case 2:
      return {-1, 1};
    case 4:
      return {1, -1};
    default:
      throw DomainError("symmetry_pullback_signs: index must be in 1..5");
  }
}

}  // namespace semitoric
