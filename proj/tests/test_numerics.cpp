#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/numerics.hpp"
#include "semitoric/singularity.hpp"

using namespace semitoric;
using namespace semitoric::numerics;

TEST_SUITE("numerics") {

TEST_CASE("integrate: polynomial and endpoint singularity") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  QuadratureSettings s;
  s.endpoint_mode = EndpointMode::inverse_sqrt_right;
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0, s);
  CHECK(std::abs(r.value - 2.0) < 1e-10);

  s.endpoint_mode = EndpointMode::inverse_sqrt_left;
  CHECK(std::abs(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 4.0, s).value -
                 4.0) < 1e-10);

  s.endpoint_mode = EndpointMode::both;
  const auto arc = integrate([](double x) { return 1.0 / std::sqrt(x * (1.0 - x)); }, 0.0, 1.0, s);
  CHECK(std::abs(arc.value - oracle::kPi) < 1e-10);
}

TEST_CASE("integrate: exact on degree <= 10 polynomials") {
  for (int n = 0; n <= 10; ++n) {
    const auto r = integrate([n](double x) { return (n + 1) * std::pow(x, n); }, 0.0, 1.0);
    CHECK(std::abs(r.value - 1.0) < 1e-13);
  }
}

TEST_CASE("integrate: settings validation and nonconvergence") {
  QuadratureSettings bad;
  bad.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);
  bad = {};
  bad.max_subdivisions = 4;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), DomainError);

  QuadratureSettings tight;
  tight.max_subdivisions = 8;
  tight.abs_tol = 1e-15;
  tight.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, tight),
                  ConvergenceError);
}

TEST_CASE("find_root_bisect") {
  CHECK(find_root_bisect([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-14) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(std::abs(find_root_bisect([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-14) -
                 oracle::kPi / 2) < 1e-13);
  CHECK_THROWS_AS(find_root_bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12),
                  DomainError);

  // E = 0 along s2 at s1 = 1/2... E < 0 on that whole line, so bracket at s1 = 0.1
  const auto E = [](double s2) { return discriminant_E({1.0, 2.0, 0.1, s2}); };
  CHECK(E(0.0) > 0.0);
  CHECK(E(0.5) < 0.0);
  const double root = find_root_bisect(E, 0.0, 0.5, 1e-15);
  CHECK(std::abs(E(root)) <= 1e-12);

  // residual shrinks with the tolerance
  double prev = 1e300;
  for (double tol : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const double r = std::abs(E(find_root_bisect(E, 0.0, 0.5, tol)));
    CHECK(r <= prev * 1.0001 + 1e-15);
    prev = r;
  }
}

TEST_CASE("golden section") {
  const auto m = minimize_golden([](double x) { return (x - 1) * (x - 1); }, 0.0, 3.0, 1e-10);
  CHECK(std::abs(m.x - 1.0) < 1e-6);
  CHECK(m.unimodal);
  const auto e = minimize_golden([](double x) { return x; }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(e.x) < 1e-9);

  // max of A + sqrt(B) at l = 0 against a dense grid
  const ModelParams prm{1.0, 2.0, 0.3, 0.6};
  const auto upper = [&](double p) {
    return reduced_A(SingLabel::NS, 0.0, p, prm) +
           std::sqrt(std::max(0.0, reduced_B(SingLabel::NS, 0.0, p, prm)));
  };
  const auto g = maximize_golden(upper, 0.0, 2.0, 1e-12);
  double best = -1e300, arg = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    const double p = 2.0 * i / 100000;
    if (upper(p) > best) {
      best = upper(p);
      arg = p;
    }
  }
  CHECK(std::abs(g.x - arg) < 1e-4);
  CHECK(g.fx >= best - 1e-12);

  const auto two = minimize_golden([](double x) { return std::cos(3 * x); }, 0.0, 4.0, 1e-10);
  CHECK_FALSE(two.unimodal);
  CHECK(two.fx == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("quartic_roots") {
  const std::array<double, 5> x4 = {1, 0, 0, 0, 0};
  for (const auto& r : quartic_roots(x4).roots) CHECK(std::abs(r) < 1e-10);

  // x^2 (x - 2)(x - 4) = x^4 - 6x^3 + 8x^2
  const std::array<double, 5> c = {1, -6, 8, 0, 0};
  const auto q = quartic_roots(c);
  const auto re = q.real();
  CHECK(std::abs(re[0]) < 1e-7);
  CHECK(std::abs(re[1]) < 1e-7);
  CHECK(std::abs(re[2] - 2.0) < 1e-10);
  CHECK(std::abs(re[3] - 4.0) < 1e-10);

  const std::array<double, 5> zero_lead = {0, 1, 2, 3, 4};
  CHECK_THROWS_AS(quartic_roots(zero_lead), DomainError);

  // Vieta round trip on random quartics
  auto g = oracle::rng(7);
  for (int t = 0; t < 100; ++t) {
    std::array<double, 5> a{};
    for (double& v : a) v = oracle::uniform(g, -3.0, 3.0);
    a[0] = oracle::uniform(g, 0.5, 2.0);
    const auto rr = quartic_roots(a).roots;
    std::array<std::complex<double>, 5> e = {1.0, 0.0, 0.0, 0.0, 0.0};
    for (const auto& z : rr) {
      for (int i = 4; i >= 1; --i) e[i] = e[i] - z * e[i - 1];
    }
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v / a[0]));
    for (int i = 0; i < 5; ++i) CHECK(std::abs(e[i] - a[i] / a[0]) <= 1e-9 * scale);
  }
}

TEST_CASE("polyval") {
  const std::array<double, 3> c = {2, -3, 1};
  CHECK(polyval(c, 2.0) == 3.0);
}

}
