#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "opucmat/poly.hpp"
#include "testutil.hpp"

using namespace opucmat;

TEST_CASE("ipow") {
  cplx z(0.3, -0.4);
  CHECK(std::abs(ipow(z, 0) - cplx(1.0)) == 0.0);
  CHECK(std::abs(ipow(z, 5) - std::pow(z, 5)) <= 1e-15);
  CHECK(std::abs(ipow(z, -3) - 1.0 / (z * z * z)) <= 1e-14);
}

TEST_CASE("real poly arithmetic and evaluation") {
  RealPoly p({1.0, 0.0, -2.0});
  CHECK(p.degree() == 2);
  CHECK(p.eval(3.0) == doctest::Approx(1.0 - 18.0));
  RealPoly q({0.0, 1.0});
  RealPoly r = p * q;
  CHECK(r.degree() == 3);
  CHECK(r.coeff(3) == doctest::Approx(-2.0));
  CHECK(r.coeff(1) == doctest::Approx(1.0));
  CHECK((p - p).degree() == -1);
  CHECK(shifted(q, 2).coeff(3) == doctest::Approx(1.0));
}

TEST_CASE("monic chebyshev tables") {
  // Frozen low-degree coefficients; the step That_2 = x^2 - 1/2 differs from
  // the steady -(1/4) recursion and is easy to get wrong.
  CHECK(testutil::max_diff(cheb1_monic(0), RealPoly({1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb1_monic(1), RealPoly({0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb1_monic(2), RealPoly({-0.5, 0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb1_monic(3), RealPoly({0.0, -0.75, 0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb1_monic(4), RealPoly({0.125, 0.0, -1.0, 0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb2_monic(2), RealPoly({-0.25, 0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb2_monic(3), RealPoly({0.0, -0.5, 0.0, 1.0})) == 0.0);
  CHECK(testutil::max_diff(cheb2_monic(4), RealPoly({0.0625, 0.0, -0.75, 0.0, 1.0})) == 0.0);

  // 2^{1-n} cos(n theta) and 2^{-n} sin((n+1) theta)/sin(theta) at x = cos(theta).
  double theta = 0.7;
  double x = std::cos(theta);
  for (std::size_t n = 1; n <= 12; ++n) {
    double np1 = static_cast<double>(n);
    CHECK(cheb1_monic(n).eval(x) ==
          doctest::Approx(std::pow(2.0, 1.0 - np1) * std::cos(np1 * theta)).epsilon(1e-12));
    CHECK(cheb2_monic(n).eval(x) ==
          doctest::Approx(std::pow(2.0, -np1) * std::sin((np1 + 1.0) * theta) / std::sin(theta))
              .epsilon(1e-12));
  }
}

TEST_CASE("reversed polynomial") {
  ComplexPoly phi1({cplx(0.5), cplx(1.0)});
  ComplexPoly r1 = reversed(phi1, 1);
  CHECK(std::abs(r1.coeff(0) - cplx(1.0)) == 0.0);
  CHECK(std::abs(r1.coeff(1) - cplx(0.5)) == 0.0);

  ComplexPoly p({cplx(0.0, 0.5), cplx(1.0)});
  ComplexPoly r2 = reversed(p, 1);
  CHECK(std::abs(r2.coeff(0) - cplx(1.0)) == 0.0);
  CHECK(std::abs(r2.coeff(1) - cplx(0.0, -0.5)) == 0.0);

  // Degree deficit pads with zeros at the low end: p = 1, n = 2 -> z^2.
  ComplexPoly r3 = reversed(ComplexPoly::one(), 2);
  CHECK(std::abs(r3.coeff(2) - cplx(1.0)) == 0.0);
  CHECK(std::abs(r3.coeff(0)) == 0.0);
  CHECK(std::abs(r3.coeff(1)) == 0.0);

  CHECK_THROWS_AS(reversed(ComplexPoly({cplx(1), cplx(1), cplx(1)}), 1), std::invalid_argument);

  // Involution on degree-n polynomials with nonzero constant term.
  std::mt19937_64 rng(5);
  ComplexPoly q;
  q.c.resize(7);
  for (auto& x : q.c) x = testutil::disk_point(rng, 1.0) + cplx(1.5, 0.0);
  ComplexPoly qq = reversed(reversed(q, 6), 6);
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(qq.coeff(k) - q.coeff(k)) == 0.0);
}

TEST_CASE("laurent arithmetic, reflection, evaluation") {
  // f = z^{-1} + 2 + i z
  LaurentPoly f(-1, {cplx(1.0), cplx(2.0), cplx(0.0, 1.0)});
  CHECK(f.max_power() == 1);
  CHECK(std::abs(f.coeff(-1) - cplx(1.0)) == 0.0);
  CHECK(std::abs(f.coeff(5)) == 0.0);

  cplx z(0.3, 0.7);
  cplx want = 1.0 / z + 2.0 + cplx(0.0, 1.0) * z;
  CHECK(std::abs(f.eval(z) - want) <= 1e-15);
  CHECK_THROWS_AS(f.eval(cplx(0.0)), std::domain_error);

  LaurentPoly g = conj_reflect(f);
  CHECK(g.min_power == -1);
  CHECK(std::abs(g.coeff(1) - cplx(1.0)) == 0.0);
  CHECK(std::abs(g.coeff(-1) - cplx(0.0, -1.0)) == 0.0);
  // conj_reflect is an involution and matches conj(f)(1/z) pointwise.
  CHECK(testutil::max_diff(conj_reflect(g), f) == 0.0);
  cplx lhs = g.eval(z);
  cplx rhs = std::conj(f.eval(std::conj(1.0 / z)));
  CHECK(std::abs(lhs - rhs) <= 1e-15);

  LaurentPoly s = shifted(f, 3) - f;
  CHECK(std::abs(s.coeff(2) - cplx(1.0)) == 0.0);
  CHECK(std::abs(s.coeff(-1) + cplx(1.0)) == 0.0);

  LaurentPoly t = trimmed(f - f);
  CHECK(t.c.empty());
  LaurentPoly u = trimmed(LaurentPoly(-2, {cplx(0.0), cplx(3.0), cplx(0.0)}));
  CHECK(u.min_power == -1);
  CHECK(u.c.size() == 1);

  CHECK(max_coeff(f) == doctest::Approx(2.0));
}

TEST_CASE("laurent restriction of an xy split") {
  RealPoly even({1.0, 2.0, -1.5});
  RealPoly odd({0.5, -1.0});
  LaurentPoly f = laurent_from_xy(even, odd);
  CHECK(f.min_power == -2);
  CHECK(f.max_power() == 2);
  for (double t : {0.1, 1.3, 2.9, 4.4, 6.0}) {
    double x = std::cos(t);
    double y = std::sin(t);
    cplx want = cplx(even.eval(x) + y * odd.eval(x));
    CHECK(std::abs(f.eval(std::polar(1.0, t)) - want) <= 1e-14);
  }

  LaurentPoly g = laurent_from_xy(RealPoly(), RealPoly({1.0}));  // just y
  CHECK(g.min_power == -1);
  CHECK(g.max_power() == 1);
  CHECK(std::abs(g.coeff(1) - cplx(0.0, -0.5)) == 0.0);
  CHECK(std::abs(g.coeff(-1) - cplx(0.0, 0.5)) == 0.0);
  CHECK(g.coeff(0) == cplx(0.0));

  CHECK(laurent_from_xy(RealPoly(), RealPoly()).c.empty());
}
