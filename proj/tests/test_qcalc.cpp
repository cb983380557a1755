#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "lpopnorm/qcalc.hpp"

using namespace lpopnorm;
using namespace lpopnorm::qcalc;

namespace {

GridFunction power_function(double m, double q, std::size_t count,
                            TailMode tail = TailMode::zero) {
  return GridFunction::sample([m](double t) { return std::pow(t, m); }, 1.0, QParam(q), count, tail);
}

// Independent oracle: the double Jackson sum written out term by term with
// explicit powers of the grid points, no recursion and no rescaling.
InequalitySides theorem1_oracle(std::span<const double> f, double p, double alpha, double q,
                                std::size_t K) {
  long double lhs = 0.0L;
  for (std::size_t n = 0; n <= K; ++n) {
    const long double x = std::pow(static_cast<long double>(q), static_cast<long double>(n));
    long double inner = 0.0L;
    for (std::size_t k = 0; n + k <= K; ++k) {
      const long double t = x * std::pow(static_cast<long double>(q), static_cast<long double>(k));
      inner += std::pow(static_cast<long double>(q), static_cast<long double>(k)) *
               std::pow(t, -static_cast<long double>(alpha)) * f[n + k];
    }
    inner *= (1.0L - q) * x;
    lhs += std::pow(static_cast<long double>(q), static_cast<long double>(n)) *
           std::pow(x, static_cast<long double>(p * (alpha - 1.0))) * std::pow(inner, static_cast<long double>(p));
  }
  lhs *= (1.0L - q);

  long double integral = 0.0L;
  for (std::size_t k = 0; k <= K; ++k) {
    integral += std::pow(static_cast<long double>(q), static_cast<long double>(k)) *
                std::pow(static_cast<long double>(f[k]), static_cast<long double>(p));
  }
  integral *= (1.0L - q);
  const long double bracket =
      (1.0L - std::pow(static_cast<long double>(q), static_cast<long double>(1.0 - 1.0 / p - alpha))) /
      (1.0L - q);
  return {static_cast<double>(lhs),
          static_cast<double>(std::pow(bracket, -static_cast<long double>(p)) * integral)};
}

}  // namespace

TEST_CASE("q bracket") {
  for (double q : {0.1, 0.5, 0.9}) {
    CHECK(q_bracket(1.0, QParam(q)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(q_bracket(0.0, QParam(q)) == 0.0);
  }
  CHECK(q_bracket(2.0, QParam(0.5)) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(q_bracket(3.0, QParam(0.25)) == doctest::Approx(1.0 + 0.25 + 0.0625).epsilon(1e-15));
  CHECK(q_bracket(0.5, QParam(0.25)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

  // q -> 1 recovers alpha; second-order Taylor term is alpha (alpha-1)(1-q)/2
  for (double alpha : {0.5, 2.0, 3.0}) {
    CHECK(std::abs(q_bracket(alpha, QParam(0.999)) - alpha) < 0.01 * std::abs(alpha) * std::abs(alpha - 1.0));
  }
}

TEST_CASE("default truncation") {
  CHECK(default_truncation(QParam(0.5), 1.0) == 54);  // 2^-53 > 1e-16 > 2^-54
  CHECK(default_truncation(QParam(0.5), 0.0) == 0);
  const std::size_t K = default_truncation(QParam(0.9), 3.0, 1e-12);
  CHECK(std::pow(0.9, K) * 3.0 < 1e-12);
  CHECK(std::pow(0.9, K - 1) * 3.0 >= 1e-12);
}

TEST_CASE("grid function validation") {
  CHECK_THROWS_AS(GridFunction(1.0, QParam(0.5), {}), ArgumentError);
  CHECK_THROWS_AS(GridFunction(0.0, QParam(0.5), {1.0}), ArgumentError);
  CHECK_THROWS_AS(GridFunction(1.0, QParam(0.5), {1.0, NAN}), ArgumentError);
  CHECK_THROWS_AS(GridFunction(1.0, QParam(0.5), {1.0}, TailMode::geometric_extrapolate), ArgumentError);
  CHECK_THROWS_AS(GridFunction(1.0, QParam(0.5), {1.0, 1.0}, TailMode::geometric_extrapolate), ArgumentError);
  CHECK_NOTHROW(GridFunction(1.0, QParam(0.5), {1.0, 0.5}, TailMode::geometric_extrapolate));
  const auto f = power_function(1.0, 0.5, 4);
  CHECK(f.node(3) == doctest::Approx(0.125));
  CHECK(f.last_index() == 3);
}

TEST_CASE("Jackson integral of monomials") {
  const auto one = power_function(0.0, 0.5, 61);
  CHECK(std::abs(jackson_integral(one, 60).value - 1.0) < 1e-12);
  CHECK(jackson_integral(one, 60).tail_residual == 0.0);

  const auto t = power_function(1.0, 0.5, 61);
  CHECK(std::abs(jackson_integral(t, 60).value - 2.0 / 3.0) < 1e-12);

  // geometric-series oracle (1-q)/(1-q^{m+1}) = 1/[m+1]_q
  for (double q : {0.25, 0.5, 0.9}) {
    for (double m : {0.0, 1.0, 2.0, 5.0}) {
      const std::size_t K = default_truncation(QParam(q), 1.0);
      const auto f = power_function(m, q, K + 1);
      const double oracle = (1.0 - q) / (1.0 - std::pow(q, m + 1.0));
      CHECK(jackson_integral(f, K).value == doctest::Approx(oracle).epsilon(1e-12));
    }
  }

  // rescaled interval: int_0^b t d_q t = b^2 / (1+q)
  const auto scaled = GridFunction::sample([](double x) { return x; }, 3.0, QParam(0.5), 80);
  CHECK(jackson_integral(scaled, 79).value == doctest::Approx(9.0 / 1.5).epsilon(1e-12));

  CHECK_THROWS_AS(jackson_integral(one, 61), ArgumentError);
}

TEST_CASE("Jackson tail residual in geometric mode") {
  const double q = 0.5;
  const std::size_t K = 10;
  const auto f = power_function(1.0, q, K + 1, TailMode::geometric_extrapolate);
  const auto r = jackson_integral(f, K);
  const double omitted = 2.0 / 3.0 - r.value;  // exact tail for f(t) = t
  CHECK(omitted > 0.0);
  CHECK(r.tail_residual >= omitted * (1.0 - 1e-12));
  CHECK(r.tail_residual == doctest::Approx(omitted).epsilon(1e-10));  // exact for a pure geometric tail

  const auto no_ratio = jackson_integral(f, 0);
  CHECK(std::isinf(no_ratio.tail_residual));
}

TEST_CASE("Jackson integral is positive and linear") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double q = 0.05 + 0.9 * u(rng);
    std::vector<double> a(30), b(30), mix(30);
    const double ca = 2.0 * u(rng) - 1.0;
    const double cb = 2.0 * u(rng) - 1.0;
    for (std::size_t i = 0; i < 30; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      mix[i] = ca * a[i] + cb * b[i];
    }
    const GridFunction fa(1.0, QParam(q), a), fb(1.0, QParam(q), b), fm(1.0, QParam(q), mix);
    const double ia = jackson_integral(fa, 29).value;
    const double ib = jackson_integral(fb, 29).value;
    CHECK(ia >= 0.0);
    CHECK(ib >= 0.0);
    const double combo = ca * ia + cb * ib;
    CHECK(std::abs(jackson_integral(fm, 29).value - combo) <= 1e-12 * (std::abs(ca * ia) + std::abs(cb * ib)));
  }
}

TEST_CASE("Hardy parameters") {
  CHECK_NOTHROW(HardyParams(Exponent(2.0), 0.49, QParam(0.5)));
  CHECK_THROWS_AS(HardyParams(Exponent(2.0), 0.5, QParam(0.5)), DomainError);
  CHECK_THROWS_AS(HardyParams(Exponent(3.0), 0.7, QParam(0.5)), DomainError);
  CHECK(HardyParams(Exponent(4.0), -1.0, QParam(0.5)).bracket_argument() == doctest::Approx(1.75));
}

TEST_CASE("theorem1 sides: analytic spot checks") {
  const HardyParams params(Exponent(2.0), 0.0, QParam(0.25));
  const std::size_t K = default_truncation(params.q(), 1.0);
  const auto one = power_function(0.0, 0.25, K + 1);
  const auto s = theorem1_sides(one, params, K);
  CHECK(std::abs(s.lhs - 1.0) < 1e-10);
  CHECK(std::abs(s.rhs - 2.25) < 1e-10);
  CHECK(s.strictly_holds(1e-14));

  const auto zero = GridFunction(1.0, QParam(0.25), std::vector<double>(K + 1, 0.0));
  const auto z = theorem1_sides(zero, params, K);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);
  CHECK(z.holds(1e-14));
  CHECK_FALSE(z.strictly_holds(1e-14));  // equality is flagged, not a violation
}

TEST_CASE("theorem1 sides agree with the double-summation oracle") {
  // f(t) = t, p = 2, alpha = 0, q = 0.5 has lhs = 1/([3]_q (1+q)^2) in the limit
  const HardyParams params(Exponent(2.0), 0.0, QParam(0.5));
  const auto t = power_function(1.0, 0.5, 55);
  const auto s = theorem1_sides(t, params, 54);
  const auto o = theorem1_oracle(t.samples(), 2.0, 0.0, 0.5, 54);
  CHECK(s.lhs == doctest::Approx(o.lhs).epsilon(1e-13));
  CHECK(s.rhs == doctest::Approx(o.rhs).epsilon(1e-13));
  CHECK(s.lhs == doctest::Approx(1.0 / (1.75 * 2.25)).epsilon(1e-13));
  CHECK(s.lhs < s.rhs);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double p : {1.5, 2.0, 3.0}) {
    for (double alpha : {0.0, -1.0, 1.0 - 1.0 / p - 0.1}) {
      for (double q : {0.25, 0.5, 0.9}) {
        std::vector<double> f(40);
        for (double& v : f) {
          v = u(rng);
        }
        const GridFunction g(1.0, QParam(q), f);
        const HardyParams hp(Exponent(p), alpha, QParam(q));
        const auto sides = theorem1_sides(g, hp, 39);
        const auto oracle = theorem1_oracle(f, p, alpha, q, 39);
        CHECK(sides.lhs == doctest::Approx(oracle.lhs).epsilon(1e-11));
        CHECK(sides.rhs == doctest::Approx(oracle.rhs).epsilon(1e-11));
        CHECK(sides.strictly_holds(1e-14));
      }
    }
  }
}

TEST_CASE("theorem1 input errors") {
  const HardyParams params(Exponent(2.0), 0.0, QParam(0.5));
  CHECK_THROWS_AS(theorem1_sides(GridFunction(1.0, QParam(0.5), {1.0, -0.1}), params, 1), ArgumentError);
  CHECK_THROWS_AS(theorem1_sides(GridFunction(2.0, QParam(0.5), {1.0, 1.0}), params, 1), ArgumentError);
  CHECK_THROWS_AS(theorem1_sides(GridFunction(1.0, QParam(0.5), {1.0, 1.0}), params, 2), ArgumentError);
}

TEST_CASE("reduction to the discrete inequality") {
  const HardyParams params(Exponent(2.0), 0.0, QParam(0.25));
  const auto one = power_function(0.0, 0.25, 28);
  const auto red = reduce_theorem1_to_discrete(one, params);
  CHECK(red.q_eff == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(red.c.size() == 28);
  CHECK(red.c.at(1) == 1.0);
  CHECK(red.c.at(3) == doctest::Approx(0.25).epsilon(1e-15));  // 0.25^{2/2}

  const auto direct = theorem1_sides(one, params, 27);
  const auto reduced = reduced_sides(red, params);
  CHECK(reduced.lhs == doctest::Approx(direct.lhs).epsilon(1e-10));
  CHECK(reduced.rhs == doctest::Approx(direct.rhs).epsilon(1e-10));

  // alpha = -1/p leaves the exponent at 1, so q_eff = q
  const HardyParams unit_exp(Exponent(3.0), -1.0 / 3.0, QParam(0.4));
  const auto t = power_function(1.0, 0.4, 10);
  const auto r2 = reduce_theorem1_to_discrete(t, unit_exp);
  CHECK(r2.q_eff == doctest::Approx(0.4).epsilon(1e-14));
  for (std::size_t j = 0; j < 10; ++j) {
    CHECK(r2.c.at(j + 1) == doctest::Approx(std::pow(0.4, j / 3.0) * std::pow(0.4, j)).epsilon(1e-14));
  }

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = 1.1 + 4.0 * u(rng);
    const double alpha = (1.0 - 1.0 / p) - 0.01 - 3.0 * u(rng);
    const double q = 0.05 + 0.9 * u(rng);
    std::vector<double> f(1 + static_cast<std::size_t>(60 * u(rng)));
    for (double& v : f) {
      v = u(rng);
    }
    const GridFunction g(1.0, QParam(q), f);
    const HardyParams hp(Exponent(p), alpha, QParam(q));
    const auto a = theorem1_sides(g, hp, g.last_index());
    const auto b = reduced_sides(reduce_theorem1_to_discrete(g, hp), hp);
    CHECK(b.lhs == doctest::Approx(a.lhs).epsilon(1e-10));
    CHECK(b.rhs == doctest::Approx(a.rhs).epsilon(1e-10));
  }
}
