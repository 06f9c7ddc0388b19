#include <doctest.h>

#include <cmath>
#include <limits>

#include "invcs/errors.hpp"
#include "invcs/nonlinearity.hpp"

using namespace invcs;

TEST_CASE("closed-form log factorial products match direct sums") {
  for (const auto& name : builtin_names()) {
    for (double kappa : {0.5, 1.0, 3.0}) {
      const auto f = builtin(name, kappa);
      CHECK(f.has_closed_form());
      double direct = 0.0;
      for (long n = 1; n <= 300; ++n) {
        direct += std::log(f(n));
        CHECK(f.log_factorial_product(n) == doctest::Approx(direct).epsilon(1e-12).scale(1.0));
      }
      CHECK(f.log_factorial_product(0) == 0.0);
    }
  }
}

TEST_CASE("known factorial products") {
  // [1/n]! = 1/n!, [hydrogen](3) = sqrt(3*4*5) / (2*3*4)
  CHECK(std::exp(inverse_bosonic().log_factorial_product(5)) == doctest::Approx(1.0 / 120));
  CHECK(std::exp(hydrogen().log_factorial_product(3)) == doctest::Approx(std::sqrt(60.0) / 24.0));
  CHECK(std::exp(unit().log_factorial_product(40)) == doctest::Approx(1.0));
}

TEST_CASE("user functions fall back to summation") {
  const NonlinearityFunction g("sq", [](long n) { return 1.0 + 1.0 / static_cast<double>(n * n); });
  CHECK_FALSE(g.has_closed_form());
  CHECK(g.log_factorial_product(2) == doctest::Approx(std::log(2.0 * 1.25)));
}

TEST_CASE("generalized inverse is an involution") {
  for (const auto& name : builtin_names()) {
    const auto F = builtin(name, 1.5);
    const auto G = generalized_inverse(generalized_inverse(F));
    for (long n = 1; n <= 100; ++n) CHECK(G(n) == doctest::Approx(F(n)).epsilon(1e-14));
    const auto inv = generalized_inverse(F);
    CHECK(inv.log_factorial_product(20) ==
          doctest::Approx(-std::lgamma(21.0) - F.log_factorial_product(20)).epsilon(1e-12));
  }
}

TEST_CASE("su11 at kappa 1/2 is the harmonious function") {
  const auto s = su11(0.5);
  const auto h = harmonious();
  for (long n = 1; n <= 50; ++n) CHECK(s(n) == doctest::Approx(h(n)).epsilon(1e-15));
}

TEST_CASE("spectrum terms") {
  const auto H = hydrogen();
  CHECK(spectrum_term(H, SeriesKind::nlcs, 0) == 0.0);
  CHECK(spectrum_term(H, SeriesKind::nlcs, 2) == doctest::Approx(2.0 * 4.0 / 9.0));
  CHECK(spectrum_term(H, SeriesKind::inverse, 2) == doctest::Approx(9.0 / 8.0));
  CHECK(spectrum_term(H, SeriesKind::dual, 2) == doctest::Approx(8.0 * 4.0 / 9.0));
}

TEST_CASE("radius of convergence") {
  const auto check = [](const NonlinearityFunction& f, SeriesKind kind, RadiusVerdict verdict,
                        double radius) {
    const auto r = radius_of_convergence(f, kind);
    CHECK(r.verdict == verdict);
    if (verdict == RadiusVerdict::finite) CHECK(r.radius == doctest::Approx(radius).epsilon(1e-5));
  };
  check(inverse_bosonic(), SeriesKind::nlcs, RadiusVerdict::zero, 0.0);
  check(unit(), SeriesKind::nlcs, RadiusVerdict::infinite, 0.0);
  check(hydrogen(), SeriesKind::inverse, RadiusVerdict::finite, 1.0);
  check(hydrogen(), SeriesKind::dual, RadiusVerdict::infinite, 0.0);
  check(hydrogen(), SeriesKind::nlcs, RadiusVerdict::finite, 1.0);
  check(harmonious(), SeriesKind::nlcs, RadiusVerdict::finite, 1.0);
  check(su11(3.0), SeriesKind::inverse, RadiusVerdict::finite, 1.0);
  check(unit(), SeriesKind::inverse, RadiusVerdict::zero, 0.0);
  // e_n = 4 n f^2 -> 4 for f = 2/sqrt(n)
  check(NonlinearityFunction("two", [](long n) { return 2.0 / std::sqrt(static_cast<double>(n)); }),
        SeriesKind::nlcs, RadiusVerdict::finite, 2.0);
}

TEST_CASE("an oscillating spectrum has no radius") {
  const NonlinearityFunction osc("osc", [](long n) {
    return (n % 2 ? 1.0 : 2.0) / std::sqrt(static_cast<double>(n));
  });
  CHECK_THROWS_AS(radius_of_convergence(osc, SeriesKind::nlcs), NonConvergentProbe);
}

TEST_CASE("invalid functions and names") {
  CHECK_THROWS_AS(NonlinearityFunction("neg", [](long) { return -1.0; }), InvalidParameter);
  CHECK_THROWS_AS(NonlinearityFunction("nan", [](long) { return std::numeric_limits<double>::quiet_NaN(); }),
                  InvalidParameter);
  CHECK_THROWS_AS(su11(0.4), InvalidParameter);
  CHECK_THROWS_AS(builtin("coulomb"), UnknownName);
  CHECK(builtin("1/n").name() == inverse_bosonic().name());
  CHECK(series_kind_from_string("direct") == SeriesKind::inverse);
}
