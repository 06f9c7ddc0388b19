#include <doctest.h>

#include <cmath>
#include <numbers>

#include "invcs/errors.hpp"
#include "invcs/identity.hpp"
#include "invcs/quadrature.hpp"

using namespace invcs;

TEST_CASE("Gauss-Kronrod on smooth and singular integrands") {
  auto r = quadrature::gauss_kronrod([](double x) { return std::exp(-x * x); }, -5.0, 5.0, 1e-13);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi) * std::erf(5.0)).epsilon(1e-13));

  r = quadrature::gauss_kronrod([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));

  r = quadrature::gauss_kronrod([](double x) { return -std::log(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.error <= 1e-12 * std::abs(r.value) + 1e-300);
}

TEST_CASE("Gauss-Kronrod reports non-convergence") {
  const auto r = quadrature::gauss_kronrod([](double x) { return std::sin(1.0 / x); }, 0.0, 1.0, 1e-14, 0.0, 10);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 10);
}

TEST_CASE("moment targets") {
  CHECK(moment_target(unit(), SeriesKind::nlcs, 0) == 0.0);
  CHECK(moment_target(unit(), SeriesKind::nlcs, 5) == doctest::Approx(std::lgamma(6.0)));
  CHECK(moment_target(harmonious(), SeriesKind::dual, 4) == doctest::Approx(2.0 * std::lgamma(5.0)));
  for (int n = 1; n <= 10; ++n) {
    const double step = moment_target(hydrogen(), SeriesKind::inverse, n) -
                        moment_target(hydrogen(), SeriesKind::inverse, n - 1);
    CHECK(step == doctest::Approx(std::log(spectrum_term(hydrogen(), SeriesKind::inverse, n))).epsilon(1e-12));
  }
}

TEST_CASE("harmonious dual weight reproduces (n!)^2") {
  const auto w = verify_weight(harmonious_dual_density, harmonious(), SeriesKind::dual, 10);
  REQUIRE(w.supported);
  CHECK(w.convention == MomentConvention::plain);
  REQUIRE(w.checks.size() == 11);
  for (const auto& c : w.checks) {
    CHECK(c.rel_error < 1e-6);
    CHECK(c.log_target == doctest::Approx(2.0 * std::lgamma(c.n + 1.0)));
    CHECK(c.rel_error_other > 0.5);
  }
}

TEST_CASE("coherent state weight needs the pi prefactor") {
  const auto w = verify_weight([](double x) { return std::exp(-x) / std::numbers::pi; }, unit(),
                               SeriesKind::nlcs, 8);
  CHECK(w.convention == MomentConvention::pi_prefactor);
  for (const auto& c : w.checks) CHECK(c.rel_error < 1e-8);
}

TEST_CASE("finite disk weight") {
  // su11(3/2) nlcs: e_n = n/(n+2), R = 1, moments n! 2/(n+2)!
  const auto w = verify_weight([](double x) { return 2.0 * (1.0 - x); }, su11(1.5), SeriesKind::nlcs, 6);
  CHECK(w.domain.finite());
  for (const auto& c : w.checks) CHECK(c.rel_error < 1e-8);
}

TEST_CASE("no weight for a zero radius") {
  const auto w = verify_weight([](double) { return 1.0; }, inverse_bosonic(), SeriesKind::nlcs, 4);
  CHECK_FALSE(w.supported);
  CHECK(w.checks.empty());
  CHECK_THROWS_AS(verify_weight(harmonious_dual_density, harmonious(), SeriesKind::dual, 16), InvalidParameter);
}

TEST_CASE("Bessel density") {
  CHECK(harmonious_dual_density(1.0) == doctest::Approx(2.0 * 0.11389387274953343).epsilon(1e-14));
}
