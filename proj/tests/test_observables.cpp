#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "invcs/errors.hpp"
#include "invcs/observables.hpp"
#include "invcs/states.hpp"

using namespace invcs;
using cd = std::complex<double>;

namespace {

struct Expected {
  double q, var_x, var_p, mean_n;
};

void check_report(const FockVectord& v, const Expected& e, double tol = 1e-10) {
  const auto r = quadrature_report(v);
  CHECK(r.mandel_q == doctest::Approx(e.q).epsilon(tol));
  CHECK(r.var_x == doctest::Approx(e.var_x).epsilon(tol));
  CHECK(r.var_p == doctest::Approx(e.var_p).epsilon(tol));
  CHECK(r.mean_n == doctest::Approx(e.mean_n).epsilon(tol));
}

}  // namespace

TEST_CASE("vacuum") {
  const auto r = quadrature_report(standard_cs(0.0));
  CHECK(std::isnan(r.mandel_q));
  CHECK(r.var_x == doctest::Approx(kVacuumVariance));
  CHECK(r.var_p == doctest::Approx(kVacuumVariance));
  CHECK_THROWS_AS(mandel_q(standard_cs(0.0)), VacuumState);
}

TEST_CASE("number states") {
  for (long n = 1; n <= 6; ++n) {
    const auto r = quadrature_report(basis(n, 10));
    CHECK(r.mandel_q == doctest::Approx(-1.0));
    CHECK(r.var_x == doctest::Approx(n + 0.5));
    CHECK(r.var_p == doctest::Approx(n + 0.5));
  }
}

TEST_CASE("coherent states are Poissonian") {
  const auto r = quadrature_report(standard_cs(cd{1.1, -0.7}));
  CHECK(std::abs(r.mandel_q) < 1e-12);
  CHECK(r.mean_n == doctest::Approx(1.7));
  CHECK(r.mean_x == doctest::Approx(1.1 * std::numbers::sqrt2));
  CHECK(r.mean_p == doctest::Approx(-0.7 * std::numbers::sqrt2));
  CHECK(r.var_x == doctest::Approx(0.5));
}

TEST_CASE("photon distribution sums to one") {
  const auto p = photon_distribution(dual_inverse_state(hydrogen(), cd{2.0, 1.0}));
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((p.array() >= 0.0).all());
}

// Extended-precision series values (40 digits), frozen.
TEST_CASE("reference values") {
  check_report(dual_inverse_bosonic(1.0),
               {-0.3731698885562330666, 0.3620064574147979796, 0.77556144437281412773, 0.59359517177300933311});
  check_report(inverse_state(hydrogen(), 0.5),
               {0.34645607374065890758, 0.63265460377634867571, 0.39602360419464100927, 0.25242911936214821524});
  check_report(inverse_state(hydrogen(), cd{0.3, 0.4}),
               {0.34645607374065890758, 0.48121076404405576919, 0.54746744392693391579, 0.25242911936214821524});
  check_report(dual_inverse_state(hydrogen(), 20.0),
               {-0.4947195636202101249, 0.26105813144816612288, 0.98348962377994764894, 19.771537598829348774}, 1e-9);
  check_report(dual_inverse_state(hydrogen(), cd{1.2, -1.6}),
               {-0.45562061371981026531, 0.67843842536081531632, 0.5289545570049443585, 1.8392953503563446644});
  check_report(photon_added(1.0, 1), {-0.5, 0.5, 1.0, 2.5});
  check_report(photon_added(cd{0.5, 0.5}, 2),
               {-0.72156862745098039216, 1.2197231833910034602, 1.2197231833910034602, 3.0882352941176470588});
  check_report(photon_subtracted(0.7, 2),
               {0.070961338882783877552, 0.52860989004618826147, 0.47294420922445367369, 0.05836337298696258421});
  check_report(su11_inverse(cd{0.0, 0.6}, 1.0),
               {0.46224375074968733749, 0.37963283314580093658, 0.66237202020957451528, 0.26039940811002962756});
  check_report(gp_su11(0.5, 1.5),
               {0.33333333333333333333, 0.65427471982252412718, 0.38235667119128541779, 1.0});
}

TEST_CASE("Q and <n> do not depend on the phase of z") {
  const auto base = quadrature_report(dual_inverse_state(su11(1.0), 1.5));
  for (int k = 1; k < 8; ++k) {
    const auto r = quadrature_report(dual_inverse_state(su11(1.0), std::polar(1.5, 0.7 * k)));
    CHECK(r.mandel_q == doctest::Approx(base.mandel_q).epsilon(1e-12));
    CHECK(r.mean_n == doctest::Approx(base.mean_n).epsilon(1e-12));
    // x and p rotate into each other; their sum is invariant.
    CHECK(r.var_x + r.var_p == doctest::Approx(base.var_x + base.var_p).epsilon(1e-12));
  }
}

TEST_CASE("uncertainty relation") {
  for (const auto& v : {inverse_state(hydrogen(), 0.9), dual_inverse_state(hydrogen(), 3.0), su11_inverse(0.7, 0.5),
                        photon_subtracted(cd{0.3, 0.9}, 1), gp_su11(cd{0.2, 0.6}, 1.0)}) {
    const auto r = quadrature_report(v);
    CHECK(r.var_x * r.var_p >= 0.25 - 1e-12);
    CHECK(r.mandel_q >= -1.0 - 1e-12);
  }
}

TEST_CASE("long double evaluation agrees") {
  const auto v = dual_inverse_state(hydrogen(), cd{2.5, -0.5});
  FockVector<long double> w(v.truncation());
  w.coeffs = v.coeffs.cast<std::complex<long double>>();
  const auto a = quadrature_report(v);
  const auto b = quadrature_report(w);
  CHECK(a.mandel_q == doctest::Approx(static_cast<double>(b.mandel_q)).epsilon(1e-12));
  CHECK(a.var_x == doctest::Approx(static_cast<double>(b.var_x)).epsilon(1e-12));
  CHECK(a.var_p == doctest::Approx(static_cast<double>(b.var_p)).epsilon(1e-12));
}
