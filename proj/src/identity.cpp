#include "invcs/identity.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "invcs/errors.hpp"
#include "invcs/quadrature.hpp"

namespace invcs {

std::string_view to_string(MomentConvention convention) {
  return convention == MomentConvention::plain ? "plain" : "pi";
}

double moment_target(const NonlinearityFunction& f, SeriesKind kind, int n) {
  if (n < 0) throw InvalidParameter("moment order must be non-negative");
  if (n == 0) return 0.0;
  const double lf = std::lgamma(n + 1.0);
  const double lp = f.log_factorial_product(n);
  switch (kind) {
    case SeriesKind::nlcs: return lf + 2.0 * lp;      // [n f^2]!
    case SeriesKind::inverse: return -lf - 2.0 * lp;  // [1/(n F^2)]!
    case SeriesKind::dual: return 3.0 * lf + 2.0 * lp;  // [n^3 F^2]!
  }
  return 0.0;
}

double harmonious_dual_density(double x) { return 2.0 * std::cyl_bessel_k(0.0, 2.0 * std::sqrt(x)); }

namespace {

constexpr double kTailCutoff = 1e-18;
constexpr double kMaxDomain = 1e12;
constexpr double kInternalTolerance = 1e-12;

/// x* such that weight(x*) x*^{n_max} < 1e-18 times the integral accumulated up to x*.
double infinite_domain_cutoff(const std::function<double(double)>& weight, int n_max) {
  auto moment = [&](double x) { return weight(x) * std::pow(x, n_max); };
  double upper = 1.0;
  double accumulated = quadrature::gauss_kronrod(moment, 0.0, upper, kInternalTolerance).value;
  while (!(moment(upper) < kTailCutoff * accumulated)) {
    if (upper > kMaxDomain)
      throw QuadratureFailure("weight does not decay fast enough to truncate the domain");
    accumulated += quadrature::gauss_kronrod(moment, upper, 2.0 * upper, kInternalTolerance).value;
    upper *= 2.0;
  }
  return upper;
}

}  // namespace

WeightReport verify_weight(const std::function<double(double)>& weight, const NonlinearityFunction& f,
                           SeriesKind kind, int n_max) {
  if (n_max < 0 || n_max > kMaxMomentOrder)
    throw InvalidParameter("moment order n_max must be in 0.." + std::to_string(kMaxMomentOrder));

  WeightReport report;
  report.domain = radius_of_convergence(f, kind);
  if (report.domain.verdict == RadiusVerdict::zero) {
    report.supported = false;
    return report;
  }

  const bool infinite = report.domain.verdict == RadiusVerdict::infinite;
  const double upper = infinite ? infinite_domain_cutoff(weight, n_max)
                                : report.domain.radius * report.domain.radius;

  for (int n = 0; n <= n_max; ++n) {
    auto integrand = [&](double x) { return weight(x) * std::pow(x, n); };
    const auto q = quadrature::gauss_kronrod(integrand, 0.0, upper, kInternalTolerance, 0.0, 20000);
    if (!(q.error <= kQuadratureTolerance * std::abs(q.value))) {
      throw QuadratureFailure("moment n=" + std::to_string(n) + " reached relative error " +
                              std::to_string(q.error / std::abs(q.value)) + " only");
    }
    MomentCheck check;
    check.n = n;
    check.log_target = moment_target(f, kind, n);
    check.integral = q.value;
    check.radius = report.domain.radius;
    report.checks.push_back(check);
  }

  const double target0 = std::exp(report.checks.front().log_target);
  auto rel = [](double value, double target) { return std::abs(value - target) / std::abs(target); };
  const double plain0 = rel(report.checks.front().integral, target0);
  const double pi0 = rel(std::numbers::pi * report.checks.front().integral, target0);
  report.convention = plain0 <= pi0 ? MomentConvention::plain : MomentConvention::pi_prefactor;

  for (auto& check : report.checks) {
    const double target = std::exp(check.log_target);
    const double e_plain = rel(check.integral, target);
    const double e_pi = rel(std::numbers::pi * check.integral, target);
    check.convention = report.convention;
    check.rel_error = report.convention == MomentConvention::plain ? e_plain : e_pi;
    check.rel_error_other = report.convention == MomentConvention::plain ? e_pi : e_plain;
  }
  return report;
}

}  // namespace invcs
