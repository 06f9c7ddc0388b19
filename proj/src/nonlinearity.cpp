#include "invcs/nonlinearity.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "invcs/errors.hpp"

namespace invcs {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::nlcs: return "nlcs";
    case SeriesKind::inverse: return "inverse";
    case SeriesKind::dual: return "dual";
  }
  return "?";
}

SeriesKind series_kind_from_string(std::string_view name) {
  if (name == "nlcs") return SeriesKind::nlcs;
  if (name == "inverse" || name == "direct") return SeriesKind::inverse;
  if (name == "dual") return SeriesKind::dual;
  throw UnknownName("unknown series kind '" + std::string(name) + "'");
}

std::string_view to_string(RadiusVerdict verdict) {
  switch (verdict) {
    case RadiusVerdict::zero: return "zero";
    case RadiusVerdict::finite: return "finite";
    case RadiusVerdict::infinite: return "infinite";
  }
  return "?";
}

NonlinearityFunction::NonlinearityFunction(std::string name, Eval eval, std::vector<double> params,
                                           LogProduct log_product)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      params_(std::move(params)),
      log_product_(std::move(log_product)) {
  if (!eval_) throw InvalidParameter("nonlinearity '" + name_ + "' has no evaluator");
  // Spot check the positivity invariant on the low end where every series starts.
  for (long n = 1; n <= 64; ++n) {
    const double v = eval_(n);
    if (!(v > 0.0) || !std::isfinite(v))
      throw InvalidParameter("nonlinearity '" + name_ + "' is not finite and positive at n=" +
                             std::to_string(n));
  }
}

double NonlinearityFunction::log_factorial_product(long n) const {
  if (n <= 0) return 0.0;
  if (log_product_) return log_product_(n);
  double acc = 0.0;
  for (long k = 1; k <= n; ++k) acc += std::log(eval_(k));
  return acc;
}

double log_factorial_product(const NonlinearityFunction& f, long n) {
  return f.log_factorial_product(n);
}

NonlinearityFunction generalized_inverse(const NonlinearityFunction& f) {
  NonlinearityFunction::LogProduct log_product;
  if (f.has_closed_form()) {
    log_product = [f](long n) { return -std::lgamma(n + 1.0) - f.log_factorial_product(n); };
  }
  return NonlinearityFunction(
      "inverse(" + f.name() + ")",
      [f](long n) { return 1.0 / (static_cast<double>(n) * f(n)); }, f.params(),
      std::move(log_product));
}

NonlinearityFunction unit() {
  return NonlinearityFunction("unit", [](long) { return 1.0; }, {}, [](long) { return 0.0; });
}

NonlinearityFunction inverse_bosonic() {
  return NonlinearityFunction(
      "inverse_bosonic", [](long n) { return 1.0 / static_cast<double>(n); }, {},
      [](long n) { return -std::lgamma(n + 1.0); });
}

NonlinearityFunction hydrogen() {
  return NonlinearityFunction(
      "hydrogen",
      [](long n) { return std::sqrt(n + 2.0) / (n + 1.0); }, {},
      // prod sqrt(k+2)/(k+1) = sqrt((n+2)!/2) / (n+1)!
      [](long n) { return 0.5 * (std::lgamma(n + 3.0) - std::log(2.0)) - std::lgamma(n + 2.0); });
}

NonlinearityFunction harmonious() {
  return NonlinearityFunction(
      "harmonious", [](long n) { return 1.0 / std::sqrt(static_cast<double>(n)); }, {},
      [](long n) { return -0.5 * std::lgamma(n + 1.0); });
}

NonlinearityFunction su11(double kappa) {
  if (!(kappa >= 0.5) || !std::isfinite(kappa))
    throw InvalidParameter("su11 requires kappa >= 1/2, got " + std::to_string(kappa));
  const double two_k = 2.0 * kappa;
  return NonlinearityFunction(
      "su11", [two_k](long n) { return 1.0 / std::sqrt(n + two_k - 1.0); }, {kappa},
      [two_k](long n) { return -0.5 * (std::lgamma(n + two_k) - std::lgamma(two_k)); });
}

NonlinearityFunction builtin(std::string_view name, double kappa) {
  if (name == "unit") return unit();
  if (name == "inverse_bosonic" || name == "inverse-bosonic" || name == "1/n") return inverse_bosonic();
  if (name == "hydrogen") return hydrogen();
  if (name == "harmonious") return harmonious();
  if (name == "su11") return su11(kappa);
  throw UnknownName("unknown nonlinearity '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"unit", "inverse_bosonic", "hydrogen", "harmonious", "su11"};
}

double spectrum_term(const NonlinearityFunction& f, SeriesKind kind, long n) {
  if (n <= 0) return 0.0;
  const double nd = static_cast<double>(n);
  const double fn = f(n);
  switch (kind) {
    case SeriesKind::nlcs: return nd * fn * fn;
    case SeriesKind::inverse: return 1.0 / (nd * fn * fn);
    case SeriesKind::dual: return nd * nd * nd * fn * fn;
  }
  return 0.0;
}

namespace {

constexpr int kProbeLevels = 11;  // n = 1000 * 2^k, up to 1'024'000
constexpr double kProbeTolerance = 1e-6;
constexpr double kSlopeThreshold = 0.25;

using Probe = std::array<double, kProbeLevels>;

struct Classified {
  RadiusVerdict verdict;
  double limit;
};

std::optional<Classified> classify(const Probe& p) {
  constexpr int last = kProbeLevels - 1;
  for (double v : p) {
    if (std::isinf(v)) return Classified{RadiusVerdict::infinite, v};
    if (std::isnan(v)) return std::nullopt;
  }
  if (p[last] == 0.0) return Classified{RadiusVerdict::zero, 0.0};

  // Settled: raw sequence or its Richardson extrapolation (assuming a 1/n approach).
  if (std::abs(p[last] - p[last - 1]) <= kProbeTolerance * std::abs(p[last]))
    return Classified{RadiusVerdict::finite, p[last]};
  const double r1 = 2.0 * p[last] - p[last - 1];
  const double r0 = 2.0 * p[last - 1] - p[last - 2];
  if (std::abs(r1 - r0) <= kProbeTolerance * std::abs(r1) && r1 > 0.0)
    return Classified{RadiusVerdict::finite, r1};

  const double s1 = std::log2(p[last] / p[last - 1]);
  const double s0 = std::log2(p[last - 1] / p[last - 2]);
  if (s1 > kSlopeThreshold && s0 > kSlopeThreshold)
    return Classified{RadiusVerdict::infinite, p[last]};
  if (s1 < -kSlopeThreshold && s0 < -kSlopeThreshold)
    return Classified{RadiusVerdict::zero, p[last]};
  return std::nullopt;
}

}  // namespace

ConvergenceReport radius_of_convergence(const NonlinearityFunction& f, SeriesKind kind) {
  Probe even{};
  Probe odd{};
  for (int k = 0; k < kProbeLevels; ++k) {
    const long n = 1000L << k;
    even[k] = spectrum_term(f, kind, n);
    odd[k] = spectrum_term(f, kind, n + 1);
  }

  ConvergenceReport report;
  constexpr int last = kProbeLevels - 1;
  report.sequence_probe = {even[last - 1], odd[last - 1], even[last], odd[last]};

  const auto a = classify(even);
  const auto b = classify(odd);
  const std::string what = "radius probe for " + f.name() + " (" + std::string(to_string(kind)) + ")";
  if (!a || !b || a->verdict != b->verdict)
    throw NonConvergentProbe(what + " did not settle");

  report.verdict = a->verdict;
  switch (report.verdict) {
    case RadiusVerdict::zero: report.radius = 0.0; break;
    case RadiusVerdict::infinite: report.radius = std::numeric_limits<double>::infinity(); break;
    case RadiusVerdict::finite: {
      if (std::abs(a->limit - b->limit) > kProbeTolerance * std::abs(a->limit))
        throw NonConvergentProbe(what + " oscillates between two limits");
      report.radius = std::sqrt(a->limit);
      break;
    }
  }
  return report;
}

}  // namespace invcs
