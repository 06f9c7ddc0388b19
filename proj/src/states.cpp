#include "invcs/states.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "invcs/errors.hpp"

namespace invcs {

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::standard_cs: return "standard-cs";
    case FamilyKind::nlcs: return "nlcs";
    case FamilyKind::inverse_state: return "inverse";
    case FamilyKind::dual_inverse_state: return "dual-inverse";
    case FamilyKind::inverse_bosonic_eigenstate: return "inverse-bosonic-eigenstate";
    case FamilyKind::dual_inverse_bosonic: return "dual-inverse-bosonic";
    case FamilyKind::gp_su11: return "gp-su11";
    case FamilyKind::su11_inverse: return "su11-inverse";
    case FamilyKind::photon_added: return "photon-added";
    case FamilyKind::photon_subtracted: return "photon-subtracted";
  }
  return "?";
}

FamilyKind family_kind_from_string(std::string_view name) {
  std::string key(name);
  for (char& c : key)
    if (c == '_') c = '-';
  if (key == "standard-cs") return FamilyKind::standard_cs;
  if (key == "nlcs") return FamilyKind::nlcs;
  if (key == "inverse" || key == "inverse-state") return FamilyKind::inverse_state;
  if (key == "dual-inverse" || key == "dual-inverse-state") return FamilyKind::dual_inverse_state;
  if (key == "inverse-bosonic-eigenstate") return FamilyKind::inverse_bosonic_eigenstate;
  if (key == "dual-inverse-bosonic") return FamilyKind::dual_inverse_bosonic;
  if (key == "gp-su11") return FamilyKind::gp_su11;
  if (key == "su11-inverse") return FamilyKind::su11_inverse;
  if (key == "photon-added") return FamilyKind::photon_added;
  if (key == "photon-subtracted") return FamilyKind::photon_subtracted;
  throw UnknownName("unknown state family '" + std::string(name) + "'");
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr long kDivergenceProbeLimit = 10'000'000;

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double lfact(long n) { return std::lgamma(n + 1.0); }

/// Coefficient law c_n = z^{n - offset} exp(log_weight(n)) for n >= offset.
struct Series {
  std::function<double(long)> log_weight;
  long offset = 0;
  ConvergenceReport domain;
};

ConvergenceReport whole_plane() {
  ConvergenceReport r;
  r.verdict = RadiusVerdict::infinite;
  r.radius = std::numeric_limits<double>::infinity();
  return r;
}

const NonlinearityFunction& require_f(const StateFamily& family) {
  if (!family.f)
    throw InvalidParameter(std::string(to_string(family.kind)) + " needs a nonlinearity function");
  return *family.f;
}

Series describe(const StateFamily& family) {
  switch (family.kind) {
    case FamilyKind::standard_cs:
      return {[](long n) { return -0.5 * lfact(n); }, 0, whole_plane()};
    case FamilyKind::nlcs: {
      const auto& f = require_f(family);
      return {[f](long n) { return -0.5 * lfact(n) - f.log_factorial_product(n); }, 0,
              radius_of_convergence(f, SeriesKind::nlcs)};
    }
    case FamilyKind::inverse_state: {
      const auto& F = require_f(family);
      return {[F](long n) { return 0.5 * lfact(n) + F.log_factorial_product(n); }, 0,
              radius_of_convergence(F, SeriesKind::inverse)};
    }
    case FamilyKind::dual_inverse_state: {
      const auto& F = require_f(family);
      return {[F](long n) { return -1.5 * lfact(n) - F.log_factorial_product(n); }, 0,
              radius_of_convergence(F, SeriesKind::dual)};
    }
    case FamilyKind::inverse_bosonic_eigenstate: {
      StateFamily inner = family;
      inner.kind = FamilyKind::inverse_state;
      inner.f = unit();
      return describe(inner);
    }
    case FamilyKind::dual_inverse_bosonic: {
      StateFamily inner = family;
      inner.kind = FamilyKind::dual_inverse_state;
      inner.f = unit();
      return describe(inner);
    }
    case FamilyKind::gp_su11: {
      const auto F = su11(family.kappa);
      const double two_k = 2.0 * family.kappa;
      return {[two_k](long n) { return 0.5 * (std::lgamma(n + two_k) - lfact(n)); }, 0,
              radius_of_convergence(F, SeriesKind::nlcs)};
    }
    case FamilyKind::su11_inverse: {
      // sqrt(n! / Gamma(n + 2k)): the constant Gamma(2k) is left out so that the
      // normalization is 2F1(1,1;2k;|z|^2) / Gamma(2k).
      const auto F = su11(family.kappa);
      const double two_k = 2.0 * family.kappa;
      return {[two_k](long n) { return 0.5 * (lfact(n) - std::lgamma(n + two_k)); }, 0,
              radius_of_convergence(F, SeriesKind::inverse)};
    }
    case FamilyKind::photon_added: {
      if (family.m < 0) throw InvalidParameter("photon-added needs m >= 0");
      const long m = family.m;
      // a^dag^m |z>: z^{n-m} sqrt(n!) / (n-m)!
      return {[m](long n) { return 0.5 * lfact(n) - lfact(n - m); }, m, whole_plane()};
    }
    case FamilyKind::photon_subtracted: {
      if (family.m < 0) throw InvalidParameter("photon-subtracted needs m >= 0");
      const long m = family.m;
      // a^dag^{-m} a^{-m} is diagonal: |n> -> n!/(n+m)! |n>.
      return {[m](long n) { return 0.5 * lfact(n) - lfact(n + m); }, 0, whole_plane()};
    }
  }
  throw InvalidParameter("unhandled state family");
}

std::string format_radius(double r) {
  std::ostringstream os;
  os.precision(6);
  os << r;
  return os.str();
}

[[noreturn]] void report_divergence(const Series& s, double abs_z, std::string_view label) {
  const double ln_r = std::log(abs_z);
  auto log_term = [&](long n) { return 2.0 * ((n - s.offset) * ln_r + s.log_weight(n)); };
  int run = 0;
  double prev = log_term(s.offset);
  for (long n = s.offset + 1; n <= s.offset + kDivergenceProbeLimit; ++n) {
    const double cur = log_term(n);
    run = cur > prev ? run + 1 : 0;
    prev = cur;
    if (run >= kDivergenceRun) {
      throw DivergentNormalization(std::string(label) + ": divergent normalization at |z| = " +
                                   format_radius(abs_z) + " (terms grow without bound from n = " +
                                   std::to_string(n - kDivergenceRun) +
                                   "; radius of convergence 0)");
    }
  }
  throw DivergentNormalization(std::string(label) + ": divergent normalization at |z| = " +
                               format_radius(abs_z) + " (radius of convergence 0)");
}

Construction build(const Series& s, std::complex<double> z, const Truncation& t,
                   std::string_view label) {
  const double abs_z = std::abs(z);
  const double theta = std::arg(z);
  if (s.domain.verdict == RadiusVerdict::finite && abs_z >= s.domain.radius * (1.0 - kBoundaryBand)) {
    throw DomainError(std::string(label) + ": |z| = " + format_radius(abs_z) +
                      " is outside the convergence disk of radius " +
                      format_radius(s.domain.radius));
  }
  if (s.domain.verdict == RadiusVerdict::zero && abs_z > 0.0) report_divergence(s, abs_z, label);

  const double ln_r = abs_z > 0.0 ? std::log(abs_z) : kNegInf;
  auto log_term = [&](long n) {
    if (n < s.offset) return kNegInf;
    const long p = n - s.offset;
    if (p == 0) return 2.0 * s.log_weight(n);
    if (abs_z == 0.0) return kNegInf;
    return 2.0 * (p * ln_r + s.log_weight(n));
  };
  // Smallest ratio the remaining terms can shrink by, for a finite disk.
  const double limit_ratio =
      s.domain.verdict == RadiusVerdict::finite ? (abs_z / s.domain.radius) * (abs_z / s.domain.radius)
                                                : 0.0;
  auto tail_estimate = [&](const std::vector<double>& lt, long n, double log_sum) {
    if (lt[n] == kNegInf) return 0.0;
    if (lt[n - 1] == kNegInf) return std::numeric_limits<double>::infinity();
    const double r = std::max(std::exp(lt[n] - lt[n - 1]), limit_ratio);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return std::exp(lt[n] - log_sum) * r / (1.0 - r);
  };

  std::vector<double> lt;
  double log_sum = kNegInf;
  double tail = 0.0;
  long N = 0;
  if (t.fixed) {
    N = *t.fixed;
    if (N < 1) throw InvalidParameter("truncation must be at least 1");
    lt.reserve(N + 1);
    for (long n = 0; n <= N; ++n) {
      lt.push_back(log_term(n));
      log_sum = log_add(log_sum, lt.back());
    }
    if (log_sum == kNegInf)
      throw TruncationError(std::string(label) + ": no support inside N = " + std::to_string(N));
    tail = tail_estimate(lt, N, log_sum);
    if (!(tail <= kTailTarget)) {
      throw TruncationError(std::string(label) + ": tail bound " + format_radius(tail) +
                            " exceeds " + format_radius(kTailTarget) + " at N = " + std::to_string(N));
    }
  } else {
    const double log_last = std::log(kLastTermRatio);
    const long min_n = std::max(kMinTruncation, s.offset + 1);
    for (long n = 0;; ++n) {
      if (n > kMaxTruncation) {
        throw TruncationError(std::string(label) + ": tail target not reached by N = " +
                              std::to_string(kMaxTruncation) + " at |z| = " + format_radius(abs_z));
      }
      lt.push_back(log_term(n));
      log_sum = log_add(log_sum, lt.back());
      if (n < min_n) continue;
      const double t_est = tail_estimate(lt, n, log_sum);
      if (lt[n] - log_sum < log_last && t_est < kTailTarget) {
        N = n;
        tail = t_est;
        break;
      }
    }
  }

  FockVectord v(N);
  for (long n = 0; n <= N; ++n) {
    if (lt[n] == kNegInf) continue;
    const double mag = std::exp(0.5 * (lt[n] - log_sum));
    v.coeffs(n) = std::polar(mag, static_cast<double>(n - s.offset) * theta);
  }
  v.tail_bound = tail;
  v.normalized = true;
  return {std::move(v), log_sum, s.domain};
}

}  // namespace

ConvergenceReport family_domain(const StateFamily& family) { return describe(family).domain; }

Construction construct(const StateFamily& family) {
  return build(describe(family), family.z, family.truncation, to_string(family.kind));
}

namespace {

FockVectord make(FamilyKind kind, std::complex<double> z, Truncation t,
                 std::optional<NonlinearityFunction> f = std::nullopt, double kappa = 0.5, int m = 0) {
  StateFamily family{kind, std::move(f), z, kappa, m, t};
  return construct(family).state;
}

}  // namespace

FockVectord standard_cs(std::complex<double> z, Truncation t) {
  return make(FamilyKind::standard_cs, z, t);
}

FockVectord nlcs(const NonlinearityFunction& f, std::complex<double> z, Truncation t) {
  return make(FamilyKind::nlcs, z, t, f);
}

FockVectord inverse_state(const NonlinearityFunction& F, std::complex<double> z, Truncation t) {
  return make(FamilyKind::inverse_state, z, t, F);
}

FockVectord dual_inverse_state(const NonlinearityFunction& F, std::complex<double> z, Truncation t) {
  return make(FamilyKind::dual_inverse_state, z, t, F);
}

FockVectord inverse_bosonic_eigenstate(std::complex<double> z, Truncation t) {
  return make(FamilyKind::inverse_bosonic_eigenstate, z, t);
}

FockVectord dual_inverse_bosonic(std::complex<double> z, Truncation t) {
  return make(FamilyKind::dual_inverse_bosonic, z, t);
}

FockVectord gp_su11(std::complex<double> z, double kappa, Truncation t) {
  return make(FamilyKind::gp_su11, z, t, std::nullopt, kappa);
}

FockVectord su11_inverse(std::complex<double> z, double kappa, Truncation t) {
  return make(FamilyKind::su11_inverse, z, t, std::nullopt, kappa);
}

FockVectord photon_added(std::complex<double> z, int m, Truncation t) {
  return make(FamilyKind::photon_added, z, t, std::nullopt, 0.5, m);
}

FockVectord photon_subtracted(std::complex<double> z, int m, Truncation t) {
  return make(FamilyKind::photon_subtracted, z, t, std::nullopt, 0.5, m);
}

FockVectord inverse_operator_on_cs(InverseOnCs which, std::complex<double> z, Truncation t) {
  const FockVectord cs = standard_cs(z, t);
  // One extra slot so the raising a^{-1} does not spill the top amplitude.
  const FockVectord padded = resized(cs, cs.truncation() + 1);
  const auto op = which == InverseOnCs::a_inv ? ops::inverse_annihilation() : ops::inverse_creation();
  FockVectord out = apply(op, padded);
  out.normalized = false;
  return out;
}

double eigen_residual(const ShiftOperatord& op, const FockVectord& v, std::complex<double> z) {
  const FockVectord diff = apply(op, v) - z * v;
  const Eigen::Index N = v.truncation();
  return diff.coeffs.head(N).norm();
}

}  // namespace invcs
