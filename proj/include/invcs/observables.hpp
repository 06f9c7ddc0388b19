#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <limits>

#include "invcs/errors.hpp"
#include "invcs/fock.hpp"

namespace invcs {

/// Vacuum quadrature variance with x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)).
inline constexpr double kVacuumVariance = 0.5;
/// <n> at or below which Mandel Q is reported as undefined.
inline constexpr double kVacuumMeanN = 1e-15;

template <typename Scalar>
struct ObservableReport {
  Scalar mean_n{0};
  Scalar mean_n2{0};
  /// NaN for the vacuum, where Q is 0/0.
  Scalar mandel_q{0};
  Scalar mean_x{0};
  Scalar mean_p{0};
  Scalar var_x{0};
  Scalar var_p{0};
  Scalar tail_bound{0};

  bool squeezed_x() const { return var_x < Scalar(kVacuumVariance); }
  bool squeezed_p() const { return var_p < Scalar(kVacuumVariance); }
  bool sub_poissonian() const { return mandel_q < Scalar(0); }
};

/// P(n) = |c_n|^2.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> photon_distribution(const FockVector<Scalar>& v) {
  return v.coeffs.cwiseAbs2();
}

namespace detail {

template <typename Scalar>
struct NumberMoments {
  Scalar mean;
  Scalar second;
  Scalar variance;
};

template <typename Scalar>
NumberMoments<Scalar> number_moments(const FockVector<Scalar>& v) {
  const auto p = photon_distribution(v);
  const auto n = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::LinSpaced(p.size(), Scalar(0),
                                                                     Scalar(p.size() - 1));
  const Scalar mean = p.dot(n);
  const Scalar second = p.dot(n.cwiseAbs2());
  // Centered form avoids cancellation when <n> is large.
  const Scalar variance = p.dot((n.array() - mean).square().matrix());
  return {mean, second, variance};
}

}  // namespace detail

/// Q = (<n^2> - <n>^2)/<n> - 1. Throws VacuumState when <n> <= 1e-15.
template <typename Scalar>
Scalar mandel_q(const FockVector<Scalar>& v) {
  const auto m = detail::number_moments(v);
  if (m.mean <= Scalar(kVacuumMeanN)) throw VacuumState("Mandel Q is undefined for the vacuum");
  return m.variance / m.mean - Scalar(1);
}

template <typename Scalar>
ObservableReport<Scalar> quadrature_report(const FockVector<Scalar>& v) {
  using Complex = std::complex<Scalar>;
  const Eigen::Index N = v.truncation();
  const auto& c = v.coeffs;

  Complex a{0};
  Complex a2{0};
  for (Eigen::Index n = 0; n + 1 <= N; ++n)
    a += std::conj(c(n)) * c(n + 1) * std::sqrt(Scalar(n + 1));
  for (Eigen::Index n = 0; n + 2 <= N; ++n)
    a2 += std::conj(c(n)) * c(n + 2) * std::sqrt(Scalar(n + 1) * Scalar(n + 2));

  const auto m = detail::number_moments(v);
  const Scalar sqrt2 = std::sqrt(Scalar(2));

  ObservableReport<Scalar> r;
  r.mean_n = m.mean;
  r.mean_n2 = m.second;
  r.mandel_q = m.mean > Scalar(kVacuumMeanN) ? m.variance / m.mean - Scalar(1)
                                             : std::numeric_limits<Scalar>::quiet_NaN();
  r.mean_x = sqrt2 * a.real();
  r.mean_p = sqrt2 * a.imag();
  const Scalar x2 = (Scalar(1) + Scalar(2) * m.mean + Scalar(2) * a2.real()) / Scalar(2);
  const Scalar p2 = (Scalar(1) + Scalar(2) * m.mean - Scalar(2) * a2.real()) / Scalar(2);
  r.var_x = x2 - r.mean_x * r.mean_x;
  r.var_p = p2 - r.mean_p * r.mean_p;
  r.tail_bound = v.tail_bound;
  return r;
}

}  // namespace invcs
