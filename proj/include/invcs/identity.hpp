#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "invcs/nonlinearity.hpp"

namespace invcs {

/// Whether the moment condition carries the pi in front of the integral.
enum class MomentConvention { plain, pi_prefactor };

std::string_view to_string(MomentConvention convention);

struct MomentCheck {
  int n = 0;
  /// ln of the factorial-product target.
  double log_target = 0.0;
  /// Integral of weight(x) x^n over (0, R) with R = radius^2.
  double integral = 0.0;
  /// |c I - target| / target in the convention fixed by n = 0 (c = 1 or pi).
  double rel_error = 0.0;
  /// Same, in the other convention.
  double rel_error_other = 0.0;
  /// Radius of the disk in |z| (R in x = |z|^2 is its square).
  double radius = 0.0;
  MomentConvention convention = MomentConvention::plain;
};

struct WeightReport {
  /// False when the radius of convergence is 0: no quadrature is attempted.
  bool supported = true;
  MomentConvention convention = MomentConvention::plain;
  ConvergenceReport domain;
  std::vector<MomentCheck> checks;
};

/// ln of the identity-resolution moment target prod_{k<=n} e_k (see SeriesKind);
/// 0 for n = 0.
double moment_target(const NonlinearityFunction& f, SeriesKind kind, int n);

inline constexpr int kMaxMomentOrder = 15;
inline constexpr double kQuadratureTolerance = 1e-8;

/// Integrates weight(x) x^n for n = 0..n_max over the family's x-domain and
/// compares each moment against its target with and without the pi prefactor.
/// The convention is the one that fits n = 0 better. Throws QuadratureFailure
/// if an integral cannot be pinned to relative 1e-8, InvalidParameter for
/// n_max outside 0..15.
WeightReport verify_weight(const std::function<double(double)>& weight,
                           const NonlinearityFunction& f, SeriesKind kind, int n_max);

/// 2 K_0(2 sqrt(x)): the density that resolves the identity for the dual
/// harmonious states.
double harmonious_dual_density(double x);

}  // namespace invcs
