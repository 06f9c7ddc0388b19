#pragma once

#include <complex>
#include <optional>
#include <string_view>

#include "invcs/fock.hpp"
#include "invcs/nonlinearity.hpp"

namespace invcs {

enum class FamilyKind {
  standard_cs,
  nlcs,
  inverse_state,
  dual_inverse_state,
  inverse_bosonic_eigenstate,
  dual_inverse_bosonic,
  gp_su11,
  su11_inverse,
  photon_added,
  photon_subtracted,
};

std::string_view to_string(FamilyKind kind);
/// Accepts the CLI spellings (dual-inverse, gp-su11, ...) and the enum names.
FamilyKind family_kind_from_string(std::string_view name);

/// Tail targets applied when a truncation is chosen.
inline constexpr double kLastTermRatio = 1e-14;
inline constexpr double kTailTarget = 1e-12;
inline constexpr long kMaxTruncation = 4096;
inline constexpr long kMinTruncation = 8;
/// Consecutive growing terms that declare a normalization series divergent.
inline constexpr int kDivergenceRun = 50;
/// Relative band around a numerically estimated radius treated as outside the disk.
inline constexpr double kBoundaryBand = 1e-6;

/// Either a fixed window N or automatic growth up to kMaxTruncation.
struct Truncation {
  std::optional<long> fixed;

  static Truncation automatic() { return {}; }
  static Truncation at(long n) { return {n}; }
};

struct StateFamily {
  FamilyKind kind = FamilyKind::standard_cs;
  /// Nonlinearity for nlcs / inverse_state / dual_inverse_state.
  std::optional<NonlinearityFunction> f;
  std::complex<double> z{0.0, 0.0};
  double kappa = 0.5;
  int m = 0;
  Truncation truncation;
};

struct Construction {
  FockVectord state;
  /// ln of sum_n |c_n|^2 over the unnormalized expansion (the family's N(|z|^2)).
  double log_norm = 0.0;
  ConvergenceReport domain;
};

/// Disk of convergence for the family described by `family` (z is ignored).
ConvergenceReport family_domain(const StateFamily& family);

/// Builds the normalized expansion. Throws DomainError, DivergentNormalization
/// or TruncationError as appropriate.
Construction construct(const StateFamily& family);

// Named constructors. All return normalized vectors.
FockVectord standard_cs(std::complex<double> z, Truncation t = {});
FockVectord nlcs(const NonlinearityFunction& f, std::complex<double> z, Truncation t = {});
FockVectord inverse_state(const NonlinearityFunction& F, std::complex<double> z, Truncation t = {});
FockVectord dual_inverse_state(const NonlinearityFunction& F, std::complex<double> z,
                               Truncation t = {});
FockVectord inverse_bosonic_eigenstate(std::complex<double> z, Truncation t = {});
FockVectord dual_inverse_bosonic(std::complex<double> z, Truncation t = {});
FockVectord gp_su11(std::complex<double> z, double kappa, Truncation t = {});
FockVectord su11_inverse(std::complex<double> z, double kappa, Truncation t = {});
FockVectord photon_added(std::complex<double> z, int m, Truncation t = {});
FockVectord photon_subtracted(std::complex<double> z, int m, Truncation t = {});

enum class InverseOnCs { a_inv, a_dag_inv };

/// Unnormalized image of the standard coherent state under a^{-1} or a^dag^{-1}.
FockVectord inverse_operator_on_cs(InverseOnCs which, std::complex<double> z, Truncation t = {});

/// || op v - z v || over indices 0..N-1; the top index is left out because
/// lowering operators read c_{N+1} there.
double eigen_residual(const ShiftOperatord& op, const FockVectord& v, std::complex<double> z);

}  // namespace invcs
