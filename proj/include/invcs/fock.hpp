#pragma once

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>

#include "invcs/errors.hpp"
#include "invcs/nonlinearity.hpp"

namespace invcs {

/// Truncated Fock-space vector: amplitudes c_0..c_N plus an estimate of the
/// probability weight sitting beyond the window.
template <typename Scalar>
struct FockVector {
  using Complex = std::complex<Scalar>;
  using Coeffs = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  Coeffs coeffs;
  Scalar tail_bound{0};
  bool normalized = false;

  FockVector() = default;
  explicit FockVector(Eigen::Index truncation) : coeffs(Coeffs::Zero(truncation + 1)) {}
  FockVector(Coeffs c, Scalar tail, bool is_normalized)
      : coeffs(std::move(c)), tail_bound(tail), normalized(is_normalized) {}

  Eigen::Index truncation() const { return coeffs.size() - 1; }
  Complex operator[](Eigen::Index n) const { return n < coeffs.size() ? coeffs(n) : Complex(0); }

  bool all_finite() const { return coeffs.allFinite() && std::isfinite(tail_bound) && tail_bound >= 0; }
};

using FockVectord = FockVector<double>;

/// |n> inside a window of size N + 1.
template <typename Scalar = double>
FockVector<Scalar> basis(Eigen::Index n, Eigen::Index truncation) {
  if (n < 0 || n > truncation) throw TruncationError("|" + std::to_string(n) + "> outside truncation");
  FockVector<Scalar> v(truncation);
  v.coeffs(n) = Scalar(1);
  v.normalized = true;
  return v;
}

template <typename Scalar>
Scalar norm_squared(const FockVector<Scalar>& v) {
  return v.coeffs.squaredNorm();
}

/// Sum_n conj(u_n) v_n with implicit zero padding to the larger window.
template <typename Scalar>
std::complex<Scalar> inner(const FockVector<Scalar>& u, const FockVector<Scalar>& v) {
  const Eigen::Index len = std::min(u.coeffs.size(), v.coeffs.size());
  return u.coeffs.head(len).dot(v.coeffs.head(len));
}

template <typename Scalar>
FockVector<Scalar> operator+(const FockVector<Scalar>& u, const FockVector<Scalar>& v) {
  const Eigen::Index len = std::max(u.coeffs.size(), v.coeffs.size());
  typename FockVector<Scalar>::Coeffs c = FockVector<Scalar>::Coeffs::Zero(len);
  c.head(u.coeffs.size()) += u.coeffs;
  c.head(v.coeffs.size()) += v.coeffs;
  return {std::move(c), u.tail_bound + v.tail_bound, false};
}

template <typename Scalar>
FockVector<Scalar> operator-(const FockVector<Scalar>& u, const FockVector<Scalar>& v) {
  return u + std::complex<Scalar>(-1) * v;
}

template <typename Scalar>
FockVector<Scalar> operator*(std::complex<Scalar> alpha, const FockVector<Scalar>& v) {
  return {alpha * v.coeffs, std::norm(alpha) * v.tail_bound, false};
}

template <typename Scalar>
FockVector<Scalar> resized(const FockVector<Scalar>& v, Eigen::Index truncation) {
  typename FockVector<Scalar>::Coeffs c = FockVector<Scalar>::Coeffs::Zero(truncation + 1);
  const Eigen::Index keep = std::min(c.size(), v.coeffs.size());
  c.head(keep) = v.coeffs.head(keep);
  Scalar tail = v.tail_bound;
  if (keep < v.coeffs.size()) tail += v.coeffs.tail(v.coeffs.size() - keep).squaredNorm();
  return {std::move(c), tail, false};
}

/// One-off-diagonal ladder operator: O|n> = g(n) |n + shift>, shift in {-1, 0, +1}.
/// For shift = -1 the weight at n = 0 is never read, so O|0> = 0.
template <typename Scalar>
struct ShiftOperator {
  int shift = 0;
  std::function<Scalar(long)> weight;
  std::string name;

  Scalar operator()(long n) const { return weight(n); }
};

using ShiftOperatord = ShiftOperator<double>;

/// (O v)_m = g(m - shift) c_{m - shift}. Amplitude pushed above N is added to
/// tail_bound; the incoming tail is scaled by the operator's weight at the edge.
template <typename Scalar>
FockVector<Scalar> apply(const ShiftOperator<Scalar>& op, const FockVector<Scalar>& v) {
  const Eigen::Index N = v.truncation();
  FockVector<Scalar> out(N);
  for (Eigen::Index m = 0; m <= N; ++m) {
    const Eigen::Index n = m - op.shift;
    if (n < 0 || n > N) continue;
    out.coeffs(m) = op(static_cast<long>(n)) * v.coeffs(n);
  }
  Scalar spill{0};
  if (op.shift > 0) spill = std::norm(op(static_cast<long>(N)) * v.coeffs(N));
  using std::abs;
  using std::max;
  const Scalar edge = max(abs(op(static_cast<long>(N))), abs(op(static_cast<long>(N + 1))));
  out.tail_bound = edge * edge * v.tail_bound + spill;
  return out;
}

/// Mirrored shift and weight: O^dag |k> = g(k - shift) |k - shift>.
template <typename Scalar>
ShiftOperator<Scalar> adjoint(const ShiftOperator<Scalar>& op) {
  const int s = op.shift;
  auto g = op.weight;
  return {-s,
          [g, s](long k) { return k - s < 0 ? Scalar(0) : g(k - s); },
          op.name + "^dag"};
}

/// (op1 op2 - op2 op1)|n> evaluated at truncation N; needs n <= N - 2.
template <typename Scalar>
FockVector<Scalar> commutator_on_number_state(const ShiftOperator<Scalar>& op1,
                                              const ShiftOperator<Scalar>& op2, Eigen::Index n,
                                              Eigen::Index truncation) {
  if (n < 0 || n > truncation - 2)
    throw TruncationError("commutator on |" + std::to_string(n) + "> needs N >= n + 2, got N=" +
                          std::to_string(truncation));
  const auto ket = basis<Scalar>(n, truncation);
  return apply(op1, apply(op2, ket)) - apply(op2, apply(op1, ket));
}

/// Which side of the original/inverse oscillator pair a spectrum describes.
enum class HamiltonianKind { original, inverse };

/// e_n = n f(n)^2 (original) or 1/(n f(n)^2) (inverse), n = 0..n_max, with e_0 = 0.
inline Eigen::VectorXd hamiltonian_spectrum(const NonlinearityFunction& f, HamiltonianKind kind,
                                            Eigen::Index n_max) {
  if (n_max < 1) throw InvalidParameter("hamiltonian_spectrum needs n_max >= 1");
  const SeriesKind series = kind == HamiltonianKind::original ? SeriesKind::nlcs : SeriesKind::inverse;
  Eigen::VectorXd e(n_max + 1);
  for (Eigen::Index n = 0; n <= n_max; ++n) e(n) = spectrum_term(f, series, static_cast<long>(n));
  return e;
}

/// Catalogue of the ladder operators used across the library, all as
/// weight functions on number states.
namespace ops {

inline ShiftOperatord annihilation() {
  return {-1, [](long n) { return std::sqrt(static_cast<double>(n)); }, "a"};
}

inline ShiftOperatord creation() {
  return {+1, [](long n) { return std::sqrt(n + 1.0); }, "a^dag"};
}

inline ShiftOperatord number() {
  return {0, [](long n) { return static_cast<double>(n); }, "n"};
}

inline ShiftOperatord identity() {
  return {0, [](long) { return 1.0; }, "I"};
}

/// |0><0|
inline ShiftOperatord vacuum_projector() {
  return {0, [](long n) { return n == 0 ? 1.0 : 0.0; }, "|0><0|"};
}

/// a^{-1}|n> = |n+1>/sqrt(n+1); right inverse of a, acts as a raiser.
inline ShiftOperatord inverse_annihilation() {
  return {+1, [](long n) { return 1.0 / std::sqrt(n + 1.0); }, "a^-1"};
}

/// a^dag^{-1}|n> = |n-1>/sqrt(n), zero on |0>; left inverse of a^dag.
inline ShiftOperatord inverse_creation() {
  return {-1, [](long n) { return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(n)); },
          "a^dag^-1"};
}

/// A = a F(n).
inline ShiftOperatord deformed_annihilation(const NonlinearityFunction& F) {
  return {-1, [F](long n) { return n == 0 ? 0.0 : std::sqrt(static_cast<double>(n)) * F(n); },
          "A[" + F.name() + "]"};
}

/// A^dag = F(n) a^dag.
inline ShiftOperatord deformed_creation(const NonlinearityFunction& F) {
  return {+1, [F](long n) { return std::sqrt(n + 1.0) * F(n + 1); }, "A^dag[" + F.name() + "]"};
}

/// Inverse-deformed lowering operator A^dag^{-1} = a calF(n), calF = 1/(nF):
/// |n> -> |n-1> / (sqrt(n) F(n)).
inline ShiftOperatord inverse_deformed_annihilation(const NonlinearityFunction& F) {
  return {-1,
          [F](long n) { return n == 0 ? 0.0 : 1.0 / (std::sqrt(static_cast<double>(n)) * F(n)); },
          "calA[" + F.name() + "]"};
}

/// A^{-1} = calF(n) a^dag: |n> -> |n+1> / (sqrt(n+1) F(n+1)).
inline ShiftOperatord inverse_deformed_creation(const NonlinearityFunction& F) {
  return {+1, [F](long n) { return 1.0 / (std::sqrt(n + 1.0) * F(n + 1)); },
          "calA^dag[" + F.name() + "]"};
}

/// calB = a / calF(n): |n> -> n^{3/2} F(n) |n-1>. Lowering partner of the dual family.
inline ShiftOperatord dual_annihilation(const NonlinearityFunction& F) {
  return {-1, [F](long n) { return n == 0 ? 0.0 : std::pow(static_cast<double>(n), 1.5) * F(n); },
          "calB[" + F.name() + "]"};
}

/// calB^dag = (1/calF(n)) a^dag: |n> -> (n+1)^{3/2} F(n+1) |n+1>.
inline ShiftOperatord dual_creation(const NonlinearityFunction& F) {
  return {+1, [F](long n) { return std::pow(n + 1.0, 1.5) * F(n + 1); }, "calB^dag[" + F.name() + "]"};
}

/// a_f = a f(n), the lowering operator whose eigenstates are the f-deformed coherent states.
inline ShiftOperatord nonlinear_annihilation(const NonlinearityFunction& f) {
  auto op = deformed_annihilation(f);
  op.name = "a_f[" + f.name() + "]";
  return op;
}

/// a - m a^dag^{-1}; its eigenstates are the photon-added coherent states.
inline ShiftOperatord photon_added_lowering(int m) {
  return {-1,
          [m](long n) {
            if (n == 0) return 0.0;
            const double s = std::sqrt(static_cast<double>(n));
            return s - m / s;
          },
          "a - " + std::to_string(m) + " a^dag^-1"};
}

inline ShiftOperatord hamiltonian(const NonlinearityFunction& f, HamiltonianKind kind) {
  const SeriesKind series = kind == HamiltonianKind::original ? SeriesKind::nlcs : SeriesKind::inverse;
  return {0, [f, series](long n) { return spectrum_term(f, series, n); },
          std::string(kind == HamiltonianKind::original ? "H[" : "h[") + f.name() + "]"};
}

}  // namespace ops

}  // namespace invcs
