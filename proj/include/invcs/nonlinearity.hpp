#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace invcs {

/// Which coefficient series a nonlinearity feeds.
///
/// Each kind pairs with a "spectrum" sequence e_n whose partial products are
/// the squared denominators of the state expansion:
///   nlcs     e_n = n f(n)^2           (f-deformed coherent states)
///   inverse  e_n = 1 / (n F(n)^2)     (states of the inverse deformed lowering operator)
///   dual     e_n = n^3 F(n)^2         (their dual family)
/// so that |c_n|^2 is proportional to |z|^{2n} / prod_{k<=n} e_k.
enum class SeriesKind { nlcs, inverse, dual };

std::string_view to_string(SeriesKind kind);
SeriesKind series_kind_from_string(std::string_view name);

/// A real positive intensity-dependent function n -> f(n) on n >= 1.
///
/// Builtins carry a closed-form ln [f(n)]!; user-supplied functions fall back
/// to direct summation of ln f(k).
class NonlinearityFunction {
 public:
  using Eval = std::function<double(long)>;
  using LogProduct = std::function<double(long)>;

  NonlinearityFunction(std::string name, Eval eval, std::vector<double> params = {},
                       LogProduct log_product = {});

  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }

  double operator()(long n) const { return eval_(n); }

  /// ln [f(n)]! = sum_{k=1}^{n} ln f(k); 0 for n = 0.
  double log_factorial_product(long n) const;

  bool has_closed_form() const { return static_cast<bool>(log_product_); }

 private:
  std::string name_;
  Eval eval_;
  std::vector<double> params_;
  LogProduct log_product_;
};

double log_factorial_product(const NonlinearityFunction& f, long n);

/// F -> 1/(n F(n)). Applying it twice gives back F.
NonlinearityFunction generalized_inverse(const NonlinearityFunction& f);

// Builtins.
NonlinearityFunction unit();
NonlinearityFunction inverse_bosonic();  // 1/n
NonlinearityFunction hydrogen();         // sqrt(n+2)/(n+1)
NonlinearityFunction harmonious();       // 1/sqrt(n)
NonlinearityFunction su11(double kappa); // 1/sqrt(n+2k-1), k >= 1/2

/// Lookup by name: unit, inverse_bosonic (or inverse-bosonic, 1/n), hydrogen,
/// harmonious, su11. `kappa` is only read for su11.
NonlinearityFunction builtin(std::string_view name, double kappa = 0.5);

std::vector<std::string> builtin_names();

/// e_n for the given series kind; 0 at n = 0 by convention.
double spectrum_term(const NonlinearityFunction& f, SeriesKind kind, long n);

enum class RadiusVerdict { zero, finite, infinite };

std::string_view to_string(RadiusVerdict verdict);

struct ConvergenceReport {
  /// Radius of the open disk in |z|; 0 or +inf for the corresponding verdicts.
  double radius = 0.0;
  RadiusVerdict verdict = RadiusVerdict::zero;
  /// Last probe values e_n at the largest sampled n.
  std::array<double, 4> sequence_probe{};

  bool finite() const { return verdict == RadiusVerdict::finite; }
};

/// Estimates the disk of convergence from the large-n behaviour of e_n
/// (n sampled up to ~10^6, relative tolerance 1e-6).
/// Throws NonConvergentProbe when e_n neither settles nor grows/decays steadily.
ConvergenceReport radius_of_convergence(const NonlinearityFunction& f, SeriesKind kind);

}  // namespace invcs
