#include "invcs/cli/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "invcs/errors.hpp"
#include "invcs/fock.hpp"
#include "invcs/identity.hpp"
#include "invcs/states.hpp"

namespace invcs::cli {

namespace {

constexpr long kLastNumberState = 50;
constexpr long kOperatorWindow = kLastNumberState + 3;
constexpr double kOperatorTolerance = 1e-12;
constexpr double kResidualTolerance = 1e-8;
constexpr long kResidualWindow = 200;

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

struct Suite {
  std::string name;
  std::vector<PropertyCheck> checks;

  void add(std::string what, bool ok, std::string detail) {
    checks.push_back({name, std::move(what), ok, std::move(detail)});
  }
  void add_bound(std::string what, double value, double bound) {
    add(std::move(what), value <= bound, "max deviation " + sci(value) + " (bound " + sci(bound) + ")");
  }
};

using Ket = std::function<FockVectord(long n)>;

/// max_n || lhs(n) - expected(n) |n> || over n = first..50.
double diagonal_deviation(const Ket& lhs, const std::function<double(long)>& expected, long first = 0) {
  double worst = 0.0;
  for (long n = first; n <= kLastNumberState; ++n) {
    const auto target = std::complex<double>(expected(n)) * basis(n, kOperatorWindow);
    worst = std::max(worst, (lhs(n) - target).coeffs.norm());
  }
  return worst;
}

Ket product(const ShiftOperatord& left, const ShiftOperatord& right) {
  return [left, right](long n) { return apply(left, apply(right, basis(n, kOperatorWindow))); };
}

Ket commutator(const ShiftOperatord& left, const ShiftOperatord& right) {
  return [left, right](long n) { return commutator_on_number_state(left, right, n, kOperatorWindow); };
}

std::vector<NonlinearityFunction> all_builtins() {
  return {unit(), inverse_bosonic(), hydrogen(), harmonious(), su11(0.5), su11(1.0), su11(1.5), su11(3.0)};
}

std::string label(const NonlinearityFunction& F) {
  if (F.name() == "su11") {
    std::ostringstream os;
    os << "su11(" << F.params().front() << ")";
    return os.str();
  }
  return F.name();
}

FockVectord random_vector(std::mt19937_64& rng, long truncation) {
  std::normal_distribution<double> gauss;
  FockVectord v(truncation);
  for (long n = 0; n <= truncation; ++n) v.coeffs(n) = {gauss(rng), gauss(rng)};
  return v;
}

void operators_suite(Suite& s) {
  using namespace ops;
  const auto delta0 = [](long n) { return n == 0 ? 1.0 : 0.0; };
  const auto one = [](long) { return 1.0; };
  const auto not_vacuum = [](long n) { return n == 0 ? 0.0 : 1.0; };

  // Inverse bosonic operators.
  s.add_bound("a a^-1 = I", diagonal_deviation(product(annihilation(), inverse_annihilation()), one),
              kOperatorTolerance);
  s.add_bound("a^dag^-1 a^dag = I",
              diagonal_deviation(product(inverse_creation(), creation()), one), kOperatorTolerance);
  s.add_bound("a^-1 a = I - |0><0|",
              diagonal_deviation(product(inverse_annihilation(), annihilation()), not_vacuum),
              kOperatorTolerance);
  s.add_bound("a^dag a^dag^-1 = I - |0><0|",
              diagonal_deviation(product(creation(), inverse_creation()), not_vacuum),
              kOperatorTolerance);
  s.add_bound("[a, a^-1] = |0><0|",
              diagonal_deviation(commutator(annihilation(), inverse_annihilation()), delta0),
              kOperatorTolerance);
  s.add_bound("[a^dag^-1, a^dag] = |0><0|",
              diagonal_deviation(commutator(inverse_creation(), creation()), delta0), kOperatorTolerance);

  // f = 1/n realizes the inverse bosonic operators as f-deformed ladders.
  const auto f_inv = inverse_bosonic();
  const auto a_f = nonlinear_annihilation(f_inv);
  const auto a_f_dag = adjoint(a_f);
  double weight_gap = 0.0;
  for (long n = 0; n <= kOperatorWindow; ++n) {
    weight_gap = std::max(weight_gap, std::abs(a_f(n) - inverse_creation()(n)));
    weight_gap = std::max(weight_gap, std::abs(a_f_dag(n) - inverse_annihilation()(n)));
  }
  s.add_bound("a f(n) = a^dag^-1 and f(n) a^dag = a^-1 for f = 1/n", weight_gap, kOperatorTolerance);
  s.add_bound("[a_f, a_f^dag] = -1/(n(n+1)), n >= 1",
              diagonal_deviation(commutator(a_f, a_f_dag),
                                 [](long n) { return -1.0 / (static_cast<double>(n) * (n + 1.0)); }, 1),
              kOperatorTolerance);
  s.add_bound("[a_f, a_f^dag] = |0><0| at n = 0",
              (commutator_on_number_state(a_f, a_f_dag, 0, kOperatorWindow) - basis(0, kOperatorWindow))
                  .coeffs.norm(),
              kOperatorTolerance);
  s.add_bound("a_f^dag a_f = 1/n (0 at n = 0)",
              diagonal_deviation(product(a_f_dag, a_f),
                                 [](long n) { return n == 0 ? 0.0 : 1.0 / static_cast<double>(n); }),
              kOperatorTolerance);
  const auto b_f = dual_annihilation(unit());
  s.add_bound("[a_f, b_f^dag] = I", diagonal_deviation(commutator(a_f, adjoint(b_f)), one),
              kOperatorTolerance);
  s.add_bound("[b_f, a_f^dag] = I", diagonal_deviation(commutator(b_f, a_f_dag), one),
              kOperatorTolerance);

  std::mt19937_64 rng(20240611);
  for (const auto& F : all_builtins()) {
    const std::string tag = " [" + label(F) + "]";
    const auto A = deformed_annihilation(F);
    const auto A_dag = deformed_creation(F);
    const auto A_inv = inverse_deformed_creation(F);      // A^{-1} = calA^dag
    const auto A_dag_inv = inverse_deformed_annihilation(F);  // A^dag^{-1} = calA
    const auto calF = generalized_inverse(F);

    s.add_bound("A A^-1 = I" + tag, diagonal_deviation(product(A, A_inv), one), kOperatorTolerance);
    s.add_bound("A^dag^-1 A^dag = I" + tag, diagonal_deviation(product(A_dag_inv, A_dag), one),
                kOperatorTolerance);
    s.add_bound("A^-1 A = I - |0><0|" + tag, diagonal_deviation(product(A_inv, A), not_vacuum),
                kOperatorTolerance);
    s.add_bound("A^dag A^dag^-1 = I - |0><0|" + tag,
                diagonal_deviation(product(A_dag, A_dag_inv), not_vacuum), kOperatorTolerance);

    const auto comm = commutator(A_dag_inv, A_inv);
    s.add_bound("[calA, calA^dag] = (n+1) calF(n+1)^2 - n calF(n)^2" + tag,
                diagonal_deviation(comm,
                                   [&](long n) {
                                     const double up = calF(n + 1);
                                     const double here = n == 0 ? 0.0 : calF(n);
                                     return (n + 1.0) * up * up - static_cast<double>(n) * here * here;
                                   }),
                kOperatorTolerance);
    s.add_bound("[calA, calA^dag] = 1/((n+1)F(n+1)^2) - 1/(nF(n)^2), n >= 1" + tag,
                diagonal_deviation(comm,
                                   [&](long n) {
                                     return 1.0 / ((n + 1.0) * F(n + 1) * F(n + 1)) -
                                            1.0 / (static_cast<double>(n) * F(n) * F(n));
                                   },
                                   1),
                kOperatorTolerance);
    if (std::abs(F(1) - 1.0) < 1e-15) {
      s.add_bound("[calA, calA^dag] = |0><0| at n = 0" + tag,
                  (commutator_on_number_state(A_dag_inv, A_inv, 0, kOperatorWindow) -
                   basis(0, kOperatorWindow))
                      .coeffs.norm(),
                  kOperatorTolerance);
    }
    s.add_bound("calA^dag calA = 1/(n F(n)^2)" + tag,
                diagonal_deviation(product(A_inv, A_dag_inv),
                                   [&](long n) { return spectrum_term(F, SeriesKind::inverse, n); }),
                kOperatorTolerance);
    const auto B = dual_annihilation(F);
    const auto B_dag = dual_creation(F);
    s.add_bound("[calA, calB^dag] = I" + tag, diagonal_deviation(commutator(A_dag_inv, B_dag), one),
                kOperatorTolerance);
    s.add_bound("[calB, calA^dag] = I" + tag, diagonal_deviation(commutator(B, A_inv), one),
                kOperatorTolerance);

    // <u|O v> = <O^dag u|v> with O^dag from the mirrored weights.
    double adjoint_gap = 0.0;
    for (const auto& [op, dag] :
         std::vector<std::pair<ShiftOperatord, ShiftOperatord>>{{A, A_dag}, {A_dag_inv, A_inv}, {B, B_dag}}) {
      const auto u = random_vector(rng, kOperatorWindow);
      const auto v = random_vector(rng, kOperatorWindow);
      auto padded = [](const FockVectord& x) { return resized(x, kOperatorWindow + 1); };
      const auto lhs = inner(padded(u), apply(op, padded(v)));
      const auto rhs = inner(apply(dag, padded(u)), padded(v));
      adjoint_gap = std::max(adjoint_gap, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      // The mirrored operator must also agree with the catalogue's explicit adjoint.
      const auto mirrored = adjoint(op);
      for (long n = 0; n <= kOperatorWindow; ++n)
        adjoint_gap = std::max(adjoint_gap, std::abs(mirrored(n) - dag(n)));
    }
    s.add_bound("adjoint consistency" + tag, adjoint_gap, kOperatorTolerance);
  }
}

void eigen_suite(Suite& s) {
  const auto N = Truncation::at(kResidualWindow);
  auto check = [&](const std::string& what, const ShiftOperatord& op, const FockVectord& v,
                   std::complex<double> z) {
    s.add_bound(what, eigen_residual(op, v, z), kResidualTolerance);
  };
  const std::complex<double> zc{1.5, 0.5};
  check("a |z> = z |z>", ops::annihilation(), standard_cs(zc, N), zc);
  check("a_f |z,f> = z |z,f> [hydrogen]", ops::nonlinear_annihilation(hydrogen()),
        nlcs(hydrogen(), 0.5, N), 0.5);
  for (const auto& F : {hydrogen(), harmonious(), su11(1.0), su11(1.5)}) {
    const std::complex<double> z{0.3, 0.4};  // half the unit radius
    check("calA |z,F>^(-1) = z |z,F>^(-1) [" + label(F) + "]", ops::inverse_deformed_annihilation(F),
          inverse_state(F, z, N), z);
  }
  for (int m : {1, 2})
    check("(a - " + std::to_string(m) + " a^dag^-1) |z," + std::to_string(m) + "> = z |z," +
              std::to_string(m) + ">",
          ops::photon_added_lowering(m), photon_added(1.0, m, N), 1.0);
  check("b_f |~z> = z |~z> (dual inverse bosonic)", ops::dual_annihilation(unit()),
        dual_inverse_bosonic(2.0, N), 2.0);
  for (const auto& F : {hydrogen(), harmonious(), su11(1.0), su11(3.0)}) {
    const std::complex<double> z{1.2, -1.6};
    check("calB |~z,F> = z |~z,F> [" + label(F) + "]", ops::dual_annihilation(F),
          dual_inverse_state(F, z, N), z);
  }
}

double max_coefficient_gap(const FockVectord& a, const FockVectord& b) {
  const Eigen::Index len = std::max(a.coeffs.size(), b.coeffs.size());
  return (resized(a, len - 1).coeffs - resized(b, len - 1).coeffs).cwiseAbs().maxCoeff();
}

double relative(double value, double target) { return std::abs(value - target) / std::abs(target); }

void duality_suite(Suite& s) {
  for (const std::complex<double> z : {std::complex<double>(0.3), std::complex<double>(1.0),
                                       std::complex<double>(2.0, 1.0)}) {
    std::ostringstream what;
    what << "self-dual: inverse state with F = 1/n equals |z> at z = " << z;
    s.add_bound(what.str(), max_coefficient_gap(inverse_state(inverse_bosonic(), z), standard_cs(z)),
                1e-12);
  }
  s.add_bound("su11 inverse state at kappa = 1/2 equals harmonious inverse state",
              max_coefficient_gap(su11_inverse(0.4, 0.5), inverse_state(harmonious(), 0.4)), 1e-12);
  s.add_bound("inverse state of F equals nlcs of 1/(nF) [hydrogen]",
              max_coefficient_gap(inverse_state(hydrogen(), {0.2, 0.5}),
                                  nlcs(generalized_inverse(hydrogen()), {0.2, 0.5})),
              1e-12);

  // Normalizations against closed forms, each summed by its own recurrence.
  double worst = 0.0;
  for (double r : {0.5, 1.0, 2.5, 5.0}) {
    StateFamily fam{FamilyKind::dual_inverse_bosonic, std::nullopt, r, 0.5, 0, {}};
    const double x = r * r;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 400; ++n) {
      term *= x / (static_cast<double>(n) * n * n);
      sum += term;
    }
    worst = std::max(worst, relative(std::exp(construct(fam).log_norm), sum));
  }
  s.add_bound("dual inverse bosonic norm = 0F2(;1,1;|z|^2)", worst, 1e-10);

  worst = 0.0;
  for (double r : {0.5, 1.0, 3.0}) {
    StateFamily fam{FamilyKind::dual_inverse_state, harmonious(), r, 0.5, 0, {}};
    worst = std::max(worst, relative(std::exp(construct(fam).log_norm), std::cyl_bessel_i(0.0, 2.0 * r)));
  }
  s.add_bound("dual harmonious norm = I0(2|z|)", worst, 1e-10);

  worst = 0.0;
  double worst_inv = 0.0;
  for (double kappa : {0.5, 1.0, 1.5}) {
    for (double r : {0.1, 0.5, 0.9}) {
      const double x = r * r;
      StateFamily gp{FamilyKind::gp_su11, std::nullopt, r, kappa, 0, {}};
      const double closed = std::tgamma(2.0 * kappa) * std::pow(1.0 - x, -2.0 * kappa);
      worst = std::max(worst, relative(std::exp(construct(gp).log_norm), closed));

      // 2F1(1,1;2k;x) = sum n!/(2k)_n x^n
      double term = 1.0;
      double sum = 1.0;
      for (int n = 0; n < 5000 && term > 1e-18 * sum; ++n) {
        term *= (n + 1.0) / (2.0 * kappa + n) * x;
        sum += term;
      }
      StateFamily inv{FamilyKind::su11_inverse, std::nullopt, r, kappa, 0, {}};
      worst_inv = std::max(worst_inv, relative(std::exp(construct(inv).log_norm),
                                               sum / std::tgamma(2.0 * kappa)));
    }
  }
  s.add_bound("GP SU(1,1) norm = Gamma(2k)(1-|z|^2)^(-2k)", worst, 1e-8);
  s.add_bound("SU(1,1) inverse norm = 2F1(1,1;2k;|z|^2)/Gamma(2k)", worst_inv, 1e-8);
}

void moments_suite(Suite& s) {
  const auto harmonious_dual =
      verify_weight(harmonious_dual_density, harmonious(), SeriesKind::dual, 10);
  double worst = 0.0;
  for (const auto& c : harmonious_dual.checks) worst = std::max(worst, c.rel_error);
  s.add_bound("2K0(2 sqrt x) moments = (n!)^2, n <= 10", worst, 1e-6);
  s.add("harmonious dual weight needs no pi prefactor",
        harmonious_dual.convention == MomentConvention::plain,
        "convention " + std::string(to_string(harmonious_dual.convention)));

  const auto gaussian = verify_weight([](double x) { return std::exp(-x) / std::numbers::pi; }, unit(),
                                      SeriesKind::nlcs, 10);
  worst = 0.0;
  for (const auto& c : gaussian.checks) worst = std::max(worst, c.rel_error);
  s.add_bound("standard CS: pi * int e^-x/pi x^n = n!", worst, 1e-8);

  const auto beta = verify_weight([](double x) { return 2.0 * (1.0 - x); }, su11(1.5), SeriesKind::nlcs, 10);
  worst = 0.0;
  for (const auto& c : beta.checks) worst = std::max(worst, c.rel_error);
  s.add_bound("GP SU(1,1), kappa = 3/2: int_0^1 2(1-x) x^n = n! Gamma(3)/Gamma(n+3)", worst, 1e-8);

  const auto unsupported = verify_weight([](double) { return 1.0; }, inverse_bosonic(), SeriesKind::nlcs, 5);
  s.add("f = 1/n: radius 0, measure reported unsupported", !unsupported.supported,
        "supported=" + std::string(unsupported.supported ? "true" : "false"));

  worst = 0.0;
  for (const auto& F : all_builtins()) {
    for (auto kind : {SeriesKind::nlcs, SeriesKind::inverse, SeriesKind::dual}) {
      for (int n = 1; n <= 30; ++n) {
        const double step = moment_target(F, kind, n) - moment_target(F, kind, n - 1);
        worst = std::max(worst, std::abs(step - std::log(spectrum_term(F, kind, n))));
      }
    }
  }
  s.add_bound("moment targets step by ln e_n", worst, 1e-10);
}

}  // namespace

std::vector<PropertyCheck> run_suite(std::string_view suite) {
  const bool all = suite == "all";
  if (!all && suite != "operators" && suite != "eigen" && suite != "duality" && suite != "moments")
    throw InvalidParameter("unknown verification suite '" + std::string(suite) + "'");

  std::vector<PropertyCheck> out;
  auto run = [&](const char* name, void (*body)(Suite&)) {
    if (!all && suite != name) return;
    Suite s{name, {}};
    body(s);
    out.insert(out.end(), s.checks.begin(), s.checks.end());
  };
  run("operators", operators_suite);
  run("eigen", eigen_suite);
  run("duality", duality_suite);
  run("moments", moments_suite);
  return out;
}

}  // namespace invcs::cli
