#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invcs/observables.hpp"
#include "invcs/states.hpp"

namespace invcs::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// A state family with everything but z fixed.
struct FamilyTemplate {
  FamilyKind kind = FamilyKind::standard_cs;
  std::string f_name;  // empty when the family takes no nonlinearity
  double kappa = 0.5;
  int m = 0;
  std::optional<long> n_max;
  /// Free-form label written to the `series` column (e.g. "kappa=1").
  std::string series;
};

StateFamily instantiate(const FamilyTemplate& family, std::complex<double> z);

struct RealGrid {
  double min = 0.0;
  double max = 1.0;
  double step = 0.005;
};

struct ComplexGrid {
  RealGrid re;
  RealGrid im;
};

using Grid = std::variant<RealGrid, ComplexGrid>;

/// "MIN:MAX:STEP" for a real axis, "REMIN:REMAX:RESTEP,IMMIN:IMMAX:IMSTEP" for a
/// complex rectangle. Throws InvalidParameter on malformed input or step <= 0.
Grid parse_grid(std::string_view text);
std::string describe(const Grid& grid);

/// min + k step for k = 0..floor((max - min)/step), endpoints included.
std::vector<double> axis_points(const RealGrid& axis);

/// Grid points in output order: real grids left to right; complex grids row by
/// row in Im z, then Re z.
std::vector<std::complex<double>> grid_points(const Grid& grid);

enum class Observable { q, var_x, var_p, p_n };

std::set<Observable> parse_observables(std::string_view text);  // e.g. "q,var_x,var_p,p_n"
std::string_view to_string(Observable o);

enum class Format { csv, json };

Format parse_format(std::string_view text);

struct SweepSpec {
  std::vector<FamilyTemplate> families;
  Grid grid;
  std::set<Observable> observables{Observable::q, Observable::var_x, Observable::var_p};
  std::string output;  // empty: stdout
  Format format = Format::csv;
};

/// Per-point outcome. Numbers are only written for `ok` and `vacuum` rows
/// (the latter without q).
enum class PointStatus { ok, vacuum, excluded, divergent, truncation };

std::string_view to_string(PointStatus status);

struct SweepRow {
  std::complex<double> z;
  std::string series;
  PointStatus status = PointStatus::ok;
  ObservableReport<double> report;
  Eigen::VectorXd distribution;
  std::string message;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

SweepRow evaluate_point(const FamilyTemplate& family, std::complex<double> z, bool with_distribution);

/// Evaluates every family over the grid; family-major, then grid order.
SweepResult run_sweep(const SweepSpec& spec);

/// Fixed columns: re_z, im_z, q, var_x, var_p, mean_n, tail_bound, domain, series[, p_n].
void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);
void write(const SweepResult& result, std::ostream& out);

/// 17 significant digits, locale independent.
std::string format_double(double value);

}  // namespace invcs::cli
