#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "invcs/cli/sweep.hpp"

namespace invcs::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct StateOptions {
  std::string family = "standard-cs";
  std::string f;
  std::string z = "0";
  double kappa = 0.5;
  int m = 0;
  std::optional<long> n_max;
};

/// Accepts "x", "x+yi", "x-yi", "yi" and "(x,y)".
std::complex<double> parse_complex(std::string_view text);

FamilyTemplate to_template(const StateOptions& options);

/// Coefficient table "n,re_c,im_c,abs2" preceded by '#' comment lines.
int cmd_coeffs(const StateOptions& options, std::ostream& out, std::ostream& err);

struct OutputOptions {
  std::optional<std::string> grid;
  std::string observables = "q,var_x,var_p";
  std::optional<std::string> out_path;
  Format format = Format::csv;
};

/// Single-point report, or a sweep when a grid is given.
int cmd_observables(const StateOptions& options, const OutputOptions& output, std::ostream& out,
                    std::ostream& err);

int cmd_figure(int id, const OutputOptions& output, std::ostream& out, std::ostream& err);

int cmd_verify(std::string_view suite, std::ostream& out, std::ostream& err);

}  // namespace invcs::cli
