#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "invcs/cli/commands.hpp"
#include "invcs/errors.hpp"

namespace {

using namespace invcs::cli;

void add_state_flags(CLI::App* cmd, StateOptions& s, std::optional<long>& n_max) {
  cmd->add_option("--family", s.family,
                  "standard-cs, nlcs, inverse, dual-inverse, inverse-bosonic-eigenstate, "
                  "dual-inverse-bosonic, gp-su11, su11-inverse, photon-added, photon-subtracted");
  cmd->add_option("--f", s.f, "nonlinearity: unit, inverse_bosonic (1/n), hydrogen, harmonious, su11");
  cmd->add_option("--z", s.z, "complex label, e.g. 0.3+0.4i");
  cmd->add_option("--kappa", s.kappa, "Bargmann index for SU(1,1) families");
  cmd->add_option("--m", s.m, "photon number offset")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n-max", n_max, "fixed truncation (default: automatic)")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* cmd, OutputOptions& o, std::optional<std::string>& grid,
                      std::optional<std::string>& out_path, std::string& format) {
  cmd->add_option("--grid", grid, "MIN:MAX:STEP or REMIN:REMAX:RESTEP,IMMIN:IMMAX:IMSTEP");
  cmd->add_option("--observables", o.observables, "comma list of q, var_x, var_p, p_n");
  cmd->add_option("--out", out_path, "output file (default: stdout)");
  cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse and dual nonlinear coherent states"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  StateOptions state;
  OutputOptions output;
  std::optional<long> n_max;
  std::optional<std::string> grid;
  std::optional<std::string> out_path;
  std::string format = "csv";
  int figure_id = 0;
  std::string suite = "all";

  auto* coeffs = app.add_subcommand("coeffs", "print Fock coefficients of a state");
  add_state_flags(coeffs, state, n_max);

  auto* observables = app.add_subcommand("observables", "Mandel Q and quadrature variances");
  add_state_flags(observables, state, n_max);
  add_output_flags(observables, output, grid, out_path, format);

  auto* figure = app.add_subcommand("figure", "export the data behind a figure");
  figure->add_option("id", figure_id, "figure number 1..10")->required();
  add_output_flags(figure, output, grid, out_path, format);

  auto* verify = app.add_subcommand("verify", "run an algebraic property suite");
  verify->add_option("suite", suite, "operators, eigen, duality, moments or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  state.n_max = n_max;
  output.grid = grid;
  output.out_path = out_path;
  try {
    output.format = parse_format(format);
  } catch (const invcs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (*coeffs) return cmd_coeffs(state, std::cout, std::cerr);
  if (*observables) return cmd_observables(state, output, std::cout, std::cerr);
  if (*figure) return cmd_figure(figure_id, output, std::cout, std::cerr);
  if (*verify) return cmd_verify(suite, std::cout, std::cerr);
  return kUsageError;
}
