#include "invcs/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "invcs/cli/figures.hpp"
#include "invcs/cli/verify.hpp"
#include "invcs/errors.hpp"

namespace invcs::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  const std::string s(text);
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw InvalidParameter("cannot parse complex number '" + std::string(whole) + "'");
  return v;
}

/// Writes to the file when a path is given, otherwise to `fallback`.
template <typename Body>
void with_output(const std::optional<std::string>& path, std::ostream& fallback, Body&& body) {
  if (!path || path->empty() || *path == "-") {
    body(fallback);
    return;
  }
  std::ofstream file(*path);
  if (!file) throw InvalidParameter("cannot open output file '" + *path + "'");
  body(file);
}

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kUsageError;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw InvalidParameter("empty complex number");
  if (s.front() == '(' && s.back() == ')') {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidParameter("cannot parse complex number '" + s + "'");
    const std::string re = s.substr(1, comma - 1);
    const std::string im = s.substr(comma + 1, s.size() - comma - 2);
    if (re.empty() || im.empty()) throw InvalidParameter("cannot parse complex number '" + s + "'");
    return {parse_real(re, s), parse_real(im, s)};
  }
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, s)};
  return {parse_real(std::string_view(body).substr(0, split), s),
          parse_real(std::string_view(body).substr(split), s)};
}

FamilyTemplate to_template(const StateOptions& options) {
  FamilyTemplate t;
  t.kind = family_kind_from_string(options.family);
  t.f_name = options.f;
  t.kappa = options.kappa;
  t.m = options.m;
  t.n_max = options.n_max;
  const bool takes_f = t.kind == FamilyKind::nlcs || t.kind == FamilyKind::inverse_state ||
                       t.kind == FamilyKind::dual_inverse_state;
  if (takes_f && t.f_name.empty())
    throw InvalidParameter("--family " + options.family + " needs --f");
  if (!takes_f) t.f_name.clear();
  if (!t.f_name.empty()) builtin(t.f_name, t.kappa);  // validate early
  t.series = options.family;
  return t;
}

int cmd_coeffs(const StateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto family = to_template(options);
    const auto z = parse_complex(options.z);
    const auto built = construct(instantiate(family, z));
    const auto& v = built.state;
    out << "# family=" << to_string(family.kind);
    if (!family.f_name.empty()) out << " f=" << family.f_name;
    out << " z=" << format_double(z.real()) << (z.imag() < 0 ? "" : "+") << format_double(z.imag())
        << "i kappa=" << format_double(family.kappa) << " m=" << family.m << '\n';
    out << "# N=" << v.truncation() << " tail_bound=" << format_double(v.tail_bound)
        << " log_norm=" << format_double(built.log_norm) << '\n';
    out << "n,re_c,im_c,abs2\n";
    for (Eigen::Index n = 0; n <= v.truncation(); ++n) {
      const auto c = v.coeffs(n);
      out << n << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << ','
          << format_double(std::norm(c)) << '\n';
    }
    return kSuccess;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_observables(const StateOptions& options, const OutputOptions& output, std::ostream& out,
                    std::ostream& err) {
  try {
    SweepSpec spec;
    spec.families = {to_template(options)};
    spec.observables = parse_observables(output.observables);
    spec.format = output.format;
    spec.output = output.out_path.value_or("");
    const bool single = !output.grid;
    if (single) {
      const auto z = parse_complex(options.z);
      spec.grid = ComplexGrid{{z.real(), z.real(), 1.0}, {z.imag(), z.imag(), 1.0}};
    } else {
      spec.grid = parse_grid(*output.grid);
    }
    const auto result = run_sweep(spec);
    if (single) {
      const auto& row = result.rows.front();
      if (row.status != PointStatus::ok && row.status != PointStatus::vacuum) {
        err << "error: " << row.message << '\n';
        return kUsageError;
      }
    }
    with_output(output.out_path, out, [&](std::ostream& os) { write(result, os); });
    return kSuccess;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_figure(int id, const OutputOptions& output, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Grid> grid;
    if (output.grid) grid = parse_grid(*output.grid);
    auto spec = figure_spec(id, grid);
    spec.format = output.format;
    spec.output = output.out_path.value_or("");
    const auto result = run_sweep(spec);
    with_output(output.out_path, out, [&](std::ostream& os) { write(result, os); });
    return kSuccess;
  } catch (const Error& e) {
    return report_error(err, e);
  }
}

int cmd_verify(std::string_view suite, std::ostream& out, std::ostream& err) {
  std::vector<PropertyCheck> checks;
  try {
    checks = run_suite(suite);
  } catch (const InvalidParameter& e) {
    return report_error(err, e);
  } catch (const Error& e) {
    // A library error while checking a property counts as a failed property.
    out << "[FAIL] " << suite << ": " << e.what() << '\n';
    return kVerificationFailure;
  }
  int failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name << ": " << c.detail << '\n';
    if (!c.passed) ++failed;
  }
  out << checks.size() - failed << "/" << checks.size() << " properties hold\n";
  return failed == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace invcs::cli
