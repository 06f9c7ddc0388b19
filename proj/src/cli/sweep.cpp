#include "invcs/cli/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "invcs/errors.hpp"

namespace invcs::cli {

StateFamily instantiate(const FamilyTemplate& family, std::complex<double> z) {
  StateFamily s;
  s.kind = family.kind;
  if (!family.f_name.empty()) s.f = builtin(family.f_name, family.kappa);
  s.z = z;
  s.kappa = family.kappa;
  s.m = family.m;
  if (family.n_max) s.truncation = Truncation::at(*family.n_max);
  return s;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidParameter("not a number: '" + text + "'");
  }
  if (used != text.size()) throw InvalidParameter("not a number: '" + text + "'");
  return v;
}

RealGrid parse_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw InvalidParameter("grid axis must be MIN:MAX:STEP, got '" + text + "'");
  RealGrid axis{parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
  if (!(axis.step > 0.0)) throw InvalidParameter("grid step must be positive");
  if (!(axis.max >= axis.min)) throw InvalidParameter("grid max must not be below min");
  return axis;
}

}  // namespace

Grid parse_grid(std::string_view text) {
  const auto axes = split(text, ',');
  if (axes.size() == 1) return parse_axis(axes[0]);
  if (axes.size() == 2) return ComplexGrid{parse_axis(axes[0]), parse_axis(axes[1])};
  throw InvalidParameter("grid must have one or two axes");
}

std::string describe(const Grid& grid) {
  auto axis = [](const RealGrid& a) {
    return format_double(a.min) + ":" + format_double(a.max) + ":" + format_double(a.step);
  };
  if (const auto* r = std::get_if<RealGrid>(&grid)) return axis(*r);
  const auto& c = std::get<ComplexGrid>(grid);
  return axis(c.re) + "," + axis(c.im);
}

std::vector<double> axis_points(const RealGrid& axis) {
  const long count = static_cast<long>(std::floor((axis.max - axis.min) / axis.step + 1e-9)) + 1;
  std::vector<double> pts;
  pts.reserve(count);
  for (long k = 0; k < count; ++k) pts.push_back(axis.min + static_cast<double>(k) * axis.step);
  return pts;
}

std::vector<std::complex<double>> grid_points(const Grid& grid) {
  std::vector<std::complex<double>> pts;
  if (const auto* r = std::get_if<RealGrid>(&grid)) {
    for (double x : axis_points(*r)) pts.emplace_back(x, 0.0);
    return pts;
  }
  const auto& c = std::get<ComplexGrid>(grid);
  const auto re = axis_points(c.re);
  const auto im = axis_points(c.im);
  pts.reserve(re.size() * im.size());
  for (double y : im)
    for (double x : re) pts.emplace_back(x, y);
  return pts;
}

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::q: return "q";
    case Observable::var_x: return "var_x";
    case Observable::var_p: return "var_p";
    case Observable::p_n: return "p_n";
  }
  return "?";
}

std::set<Observable> parse_observables(std::string_view text) {
  std::set<Observable> out;
  for (const auto& item : split(text, ',')) {
    if (item == "q" || item == "Q") out.insert(Observable::q);
    else if (item == "var_x") out.insert(Observable::var_x);
    else if (item == "var_p") out.insert(Observable::var_p);
    else if (item == "p_n" || item == "P(n)") out.insert(Observable::p_n);
    else throw InvalidParameter("unknown observable '" + item + "'");
  }
  return out;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw InvalidParameter("format must be csv or json");
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::ok: return "ok";
    case PointStatus::vacuum: return "vacuum";
    case PointStatus::excluded: return "excluded";
    case PointStatus::divergent: return "divergent";
    case PointStatus::truncation: return "truncation";
  }
  return "?";
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SweepRow evaluate_point(const FamilyTemplate& family, std::complex<double> z, bool with_distribution) {
  SweepRow row;
  row.z = z;
  row.series = family.series;
  try {
    const auto built = construct(instantiate(family, z));
    row.report = quadrature_report(built.state);
    if (with_distribution) row.distribution = photon_distribution(built.state);
    row.status = std::isnan(row.report.mandel_q) ? PointStatus::vacuum : PointStatus::ok;
  } catch (const DomainError& e) {
    row.status = PointStatus::excluded;
    row.message = e.what();
  } catch (const DivergentNormalization& e) {
    row.status = PointStatus::divergent;
    row.message = e.what();
  } catch (const TruncationError& e) {
    row.status = PointStatus::truncation;
    row.message = e.what();
  }
  return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result{spec, {}};
  const auto pts = grid_points(spec.grid);
  const bool with_distribution = spec.observables.count(Observable::p_n) > 0;
  result.rows.reserve(pts.size() * spec.families.size());
  for (const auto& family : spec.families)
    for (const auto& z : pts) result.rows.push_back(evaluate_point(family, z, with_distribution));
  return result;
}

namespace {

bool has_numbers(const SweepRow& row) {
  return row.status == PointStatus::ok || row.status == PointStatus::vacuum;
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  const auto& obs = result.spec.observables;
  const bool want_q = obs.count(Observable::q) > 0;
  const bool want_x = obs.count(Observable::var_x) > 0;
  const bool want_p = obs.count(Observable::var_p) > 0;
  const bool want_pn = obs.count(Observable::p_n) > 0;

  out << "re_z,im_z,q,var_x,var_p,mean_n,tail_bound,domain,series";
  if (want_pn) out << ",p_n";
  out << '\n';
  for (const auto& row : result.rows) {
    out << format_double(row.z.real()) << ',' << format_double(row.z.imag()) << ',';
    if (has_numbers(row)) {
      const auto& r = row.report;
      if (want_q && row.status == PointStatus::ok) out << format_double(r.mandel_q);
      out << ',';
      if (want_x) out << format_double(r.var_x);
      out << ',';
      if (want_p) out << format_double(r.var_p);
      out << ',' << format_double(r.mean_n) << ',' << format_double(r.tail_bound) << ',';
    } else {
      out << ",,,,,";
    }
    out << to_string(row.status) << ',' << row.series;
    if (want_pn) {
      out << ',';
      for (Eigen::Index n = 0; n < row.distribution.size(); ++n) {
        if (n) out << ';';
        out << format_double(row.distribution(n));
      }
    }
    out << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  using nlohmann::json;
  const auto& spec = result.spec;

  json families = json::array();
  for (const auto& f : spec.families) {
    json entry = {{"family", to_string(f.kind)}, {"kappa", f.kappa}, {"m", f.m}, {"series", f.series}};
    entry["f"] = f.f_name.empty() ? json(nullptr) : json(f.f_name);
    entry["n_max"] = f.n_max ? json(*f.n_max) : json(nullptr);
    families.push_back(std::move(entry));
  }
  json observables = json::array();
  for (auto o : spec.observables) observables.push_back(to_string(o));
  json grid;
  auto axis = [](const RealGrid& a) { return json{{"min", a.min}, {"max", a.max}, {"step", a.step}}; };
  if (const auto* r = std::get_if<RealGrid>(&spec.grid)) {
    grid = {{"type", "real"}, {"re", axis(*r)}};
  } else {
    const auto& c = std::get<ComplexGrid>(spec.grid);
    grid = {{"type", "complex"}, {"re", axis(c.re)}, {"im", axis(c.im)}};
  }

  json rows = json::array();
  for (const auto& row : result.rows) {
    json r = {{"re_z", row.z.real()}, {"im_z", row.z.imag()}, {"domain", to_string(row.status)},
              {"series", row.series}};
    if (has_numbers(row)) {
      if (spec.observables.count(Observable::q))
        r["q"] = row.status == PointStatus::ok ? json(row.report.mandel_q) : json(nullptr);
      if (spec.observables.count(Observable::var_x)) r["var_x"] = row.report.var_x;
      if (spec.observables.count(Observable::var_p)) r["var_p"] = row.report.var_p;
      r["mean_n"] = row.report.mean_n;
      r["tail_bound"] = row.report.tail_bound;
      if (spec.observables.count(Observable::p_n))
        r["p_n"] = std::vector<double>(row.distribution.data(),
                                       row.distribution.data() + row.distribution.size());
    } else {
      r["message"] = row.message;
    }
    rows.push_back(std::move(r));
  }

  json doc = {
      {"spec",
       {{"families", families},
        {"grid", grid},
        {"observables", observables},
        {"output", spec.output},
        {"format", spec.format == Format::csv ? "csv" : "json"}}},
      {"rows", rows},
      {"meta",
       {{"version", kVersion},
        {"truncation-policy",
         {{"last_term_ratio", kLastTermRatio},
          {"tail_target", kTailTarget},
          {"max_truncation", kMaxTruncation}}}}},
  };
  out << doc.dump(2) << '\n';
}

void write(const SweepResult& result, std::ostream& out) {
  if (result.spec.format == Format::json) write_json(result, out);
  else write_csv(result, out);
}

}  // namespace invcs::cli
