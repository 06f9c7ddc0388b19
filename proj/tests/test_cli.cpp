#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "invcs/cli/commands.hpp"
#include "invcs/cli/figures.hpp"
#include "invcs/cli/verify.hpp"
#include "invcs/errors.hpp"

using namespace invcs;
using namespace invcs::cli;
using cd = std::complex<double>;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("complex parsing") {
  CHECK(parse_complex("0.5") == cd{0.5, 0.0});
  CHECK(parse_complex("0.3+0.4i") == cd{0.3, 0.4});
  CHECK(parse_complex("1e-3-2i") == cd{1e-3, -2.0});
  CHECK(parse_complex("-1.5e+2+1e-1j") == cd{-150.0, 0.1});
  CHECK(parse_complex("-2i") == cd{0.0, -2.0});
  CHECK(parse_complex("i") == cd{0.0, 1.0});
  CHECK(parse_complex("(1,-2)") == cd{1.0, -2.0});
  CHECK(parse_complex(" 1 + 2i ") == cd{1.0, 2.0});
  CHECK_THROWS_AS(parse_complex("abc"), InvalidParameter);
  CHECK_THROWS_AS(parse_complex(""), InvalidParameter);
  CHECK_THROWS_AS(parse_complex("1+2k"), InvalidParameter);
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("0:1:0.25");
  REQUIRE(std::holds_alternative<RealGrid>(g));
  CHECK(axis_points(std::get<RealGrid>(g)).size() == 5);
  const auto c = parse_grid("-1:1:0.02,-1:1:0.02");
  CHECK(grid_points(c).size() == 101 * 101);
  CHECK(grid_points(c)[1] == cd{-0.98, -1.0});
  CHECK(describe(parse_grid(describe(c))) == describe(c));
  CHECK_THROWS_AS(parse_grid("0:1"), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("0:1:0"), InvalidParameter);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), InvalidParameter);
}

TEST_CASE("coeffs output") {
  std::ostringstream out, err;
  StateOptions s;
  s.family = "dual-inverse";
  s.f = "hydrogen";
  s.z = "0.5+0.5i";
  REQUIRE(cmd_coeffs(s, out, err) == kSuccess);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() > 4);
  CHECK(rows[0].rfind("# family=dual-inverse f=hydrogen", 0) == 0);
  CHECK(rows[2] == "n,re_c,im_c,abs2");
  double total = 0.0;
  for (std::size_t k = 3; k < rows.size(); ++k) total += std::stod(rows[k].substr(rows[k].rfind(',') + 1));
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("usage and domain errors exit with 2") {
  std::ostringstream out, err;
  StateOptions s;
  s.family = "inverse";
  CHECK(cmd_coeffs(s, out, err) == kUsageError);  // missing --f
  s.f = "hydrogen";
  s.z = "1.5";
  CHECK(cmd_coeffs(s, out, err) == kUsageError);
  CHECK(err.str().find("outside the convergence disk") != std::string::npos);
  s.family = "inverse-bosonic-eigenstate";
  s.z = "0.1";
  CHECK(cmd_observables(s, {}, out, err) == kUsageError);
  CHECK(err.str().find("divergent normalization") != std::string::npos);
  s.family = "nope";
  CHECK(cmd_coeffs(s, out, err) == kUsageError);
  CHECK(cmd_figure(0, {}, out, err) == kUsageError);
  CHECK(cmd_verify("nothing", out, err) == kUsageError);
}

TEST_CASE("single-point observables") {
  std::ostringstream out, err;
  StateOptions s;
  s.family = "dual-inverse-bosonic";
  s.z = "1";
  REQUIRE(cmd_observables(s, {}, out, err) == kSuccess);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "re_z,im_z,q,var_x,var_p,mean_n,tail_bound,domain,series");
  CHECK(rows[1].rfind("1,0,-0.3731698885562", 0) == 0);
}

TEST_CASE("sweep marks points outside the disk") {
  std::ostringstream out, err;
  StateOptions s;
  s.family = "su11-inverse";
  s.kappa = 1.0;
  OutputOptions o;
  o.grid = "0:1.5:0.5";
  o.observables = "q,p_n";
  REQUIRE(cmd_observables(s, o, out, err) == kSuccess);
  const auto rows = lines(out.str());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].find(",p_n") != std::string::npos);
  CHECK(rows[1].find(",vacuum,") != std::string::npos);
  CHECK(rows[2].find(",ok,") != std::string::npos);
  CHECK(rows[3].find(",excluded,") != std::string::npos);
  CHECK(rows[4].find(",excluded,") != std::string::npos);
}

TEST_CASE("json output schema") {
  std::ostringstream out, err;
  OutputOptions o;
  o.format = Format::json;
  o.grid = "0:0.5:0.25";
  REQUIRE(cmd_figure(2, o, out, err) == kSuccess);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc.contains("spec"));
  CHECK(doc["meta"]["version"] == std::string(kVersion));
  CHECK(doc["meta"]["truncation-policy"]["max_truncation"] == kMaxTruncation);
  CHECK(doc["spec"]["families"][0]["f"] == "hydrogen");
  REQUIRE(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["domain"] == "vacuum");
  CHECK(doc["rows"][0]["var_x"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["rows"][2]["var_x"].get<double>() < 0.5);
  CHECK_FALSE(doc["rows"][2].contains("q"));
}

TEST_CASE("figure export is deterministic") {
  const auto path = std::filesystem::temp_directory_path() / "invcs_fig8.csv";
  OutputOptions o;
  o.out_path = path.string();
  std::ostringstream out, err;
  REQUIRE(cmd_figure(8, o, out, err) == kSuccess);
  CHECK(out.str().empty());
  std::ifstream file(path);
  const std::string first((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);

  std::ostringstream again;
  REQUIRE(cmd_figure(8, {}, again, err) == kSuccess);
  CHECK(first == again.str());
  CHECK(lines(first).size() == 202);
}

TEST_CASE("figure catalogue") {
  for (int id = 1; id <= 10; ++id) {
    const auto spec = figure_spec(id, std::nullopt);
    CHECK_FALSE(spec.families.empty());
    CHECK_FALSE(figure_caption(id).empty());
  }
  CHECK(figure_spec(5, std::nullopt).families.size() == 3);
  CHECK(figure_spec(10, std::nullopt).families[0].kappa == 3.0);
  CHECK_THROWS_AS(figure_spec(11, std::nullopt), InvalidParameter);
}

TEST_CASE("verify suites pass") {
  std::ostringstream out, err;
  CHECK(cmd_verify("all", out, err) == kSuccess);
  CHECK(out.str().find("[FAIL]") == std::string::npos);
  for (const char* suite : {"operators", "eigen", "duality", "moments"}) CHECK_FALSE(run_suite(suite).empty());
}
