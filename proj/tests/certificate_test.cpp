#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>

#include "noncongruent/certificate.hpp"
#include "noncongruent/cli.hpp"
#include "noncongruent/svg.hpp"

using namespace noncongruent;
namespace fs = std::filesystem;

namespace {

RunParams small_params() {
  RunParams p;
  p.seed = 42;
  p.radius = 10;
  return p;
}

const Generated& small_generated() {
  static const Generated g = [] {
    AuditOptions o = audit_options_for(small_params());
    o.coverage_samples = 20000;
    return generate(small_params(), o);
  }();
  return g;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("nctest_" + std::to_string(::getpid()) + "_" + name)).string();
}

std::string parse_error(const std::string& text) {
  try {
    parse_certificate(text);
  } catch (const CertificateError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Certificate, RoundTripIsByteIdentical) {
  const std::string text = serialize(small_generated().certificate);
  const Certificate parsed = parse_certificate(text);
  EXPECT_EQ(serialize(parsed), text);
  EXPECT_EQ(parsed.triangles, small_generated().certificate.triangles);
  EXPECT_EQ(parsed.cones, small_generated().certificate.cones);
  EXPECT_EQ(parsed.events, small_generated().certificate.events);
  EXPECT_EQ(parsed.params, small_params());
}

TEST(Certificate, SchemaFields) {
  const nlohmann::json j = nlohmann::json::parse(serialize(small_generated().certificate));
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["outcome"], "covered");
  for (const char* key : {"seed", "radius", "max_steps", "depth", "margin", "tol", "max_attempts"}) {
    EXPECT_TRUE(j["params"].contains(key)) << key;
  }
  const nlohmann::json& t = j["triangles"][0];
  for (const char* key : {"id", "vertices", "provenance", "area", "perimeter", "signature"}) {
    EXPECT_TRUE(t.contains(key)) << key;
  }
  const nlohmann::json& c = j["cones"][0];
  for (const char* key : {"id", "base", "directions", "angles", "width"}) EXPECT_TRUE(c.contains(key)) << key;
  EXPECT_EQ(j["events"][0]["kind"], "init");
  EXPECT_TRUE(j["audit"]["pass"].get<bool>());
  EXPECT_EQ(j["triangles"].size(), small_generated().state.triangles().size());
}

TEST(Certificate, ParseErrorsCarryLocation) {
  EXPECT_NE(parse_error("{\"format_version\": 1,").find("not valid JSON"), std::string::npos);
  EXPECT_NE(parse_error("{}").find("/format_version"), std::string::npos);

  nlohmann::json j = nlohmann::json::parse(serialize(small_generated().certificate));
  j["triangles"][2]["vertices"][1] = "oops";
  EXPECT_NE(parse_error(j.dump()).find("/triangles/2/vertices/1"), std::string::npos) << parse_error(j.dump());

  j = nlohmann::json::parse(serialize(small_generated().certificate));
  j["cones"][0].erase("directions");
  EXPECT_NE(parse_error(j.dump()).find("/cones/0/directions"), std::string::npos);

  j = nlohmann::json::parse(serialize(small_generated().certificate));
  j["format_version"] = 2;
  EXPECT_NE(parse_error(j.dump()).find("unsupported version"), std::string::npos);
}

TEST(Svg, InitialTilingCounts) {
  RunParams p = small_params();
  const TilingState s = init_tiling(p);
  const std::string svg = render_svg(s, 5.0);
  EXPECT_EQ(count(svg, "<polygon "), 3u);
  EXPECT_EQ(count(svg, "<line class=\"ray\""), 6u);
  EXPECT_EQ(count(svg, "<circle id=\"origin\""), 1u);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, OnePolygonPerTriangleAndDeterministic) {
  const Certificate& c = small_generated().certificate;
  const std::string a = render_svg(c, 11.0);
  EXPECT_EQ(count(a, "<polygon "), c.triangles.size());
  EXPECT_EQ(count(a, "<line class=\"ray\""), 2 * c.cones.size());
  EXPECT_EQ(render_svg(parse_certificate(serialize(c)), 11.0), a);
}

TEST(Cli, GenerateVerifyRender) {
  GenerateCommand cmd;
  cmd.params = small_params();
  cmd.audit_samples = 20000;
  cmd.out_path = temp_path("gen.json");
  cmd.svg_path = temp_path("gen.svg");
  std::ostringstream out, log;
  ASSERT_EQ(run_generate(cmd, out, log), ExitCode::ok) << log.str();
  EXPECT_TRUE(out.str().empty());
  EXPECT_NE(log.str().find("pass  coverage"), std::string::npos);

  VerifyCommand ver{*cmd.out_path, {}, {}, {}};
  std::ostringstream vlog;
  EXPECT_EQ(run_verify(ver, vlog), ExitCode::ok) << vlog.str();

  RenderCommand ren{*cmd.out_path, temp_path("ren.svg"), 11.0};
  EXPECT_EQ(run_render(ren, vlog), ExitCode::ok);
  std::ostringstream a, b;
  a << std::ifstream(*cmd.svg_path).rdbuf();
  b << std::ifstream(ren.out_path).rdbuf();
  EXPECT_EQ(a.str(), b.str());
  for (const std::string& f : {*cmd.out_path, *cmd.svg_path, ren.out_path}) fs::remove(f);
}

TEST(Cli, ZeroStepBudgetIsGenerationFailure) {
  GenerateCommand cmd;
  cmd.params = small_params();
  cmd.params.max_steps = 0;
  cmd.audit_samples = 1000;
  std::ostringstream out, log;
  EXPECT_EQ(run_generate(cmd, out, log), ExitCode::generation_failure);
  const Certificate c = parse_certificate(out.str());
  EXPECT_EQ(c.outcome, RunOutcome::step_budget_exhausted);
  EXPECT_EQ(c.triangles.size(), 3u);
}

TEST(Cli, InvalidParamsAreGenerationFailure) {
  GenerateCommand cmd;
  cmd.params.tol = 1.0;
  std::ostringstream out, log;
  EXPECT_EQ(run_generate(cmd, out, log), ExitCode::generation_failure);
}

TEST(Cli, VerifyDetectsPerturbedVertex) {
  nlohmann::json j = nlohmann::json::parse(serialize(small_generated().certificate));
  double& x = j["triangles"][7]["vertices"][2][0].get_ref<double&>();
  x += 1e-3;
  const std::string path = temp_path("perturbed.json");
  write_text_file(path, j.dump(1));
  std::ostringstream log;
  EXPECT_EQ(run_verify({path, 20000, {}, {}}, log), ExitCode::audit_failure);
  EXPECT_NE(log.str().find("FAIL  area"), std::string::npos) << log.str();
  fs::remove(path);
}

TEST(Cli, VerifyDetectsCongruentToyPair) {
  Certificate c;
  c.params.radius = 1.0;
  c.triangles = {Triangle({0, 0}, {2, 0}, {0, 1}, 0, Provenance::cut(0, Side::left)),
                 Triangle({0, 0}, {0, -1}, {2, 0}, 1, Provenance::cut(0, Side::right))};
  const std::string path = temp_path("toy.json");
  write_text_file(path, serialize(c));
  std::ostringstream log;
  EXPECT_EQ(run_verify({path, 1000, {}, {}}, log), ExitCode::audit_failure);
  EXPECT_NE(log.str().find("FAIL  noncongruence"), std::string::npos) << log.str();
  fs::remove(path);
}

TEST(Cli, MissingOrMalformedInputIsIoFailure) {
  std::ostringstream log;
  EXPECT_EQ(run_verify({temp_path("does_not_exist.json"), {}, {}, {}}, log), ExitCode::io_failure);
  const std::string path = temp_path("broken.json");
  write_text_file(path, "{\"format_version\": 1, \"params\": [}");
  EXPECT_EQ(run_verify({path, {}, {}, {}}, log), ExitCode::io_failure);
  EXPECT_EQ(run_render({path, temp_path("x.svg"), {}}, log), ExitCode::io_failure);
  fs::remove(path);
}
