// nctile: generate, verify and render tilings of the plane by pairwise
// noncongruent unit-area triangles.

#include <iostream>

#include "CLI11.hpp"
#include "noncongruent/cli.hpp"

int main(int argc, char** argv) {
  using namespace noncongruent;

  CLI::App app{"Tilings of the plane by pairwise noncongruent unit-area triangles"};
  app.require_subcommand(1);

  GenerateCommand gen;
  std::string gen_out;
  std::string gen_svg;
  double gen_svg_radius = 0.0;
  auto* generate_cmd = app.add_subcommand("generate", "Run the splitting procedure, audit it and write a certificate");
  generate_cmd->add_option("--seed", gen.params.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--radius", gen.params.radius, "Stop once the disk of this radius is tiled")
      ->capture_default_str();
  generate_cmd->add_option("--max-steps", gen.params.max_steps, "Step budget")->capture_default_str();
  generate_cmd->add_option("--depth", gen.params.depth, "Potential-triangle lookahead depth")->capture_default_str();
  generate_cmd->add_option("--margin", gen.params.margin, "Congruence separation margin")->capture_default_str();
  generate_cmd->add_option("--tol", gen.params.tol, "Geometric tolerance")->capture_default_str();
  generate_cmd->add_option("--max-attempts", gen.params.max_attempts, "Attempts per generic sample")
      ->capture_default_str();
  generate_cmd->add_option("--out", gen_out, "Certificate path (stdout if omitted)");
  generate_cmd->add_option("--svg", gen_svg, "Also render an SVG to this path");
  generate_cmd->add_option("--svg-radius", gen_svg_radius, "SVG viewport radius (default 1.1 * radius)");
  generate_cmd->add_option("--audit-samples", gen.audit_samples, "Monte Carlo coverage samples")
      ->capture_default_str();
  generate_cmd->add_option("--audit-seed", gen.audit_seed, "Seed of the coverage sampler")->capture_default_str();

  VerifyCommand ver;
  std::size_t ver_samples = 0;
  std::uint64_t ver_seed = 0;
  double ver_radius = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Re-run every audit on a certificate");
  verify_cmd->add_option("--in", ver.in_path, "Certificate path")->required();
  auto* ver_samples_opt = verify_cmd->add_option("--audit-samples", ver_samples, "Override coverage sample count");
  auto* ver_seed_opt = verify_cmd->add_option("--audit-seed", ver_seed, "Override coverage seed");
  auto* ver_radius_opt = verify_cmd->add_option("--radius", ver_radius, "Override audited radius");

  RenderCommand ren;
  double ren_radius = 0.0;
  auto* render_cmd = app.add_subcommand("render", "Render a certificate as SVG");
  render_cmd->add_option("--in", ren.in_path, "Certificate path")->required();
  render_cmd->add_option("--out", ren.out_path, "SVG path")->required();
  auto* ren_radius_opt = render_cmd->add_option("--viewport-radius", ren_radius, "Viewport radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::io_failure);
  }

  ExitCode code = ExitCode::ok;
  if (*generate_cmd) {
    if (!gen_out.empty()) gen.out_path = gen_out;
    if (!gen_svg.empty()) gen.svg_path = gen_svg;
    if (generate_cmd->count("--svg-radius") > 0) gen.svg_radius = gen_svg_radius;
    code = run_generate(gen, std::cout, std::cerr);
  } else if (*verify_cmd) {
    if (*ver_samples_opt) ver.audit_samples = ver_samples;
    if (*ver_seed_opt) ver.audit_seed = ver_seed;
    if (*ver_radius_opt) ver.radius = ver_radius;
    code = run_verify(ver, std::cerr);
  } else if (*render_cmd) {
    if (*ren_radius_opt) ren.viewport_radius = ren_radius;
    code = run_render(ren, std::cerr);
  }
  return static_cast<int>(code);
}
