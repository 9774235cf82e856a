#include "noncongruent/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "noncongruent/genericity.hpp"
#include "noncongruent/svg.hpp"

namespace noncongruent {

Generated generate(const RunParams& params, const AuditOptions& audit_options) {
  TilingState state = init_tiling(params);
  const RunOutcome outcome = run(state);
  AuditReport audit = audit_tiling(state, audit_options);
  Certificate certificate = make_certificate(state, outcome, AuditSummary::from(audit, audit_options));
  return {std::move(state), outcome, std::move(audit), std::move(certificate)};
}

void print_audit(const AuditReport& r, std::ostream& log) {
  auto line = [&](const char* name, bool ok, const std::string& detail) {
    log << (ok ? "  pass  " : "  FAIL  ") << name << ": " << detail << '\n';
  };
  log.precision(6);
  line("area", r.flags.area, "max |area - 1| = " + std::to_string(r.area_max_error));
  line("perimeter", r.flags.perimeter,
       "max " + std::to_string(r.perimeter_max) + " <= " + std::to_string(r.perimeter_bound));
  line("initial perimeter", r.flags.initial_perimeter,
       "max " + std::to_string(r.initial_perimeter_max) + " <= " + std::to_string(r.initial_perimeter_bound));
  line("property P", r.flags.property_p, std::to_string(r.property_p_violations.size()) + " violations");
  {
    std::ostringstream os;
    os << "min separation " << r.min_congruence_separation << " >= " << r.separation_threshold;
    line("noncongruence", r.flags.noncongruence, os.str());
  }
  {
    std::ostringstream os;
    os << r.overlap_pairs.size() << " overlapping pairs (max area " << r.max_overlap_area << ")";
    line("overlap", r.flags.overlap, os.str());
  }
  line("coverage", r.flags.coverage,
       std::to_string(r.coverage_misses) + " misses of " + std::to_string(r.coverage_samples) + " samples");
  {
    std::ostringstream os;
    os << "relative error " << r.accounting_relative_error;
    line("area accounting", r.flags.area_accounting, os.str());
  }
}

ExitCode run_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& log) {
  AuditOptions audit_options = audit_options_for(cmd.params);
  audit_options.coverage_samples = cmd.audit_samples;
  audit_options.seed = cmd.audit_seed;

  std::optional<Generated> result;
  try {
    result = generate(cmd.params, audit_options);
  } catch (const SamplingError& e) {
    log << "generation failed: " << e.what() << '\n';
    return ExitCode::generation_failure;
  } catch (const std::invalid_argument& e) {
    log << "invalid parameters: " << e.what() << '\n';
    return ExitCode::generation_failure;
  } catch (const GeometryError& e) {
    log << "generation failed: " << e.what() << '\n';
    return ExitCode::generation_failure;
  }

  log << "steps " << result->state.step_count() << ", triangles " << result->state.triangles().size() << ", cones "
      << result->state.cone_count() << ", outcome " << to_string(result->outcome) << '\n';
  print_audit(result->audit, log);

  try {
    const std::string text = serialize(result->certificate);
    if (cmd.out_path) {
      write_text_file(*cmd.out_path, text);
    } else {
      out << text;
    }
    if (cmd.svg_path) {
      write_text_file(*cmd.svg_path, render_svg(result->certificate, cmd.svg_radius.value_or(1.1 * cmd.params.radius)));
    }
  } catch (const std::exception& e) {
    log << "i/o error: " << e.what() << '\n';
    return ExitCode::io_failure;
  }

  if (result->outcome == RunOutcome::step_budget_exhausted) {
    log << "step budget exhausted before the disk was covered\n";
    return ExitCode::generation_failure;
  }
  return result->audit.pass() ? ExitCode::ok : ExitCode::audit_failure;
}

ExitCode run_verify(const VerifyCommand& cmd, std::ostream& log) {
  Certificate certificate;
  try {
    certificate = read_certificate(cmd.in_path);
  } catch (const std::exception& e) {
    log << e.what() << '\n';
    return ExitCode::io_failure;
  }
  AuditOptions options = audit_options_for(certificate);
  if (cmd.audit_samples) options.coverage_samples = *cmd.audit_samples;
  if (cmd.audit_seed) options.seed = *cmd.audit_seed;
  if (cmd.radius) options.radius = *cmd.radius;

  const AuditReport report = audit_tiling(certificate.triangles, certificate.cones, options);
  log << certificate.triangles.size() << " triangles, " << certificate.cones.size() << " cones\n";
  print_audit(report, log);
  return report.pass() ? ExitCode::ok : ExitCode::audit_failure;
}

ExitCode run_render(const RenderCommand& cmd, std::ostream& log) {
  try {
    const Certificate certificate = read_certificate(cmd.in_path);
    const double radius = cmd.viewport_radius.value_or(1.1 * certificate.params.radius);
    write_text_file(cmd.out_path, render_svg(certificate, radius));
  } catch (const std::exception& e) {
    log << e.what() << '\n';
    return ExitCode::io_failure;
  }
  return ExitCode::ok;
}

}  // namespace noncongruent
