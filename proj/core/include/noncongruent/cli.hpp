#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "noncongruent/certificate.hpp"
#include "noncongruent/splitting.hpp"
#include "noncongruent/verification.hpp"

namespace noncongruent {

enum class ExitCode : int { ok = 0, audit_failure = 1, generation_failure = 2, io_failure = 3 };

struct Generated {
  TilingState state;
  RunOutcome outcome;
  AuditReport audit;
  Certificate certificate;
};

// init_tiling + run + audit_tiling. Throws SamplingError or
// std::invalid_argument on generation failure.
Generated generate(const RunParams& params, const AuditOptions& audit_options);

struct GenerateCommand {
  RunParams params;
  std::optional<std::string> out_path;  // stdout when empty
  std::optional<std::string> svg_path;
  std::optional<double> svg_radius;     // defaults to 1.1 * radius
  std::size_t audit_samples = 100000;
  std::uint64_t audit_seed = AuditOptions{}.seed;
};

struct VerifyCommand {
  std::string in_path;
  std::optional<std::size_t> audit_samples;
  std::optional<std::uint64_t> audit_seed;
  std::optional<double> radius;
};

struct RenderCommand {
  std::string in_path;
  std::string out_path;
  std::optional<double> viewport_radius;
};

ExitCode run_generate(const GenerateCommand& cmd, std::ostream& out, std::ostream& log);
ExitCode run_verify(const VerifyCommand& cmd, std::ostream& log);
ExitCode run_render(const RenderCommand& cmd, std::ostream& log);

void print_audit(const AuditReport& report, std::ostream& log);

}  // namespace noncongruent
