#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "noncongruent/geometry.hpp"
#include "noncongruent/splitting.hpp"
#include "noncongruent/verification.hpp"

namespace noncongruent {

inline constexpr int kCertificateFormatVersion = 1;

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Audit results as stored in a certificate, together with the sampling
// settings needed to reproduce them.
struct AuditSummary {
  bool pass = false;
  AuditFlags flags;
  double area_max_error = 0.0;
  double perimeter_max = 0.0;
  double perimeter_bound = 0.0;
  double initial_perimeter_max = 0.0;
  double initial_perimeter_bound = 0.0;
  std::size_t property_p_violations = 0;
  double min_congruence_separation = 0.0;
  double separation_threshold = 0.0;
  std::size_t overlap_pairs = 0;
  double max_overlap_area = 0.0;
  double coverage_radius = 0.0;
  std::uint64_t coverage_samples = 0;
  std::uint64_t coverage_misses = 0;
  std::uint64_t coverage_seed = 0;
  double accounting_relative_error = 0.0;

  static AuditSummary from(const AuditReport& report, const AuditOptions& options);
};

struct Certificate {
  int format_version = kCertificateFormatVersion;
  RunParams params;
  RunOutcome outcome = RunOutcome::covered;
  long step_count = 0;
  std::vector<Triangle> triangles;
  std::vector<Cone> cones;  // priority order
  std::vector<Event> events;
  std::optional<AuditSummary> audit;
};

Certificate make_certificate(const TilingState& state, RunOutcome outcome, const std::optional<AuditSummary>& audit);

// JSON text. Derived quantities (areas, perimeters, signatures, cone angles
// and widths) are recomputed from the geometry on every write, so that
// serialize(parse(serialize(c))) == serialize(c).
std::string serialize(const Certificate& certificate);

// Throws CertificateError naming the offending JSON location.
Certificate parse_certificate(std::string_view text);

Certificate read_certificate(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

AuditOptions audit_options_for(const Certificate& certificate);

}  // namespace noncongruent
