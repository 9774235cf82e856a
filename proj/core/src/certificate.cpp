#include "noncongruent/certificate.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace noncongruent {

using nlohmann::json;

namespace {

json point_json(Point p) { return json::array({p.x, p.y}); }

// +inf has no JSON spelling; it is written as null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json provenance_json(const Provenance& p) {
  if (p.kind == Provenance::Kind::initial) return {{"kind", "initial"}, {"region", p.region}};
  return {{"kind", "cut"}, {"cone", p.cone}, {"side", to_string(p.side)}};
}

json triangle_json(const Triangle& t) {
  const TriangleMetrics m = triangle_metrics(t);
  return {{"id", t.id()},
          {"vertices", json::array({point_json(t[0]), point_json(t[1]), point_json(t[2])})},
          {"provenance", provenance_json(t.provenance())},
          {"area", m.area},
          {"perimeter", m.perimeter},
          {"signature", json::array({m.signature.sides()[0], m.signature.sides()[1], m.signature.sides()[2]})}};
}

json cone_json(const Cone& c) {
  const ConeAngles a = cone_angles(c);
  return {{"id", c.id()},
          {"base", json::array({point_json(c.base_p()), point_json(c.base_q())})},
          {"directions", json::array({point_json(c.dir_p()), point_json(c.dir_q())})},
          {"angles", json::array({a.at_p, a.at_q})},
          {"width", cone_width(c)}};
}

json event_json(const Event& e) {
  json j{{"kind", to_string(e.kind)}, {"step", e.step}};
  switch (e.kind) {
    case Event::Kind::init:
      j["legs"] = json::array({e.legs[0], e.legs[1], e.legs[2]});
      j["attempts"] = e.attempts;
      break;
    case Event::Kind::cut:
      j["cone"] = e.cone;
      j["width"] = e.width;
      j["side"] = to_string(e.side);
      j["triangle"] = e.triangle;
      j["remainder"] = e.remainder;
      break;
    case Event::Kind::split:
      j["cone"] = e.cone;
      j["width"] = e.width;
      j["t"] = e.t;
      j["phi"] = e.phi;
      j["parts"] = json::array({e.parts[0], e.parts[1]});
      j["attempts"] = e.attempts;
      break;
  }
  return j;
}

json flags_json(const AuditFlags& f) {
  return {{"area", f.area},
          {"perimeter", f.perimeter},
          {"initial_perimeter", f.initial_perimeter},
          {"property_p", f.property_p},
          {"noncongruence", f.noncongruence},
          {"overlap", f.overlap},
          {"coverage", f.coverage},
          {"area_accounting", f.area_accounting}};
}

json audit_json(const AuditSummary& a) {
  return {{"pass", a.pass},
          {"flags", flags_json(a.flags)},
          {"area_max_error", a.area_max_error},
          {"perimeter_max", a.perimeter_max},
          {"perimeter_bound", a.perimeter_bound},
          {"initial_perimeter_max", a.initial_perimeter_max},
          {"initial_perimeter_bound", a.initial_perimeter_bound},
          {"property_p_violations", a.property_p_violations},
          {"min_congruence_separation", finite_or_null(a.min_congruence_separation)},
          {"separation_threshold", a.separation_threshold},
          {"overlap_pairs", a.overlap_pairs},
          {"max_overlap_area", a.max_overlap_area},
          {"coverage_radius", a.coverage_radius},
          {"coverage_samples", a.coverage_samples},
          {"coverage_misses", a.coverage_misses},
          {"coverage_seed", a.coverage_seed},
          {"accounting_relative_error", a.accounting_relative_error}};
}

json params_json(const RunParams& p) {
  return {{"seed", p.seed},       {"radius", p.radius},   {"max_steps", p.max_steps},      {"depth", p.depth},
          {"margin", p.margin},   {"tol", p.tol},         {"max_attempts", p.max_attempts}};
}

// --- parsing -------------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw CertificateError("certificate " + (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing field");
  return *it;
}

const json& array_of(const json& j, std::size_t size, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size != 0 && j.size() != size) fail(path, "expected " + std::to_string(size) + " elements");
  return j;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double number_or_inf(const json& j, const std::string& path) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return number(j, path);
}

std::uint64_t unsigned_int(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

long signed_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

bool boolean(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string text(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double num_field(const json& obj, const std::string& key, const std::string& path) {
  return number(field(obj, key, path), path + "/" + key);
}

Point parse_point(const json& j, const std::string& path) {
  array_of(j, 2, path);
  return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

Side parse_side(const json& j, const std::string& path) {
  const std::string s = text(j, path);
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  fail(path, "expected \"left\" or \"right\"");
}

Provenance parse_provenance(const json& j, const std::string& path) {
  const std::string kind = text(field(j, "kind", path), path + "/kind");
  if (kind == "initial") {
    return Provenance::initial(static_cast<int>(signed_int(field(j, "region", path), path + "/region")));
  }
  if (kind == "cut") {
    return Provenance::cut(unsigned_int(field(j, "cone", path), path + "/cone"),
                           parse_side(field(j, "side", path), path + "/side"));
  }
  fail(path + "/kind", "unknown provenance kind \"" + kind + "\"");
}

Triangle parse_triangle(const json& j, const std::string& path) {
  const json& v = array_of(field(j, "vertices", path), 3, path + "/vertices");
  const Point a = parse_point(v[0], path + "/vertices/0");
  const Point b = parse_point(v[1], path + "/vertices/1");
  const Point c = parse_point(v[2], path + "/vertices/2");
  try {
    return Triangle(a, b, c, unsigned_int(field(j, "id", path), path + "/id"),
                    parse_provenance(field(j, "provenance", path), path + "/provenance"));
  } catch (const GeometryError& e) {
    fail(path, e.what());
  }
}

Cone parse_cone(const json& j, const std::string& path) {
  const json& base = array_of(field(j, "base", path), 2, path + "/base");
  const json& dirs = array_of(field(j, "directions", path), 2, path + "/directions");
  try {
    return Cone(parse_point(base[0], path + "/base/0"), parse_point(base[1], path + "/base/1"),
                parse_point(dirs[0], path + "/directions/0"), parse_point(dirs[1], path + "/directions/1"),
                unsigned_int(field(j, "id", path), path + "/id"));
  } catch (const GeometryError& e) {
    fail(path, e.what());
  }
}

Event parse_event(const json& j, const std::string& path) {
  Event e;
  const std::string kind = text(field(j, "kind", path), path + "/kind");
  e.step = signed_int(field(j, "step", path), path + "/step");
  if (kind == "init") {
    e.kind = Event::Kind::init;
    const json& legs = array_of(field(j, "legs", path), 3, path + "/legs");
    for (std::size_t i = 0; i < 3; ++i) e.legs[i] = number(legs[i], path + "/legs/" + std::to_string(i));
    e.attempts = static_cast<int>(signed_int(field(j, "attempts", path), path + "/attempts"));
  } else if (kind == "cut") {
    e.kind = Event::Kind::cut;
    e.cone = unsigned_int(field(j, "cone", path), path + "/cone");
    e.width = num_field(j, "width", path);
    e.side = parse_side(field(j, "side", path), path + "/side");
    e.triangle = unsigned_int(field(j, "triangle", path), path + "/triangle");
    e.remainder = unsigned_int(field(j, "remainder", path), path + "/remainder");
  } else if (kind == "split") {
    e.kind = Event::Kind::split;
    e.cone = unsigned_int(field(j, "cone", path), path + "/cone");
    e.width = num_field(j, "width", path);
    e.t = num_field(j, "t", path);
    e.phi = num_field(j, "phi", path);
    const json& parts = array_of(field(j, "parts", path), 2, path + "/parts");
    e.parts = {unsigned_int(parts[0], path + "/parts/0"), unsigned_int(parts[1], path + "/parts/1")};
    e.attempts = static_cast<int>(signed_int(field(j, "attempts", path), path + "/attempts"));
  } else {
    fail(path + "/kind", "unknown event kind \"" + kind + "\"");
  }
  return e;
}

RunParams parse_params(const json& j, const std::string& path) {
  RunParams p;
  p.seed = unsigned_int(field(j, "seed", path), path + "/seed");
  p.radius = num_field(j, "radius", path);
  p.max_steps = signed_int(field(j, "max_steps", path), path + "/max_steps");
  p.depth = static_cast<int>(signed_int(field(j, "depth", path), path + "/depth"));
  p.margin = num_field(j, "margin", path);
  p.tol = num_field(j, "tol", path);
  p.max_attempts = static_cast<int>(signed_int(field(j, "max_attempts", path), path + "/max_attempts"));
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
  return p;
}

AuditSummary parse_audit(const json& j, const std::string& path) {
  AuditSummary a;
  a.pass = boolean(field(j, "pass", path), path + "/pass");
  const std::string fp = path + "/flags";
  const json& f = field(j, "flags", path);
  a.flags.area = boolean(field(f, "area", fp), fp + "/area");
  a.flags.perimeter = boolean(field(f, "perimeter", fp), fp + "/perimeter");
  a.flags.initial_perimeter = boolean(field(f, "initial_perimeter", fp), fp + "/initial_perimeter");
  a.flags.property_p = boolean(field(f, "property_p", fp), fp + "/property_p");
  a.flags.noncongruence = boolean(field(f, "noncongruence", fp), fp + "/noncongruence");
  a.flags.overlap = boolean(field(f, "overlap", fp), fp + "/overlap");
  a.flags.coverage = boolean(field(f, "coverage", fp), fp + "/coverage");
  a.flags.area_accounting = boolean(field(f, "area_accounting", fp), fp + "/area_accounting");
  a.area_max_error = num_field(j, "area_max_error", path);
  a.perimeter_max = num_field(j, "perimeter_max", path);
  a.perimeter_bound = num_field(j, "perimeter_bound", path);
  a.initial_perimeter_max = num_field(j, "initial_perimeter_max", path);
  a.initial_perimeter_bound = num_field(j, "initial_perimeter_bound", path);
  a.property_p_violations = unsigned_int(field(j, "property_p_violations", path), path + "/property_p_violations");
  a.min_congruence_separation =
      number_or_inf(field(j, "min_congruence_separation", path), path + "/min_congruence_separation");
  a.separation_threshold = num_field(j, "separation_threshold", path);
  a.overlap_pairs = unsigned_int(field(j, "overlap_pairs", path), path + "/overlap_pairs");
  a.max_overlap_area = num_field(j, "max_overlap_area", path);
  a.coverage_radius = num_field(j, "coverage_radius", path);
  a.coverage_samples = unsigned_int(field(j, "coverage_samples", path), path + "/coverage_samples");
  a.coverage_misses = unsigned_int(field(j, "coverage_misses", path), path + "/coverage_misses");
  a.coverage_seed = unsigned_int(field(j, "coverage_seed", path), path + "/coverage_seed");
  a.accounting_relative_error = num_field(j, "accounting_relative_error", path);
  return a;
}

}  // namespace

AuditSummary AuditSummary::from(const AuditReport& r, const AuditOptions& options) {
  AuditSummary a;
  a.pass = r.pass();
  a.flags = r.flags;
  a.area_max_error = r.area_max_error;
  a.perimeter_max = r.perimeter_max;
  a.perimeter_bound = r.perimeter_bound;
  a.initial_perimeter_max = r.initial_perimeter_max;
  a.initial_perimeter_bound = r.initial_perimeter_bound;
  a.property_p_violations = r.property_p_violations.size();
  a.min_congruence_separation = r.min_congruence_separation;
  a.separation_threshold = r.separation_threshold;
  a.overlap_pairs = r.overlap_pairs.size();
  a.max_overlap_area = r.max_overlap_area;
  a.coverage_radius = r.coverage_radius;
  a.coverage_samples = r.coverage_samples;
  a.coverage_misses = r.coverage_misses;
  a.coverage_seed = options.seed;
  a.accounting_relative_error = r.accounting_relative_error;
  return a;
}

Certificate make_certificate(const TilingState& state, RunOutcome outcome, const std::optional<AuditSummary>& audit) {
  Certificate c;
  c.params = state.params();
  c.outcome = outcome;
  c.step_count = state.step_count();
  c.triangles = state.triangles();
  c.cones = state.cones();
  c.events = state.events();
  c.audit = audit;
  return c;
}

std::string serialize(const Certificate& certificate) {
  json triangles = json::array();
  for (const Triangle& t : certificate.triangles) triangles.push_back(triangle_json(t));
  json cones = json::array();
  for (const Cone& c : certificate.cones) cones.push_back(cone_json(c));
  json events = json::array();
  for (const Event& e : certificate.events) events.push_back(event_json(e));

  json doc{{"format_version", certificate.format_version},
           {"params", params_json(certificate.params)},
           {"outcome", to_string(certificate.outcome)},
           {"step_count", certificate.step_count},
           {"triangles", std::move(triangles)},
           {"cones", std::move(cones)},
           {"events", std::move(events)},
           {"audit", certificate.audit ? audit_json(*certificate.audit) : json(nullptr)}};
  return doc.dump(1) + "\n";
}

Certificate parse_certificate(std::string_view text_in) {
  json doc;
  try {
    doc = json::parse(text_in.begin(), text_in.end());
  } catch (const json::parse_error& e) {
    throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
  }

  Certificate c;
  const long version = signed_int(field(doc, "format_version", ""), "/format_version");
  if (version != kCertificateFormatVersion) {
    fail("/format_version", "unsupported version " + std::to_string(version));
  }
  c.format_version = static_cast<int>(version);
  c.params = parse_params(field(doc, "params", ""), "/params");

  const std::string outcome = text(field(doc, "outcome", ""), "/outcome");
  if (outcome == "covered") {
    c.outcome = RunOutcome::covered;
  } else if (outcome == "step_budget_exhausted") {
    c.outcome = RunOutcome::step_budget_exhausted;
  } else {
    fail("/outcome", "unknown outcome \"" + outcome + "\"");
  }
  c.step_count = signed_int(field(doc, "step_count", ""), "/step_count");

  const json& triangles = array_of(field(doc, "triangles", ""), 0, "/triangles");
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    c.triangles.push_back(parse_triangle(triangles[i], "/triangles/" + std::to_string(i)));
  }
  const json& cones = array_of(field(doc, "cones", ""), 0, "/cones");
  for (std::size_t i = 0; i < cones.size(); ++i) c.cones.push_back(parse_cone(cones[i], "/cones/" + std::to_string(i)));
  const json& events = array_of(field(doc, "events", ""), 0, "/events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    c.events.push_back(parse_event(events[i], "/events/" + std::to_string(i)));
  }
  const json& audit = field(doc, "audit", "");
  if (!audit.is_null()) c.audit = parse_audit(audit, "/audit");
  return c;
}

Certificate read_certificate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

AuditOptions audit_options_for(const Certificate& certificate) {
  AuditOptions o = audit_options_for(certificate.params);
  if (certificate.audit) {
    o.coverage_samples = certificate.audit->coverage_samples;
    o.seed = certificate.audit->coverage_seed;
  }
  return o;
}

}  // namespace noncongruent
