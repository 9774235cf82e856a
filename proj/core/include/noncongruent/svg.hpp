#pragma once

#include <span>
#include <string>

#include "noncongruent/certificate.hpp"
#include "noncongruent/geometry.hpp"
#include "noncongruent/splitting.hpp"

namespace noncongruent {

// SVG 1.1 document: one stroked polygon per triangle, two dashed rays per
// live cone and a marker at the origin. Elements are emitted in id order and
// coordinates are printed to 1e-4; the y axis points up.
std::string render_svg(std::span<const Triangle> triangles, std::span<const Cone> cones, double viewport_radius);
std::string render_svg(const TilingState& state, double viewport_radius);
std::string render_svg(const Certificate& certificate, double viewport_radius);

}  // namespace noncongruent
