#include "noncongruent/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace noncongruent {

namespace {

std::string coord(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

// SVG's y axis points down.
std::string xy(Point p) { return coord(p.x) + "," + coord(-p.y); }

}  // namespace

std::string render_svg(std::span<const Triangle> triangles, std::span<const Cone> cones, double viewport_radius) {
  std::vector<const Triangle*> tri_order;
  for (const Triangle& t : triangles) tri_order.push_back(&t);
  std::stable_sort(tri_order.begin(), tri_order.end(), [](auto* a, auto* b) { return a->id() < b->id(); });
  std::vector<const Cone*> cone_order;
  for (const Cone& c : cones) cone_order.push_back(&c);
  std::stable_sort(cone_order.begin(), cone_order.end(), [](auto* a, auto* b) { return a->id() < b->id(); });

  const double v = viewport_radius;
  const double stroke = std::max(v / 800.0, 1e-4);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"" +
         coord(-v) + " " + coord(-v) + " " + coord(2 * v) + " " + coord(2 * v) + "\">\n";
  out += "<rect x=\"" + coord(-v) + "\" y=\"" + coord(-v) + "\" width=\"" + coord(2 * v) + "\" height=\"" +
         coord(2 * v) + "\" fill=\"white\"/>\n";

  out += "<g id=\"triangles\" fill=\"#dde6f2\" stroke=\"#1f3b5c\" stroke-width=\"" + coord(stroke) +
         "\" stroke-linejoin=\"round\">\n";
  for (const Triangle* t : tri_order) {
    out += "<polygon id=\"t" + std::to_string(t->id()) + "\" points=\"" + xy((*t)[0]) + " " + xy((*t)[1]) + " " +
           xy((*t)[2]) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"cones\" stroke=\"#c0392b\" stroke-width=\"" + coord(2 * stroke) + "\" stroke-dasharray=\"" +
         coord(8 * stroke) + "," + coord(6 * stroke) + "\">\n";
  for (const Cone* c : cone_order) {
    for (Side s : {Side::left, Side::right}) {
      const Point a = c->base(s);
      const Point b = a + (2.0 * v + norm(a)) * c->dir(s);
      out += "<line class=\"ray\" id=\"c" + std::to_string(c->id()) + (s == Side::left ? "p" : "q") + "\" x1=\"" +
             coord(a.x) + "\" y1=\"" + coord(-a.y) + "\" x2=\"" + coord(b.x) + "\" y2=\"" + coord(-b.y) + "\"/>\n";
    }
  }
  out += "</g>\n";

  out += "<circle id=\"origin\" cx=\"0.0000\" cy=\"0.0000\" r=\"" + coord(4 * stroke) + "\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string render_svg(const TilingState& state, double viewport_radius) {
  const std::vector<Cone> cones = state.cones();
  return render_svg(state.triangles(), cones, viewport_radius);
}

std::string render_svg(const Certificate& certificate, double viewport_radius) {
  return render_svg(certificate.triangles, certificate.cones, viewport_radius);
}

}  // namespace noncongruent
