#include "bperm/svg.hpp"

#include <algorithm>
#include <sstream>

#include "bperm/errors.hpp"
#include "bperm/oracle.hpp"

namespace bperm {

namespace {

// Monotone-chain convex hull of lexicographically sorted integer points.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  if (pts.size() <= 2) return pts;
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

std::string render_svg(const MinkowskiExpression& p, const Limits& limits) {
  if (p.n() != 2)
    fail(Errc::unsupported_dimension,
         "rendering supports n = 2 only, got n = " + std::to_string(p.n()));

  const std::vector<LatticePoint> points = lattice_points(p, limits);
  const OctantLabel positive(std::vector<int>{1, 1});
  const std::vector<LatticePoint> shifted =
      lattice_points_minus(p, cube_corners(positive), limits);
  const std::vector<LatticePoint> hull = convex_hull(points);

  auto box = bounding_box(p);
  const std::int64_t lo_x = static_cast<std::int64_t>(box[0].first) - 1;
  const std::int64_t hi_x = static_cast<std::int64_t>(box[0].second) + 1;
  const std::int64_t lo_y = static_cast<std::int64_t>(box[1].first) - 1;
  const std::int64_t hi_y = static_cast<std::int64_t>(box[1].second) + 1;

  const std::int64_t scale = 48;
  const std::int64_t margin = 16;
  auto sx = [&](std::int64_t x) { return margin + (x - lo_x) * scale; };
  auto sy = [&](std::int64_t y) { return margin + (hi_y - y) * scale; };
  const std::int64_t width = sx(hi_x) + margin;
  const std::int64_t height = sy(lo_y) + margin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <style>.shifted{fill:#c0392b;} .lattice{fill:#2c3e50;} "
         ".hull{fill:#d6eaf8;fill-opacity:0.6;stroke:#21618c;stroke-width:2;} "
         ".axis{stroke:#7f8c8d;stroke-width:1;} .quad{stroke:none;}</style>\n";

  // Quadrant shading inside the frame, alternating tints around the origin.
  struct Quad {
    std::int64_t x0, x1, y0, y1;
    const char* fill;
  };
  const Quad quads[] = {
      {0, hi_x, 0, hi_y, "#fdfefe"},
      {0, hi_x, lo_y, 0, "#f2f4f4"},
      {lo_x, 0, 0, hi_y, "#f2f4f4"},
      {lo_x, 0, lo_y, 0, "#e8eaed"},
  };
  for (const Quad& q : quads) {
    if (q.x0 >= q.x1 || q.y0 >= q.y1) continue;
    out << "  <rect class=\"quad\" x=\"" << sx(q.x0) << "\" y=\"" << sy(q.y1) << "\" width=\""
        << (q.x1 - q.x0) * scale << "\" height=\"" << (q.y1 - q.y0) * scale << "\" fill=\""
        << q.fill << "\"/>\n";
  }

  // Axes.
  out << "  <line class=\"axis\" x1=\"" << sx(lo_x) << "\" y1=\"" << sy(0) << "\" x2=\""
      << sx(hi_x) << "\" y2=\"" << sy(0) << "\"/>\n";
  out << "  <line class=\"axis\" x1=\"" << sx(0) << "\" y1=\"" << sy(lo_y) << "\" x2=\""
      << sx(0) << "\" y2=\"" << sy(hi_y) << "\"/>\n";

  // Polygon boundary (or a degenerate segment/point).
  if (hull.size() >= 2) {
    out << "  <polygon class=\"hull\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (i) out << ' ';
      out << sx(hull[i][0]) << ',' << sy(hull[i][1]);
    }
    out << "\"/>\n";
  }

  for (const LatticePoint& q : points)
    out << "  <circle class=\"lattice\" cx=\"" << sx(q[0]) << "\" cy=\"" << sy(q[1])
        << "\" r=\"3\"/>\n";
  for (const LatticePoint& q : shifted)
    out << "  <circle class=\"shifted\" cx=\"" << sx(q[0]) << "\" cy=\"" << sy(q[1])
        << "\" r=\"6\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace bperm
