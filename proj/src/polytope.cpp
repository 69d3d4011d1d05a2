#include "tck/polytope.hpp"

#include <sstream>
#include <stdexcept>

#include "tck/numeric.hpp"

namespace tck {

LabeledTrapezoid build_trapezoid(std::int64_t k, std::int64_t i, std::int64_t n, std::int64_t m) {
  if (k < 1 || i < 1 || m < 1)
    throw std::domain_error("build_trapezoid requires k, i, m >= 1");
  if (n < 0) throw std::domain_error("build_trapezoid requires n >= 0");
  require_in_cap(k, "trapezoid k");
  require_in_cap(i, "trapezoid i");
  require_in_cap(n, "trapezoid n");
  const Rational half_slope(n, 2);
  const Rational right = Rational(k) - half_slope * Rational(i);
  const Rational left = Rational(k) + half_slope * Rational(i);
  if (!right.is_positive())
    throw std::domain_error("degenerate trapezoid: k - (n/2) i = " + right.str() + " <= 0");
  LabeledTrapezoid t;
  t.vertices = {RationalPoint{Rational(0), Rational(0)}, RationalPoint{Rational(i), Rational(0)},
                RationalPoint{Rational(i), right}, RationalPoint{Rational(0), left}};
  t.edge_label = m;
  t.slope = -n;
  t.level = i;
  t.height = k;
  return t;
}

LabeledTrapezoid strip_labels(const LabeledTrapezoid& t) {
  LabeledTrapezoid stripped = t;
  stripped.edge_label = 1;
  return stripped;
}

Rational trapezoid_area(const LabeledTrapezoid& t) {
  // Shoelace over the four vertices.
  Rational twice(0);
  for (std::size_t a = 0; a < t.vertices.size(); ++a) {
    const std::size_t b = (a + 1) % t.vertices.size();
    twice += t.vertices[a].x * t.vertices[b].y - t.vertices[b].x * t.vertices[a].y;
  }
  return twice / Rational(2);
}

KarshonGraph karshon_graph_of(const LabeledTrapezoid& t) {
  // The Karshon circle fixes the two vertical-edge spheres; its moment map
  // is the horizontal coordinate, so the four corners sit at heights
  // {0, 0, i, i} and the spheres at 0 and i.
  KarshonGraph graph;
  graph.fixed_heights = {Rational(0), Rational(0), Rational(t.level), Rational(t.level)};
  graph.spheres = {KarshonGraph::LabeledSphere{Rational(0), t.edge_label},
                   KarshonGraph::LabeledSphere{Rational(t.level), t.edge_label}};
  return graph;
}

std::string trapezoid_to_json(const LabeledTrapezoid& t) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (std::size_t a = 0; a < t.vertices.size(); ++a) {
    if (a > 0) os << ",";
    os << "[[" << t.vertices[a].x.numerator() << "," << t.vertices[a].x.denominator() << "],["
       << t.vertices[a].y.numerator() << "," << t.vertices[a].y.denominator() << "]]";
  }
  os << "],\"m\":" << t.edge_label << ",\"slope\":" << t.slope << "}";
  return os.str();
}

namespace {

// Exact fixed-point decimal: all drawing coordinates here are multiples of
// 1/4 once scaled, so quarters suffice and no floating point enters.
std::string svg_coord(const Rational& v) {
  const std::int64_t quarters = (v * Rational(4)).as_integer();
  std::string s = std::to_string(quarters / 4);
  switch (quarters % 4) {
    case 0: break;
    case 2: case -2: s += ".5"; break;
    case 1: case -1: s += ".25"; break;
    default: s += ".75"; break;
  }
  return s;
}

}  // namespace

std::string trapezoid_to_svg(const LabeledTrapezoid& t) {
  const Rational scale(20);
  const Rational margin(40);
  const Rational top = t.vertices[3].y;  // tallest corner, (0, k + (n/2) i)
  // Flip the y axis so the polygon sits upright in SVG coordinates.
  const auto sx = [&](const Rational& x) { return svg_coord(x * scale + margin); };
  const auto sy = [&](const Rational& y) { return svg_coord((top - y) * scale + margin); };
  const std::int64_t width = (Rational(t.level) * scale + margin * Rational(2)).as_integer();
  const std::int64_t height =
      ((top * scale + margin * Rational(2)) * Rational(4)).as_integer() / 4 + 1;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <polygon points=\"";
  for (std::size_t a = 0; a < t.vertices.size(); ++a) {
    if (a > 0) os << " ";
    os << sx(t.vertices[a].x) << "," << sy(t.vertices[a].y);
  }
  os << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Branch-divisor labels on the two vertical edges.
  os << "  <text x=\"" << svg_coord(margin - Rational(14)) << "\" y=\""
     << sy(t.vertices[3].y / Rational(2)) << "\">" << t.edge_label << "</text>\n";
  os << "  <text x=\"" << svg_coord(Rational(t.level) * scale + margin + Rational(6)) << "\" y=\""
     << sy(t.vertices[2].y / Rational(2)) << "\">" << t.edge_label << "</text>\n";
  os << "  <text x=\"" << svg_coord(margin) << "\" y=\"" << svg_coord(Rational(16)) << "\">slope "
     << t.slope << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tck
