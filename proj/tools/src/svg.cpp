#include "systolic_cli/svg.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <variant>

namespace systolic::cli {
namespace {

constexpr double kScale = 80.0;
constexpr double kMargin = 40.0;
constexpr const char* kCounted = "#2a9d3f";
constexpr const char* kExcluded = "#d62828";
constexpr const char* kBelt = "#1d4e89";

std::string num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", value);
  return buffer;
}

struct Frame {
  double width = 0.0;   // chart units along the axis
  double height = 0.0;  // circumference
  double px(double x) const { return kMargin + x * kScale; }
  double py(double y) const { return kMargin + y * kScale; }
};

std::string header(double width, double height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

// Meridian gaps whose class is a listed systole.
std::set<int> counted_gaps(const Census& census) {
  std::set<int> gaps;
  for (const GeodesicClass& g : census.classes) {
    if (g.kind != ClassKind::meridian) continue;
    gaps.insert(std::get<MeridianCertificate>(g.certificate).gap);
  }
  return gaps;
}

// Boundary of the r-neighbourhood of a segment.
std::string stadium(const Frame& f, PlanePoint p, PlanePoint q, double r) {
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double len = std::hypot(dx, dy);
  const double nx = -dy / len * r;
  const double ny = dx / len * r;
  const std::string R = num(r * kScale);
  std::ostringstream d;
  d << "M " << num(f.px(p.x + nx)) << ' ' << num(f.py(p.y + ny)) << " L " << num(f.px(q.x + nx))
    << ' ' << num(f.py(q.y + ny)) << " A " << R << ' ' << R << " 0 0 0 " << num(f.px(q.x - nx))
    << ' ' << num(f.py(q.y - ny)) << " L " << num(f.px(p.x - nx)) << ' ' << num(f.py(p.y - ny))
    << " A " << R << ' ' << R << " 0 0 0 " << num(f.px(p.x + nx)) << ' ' << num(f.py(p.y + ny))
    << " Z";
  return d.str();
}

}  // namespace

std::string systoles_svg(const SphereModel& model, const Census& census) {
  const CylinderLattice& lattice = model.lattice();
  const double r = model.radius().to_double();
  const double spacing = 2.0 * model.half_spacing().to_double();
  Frame f;
  f.width = spacing * (model.n() + 1);
  f.height = model.circumference().to_double();

  std::ostringstream out;
  out << header(2 * kMargin + f.width * kScale, 2 * kMargin + f.height * kScale + 30);
  out << "<defs><clipPath id=\"band\"><rect x=\"" << num(f.px(0)) << "\" y=\"" << num(f.py(0))
      << "\" width=\"" << num(f.width * kScale) << "\" height=\"" << num(f.height * kScale)
      << "\"/></clipPath></defs>\n";
  out << "<rect x=\"" << num(f.px(0)) << "\" y=\"" << num(f.py(0)) << "\" width=\""
      << num(f.width * kScale) << "\" height=\"" << num(f.height * kScale)
      << "\" fill=\"#f4f1ea\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
  out << "<g clip-path=\"url(#band)\">\n";

  for (const GeodesicClass& g : census.classes) {
    if (g.kind != ClassKind::belt) continue;
    const auto& cert = std::get<BeltCertificate>(g.certificate);
    if (cert.hull.size() != 2) continue;
    PlanePoint p = lattice.chart_unwrapped(cert.hull[0]);
    PlanePoint q = lattice.chart_unwrapped(cert.hull[1]);
    const double shift = std::floor(p.y / f.height) * f.height;
    p.y -= shift;
    q.y -= shift;
    for (int copy = -1; copy <= 1; ++copy) {
      const PlanePoint a{p.x, p.y + copy * f.height};
      const PlanePoint b{q.x, q.y + copy * f.height};
      out << "<path d=\"" << stadium(f, a, b, r * 1.12) << "\" fill=\"none\" stroke=\"" << kBelt
          << "\" stroke-width=\"1.2\"/>\n";
    }
  }

  for (const Chimney& c : model.chimneys()) {
    const PlanePoint p = lattice.chart(lattice.canonical_lift(c));
    for (int copy = -1; copy <= 1; ++copy) {
      const double y = p.y + copy * f.height;
      out << "<circle cx=\"" << num(f.px(p.x)) << "\" cy=\"" << num(f.py(y)) << "\" r=\""
          << num(r * kScale) << "\" fill=\"#444\"/>\n";
      out << "<text x=\"" << num(f.px(p.x)) << "\" y=\"" << num(f.py(y) + 4)
          << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"white\">" << c.axial_index
          << "</text>\n";
    }
  }
  out << "</g>\n";

  const std::set<int> counted = counted_gaps(census);
  for (int gap = 0; gap <= model.n(); ++gap) {
    const double x = f.px(spacing * (gap + 0.5));
    const bool listed = counted.count(gap) > 0;
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(f.py(f.height)) << "\" stroke=\"" << (listed ? kCounted : kExcluded)
        << "\" stroke-width=\"1.5\"" << (listed ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
  }
  out << "<text x=\"" << num(kMargin) << "\" y=\"" << num(f.py(f.height) + 24)
      << "\" font-size=\"13\">n = " << model.n() << ", systoles: " << census.counts.total
      << " (belts " << census.counts.belts_adjacent << ", meridians "
      << census.counts.meridians_remaining << ")</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string sphere_svg(const SphereModel& model, const Census& census) {
  const CylinderLattice& lattice = model.lattice();
  const double spacing = 2.0 * model.half_spacing().to_double();
  const double circumference = model.circumference().to_double();
  const double radius = circumference / (2.0 * std::acos(-1.0));
  Frame f;
  f.width = spacing * (model.n() + 1) + 2 * radius;
  f.height = 2 * radius;
  const double left = radius;
  const double right = radius + spacing * (model.n() + 1);

  std::ostringstream out;
  out << header(2 * kMargin + f.width * kScale, 2 * kMargin + f.height * kScale + 30);
  // Cylinder with hemispherical caps.
  out << "<path d=\"M " << num(f.px(left)) << ' ' << num(f.py(0)) << " L " << num(f.px(right))
      << ' ' << num(f.py(0)) << " A " << num(radius * kScale) << ' ' << num(radius * kScale)
      << " 0 0 1 " << num(f.px(right)) << ' ' << num(f.py(f.height)) << " L " << num(f.px(left))
      << ' ' << num(f.py(f.height)) << " A " << num(radius * kScale) << ' '
      << num(radius * kScale) << " 0 0 1 " << num(f.px(left)) << ' ' << num(f.py(0))
      << " Z\" fill=\"#f4f1ea\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";

  const std::set<int> counted = counted_gaps(census);
  for (int gap = 0; gap <= model.n(); ++gap) {
    const double x = f.px(left + spacing * (gap + 0.5));
    const bool listed = counted.count(gap) > 0;
    out << "<ellipse cx=\"" << num(x) << "\" cy=\"" << num(f.py(radius)) << "\" rx=\""
        << num(0.12 * radius * kScale) << "\" ry=\"" << num(radius * kScale) << "\" fill=\"none\" stroke=\""
        << (listed ? kCounted : kExcluded) << "\" stroke-width=\"1.2\""
        << (listed ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
  }
  // Chimneys by their angle around the axis; those behind the axis in grey.
  for (const Chimney& c : model.chimneys()) {
    const PlanePoint p = lattice.chart(lattice.canonical_lift(c));
    const double angle = 2.0 * std::acos(-1.0) * p.y / circumference;
    const double y = radius - 0.85 * radius * std::cos(angle);
    const bool front = std::sin(angle) >= 0;
    const double x = f.px(left + p.x);
    out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(f.py(y)) << "\" r=\"7\" fill=\""
        << (front ? "#444" : "#bbb") << "\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(f.py(y) + 4)
        << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"white\">" << c.axial_index
        << "</text>\n";
  }
  out << "<text x=\"" << num(kMargin) << "\" y=\"" << num(f.py(f.height) + 24)
      << "\" font-size=\"13\">sphere with " << model.n() << " punctures, "
      << census.counts.total << " systoles</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace systolic::cli
