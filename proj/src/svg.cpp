#include "miquel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "miquel/centers.hpp"
#include "miquel/miquel.hpp"

namespace miquel {

namespace {

// Fixed six decimals; "-0.000000" would make output depend on rounding noise.
std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos) return "0.000000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// "S_A" -> S with a subscript A.
std::string label_markup(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] == '_' && i + 1 < label.size()) {
      out += "<tspan baseline-shift=\"sub\" font-size=\"75%\">" + escape(label.substr(i + 1, 1)) +
             "</tspan>";
      ++i;
    } else {
      out += escape(std::string(1, label[i]));
    }
  }
  return out;
}

struct Segment {
  Point a, b;
  std::string cls;
};
struct Ring {
  Circle c;
  std::string cls;
};
struct Polygon {
  std::vector<Point> pts;
  std::string cls;
};
struct Dot {
  Point p;
  std::string label;
  std::string cls;
};
// Unbounded line, clipped to the view disk once the bounds are known.
struct FullLine {
  Line line;
  std::string cls;
};

class Figure {
 public:
  explicit Figure(Point center) : center_(center) {}

  void ring(const Circle& c, const std::string& cls) {
    rings_.push_back({c, cls});
    reach_ = std::max(reach_, distance(center_, c.center) + c.radius);
  }
  void segment(Point a, Point b, const std::string& cls) {
    segments_.push_back({a, b, cls});
    include(a);
    include(b);
  }
  void polygon(std::vector<Point> pts, const std::string& cls) {
    for (const Point& p : pts) include(p);
    polygons_.push_back({std::move(pts), cls});
  }
  void dot(Point p, const std::string& label, const std::string& cls = "pt") {
    include(p);
    dots_.push_back({p, label, cls});
  }
  void line(const Line& l, const std::string& cls) { lines_.push_back({l, cls}); }

  std::string render(int size) const {
    const double r = 1.2 * reach_;
    const double span = 2.0 * r;
    const double dot_r = 0.008 * span;
    const double font = 0.04 * span;
    const double gap = 0.012 * span;
    auto X = [](const Point& p) { return num(p.x); };
    auto Y = [](const Point& p) { return num(-p.y); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"" << num(center_.x - r) << ' ' << num(-center_.y - r) << ' ' << num(span)
       << ' ' << num(span) << "\">\n";
    os << "<style>\n"
          "path,line,circle,polygon{vector-effect:non-scaling-stroke;stroke-width:1.5px}\n"
          ".tri{fill:none;stroke:#000}\n"
          ".circ{fill:none;stroke:#888;stroke-dasharray:6 4}\n"
          ".mq{fill:none;stroke:#1f77b4}\n"
          ".mqt{fill:#1f77b4;fill-opacity:0.12;stroke:#1f77b4}\n"
          ".aux{fill:none;stroke:#2ca02c}\n"
          ".perp{fill:none;stroke:#999;stroke-dasharray:3 3}\n"
          ".simson{stroke:#d62728}\n"
          ".pt{fill:#000}\n"
          ".key{fill:#d62728}\n"
          "text{font-family:serif}\n"
          "</style>\n";
    os << "<rect x=\"" << num(center_.x - r) << "\" y=\"" << num(-center_.y - r) << "\" width=\""
       << num(span) << "\" height=\"" << num(span) << "\" fill=\"#fff\"/>\n";
    for (const Ring& c : rings_) {
      os << "<circle class=\"" << c.cls << "\" cx=\"" << X(c.c.center) << "\" cy=\""
         << Y(c.c.center) << "\" r=\"" << num(c.c.radius) << "\"/>\n";
    }
    for (const FullLine& l : lines_) {
      // Chord of the view disk along the line.
      const Point foot = l.line.project(center_);
      const double d = distance(foot, center_);
      if (d >= r) continue;
      const double h = std::sqrt(r * r - d * d);
      const Point a = foot - l.line.direction * h;
      const Point b = foot + l.line.direction * h;
      os << "<line class=\"" << l.cls << "\" x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\""
         << X(b) << "\" y2=\"" << Y(b) << "\"/>\n";
    }
    for (const Segment& s : segments_) {
      os << "<line class=\"" << s.cls << "\" x1=\"" << X(s.a) << "\" y1=\"" << Y(s.a)
         << "\" x2=\"" << X(s.b) << "\" y2=\"" << Y(s.b) << "\"/>\n";
    }
    for (const Polygon& p : polygons_) {
      os << "<polygon class=\"" << p.cls << "\" points=\"";
      for (std::size_t i = 0; i < p.pts.size(); ++i) {
        if (i) os << ' ';
        os << X(p.pts[i]) << ',' << Y(p.pts[i]);
      }
      os << "\"/>\n";
    }
    for (const Dot& d : dots_) {
      os << "<circle class=\"" << d.cls << "\" cx=\"" << X(d.p) << "\" cy=\"" << Y(d.p)
         << "\" r=\"" << num(dot_r) << "\"/>\n";
    }
    for (const Dot& d : dots_) {
      if (d.label.empty()) continue;
      const Point at{d.p.x + gap, d.p.y + gap};
      os << "<text x=\"" << X(at) << "\" y=\"" << Y(at) << "\" font-size=\"" << num(font)
         << "\">" << label_markup(d.label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
  }

 private:
  void include(const Point& p) { reach_ = std::max(reach_, distance(center_, p)); }

  Point center_;
  double reach_{0.0};
  std::vector<Ring> rings_;
  std::vector<Segment> segments_;
  std::vector<Polygon> polygons_;
  std::vector<Dot> dots_;
  std::vector<FullLine> lines_;
};

Triad scene_triad(const SceneSpec& s, const Triangle& t, const Tolerance& tol) {
  if (s.triad) return Triad(t, (*s.triad)[0], (*s.triad)[1], (*s.triad)[2]);
  if (s.p) return family_member(t, *s.p, DirectedAngle::from_radians(s.theta.value_or(0.0)), tol);
  throw SceneError("Miquel elements need \"triad\" or \"P\" in the scene");
}

const char* kXYZ[3] = {"X", "Y", "Z"};

}  // namespace

FigureElement parse_figure_element(const std::string& name) {
  for (FigureElement e : {FigureElement::circumcircle, FigureElement::miquel_circles,
                          FigureElement::miquel_triangle, FigureElement::simson,
                          FigureElement::centers, FigureElement::theorem12,
                          FigureElement::catalog}) {
    if (to_string(e) == name) return e;
  }
  throw std::invalid_argument("unknown figure element \"" + name + "\"");
}

std::string to_string(FigureElement e) {
  switch (e) {
    case FigureElement::circumcircle: return "circumcircle";
    case FigureElement::miquel_circles: return "miquel-circles";
    case FigureElement::miquel_triangle: return "miquel-triangle";
    case FigureElement::simson: return "simson";
    case FigureElement::centers: return "centers";
    case FigureElement::theorem12: return "theorem12";
    case FigureElement::catalog: return "catalog";
  }
  return "?";
}

std::string render_figure(const SceneSpec& scene, const std::vector<FigureElement>& elements,
                          const FigureOptions& options) {
  if (elements.empty()) throw GeometryError(ErrorKind::EmptySelection, "no figure elements selected");
  const Tolerance tol = scene.options.tolerance();
  const Triangle t = scene.triangle();
  auto has = [&](FigureElement e) {
    return std::find(elements.begin(), elements.end(), e) != elements.end();
  };

  Figure fig(t.circumcenter());
  fig.polygon({t.a(), t.b(), t.c()}, "tri");
  for (Vertex v : kVertices) fig.dot(t[v], std::string(1, label(v)));
  if (scene.p) fig.dot(*scene.p, "P", "key");

  if (has(FigureElement::circumcircle)) fig.ring(t.circumcircle(), "circ");

  if (has(FigureElement::miquel_circles) || has(FigureElement::miquel_triangle)) {
    const Triad triad = scene_triad(scene, t, tol);
    const auto pts = triad.points();
    if (has(FigureElement::miquel_circles)) {
      const MiquelResult m = miquel_point(t, triad, tol);
      for (const Circle& c : m.circles) fig.ring(c, "mq");
      if (!scene.p) fig.dot(m.point, "P", "key");
    }
    if (has(FigureElement::miquel_triangle)) fig.polygon({pts[0], pts[1], pts[2]}, "mqt");
    for (int i = 0; i < 3; ++i) fig.dot(pts[i], kXYZ[i]);
  }

  if (has(FigureElement::simson)) {
    if (!scene.p) throw SceneError("simson needs \"P\" in the scene");
    const PedalResult pr = pedal_triad(t, *scene.p, tol);
    const auto* sl = std::get_if<SimsonLine>(&pr);
    if (!sl) throw GeometryError(ErrorKind::NotOnCircumcircle, "simson needs P on the circumcircle");
    fig.line(sl->line, "simson");
    for (int i = 0; i < 3; ++i) {
      fig.segment(*scene.p, sl->feet[i], "perp");
      fig.dot(sl->feet[i], kXYZ[i]);
    }
    if (!has(FigureElement::circumcircle)) fig.ring(t.circumcircle(), "circ");
  }

  if (has(FigureElement::centers)) {
    for (CenterKind k : {CenterKind{CenterType::circumcenter}, CenterKind{CenterType::orthocenter},
                         CenterKind{CenterType::centroid}, CenterKind{CenterType::incenter},
                         CenterKind{CenterType::first_brocard},
                         CenterKind{CenterType::second_brocard}}) {
      fig.dot(center_of(t, k, tol), k.symbol());
    }
  }

  if (has(FigureElement::theorem12)) {
    const Vertex v = options.vertex;
    const Point a = t[v];
    const Point b = t[next(v)];
    const Point c = t[prev(v)];
    const MPointConstruction mc = m_point_construction(t, v, tol);
    const Point s = s_point(t, v, tol);
    const Point d = symmedian_foot(t, v);
    const Point k = second_intersection(Line::through(a, d), t.circumcircle(), a, tol).point;
    fig.segment(a, mc.f, "aux");
    fig.segment(a, k, "aux");
    fig.ring(circumcircle(b, c, t.circumcenter(), tol), "circ");
    if (mc.obtuse) {
      fig.ring(circumcircle(mc.f, b, c, tol), "circ");
      fig.segment(b, mc.f, "perp");
      fig.segment(c, mc.f, "perp");
    } else if (!has(FigureElement::circumcircle)) {
      fig.ring(t.circumcircle(), "circ");
    }
    fig.dot(mc.e, "E");
    fig.dot(mc.f, "F");
    fig.dot(d, "D");
    fig.dot(s, CenterKind{CenterType::s_point, v}.symbol(), "key");
    fig.dot(mc.m, CenterKind{CenterType::m_point, v}.symbol(), "key");
  }

  if (has(FigureElement::catalog)) {
    for (const CatalogEntry& e : eleven_point_catalog(t)) fig.dot(e.location, e.label(), "key");
  }

  return fig.render(options.size);
}

}  // namespace miquel
