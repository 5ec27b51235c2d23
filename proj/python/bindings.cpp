// Python bindings. Points cross the boundary as (x, y) pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "miquel/centers.hpp"
#include "miquel/chains.hpp"
#include "miquel/cli.hpp"
#include "miquel/miquel.hpp"
#include "miquel/scene.hpp"
#include "miquel/svg.hpp"
#include "miquel/verify.hpp"

namespace py = pybind11;
using namespace miquel;

namespace {

using XY = std::array<double, 2>;

Point pt(const XY& p) { return {p[0], p[1]}; }
XY xy(const Point& p) { return {p.x, p.y}; }

Triangle make_triangle(const XY& a, const XY& b, const XY& c) { return Triangle(pt(a), pt(b), pt(c)); }

CenterKind parse_kind(const std::string& name) {
  static const std::vector<std::pair<std::string, CenterKind>> table = [] {
    std::vector<std::pair<std::string, CenterKind>> t{
        {"O", {CenterType::circumcenter}},  {"H", {CenterType::orthocenter}},
        {"G", {CenterType::centroid}},      {"L", {CenterType::incenter}},
        {"Omega1", {CenterType::first_brocard}}, {"Omega2", {CenterType::second_brocard}},
    };
    for (Vertex v : kVertices) {
      const std::string s(1, label(v));
      t.push_back({"L_" + s, {CenterType::excenter, v}});
      t.push_back({"S_" + s, {CenterType::s_point, v}});
      t.push_back({"M_" + s, {CenterType::m_point, v}});
    }
    return t;
  }();
  for (const auto& [key, kind] : table) {
    if (key == name || kind.symbol() == name) return kind;
  }
  throw std::invalid_argument("unknown center \"" + name + "\"");
}

py::dict miquel_dict(const Triad& triad, const MiquelResult& m) {
  py::list circles;
  for (const Circle& c : m.circles) circles.append(py::make_tuple(xy(c.center), c.radius));
  py::dict d;
  d["point"] = xy(m.point);
  d["residual"] = m.residual;
  d["tangent"] = m.tangent;
  d["circles"] = circles;
  d["triad"] = py::make_tuple(triad.u, triad.v, triad.w);
  d["X"] = xy(triad.x());
  d["Y"] = xy(triad.y());
  d["Z"] = xy(triad.z());
  return d;
}

py::dict report_dict(const VerifyReport& r) {
  py::list claims;
  for (const Claim& c : r.claims) {
    py::dict d;
    d["name"] = c.name;
    d["asserted"] = c.asserted;
    d["passed"] = c.passed();
    d["max_residual"] = c.max_residual;
    d["threshold"] = c.threshold;
    d["checked"] = c.checked;
    d["failures"] = c.failures;
    d["witness"] = c.witness;
    d["note"] = c.note;
    claims.append(d);
  }
  py::dict d;
  d["suite"] = r.suite;
  d["seed"] = r.seed;
  d["trials"] = r.trials;
  d["passed"] = r.passed();
  d["claims"] = claims;
  d["duration_seconds"] = r.duration_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Miquel points, Miquel triangles and special triangle centers.";

  // Messages start with the error kind, e.g. "DegenerateTriangle: ...".
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<SceneError>(m, "SceneError", PyExc_ValueError);

  py::class_<Triangle>(m, "Triangle")
      .def(py::init(&make_triangle), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("vertices", [](const Triangle& t) {
        return py::make_tuple(xy(t.a()), xy(t.b()), xy(t.c()));
      })
      .def_property_readonly("circumcenter", [](const Triangle& t) { return xy(t.circumcenter()); })
      .def_property_readonly("circumradius", &Triangle::circumradius)
      .def_property_readonly("angles", [](const Triangle& t) {
        return py::make_tuple(t.angle(Vertex::A), t.angle(Vertex::B), t.angle(Vertex::C));
      })
      .def_property_readonly("orientation", &Triangle::orientation)
      .def("__repr__", [](const Triangle& t) {
        std::ostringstream os;
        os.precision(17);
        os << "Triangle((" << t.a().x << ", " << t.a().y << "), (" << t.b().x << ", " << t.b().y
           << "), (" << t.c().x << ", " << t.c().y << "))";
        return os.str();
      });

  m.def("center", [](const Triangle& t, const std::string& name) { return xy(center_of(t, parse_kind(name))); },
        py::arg("triangle"), py::arg("name"),
        "Named point: O, H, G, L, L_A..L_C, Omega1/Ω₁, Omega2/Ω₂, S_A..S_C, M_A..M_C.");

  m.def("isogonal_conjugate", [](const Triangle& t, const XY& p) { return xy(isogonal_conjugate(t, pt(p))); });
  m.def("inverse_in_circumcircle", [](const Triangle& t, const XY& p) { return xy(inverse_in_circumcircle(t, pt(p))); });

  m.def("catalog", [](const Triangle& t) {
    py::list out;
    for (const CatalogEntry& e : eleven_point_catalog(t)) {
      py::dict d;
      d["label"] = e.label();
      d["location"] = xy(e.location);
      d["permutation"] = e.expected.name();
      d["inverted"] = e.inverted;
      out.append(d);
    }
    return out;
  }, "The eleven points whose Miquel triangles are similar to the host.");

  m.def("miquel_point", [](const Triangle& t, double u, double v, double w) {
    const Triad triad(t, u, v, w);
    return miquel_dict(triad, miquel_point(t, triad));
  }, py::arg("triangle"), py::arg("u"), py::arg("v"), py::arg("w"));

  m.def("family_member", [](const Triangle& t, const XY& p, double theta) {
    const Triad triad = family_member(t, pt(p), DirectedAngle::from_radians(theta));
    return miquel_dict(triad, miquel_point(t, triad));
  }, py::arg("triangle"), py::arg("p"), py::arg("theta") = 0.0);

  m.def("pedal", [](const Triangle& t, const XY& p) -> py::object {
    const PedalResult r = pedal_triad(t, pt(p));
    if (const auto* s = std::get_if<SimsonLine>(&r)) {
      py::dict d;
      d["simson"] = true;
      d["feet"] = py::make_tuple(xy(s->feet[0]), xy(s->feet[1]), xy(s->feet[2]));
      d["max_deviation"] = s->max_deviation;
      return std::move(d);
    }
    const Triad& triad = std::get<Triad>(r);
    py::dict d;
    d["simson"] = false;
    d["feet"] = py::make_tuple(xy(triad.x()), xy(triad.y()), xy(triad.z()));
    d["triad"] = py::make_tuple(triad.u, triad.v, triad.w);
    return std::move(d);
  });

  m.def("classify", [](const Triangle& host, const Triangle& other) {
    py::list out;
    for (const SimilarityClass& c : classify_similarity(host, other)) {
      py::dict d;
      d["permutation"] = c.correspondence.name();
      d["orientation"] = c.orientation == Orientation::direct ? "direct" : "inverse";
      d["ratio"] = c.ratio;
      d["residual"] = c.residual;
      out.append(d);
    }
    return out;
  }, "Correspondences under which the two triangles are similar, best first.");

  m.def("roles", [](const Triangle& t, const XY& p, double eps) {
    std::vector<std::string> out;
    for (const SpecialRole& r : detect_special_roles(t, pt(p), {eps, eps})) out.push_back(r.name());
    return out;
  }, py::arg("triangle"), py::arg("p"), py::arg("eps") = 1e-9);

  m.def("chain", [](const Triangle& t, const XY& p, int k, std::vector<double> thetas) {
    std::vector<DirectedAngle> sched;
    for (double th : thetas) sched.push_back(DirectedAngle::from_radians(th));
    const ChainRecord rec = iterate_chain(t, pt(p), k, sched);
    py::list tris, roles;
    for (const Triangle& tk : rec.triangles) tris.append(py::cast(tk));
    for (const SpecialRole& r : rec.roles) roles.append(r.name());
    py::dict d;
    d["triangles"] = tris;
    d["roles"] = roles;
    d["similar_to_seed"] = similar_to_seed(rec);
    if (rec.triangles.size() >= 4) d["mod3_holds"] = check_mod3_similarity(rec).holds;
    return d;
  }, py::arg("triangle"), py::arg("p"), py::arg("k"), py::arg("thetas") = std::vector<double>{});

  m.def("suites", &suite_names);
  m.def("verify", [](const std::string& suite, std::uint64_t seed, std::optional<int> trials) {
    py::list out;
    for (const VerifyReport& r : run_verify(suite, seed, trials)) out.append(report_dict(r));
    return out;
  }, py::arg("suite"), py::arg("seed") = kDefaultSeed, py::arg("trials") = py::none());

  m.def("parse_scene", [](const std::string& text) { return emit_scene(parse_scene(text)); },
        "Validate a scene document and return its canonical form.");

  m.def("render_figure", [](const std::string& scene, const std::vector<std::string>& elements,
                            const std::string& vertex) {
    std::vector<FigureElement> elems;
    for (const std::string& e : elements) elems.push_back(parse_figure_element(e));
    FigureOptions opt;
    opt.vertex = vertex == "B" ? Vertex::B : vertex == "C" ? Vertex::C : Vertex::A;
    return render_figure(parse_scene(scene), elems, opt);
  }, py::arg("scene"), py::arg("elements"), py::arg("vertex") = "A");

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::vector<std::string> argv{"miquel"};
    argv.insert(argv.end(), args.begin(), args.end());
    const int code = run_command(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
