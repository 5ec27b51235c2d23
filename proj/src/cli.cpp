#include "miquel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "miquel/centers.hpp"
#include "miquel/chains.hpp"
#include "miquel/miquel.hpp"
#include "miquel/sampling.hpp"
#include "miquel/scene.hpp"
#include "miquel/svg.hpp"
#include "miquel/verify.hpp"

namespace miquel {

namespace {

using nlohmann::ordered_json;

/// Bad flag value; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& msg) : std::runtime_error(flag + ": " + msg) {}
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

// Left-justify by code points so labels such as Ω₁ line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t n = 0;
  for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
  return n >= width ? s : s + std::string(width - n, ' ');
}

std::string pt(const Point& p) { return "(" + num(p.x) + ", " + num(p.y) + ")"; }
ordered_json js(const Point& p) { return ordered_json::array({p.x, p.y}); }

std::vector<double> parse_list(const std::string& flag, const std::string& text, std::size_t n) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size() || !std::isfinite(v)) {
      throw UsageError(flag, "expected comma-separated numbers, got \"" + text + "\"");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  if (n != 0 && out.size() != n) {
    throw UsageError(flag, "expected " + std::to_string(n) + " numbers, got " + std::to_string(out.size()));
  }
  return out;
}

Vertex parse_vertex(const std::string& flag, const std::string& s) {
  if (s == "A") return Vertex::A;
  if (s == "B") return Vertex::B;
  if (s == "C") return Vertex::C;
  throw UsageError(flag, "expected A, B or C");
}

SceneSpec load_scene(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("--in", "cannot read \"" + path + "\"");
    buf << in.rdbuf();
  }
  try {
    return parse_scene(buf.str());
  } catch (const SceneError& e) {
    throw UsageError("--in", e.what());
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("MIQUEL_SEED");
  if (!env || !*env) return kDefaultSeed;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [p, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || p != end) throw UsageError("MIQUEL_SEED", "expected an unsigned integer");
  return v;
}

// Options shared by the scene-based subcommands.
struct SceneArgs {
  std::string in;
  std::string point;
  bool json{false};

  void attach(CLI::App* sub, bool with_point) {
    sub->add_option("--in", in, "scene JSON file, or - for stdin")->required();
    if (with_point) sub->add_option("--point", point, "x,y (overrides the scene's P)");
    sub->add_flag("--json", json, "machine-readable output");
  }

  Point require_point(const SceneSpec& s) const {
    if (!point.empty()) {
      const auto v = parse_list("--point", point, 2);
      return {v[0], v[1]};
    }
    if (s.p) return *s.p;
    throw UsageError("--point", "required (or give \"P\" in the scene)");
  }
};

// ------------------------------------------------------------- subcommands

int cmd_centers(const SceneArgs& a, std::ostream& out) {
  const SceneSpec s = load_scene(a.in);
  const Tolerance tol = s.options.tolerance();
  const Triangle t = s.triangle();
  std::vector<CenterKind> kinds{{CenterType::circumcenter}, {CenterType::orthocenter},
                                {CenterType::centroid},     {CenterType::incenter}};
  for (Vertex v : kVertices) kinds.push_back({CenterType::excenter, v});
  kinds.push_back({CenterType::first_brocard});
  kinds.push_back({CenterType::second_brocard});
  for (Vertex v : kVertices) kinds.push_back({CenterType::s_point, v});
  for (Vertex v : kVertices) kinds.push_back({CenterType::m_point, v});

  ordered_json centers = ordered_json::object();
  std::ostringstream text;
  for (const CenterKind& k : kinds) {
    const std::string label = pad(k.symbol(), 6);
    try {
      const Point p = center_of(t, k, tol);
      centers[k.symbol()] = js(p);
      text << label << "  " << pt(p) << "\n";
    } catch (const GeometryError& e) {
      centers[k.symbol()] = nullptr;
      text << label << "  undefined (" << e.name() << ")\n";
    }
  }
  ordered_json catalog;
  try {
    catalog = ordered_json::array();
    const auto cat = eleven_point_catalog(t);
    text << "catalog:\n";
    for (const CatalogEntry& e : cat) {
      text << "  " << pad(e.label(), 10) << " " << e.expected.name() << "  " << pt(e.location) << "\n";
      catalog.push_back({{"point", e.label()}, {"location", js(e.location)},
                         {"permutation", e.expected.name()}});
    }
  } catch (const GeometryError& e) {
    catalog = {{"error", e.name()}};
    text << "catalog: undefined (" << e.name() << ")\n";
  }
  if (a.json) {
    ordered_json doc;
    doc["centers"] = centers;
    doc["catalog"] = catalog;
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_classify(const SceneArgs& a, std::ostream& out) {
  const SceneSpec s = load_scene(a.in);
  const Tolerance tol = s.options.tolerance();
  const Triangle t = s.triangle();
  const Point p = a.require_point(s);

  const auto roles = detect_special_roles(t, p, tol);
  std::string role_text;
  ordered_json role_json = ordered_json::array();
  for (const SpecialRole& r : roles) {
    role_text += (role_text.empty() ? "" : ", ") + r.name();
    role_json.push_back(r.name());
  }
  if (role_text.empty()) role_text = "no special role";

  // P on a side line (O of a right triangle) still has a pedal triangle.
  std::string sim_text;
  ordered_json sim = ordered_json::object();
  try {
    const Triangle xyz = pedal_triangle(t, p, tol);
    const auto classes = classify_similarity(t, xyz, tol);
    sim["similar"] = !classes.empty();
    ordered_json perms = ordered_json::array();
    std::string names;
    for (const SimilarityClass& c : classes) {
      perms.push_back({{"permutation", c.correspondence.name()},
                       {"orientation", c.orientation == Orientation::direct ? "direct" : "inverse"},
                       {"ratio", c.ratio},
                       {"residual", c.residual}});
      names += (names.empty() ? "" : ", ") + c.correspondence.name();
    }
    sim["matches"] = perms;
    if (classes.empty()) {
      sim_text = "Miquel triangle not similar to host";
    } else {
      sim_text = std::string("Miquel triangle similar to host, permutation") +
                 (classes.size() > 1 ? "s " : " ") + names;
    }
  } catch (const GeometryError& e) {
    if (e.kind() != ErrorKind::DegenerateTriangle) throw;
    sim["similar"] = false;
    sim["degenerate"] = true;
    sim_text = "Miquel triangle degenerate (Simson line)";
  }
  if (a.json) {
    ordered_json doc;
    doc["point"] = js(p);
    doc["roles"] = role_json;
    doc["similarity"] = sim;
    out << doc.dump(2) << "\n";
  } else {
    out << role_text << "; " << sim_text << "\n";
  }
  return kExitOk;
}

int cmd_miquel(const SceneArgs& a, const std::string& triad_flag, std::ostream& out) {
  const SceneSpec s = load_scene(a.in);
  const Tolerance tol = s.options.tolerance();
  const Triangle t = s.triangle();
  std::array<double, 3> uvw{};
  if (!triad_flag.empty()) {
    const auto v = parse_list("--triad", triad_flag, 3);
    uvw = {v[0], v[1], v[2]};
  } else if (s.triad) {
    uvw = *s.triad;
  } else {
    throw UsageError("--triad", "required (or give \"triad\" in the scene)");
  }
  const Triad triad(t, uvw[0], uvw[1], uvw[2]);
  const MiquelResult m = miquel_point(t, triad, tol);
  const double rel = m.residual / t.circumradius();
  if (a.json) {
    ordered_json doc;
    doc["triad"] = {uvw[0], uvw[1], uvw[2]};
    doc["X"] = js(triad.x());
    doc["Y"] = js(triad.y());
    doc["Z"] = js(triad.z());
    doc["point"] = js(m.point);
    doc["residual"] = m.residual;
    doc["relative_residual"] = rel;
    doc["tangent"] = m.tangent;
    ordered_json circles = ordered_json::array();
    for (const Circle& c : m.circles) circles.push_back({{"center", js(c.center)}, {"radius", c.radius}});
    doc["circles"] = circles;
    out << doc.dump(2) << "\n";
  } else {
    out << "miquel point  " << pt(m.point) << "\n";
    char line[96];
    std::snprintf(line, sizeof line, "residual      %.3e (%.3e R)\n", m.residual, rel);
    out << line;
    const char* names[3] = {"circle AYZ", "circle BZX", "circle CXY"};
    for (int i = 0; i < 3; ++i) {
      out << names[i] << "    center " << pt(m.circles[i].center) << "  radius "
          << num(m.circles[i].radius) << "\n";
    }
    if (m.tangent) out << "circles AYZ and BZX are tangent at Z\n";
  }
  return kExitOk;
}

int cmd_family(const SceneArgs& a, std::optional<double> theta_flag, std::ostream& out) {
  const SceneSpec s = load_scene(a.in);
  const Tolerance tol = s.options.tolerance();
  const Triangle t = s.triangle();
  const Point p = a.require_point(s);
  const double theta = theta_flag.value_or(s.theta.value_or(0.0));
  const Triad triad = family_member(t, p, DirectedAngle::from_radians(theta), tol);
  const Triangle xyz = triad.triangle(tol);
  const MiquelResult m = miquel_point(t, triad, tol);
  const Triangle pedal = family_member(t, p, DirectedAngle{}, tol).triangle(tol);
  const double ratio = xyz.side(Vertex::A) / pedal.side(Vertex::A);
  constexpr double deg = 180.0 / std::numbers::pi;
  if (a.json) {
    ordered_json doc;
    doc["point"] = js(p);
    doc["theta"] = theta;
    doc["triad"] = {triad.u, triad.v, triad.w};
    doc["X"] = js(triad.x());
    doc["Y"] = js(triad.y());
    doc["Z"] = js(triad.z());
    doc["angles_deg"] = {xyz.angle(Vertex::A) * deg, xyz.angle(Vertex::B) * deg,
                         xyz.angle(Vertex::C) * deg};
    doc["ratio_to_pedal"] = ratio;
    doc["miquel_residual"] = distance(m.point, p);
    out << doc.dump(2) << "\n";
  } else {
    out << "theta   " << num(theta) << "\n";
    out << "triad   u=" << num(triad.u) << " v=" << num(triad.v) << " w=" << num(triad.w) << "\n";
    out << "X       " << pt(triad.x()) << "\n";
    out << "Y       " << pt(triad.y()) << "\n";
    out << "Z       " << pt(triad.z()) << "\n";
    out << "angles  " << num(xyz.angle(Vertex::A) * deg) << " " << num(xyz.angle(Vertex::B) * deg)
        << " " << num(xyz.angle(Vertex::C) * deg) << " (degrees at X, Y, Z)\n";
    out << "ratio   " << num(ratio) << " (to the pedal triangle; 1/cos theta = "
        << num(1.0 / std::cos(theta)) << ")\n";
    char line[64];
    std::snprintf(line, sizeof line, "miquel point error %.3e\n", distance(m.point, p));
    out << line;
  }
  return kExitOk;
}

struct ChainArgs {
  int k{3};
  std::string schedule;
  std::optional<double> random_max;
  std::optional<std::uint64_t> seed;
};

int cmd_chain(const SceneArgs& a, const ChainArgs& c, std::ostream& out) {
  const SceneSpec s = load_scene(a.in);
  const Triangle t = s.triangle();
  const Point p = a.require_point(s);
  if (c.k < 1 || c.k > ChainOptions{}.max_steps) {
    throw UsageError("--k", "must be between 1 and " + std::to_string(ChainOptions{}.max_steps));
  }
  std::vector<DirectedAngle> thetas;
  if (!c.schedule.empty() && c.random_max) {
    throw UsageError("--schedule", "cannot be combined with --random-schedule");
  }
  if (!c.schedule.empty()) {
    for (double v : parse_list("--schedule", c.schedule, static_cast<std::size_t>(c.k))) {
      thetas.push_back(DirectedAngle::from_radians(v));
    }
  } else if (c.random_max) {
    if (!(*c.random_max > 0.0 && *c.random_max < std::numbers::pi / 2)) {
      throw UsageError("--random-schedule", "must be in (0, pi/2)");
    }
    Rng rng(c.seed.value_or(default_seed()), "chain", 0);
    for (int i = 0; i < c.k; ++i) thetas.push_back(DirectedAngle::from_radians(rng.uniform(-*c.random_max, *c.random_max)));
  } else if (s.theta) {
    thetas.assign(static_cast<std::size_t>(c.k), DirectedAngle::from_radians(*s.theta));
  }
  const ChainRecord rec = iterate_chain(t, p, c.k, thetas);
  const std::vector<int> similar = similar_to_seed(rec);
  std::optional<Mod3Report> mod3;
  if (rec.triangles.size() >= 4) mod3 = check_mod3_similarity(rec);

  if (a.json) {
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < rec.triangles.size(); ++i) {
      const Triangle& tk = rec.triangles[i];
      ordered_json st;
      st["k"] = i;
      st["A"] = js(tk.a());
      st["B"] = js(tk.b());
      st["C"] = js(tk.c());
      st["role"] = rec.roles[i].name();
      if (i < rec.thetas.size()) st["theta"] = rec.thetas[i].radians();
      steps.push_back(st);
    }
    ordered_json doc;
    doc["point"] = js(p);
    doc["steps"] = steps;
    doc["similar_to_seed"] = similar;
    if (mod3) {
      doc["mod3"] = {{"holds", mod3->holds},
                     {"max_residual", std::isfinite(mod3->max_residual) ? ordered_json(mod3->max_residual)
                                                                        : ordered_json(nullptr)}};
      ordered_json cross = ordered_json::array();
      for (const auto& [i, j] : mod3->cross_class_similar) cross.push_back({i, j});
      doc["mod3"]["cross_class_similar"] = cross;
    }
    out << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < rec.triangles.size(); ++i) {
      const Triangle& tk = rec.triangles[i];
      char head[64];
      std::snprintf(head, sizeof head, "%-3zu %-16s", i, rec.roles[i].name().c_str());
      out << head << pt(tk.a()) << " " << pt(tk.b()) << " " << pt(tk.c()) << "\n";
    }
    out << "similar to seed at k =";
    for (int k : similar) out << " " << k;
    out << "\n";
    if (mod3) {
      char line[96];
      std::snprintf(line, sizeof line, "mod-3 similarity: %s (max residual %.3e)\n",
                    mod3->holds ? "holds" : "FAILS", mod3->max_residual);
      out << line;
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite{"all"};
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool json{false};
  bool timing{false};
};

int cmd_verify(const VerifyArgs& v, std::ostream& out, std::ostream& err) {
  if (v.suite != "all" && !is_suite(v.suite)) throw UsageError("--suite", "unknown suite \"" + v.suite + "\"");
  if (v.trials && *v.trials <= 0) throw UsageError("--trials", "must be positive");
  const std::uint64_t seed = v.seed ? *v.seed : default_seed();
  const auto reports = run_verify(v.suite, seed, v.trials);
  out << (v.json ? format_json(reports) : format_text(reports));
  if (v.timing) {
    double total = 0.0;
    for (const VerifyReport& r : reports) {
      char line[96];
      std::snprintf(line, sizeof line, "%-12s %.3f s\n", r.suite.c_str(), r.duration_seconds);
      err << line;
      total += r.duration_seconds;
    }
    char line[64];
    std::snprintf(line, sizeof line, "%-12s %.3f s\n", "total", total);
    err << line;
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitVerifyFailed;
}

struct FigureArgs {
  std::string elements;
  std::string vertex{"A"};
  std::string out;
  int size{640};
};

int cmd_figure(const SceneArgs& a, const FigureArgs& f, std::ostream& out) {
  std::vector<FigureElement> elems;
  if (!f.elements.empty()) {
    std::size_t pos = 0;
    while (pos <= f.elements.size()) {
      const std::size_t comma = std::min(f.elements.find(',', pos), f.elements.size());
      const std::string name = f.elements.substr(pos, comma - pos);
      try {
        elems.push_back(parse_figure_element(name));
      } catch (const std::invalid_argument& e) {
        throw UsageError("--elements", e.what());
      }
      pos = comma + 1;
    }
  }
  if (elems.empty()) throw UsageError("--elements", "select at least one element");
  if (f.size <= 0) throw UsageError("--size", "must be positive");
  SceneSpec s = load_scene(a.in);
  if (!a.point.empty()) {
    const auto v = parse_list("--point", a.point, 2);
    s.p = Point{v[0], v[1]};
  }
  FigureOptions opt;
  opt.vertex = parse_vertex("--vertex", f.vertex);
  opt.size = f.size;
  std::string svg;
  try {
    svg = render_figure(s, elems, opt);
  } catch (const SceneError& e) {
    throw UsageError("--elements", e.what());
  }
  if (f.out.empty() || f.out == "-") {
    out << svg;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw UsageError("--out", "cannot write \"" + f.out + "\"");
    file << svg;
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Miquel points, Miquel triangles and their special positions", "miquel"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  SceneArgs centers_args, classify_args, miquel_args, family_args, chain_args, figure_args;
  auto* centers = app.add_subcommand("centers", "named points of the scene triangle");
  centers_args.attach(centers, false);

  auto* classify = app.add_subcommand("classify", "special role of a point and the similarity class of its Miquel triangle");
  classify_args.attach(classify, true);

  auto* miquel = app.add_subcommand("miquel", "Miquel point of a triad");
  miquel_args.attach(miquel, false);
  std::string triad;
  miquel->add_option("--triad", triad, "u,v,w side parameters");

  auto* family = app.add_subcommand("family", "family member of a point for a rotation theta");
  family_args.attach(family, true);
  std::optional<double> theta;
  family->add_option("--theta", theta, "rotation in radians, |theta| < pi/2");

  auto* chain = app.add_subcommand("chain", "iterate Miquel triangles with a fixed Miquel point");
  chain_args.attach(chain, true);
  ChainArgs ca;
  chain->add_option("--k", ca.k, "number of steps")->capture_default_str();
  chain->add_option("--schedule", ca.schedule, "comma-separated theta per step (radians)");
  chain->add_option("--random-schedule", ca.random_max, "random thetas in [-MAX, MAX], seeded");
  chain->add_option("--seed", ca.seed, "seed for --random-schedule (default $MIQUEL_SEED or 7)");

  auto* verify = app.add_subcommand("verify", "run randomized verification suites");
  VerifyArgs va;
  verify->add_option("--suite", va.suite, "suite name or all")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed (default $MIQUEL_SEED or 7)");
  verify->add_option("--trials", va.trials, "override the per-suite trial count");
  verify->add_flag("--json", va.json, "machine-readable output");
  verify->add_flag("--timing", va.timing, "print wall-clock durations to stderr");

  auto* figure = app.add_subcommand("figure", "SVG figure of the scene");
  figure_args.attach(figure, true);
  FigureArgs fa;
  figure->add_option("--elements", fa.elements,
                     "comma list: circumcircle, miquel-circles, miquel-triangle, simson, centers, theorem12, catalog");
  figure->add_option("--vertex", fa.vertex, "vertex for theorem12")->capture_default_str();
  figure->add_option("--size", fa.size, "width and height in pixels")->capture_default_str();
  figure->add_option("--out", fa.out, "output file (default stdout)");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      !app.get_subcommand_no_throw(args.front())) {
    err << "usage error: unknown subcommand \"" << args.front() << "\"\n";
    return kExitUsage;
  }
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*centers) return cmd_centers(centers_args, out);
    if (*classify) return cmd_classify(classify_args, out);
    if (*miquel) return cmd_miquel(miquel_args, triad, out);
    if (*family) return cmd_family(family_args, theta, out);
    if (*chain) return cmd_chain(chain_args, ca, out);
    if (*verify) return cmd_verify(va, out, err);
    if (*figure) return cmd_figure(figure_args, fa, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    err << "geometric error: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace miquel
