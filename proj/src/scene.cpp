#include "miquel/scene.hpp"

#include <cmath>

#include "json.hpp"

namespace miquel {

using nlohmann::json;

namespace {

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw SceneError(where + ": expected a number");
  const double d = j.get<double>();
  if (!std::isfinite(d)) throw SceneError(where + ": not finite");
  return d;
}

template <std::size_t N>
std::array<double, N> numbers(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) {
    throw SceneError(where + ": expected an array of " + std::to_string(N) + " numbers");
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = number(j[i], where);
  return out;
}

Point point(const json& j, const std::string& where) {
  const auto xy = numbers<2>(j, where);
  return {xy[0], xy[1]};
}

json to_json(const Point& p) { return json::array({p.x, p.y}); }

}  // namespace

Tolerance SceneOptions::tolerance() const {
  Tolerance t;
  if (angle_eps) t.angle_eps = *angle_eps;
  if (length_eps_rel) t.length_eps_rel = *length_eps_rel;
  return t;
}

Triangle SceneSpec::triangle() const {
  return Triangle(vertices[0], vertices[1], vertices[2], options.tolerance());
}

SceneSpec parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SceneError("scene must be a JSON object");

  SceneSpec s;
  for (const char* key : {"A", "B", "C"}) {
    if (!doc.contains(key)) throw SceneError(std::string("missing key \"") + key + "\"");
  }
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    const json& val = it.value();
    if (key == "A") {
      s.vertices[0] = point(val, key);
    } else if (key == "B") {
      s.vertices[1] = point(val, key);
    } else if (key == "C") {
      s.vertices[2] = point(val, key);
    } else if (key == "P") {
      s.p = point(val, key);
    } else if (key == "triad") {
      s.triad = numbers<3>(val, key);
    } else if (key == "theta") {
      s.theta = number(val, key);
    } else if (key == "options") {
      if (!val.is_object()) throw SceneError("options: expected an object");
      for (auto o = val.begin(); o != val.end(); ++o) {
        const double d = number(o.value(), "options." + o.key());
        if (d <= 0.0) throw SceneError("options." + o.key() + ": must be positive");
        if (o.key() == "angle_eps") {
          s.options.angle_eps = d;
        } else if (o.key() == "length_eps_rel") {
          s.options.length_eps_rel = d;
        } else {
          throw SceneError("unknown key \"options." + o.key() + "\"");
        }
      }
    } else {
      throw SceneError("unknown key \"" + key + "\"");
    }
  }
  (void)s.triangle();  // rejects degenerate input
  return s;
}

std::string emit_scene(const SceneSpec& s) {
  json doc = json::object();
  doc["A"] = to_json(s.vertices[0]);
  doc["B"] = to_json(s.vertices[1]);
  doc["C"] = to_json(s.vertices[2]);
  if (s.p) doc["P"] = to_json(*s.p);
  if (s.triad) doc["triad"] = json::array({(*s.triad)[0], (*s.triad)[1], (*s.triad)[2]});
  if (s.theta) doc["theta"] = *s.theta;
  if (!s.options.empty()) {
    json o = json::object();
    if (s.options.angle_eps) o["angle_eps"] = *s.options.angle_eps;
    if (s.options.length_eps_rel) o["length_eps_rel"] = *s.options.length_eps_rel;
    doc["options"] = o;
  }
  return doc.dump() + "\n";
}

}  // namespace miquel
