#include "nhmono/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

namespace nhmono {

namespace {

void reject_unknown(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw Error(ErrorKind::InvalidArgument, what + ": unknown key '" + key + "'");
}

}  // namespace

ParamPoint point_from_json(const nlohmann::json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3)
    throw Error(ErrorKind::InvalidArgument, key + ": expected an array of three numbers");
  ParamPoint p;
  for (int i = 0; i < 3; ++i) {
    const auto& v = j[static_cast<std::size_t>(i)];
    if (!v.is_number()) throw Error(ErrorKind::InvalidArgument, key + ": expected numbers");
    p[i] = v.get<double>();
    if (!std::isfinite(p[i])) throw Error(ErrorKind::InvalidArgument, key + ": components must be finite");
  }
  return p;
}

ParamLoop loop_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "loop: expected an object");
  if (j.contains("points")) {
    reject_unknown(j, {"points"}, "loop");
    std::vector<ParamPoint> pts;
    for (const auto& p : j.at("points")) pts.push_back(point_from_json(p, "loop.points"));
    return ParamLoop::polyline(std::move(pts));
  }
  reject_unknown(j, {"center", "radius", "normal", "samples", "turns"}, "loop");
  for (const char* key : {"center", "radius", "normal", "samples"})
    if (!j.contains(key)) throw Error(ErrorKind::InvalidArgument, std::string("loop.") + key + ": missing");
  if (!j.at("radius").is_number()) throw Error(ErrorKind::InvalidArgument, "loop.radius: expected a number");
  if (!j.at("samples").is_number_integer())
    throw Error(ErrorKind::InvalidArgument, "loop.samples: expected an integer");
  const int turns = j.value("turns", 1);
  return ParamLoop::circle(point_from_json(j.at("center"), "loop.center"), j.at("radius").get<double>(),
                           point_from_json(j.at("normal"), "loop.normal"), j.at("samples").get<int>(), turns);
}

SurfaceMesh mesh_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "mesh: expected an object");
  reject_unknown(j, {"vertices", "triangles"}, "mesh");
  SurfaceMesh mesh;
  for (const auto& v : j.at("vertices")) mesh.vertices.push_back(point_from_json(v, "mesh.vertices"));
  for (const auto& t : j.at("triangles")) {
    if (!t.is_array() || t.size() != 3)
      throw Error(ErrorKind::InvalidArgument, "mesh.triangles: expected index triples");
    std::array<int, 3> tri{};
    for (std::size_t k = 0; k < 3; ++k) {
      tri[k] = t[k].get<int>();
      if (tri[k] < 0 || static_cast<std::size_t>(tri[k]) >= mesh.vertices.size())
        throw Error(ErrorKind::InvalidArgument, "mesh.triangles: index out of range");
    }
    mesh.triangles.push_back(tri);
  }
  return mesh;
}

nlohmann::json mesh_to_json(const SurfaceMesh& mesh) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : mesh.vertices) j["vertices"].push_back({v.x(), v.y(), v.z()});
  j["triangles"] = nlohmann::json::array();
  for (const auto& t : mesh.triangles) j["triangles"].push_back({t[0], t[1], t[2]});
  return j;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace nhmono
