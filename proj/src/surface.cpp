#include "nhmono/surface.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "nhmono/quadrature.hpp"

namespace nhmono {

namespace {

constexpr Real kPi = std::numbers::pi;

int scaled(int base, int level) {
  if (base < 1 || level < 0) throw Error(ErrorKind::InvalidArgument, "quadrature size must be positive");
  return base << level;
}

// Gauss-Legendre in u = cos(theta) on [u_lo, 1] times the trapezoid in azimuth,
// mapped through x = center + scale(n) with area element `element(n)`.
template <typename Map, typename Element>
SurfaceQuadrature polar_product(int n_polar, Real u_lo, Map&& map, Element&& element) {
  const int n_azimuth = 2 * n_polar;
  const auto rule = gauss_legendre<Real>(n_polar, u_lo, 1.0);
  const Real dphi = 2 * kPi / n_azimuth;
  SurfaceQuadrature q;
  q.nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
  for (int i = 0; i < n_polar; ++i) {
    const Real u = rule.nodes[static_cast<std::size_t>(i)];
    const Real sin_t = std::sqrt(std::max(0.0, 1 - u * u));
    for (int j = 0; j < n_azimuth; ++j) {
      const Real phi = (j + 0.5) * dphi;
      const ParamPoint n(sin_t * std::cos(phi), sin_t * std::sin(phi), u);
      q.nodes.push_back({map(n), element(n) * rule.weights[static_cast<std::size_t>(i)] * dphi});
    }
  }
  auto at = [&](int i, int j) { return q.nodes[static_cast<std::size_t>(i * n_azimuth + j)].x; };
  for (int i = 0; i < n_polar; ++i)
    for (int j = 0; j < n_azimuth; ++j) {
      q.probes.emplace_back(at(i, j), at(i, (j + 1) % n_azimuth));
      if (i + 1 < n_polar) q.probes.emplace_back(at(i, j), at(i + 1, j));
    }
  return q;
}

}  // namespace

Real SurfaceQuadrature::area() const {
  Real a = 0;
  for (const auto& n : nodes) a += n.dS.norm();
  return a;
}

Surface sphere_surface(const ParamPoint& center, Real radius, int base_polar) {
  if (!(radius > 0)) throw Error(ErrorKind::InvalidArgument, "sphere radius must be > 0");
  Surface s;
  s.name = "sphere";
  s.closed = true;
  s.exact_area = 4 * kPi * radius * radius;
  s.build = [=](int level) {
    return polar_product(
        scaled(base_polar, level), -1.0, [&](const ParamPoint& n) { return ParamPoint(center + radius * n); },
        [&](const ParamPoint& n) { return ParamPoint(radius * radius * n); });
  };
  return s;
}

Surface ellipsoid_surface(const ParamPoint& center, const ParamPoint& semi_axes, int base_polar) {
  if ((semi_axes.array() <= 0).any())
    throw Error(ErrorKind::InvalidArgument, "ellipsoid semi-axes must be > 0");
  Surface s;
  s.name = "ellipsoid";
  s.closed = true;
  const Real a = semi_axes.x(), b = semi_axes.y(), c = semi_axes.z();
  s.build = [=](int level) {
    return polar_product(
        scaled(base_polar, level), -1.0,
        [&](const ParamPoint& n) { return ParamPoint(center + semi_axes.cwiseProduct(n)); },
        [&](const ParamPoint& n) { return ParamPoint(b * c * n.x(), a * c * n.y(), a * b * n.z()); });
  };
  return s;
}

Surface hemisphere_surface(const ParamPoint& center, Real radius, int base_polar) {
  if (!(radius > 0)) throw Error(ErrorKind::InvalidArgument, "hemisphere radius must be > 0");
  Surface s;
  s.name = "hemisphere";
  s.closed = false;
  s.exact_area = 2 * kPi * radius * radius;
  s.build = [=](int level) {
    return polar_product(
        scaled(base_polar, level), 0.0, [&](const ParamPoint& n) { return ParamPoint(center + radius * n); },
        [&](const ParamPoint& n) { return ParamPoint(radius * radius * n); });
  };
  return s;
}

Surface belt_surface(Real inner, Real outer, Real z, int base_radial) {
  if (!(inner >= 0) || !(outer > inner))
    throw Error(ErrorKind::InvalidArgument, "belt needs 0 <= inner < outer");
  Surface s;
  s.name = "belt";
  s.closed = false;
  s.exact_area = kPi * (outer * outer - inner * inner);
  s.build = [=](int level) {
    const int n_radial = scaled(base_radial, level);
    const int n_azimuth = 4 * n_radial;
    const auto rule = gauss_legendre<Real>(n_radial, inner, outer);
    const Real dphi = 2 * kPi / n_azimuth;
    SurfaceQuadrature q;
    for (int i = 0; i < n_radial; ++i) {
      const Real rho = rule.nodes[static_cast<std::size_t>(i)];
      for (int j = 0; j < n_azimuth; ++j) {
        const Real phi = (j + 0.5) * dphi;
        q.nodes.push_back({ParamPoint(rho * std::cos(phi), rho * std::sin(phi), z),
                           ParamPoint(0, 0, rho * rule.weights[static_cast<std::size_t>(i)] * dphi)});
      }
    }
    return q;
  };
  return s;
}

Surface cube_surface(const ParamPoint& center, Real side, int base_per_face) {
  if (!(side > 0)) throw Error(ErrorKind::InvalidArgument, "cube side must be > 0");
  Surface s;
  s.name = "cube";
  s.closed = true;
  s.exact_area = 6 * side * side;
  s.build = [=](int level) {
    const int n = scaled(base_per_face, level);
    const Real half = side / 2;
    const auto rule = gauss_legendre<Real>(n, -half, half);
    SurfaceQuadrature q;
    for (int axis = 0; axis < 3; ++axis) {
      const int a1 = (axis + 1) % 3;
      const int a2 = (axis + 2) % 3;
      for (int sign : {-1, 1}) {
        const std::size_t first = q.nodes.size();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            ParamPoint x = center;
            x[axis] += sign * half;
            x[a1] += rule.nodes[static_cast<std::size_t>(i)];
            x[a2] += rule.nodes[static_cast<std::size_t>(j)];
            ParamPoint dS = ParamPoint::Zero();
            dS[axis] = sign * rule.weights[static_cast<std::size_t>(i)] * rule.weights[static_cast<std::size_t>(j)];
            q.nodes.push_back({x, dS});
          }
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            const auto& here = q.nodes[first + static_cast<std::size_t>(i * n + j)].x;
            if (j + 1 < n) q.probes.emplace_back(here, q.nodes[first + static_cast<std::size_t>(i * n + j + 1)].x);
            if (i + 1 < n) q.probes.emplace_back(here, q.nodes[first + static_cast<std::size_t>((i + 1) * n + j)].x);
          }
      }
    }
    return q;
  };
  return s;
}

bool SurfaceMesh::is_closed() const {
  if (triangles.empty()) return false;
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : triangles)
    for (int e = 0; e < 3; ++e) ++directed[{t[static_cast<std::size_t>(e)], t[static_cast<std::size_t>((e + 1) % 3)]}];
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    const auto it = directed.find({edge.second, edge.first});
    if (it == directed.end() || it->second != 1) return false;
  }
  return true;
}

SurfaceMesh SurfaceMesh::refined() const {
  SurfaceMesh out;
  out.vertices = vertices;
  out.sphere = sphere;
  std::map<std::pair<int, int>, int> midpoints;
  auto midpoint = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    const auto it = midpoints.find(key);
    if (it != midpoints.end()) return it->second;
    ParamPoint m = 0.5 * (out.vertices[static_cast<std::size_t>(a)] + out.vertices[static_cast<std::size_t>(b)]);
    if (sphere) m = sphere->center + sphere->radius * (m - sphere->center).normalized();
    out.vertices.push_back(m);
    const int idx = static_cast<int>(out.vertices.size()) - 1;
    midpoints.emplace(key, idx);
    return idx;
  };
  for (const auto& t : triangles) {
    const int ab = midpoint(t[0], t[1]);
    const int bc = midpoint(t[1], t[2]);
    const int ca = midpoint(t[2], t[0]);
    out.triangles.push_back({t[0], ab, ca});
    out.triangles.push_back({ab, t[1], bc});
    out.triangles.push_back({ca, bc, t[2]});
    out.triangles.push_back({ab, bc, ca});
  }
  return out;
}

SurfaceQuadrature SurfaceMesh::quadrature() const {
  const auto rule = triangle_rule_degree5<Real>();
  SurfaceQuadrature q;
  q.nodes.reserve(triangles.size() * rule.size());
  for (const auto& t : triangles) {
    for (int idx : t)
      if (idx < 0 || static_cast<std::size_t>(idx) >= vertices.size())
        throw Error(ErrorKind::InvalidArgument, "triangle references a missing vertex");
    const ParamPoint& a = vertices[static_cast<std::size_t>(t[0])];
    const ParamPoint& b = vertices[static_cast<std::size_t>(t[1])];
    const ParamPoint& c = vertices[static_cast<std::size_t>(t[2])];
    const ParamPoint eu = b - a;
    const ParamPoint ev = c - a;
    for (const auto& pt : rule) {
      const ParamPoint flat = pt.l1 * a + pt.l2 * b + pt.l3 * c;
      if (!sphere) {
        q.nodes.push_back({flat, 0.5 * pt.weight * eu.cross(ev)});
        continue;
      }
      const ParamPoint y = flat - sphere->center;
      const Real len = y.norm();
      const ParamPoint yhat = y / len;
      auto tangent = [&](const ParamPoint& d) {
        return ParamPoint(sphere->radius * (d - yhat * yhat.dot(d)) / len);
      };
      q.nodes.push_back({ParamPoint(sphere->center + sphere->radius * yhat),
                         0.5 * pt.weight * tangent(eu).cross(tangent(ev))});
    }
    q.probes.emplace_back(a, b);
    q.probes.emplace_back(b, c);
    q.probes.emplace_back(c, a);
  }
  return q;
}

SurfaceMesh icosphere(const ParamPoint& center, Real radius, int subdivisions) {
  if (!(radius > 0) || subdivisions < 0)
    throw Error(ErrorKind::InvalidArgument, "icosphere needs radius > 0 and subdivisions >= 0");
  const Real t = (1 + std::sqrt(5.0)) / 2;
  const std::array<ParamPoint, 12> base{
      ParamPoint(-1, t, 0), ParamPoint(1, t, 0),   ParamPoint(-1, -t, 0), ParamPoint(1, -t, 0),
      ParamPoint(0, -1, t), ParamPoint(0, 1, t),   ParamPoint(0, -1, -t), ParamPoint(0, 1, -t),
      ParamPoint(t, 0, -1), ParamPoint(t, 0, 1),   ParamPoint(-t, 0, -1), ParamPoint(-t, 0, 1)};
  SurfaceMesh mesh;
  mesh.sphere = SurfaceMesh::Sphere{center, radius};
  for (const auto& v : base) mesh.vertices.push_back(center + radius * v.normalized());
  mesh.triangles = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                    {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                    {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                    {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& tri : mesh.triangles) {
    const ParamPoint& a = mesh.vertices[static_cast<std::size_t>(tri[0])];
    const ParamPoint& b = mesh.vertices[static_cast<std::size_t>(tri[1])];
    const ParamPoint& c = mesh.vertices[static_cast<std::size_t>(tri[2])];
    if ((b - a).cross(c - a).dot(a + b + c - 3 * center) < 0) std::swap(tri[1], tri[2]);
  }
  for (int i = 0; i < subdivisions; ++i) mesh = mesh.refined();
  return mesh;
}

Surface mesh_surface(SurfaceMesh mesh, std::string name) {
  Surface s;
  s.name = std::move(name);
  s.closed = mesh.is_closed();
  if (mesh.sphere) s.exact_area = 4 * kPi * mesh.sphere->radius * mesh.sphere->radius;
  s.build = [mesh = std::move(mesh)](int level) {
    SurfaceMesh m = mesh;
    for (int i = 0; i < level; ++i) m = m.refined();
    return m.quadrature();
  };
  return s;
}

}  // namespace nhmono
