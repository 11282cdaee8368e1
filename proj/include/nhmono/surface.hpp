#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nhmono/core.hpp"

namespace nhmono {

/// Quadrature node with its vector area element (weight times unit normal).
struct QuadratureNode {
  ParamPoint x;
  ParamPoint dS;
};

struct SurfaceQuadrature {
  std::vector<QuadratureNode> nodes;
  /// Pairs of neighbouring points used to detect a surface crossing a cut.
  std::vector<std::pair<ParamPoint, ParamPoint>> probes;

  Real area() const;
};

/// Triangulated surface; triangles are counter-clockwise seen from outside.
/// When `sphere` is set, triangles are mapped onto that sphere (curved
/// elements) instead of being integrated flat.
struct SurfaceMesh {
  std::vector<ParamPoint> vertices;
  std::vector<std::array<int, 3>> triangles;
  struct Sphere {
    ParamPoint center;
    Real radius;
  };
  std::optional<Sphere> sphere;

  /// Every directed edge has exactly one opposite partner.
  bool is_closed() const;

  /// Splits each triangle in four (midpoints projected when curved).
  SurfaceMesh refined() const;

  SurfaceQuadrature quadrature() const;
};

SurfaceMesh icosphere(const ParamPoint& center, Real radius, int subdivisions = 0);

/// A surface that can produce quadratures at increasing refinement levels.
struct Surface {
  std::string name;
  bool closed = true;
  std::optional<Real> exact_area;
  std::function<SurfaceQuadrature(int level)> build;
};

/// Product rule: Gauss-Legendre in the polar angle, trapezoid in azimuth.
/// Level L uses base_polar * 2^L polar nodes and twice as many azimuthal ones.
Surface sphere_surface(const ParamPoint& center, Real radius, int base_polar = 16);
Surface ellipsoid_surface(const ParamPoint& center, const ParamPoint& semi_axes, int base_polar = 16);

/// Upper hemisphere (p_z >= center z) with the outward normal pointing away
/// from the center. Not closed.
Surface hemisphere_surface(const ParamPoint& center, Real radius, int base_polar = 16);

/// Annulus inner <= rho <= outer at height z with normal +z. Not closed.
Surface belt_surface(Real inner, Real outer, Real z = 0, int base_radial = 16);

/// Axis-aligned cube, tensor Gauss-Legendre on each face.
Surface cube_surface(const ParamPoint& center, Real side, int base_per_face = 8);

/// A triangulated mesh, refined by midpoint subdivision per level.
Surface mesh_surface(SurfaceMesh mesh, std::string name = "mesh");

}  // namespace nhmono
