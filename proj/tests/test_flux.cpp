#include <doctest.h>

#include <numbers>

#include "nhmono/flux.hpp"
#include "oracles.hpp"

using namespace nhmono;

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi;

ModelConfig model(Real s = 1) {
  ModelConfig cfg;
  cfg.s = s;
  return cfg;
}

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an nhmono::Error");
  return ErrorKind::InvalidArgument;
}

Real relative(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("surface areas") {
  const ParamPoint o = ParamPoint::Zero();
  for (const Surface& s : {sphere_surface(o, 2), hemisphere_surface(o, 3), belt_surface(1, 4), cube_surface(o, 4)}) {
    REQUIRE(s.exact_area.has_value());
    CHECK(std::abs(s.build(0).area() - *s.exact_area) <= 1e-6 * *s.exact_area);
  }
  const Surface ico = mesh_surface(icosphere(o, 1.5, 1));
  CHECK(std::abs(ico.build(0).area() - *ico.exact_area) > std::abs(ico.build(3).area() - *ico.exact_area));
  CHECK(std::abs(ico.build(3).area() - *ico.exact_area) <= 1e-6 * *ico.exact_area);
  const Surface ell = ellipsoid_surface(o, ParamPoint(2, 3, 1.5));
  CHECK(std::abs(ell.build(2).area() - ell.build(3).area()) < 1e-9);
  CHECK(ell.build(3).area() == doctest::Approx(57.81205375399336).epsilon(1e-9));
}

TEST_CASE("quadrature normals point outward") {
  const ParamPoint c(0.3, -0.2, 0.5);
  for (const Surface& s : {sphere_surface(c, 2), ellipsoid_surface(c, ParamPoint(1, 2, 3)), cube_surface(c, 1),
                           mesh_surface(icosphere(c, 1, 2))}) {
    for (const auto& node : s.build(0).nodes) CHECK((node.x - c).dot(node.dS) > 0);
  }
  for (const auto& node : hemisphere_surface(c, 1).build(0).nodes) {
    CHECK(node.x.z() >= c.z());
    CHECK((node.x - c).dot(node.dS) > 0);
  }
  for (const auto& node : belt_surface(1, 2, 0.5).build(0).nodes) {
    CHECK(node.dS.z() > 0);
    CHECK(node.x.z() == 0.5);
  }
}

TEST_CASE("meshes") {
  const SurfaceMesh ico = icosphere(ParamPoint::Zero(), 1, 0);
  CHECK(ico.vertices.size() == 12);
  CHECK(ico.triangles.size() == 20);
  CHECK(ico.is_closed());
  const SurfaceMesh fine = ico.refined();
  CHECK(fine.triangles.size() == 80);
  CHECK(fine.is_closed());
  for (const auto& v : fine.vertices) CHECK(std::abs(v.norm() - 1) < 1e-14);
  SurfaceMesh open = ico;
  open.triangles.pop_back();
  CHECK_FALSE(open.is_closed());
  CHECK(kind_of([&] { flux(mesh_surface(open), model(), BranchCut::natural_disk()); }) == ErrorKind::NotClosed);

  // flat triangles: area of the inscribed polyhedron, approaching the sphere
  SurfaceMesh flat = icosphere(ParamPoint::Zero(), 1, 3);
  flat.sphere.reset();
  const Real area = mesh_surface(flat).build(0).area();
  CHECK(area < 4 * std::numbers::pi);
  CHECK(area > 0.99 * 4 * std::numbers::pi);
}

TEST_CASE("chern flux through a sphere around the disk") {
  const ModelConfig cfg = model();
  const Surface sphere = sphere_surface(ParamPoint::Zero(), 2);
  const ChernResult one = flux(sphere, cfg, BranchCut::natural_disk(), 1);
  const ChernResult two = flux(sphere, cfg, BranchCut::natural_disk(), 2);
  CHECK(one.converged);
  CHECK(relative(one.flux, -kTwoPi) < 1e-3);
  CHECK(relative(two.flux, kTwoPi) < 1e-3);
  CHECK(std::abs(one.normalized + 1.0) < 1e-3);
  CHECK(one.imag_residual <= 1e-6 * std::abs(one.flux));
  // quadrature is spectrally accurate here
  CHECK(std::abs(one.flux + kTwoPi) < 1e-10);

  const ChernResult threaded = flux(sphere, cfg, BranchCut::natural_disk(), 1, {4, 3});
  CHECK(threaded.flux == one.flux);
}

TEST_CASE("flux does not depend on the enclosing surface") {
  const ModelConfig cfg = model();
  const BranchCut disk = BranchCut::natural_disk();
  const ParamPoint o = ParamPoint::Zero();
  const Complex ref = flux(sphere_surface(o, 2), cfg, disk).flux;
  const Surface others[] = {ellipsoid_surface(o, ParamPoint(2, 3, 1.5)), cube_surface(o, 4),
                            mesh_surface(icosphere(o, 2.5, 1)), sphere_surface(ParamPoint(0.3, 0.2, 0.1), 2.5)};
  for (const Surface& s : others) {
    const ChernResult c = flux(s, cfg, disk, 1, {6, 1});
    INFO(s.name);
    CHECK(c.converged);
    CHECK(std::abs(c.flux - ref) < 1e-3);
    CHECK(c.imag_residual <= 1e-6 * std::abs(c.flux));
  }
}

TEST_CASE("finite cuts give the same charge") {
  const ModelConfig cfg = model();
  const Surface sphere = sphere_surface(ParamPoint::Zero(), 2);
  for (Real h : {0.5, 1.0, 1.5}) {
    CHECK(relative(flux(sphere, cfg, BranchCut::finite_dome(h), 1).flux, -kTwoPi) < 1e-3);
    CHECK(relative(flux(sphere, cfg, BranchCut::finite_dome(h), 2).flux, kTwoPi) < 1e-3);
  }
  const ModelConfig small = model(0.4);
  CHECK(relative(flux(sphere, small, BranchCut::natural_disk()).flux, -kTwoPi) < 1e-3);
}

TEST_CASE("surfaces enclosing nothing carry no flux") {
  const ModelConfig cfg = model();
  const BranchCut disk = BranchCut::natural_disk();
  CHECK(std::abs(flux(sphere_surface(ParamPoint(2, 0, 0), 0.4), cfg, disk).flux) < 1e-6);
  CHECK(std::abs(flux(cube_surface(ParamPoint(0, 0, 2), 1), cfg, disk, 1, {6, 1}).flux) < 1e-6);
  CHECK(std::abs(flux(mesh_surface(icosphere(ParamPoint(0, -3, 1), 1, 1)), cfg, disk, 1, {6, 1}).flux) < 1e-6);
  // everything inside the dome region but away from the cut
  CHECK(std::abs(flux(sphere_surface(ParamPoint(0, 0, 0.5), 0.3), cfg, BranchCut::finite_dome(1.5)).flux) < 1e-6);
}

TEST_CASE("surfaces touching the cut are rejected") {
  const ModelConfig cfg = model();
  CHECK(kind_of([&] { flux(sphere_surface(ParamPoint::Zero(), 0.5), cfg, BranchCut::natural_disk()); }) ==
        ErrorKind::MeshTouchesCut);
  CHECK(kind_of([&] { flux(sphere_surface(ParamPoint::Zero(), 2), cfg, BranchCut::infinite_plane()); }) ==
        ErrorKind::MeshTouchesCut);
  CHECK(kind_of([&] { flux(sphere_surface(ParamPoint::Zero(), 1.2), cfg, BranchCut::finite_dome(1.5)); }) ==
        ErrorKind::MeshTouchesCut);
  Surface bad;
  bad.name = "ep";
  bad.build = [](int) {
    SurfaceQuadrature q;
    q.nodes.push_back({ParamPoint(1, 0, 0), ParamPoint(0, 0, 1)});
    return q;
  };
  CHECK(kind_of([&] { flux(bad, cfg, BranchCut::natural_disk()); }) == ErrorKind::EPDegenerate);
  CHECK(kind_of([&] { flux(hemisphere_surface(ParamPoint::Zero(), 2), cfg, BranchCut::natural_disk()); }) ==
        ErrorKind::NotClosed);
}

TEST_CASE("non-convergence is reported") {
  const ModelConfig cfg = model();
  // coarse start, one refinement, surface close to the EP circle
  const ChernResult c = flux(sphere_surface(ParamPoint::Zero(), 1.05, 2), cfg, BranchCut::natural_disk(), 1, {1, 1});
  CHECK_FALSE(c.converged);
  CHECK(c.mesh_level == 1);
}

TEST_CASE("disk density") {
  const ModelConfig cfg = model();
  CHECK(disk_density(0, cfg) == 1);
  CHECK(std::abs(disk_density(0.5, cfg) - 1.5396) < 1e-4);
  CHECK(disk_density(0.5, cfg) == doctest::Approx(std::pow(0.75, -1.5)).epsilon(1e-15));
  CHECK(kind_of([&] { disk_density(1, cfg); }) == ErrorKind::EdgeOfDisk);
  CHECK(kind_of([&] { disk_density(-0.1, cfg); }) == ErrorKind::InvalidArgument);

  Real prev = 0;
  for (int i = 0; i < 50; ++i) {
    const Real rho = 0.99 * i / 49;
    const Real d = disk_density(rho, cfg);
    CHECK(d > prev);
    prev = d;
  }

  for (int i = 0; i < 20; ++i) {
    const Real rho = 0.95 * i / 19;
    const Complex jump = curvature_jump(rho, 0, cfg, BranchCut::natural_disk(), 1e-6).z();
    const Real ref = static_cast<Real>(oracle::disk_density(rho, 1.0L));
    CHECK(std::abs(jump - ref) <= 1e-4 * ref);
    CHECK(std::abs(disk_density(rho, cfg) - ref) <= 1e-14 * ref);
  }
  // radial symmetry
  const Complex rotated = curvature_jump(0.3, 0.4, cfg, BranchCut::natural_disk(), 1e-6).z();
  CHECK(std::abs(rotated - disk_density(0.5, cfg)) < 1e-8);
  // sheet 2 carries the opposite density
  CHECK(std::abs(curvature_jump(0.5, 0, cfg, BranchCut::natural_disk(), 1e-6, 2).z() + disk_density(0.5, cfg)) < 1e-8);
}

TEST_CASE("plane density") {
  const ModelConfig cfg = model();
  CHECK(std::abs(plane_density(2, cfg) - Complex(0, std::pow(3.0, -1.5))) < 1e-15);
  CHECK(std::abs(plane_density(1e4, cfg)) < 1e-11);
  CHECK(kind_of([&] { plane_density(1, cfg); }) == ErrorKind::EdgeOfDisk);
  for (Real rho : {1.5, 2.0, 3.0}) {
    const Complex jump = curvature_jump(rho, 0, cfg, BranchCut::infinite_plane(), 1e-6).z();
    const Complex ref(oracle::plane_density(rho, 1.0L));
    CHECK(std::abs(jump - ref) <= 1e-6 * std::abs(ref));
  }
  // the natural cut has no sheet change out here
  CHECK(std::abs(curvature_jump(2, 0, cfg, BranchCut::natural_disk(), 1e-6).z()) < 1e-8);
}

TEST_CASE("hemisphere charge matches its closed form") {
  const ModelConfig cfg = model();
  for (Real r : {1.5, 4.0, 8.0, 20.0}) {
    const ChernResult c = hemisphere_charge(r, cfg, 1);
    const Complex ref(oracle::hemisphere_charge(r, 1.0L));
    CHECK(c.converged);
    CHECK(std::abs(c.flux - ref) < 1e-8);
    CHECK(std::abs(hemisphere_charge(r, cfg, 2).flux + ref) < 1e-8);
  }
  CHECK(kind_of([&] { hemisphere_charge(0.5, cfg, 1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { hemisphere_charge(2, cfg, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("limit study") {
  const ModelConfig cfg = model();
  const std::vector<Real> radii{4, 8, 16, 20};
  for (int orientation : {1, 2}) {
    const Real sign = orientation == 1 ? 1 : -1;
    const LimitStudyResult r = limit_study(radii, cfg, orientation);
    CHECK(r.sigma_charge == -sign * kTwoPi);
    REQUIRE(r.hemisphere_charge.size() == 4);
    for (std::size_t i = 0; i < radii.size(); ++i) {
      CHECK(std::abs(r.belt_charge[i] - (r.sigma_charge - r.hemisphere_charge[i])) == 0);
      if (i > 0)
        CHECK(std::abs(r.hemisphere_charge[i] + sign * kTwoPi) < std::abs(r.hemisphere_charge[i - 1] + sign * kTwoPi));
    }
    const Complex fit = oracle::fit_limit({radii[1], radii[2], radii[3]},
                                          {r.hemisphere_charge[1], r.hemisphere_charge[2], r.hemisphere_charge[3]});
    CHECK(std::abs(r.hemisphere_limit - fit) < 1e-10);
    CHECK(std::abs(r.hemisphere_limit + sign * kTwoPi) < 0.02 * kTwoPi);
    CHECK(std::abs(r.chern_infinite) < 0.02 * kTwoPi);
    // the deficit at r decays like s / r, so at 20 s it is just above 1/20
    CHECK(std::abs(r.hemisphere_charge[3] + sign * kTwoPi) / kTwoPi == doctest::Approx(1 / std::sqrt(399.0)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(limit_study({4, 2}, cfg), Error);
  CHECK_THROWS_AS(limit_study({0.5, 2}, cfg), Error);
  CHECK_THROWS_AS(limit_study({4}, cfg), Error);
}
