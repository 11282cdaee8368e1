#include <doctest.h>

#include <sstream>

#include "nhmono/dump.hpp"
#include "nhmono/flux.hpp"
#include "nhmono/io.hpp"

using namespace nhmono;
using nlohmann::json;

namespace {

ModelConfig model(Real s = 1) {
  ModelConfig cfg;
  cfg.s = s;
  return cfg;
}

std::size_t column(const DumpTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    if (t.columns[i] == name) return i;
  FAIL("no column " << name);
  return 0;
}

}  // namespace

TEST_CASE("energy dump") {
  const std::vector<ParamPoint> pts{ParamPoint(2, 0, 0), ParamPoint(0, 0, 0), ParamPoint(0.3, 0.4, 1)};
  const DumpTable t = field_dump(pts, model(), BranchCut::natural_disk(), kDumpE);
  CHECK(t.columns == std::vector<std::string>{"px", "py", "pz", "sheet", "Re_e1", "Im_e1", "Re_e2", "Im_e2"});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0][4] == doctest::Approx(std::sqrt(3.0)));
  CHECK(t.rows[0][6] == doctest::Approx(-std::sqrt(3.0)));
  CHECK(std::isnan(t.rows[1][5]));  // origin lies on the disk
  for (const auto& row : t.rows) CHECK(row.size() == t.columns.size());
}

TEST_CASE("full column layout") {
  const DumpTable t =
      field_dump({ParamPoint(2, 1, 1)}, model(), BranchCut::natural_disk(), kDumpB | kDumpE | kDumpA | kDumpLabels | kDumpDivergence);
  const std::vector<std::string> expect{"px",    "py",    "pz",    "sheet", "Re_Bx", "Im_Bx", "Re_By", "Im_By",
                                        "Re_Bz", "Im_Bz", "Re_e1", "Im_e1", "Re_e2", "Im_e2", "Re_Ax", "Im_Ax",
                                        "Re_Ay", "Im_Ay", "Re_Az", "Im_Az", "label", "Re_divB", "Im_divB"};
  CHECK(t.columns == expect);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].size() == expect.size());
  const Vector3c b = curvature_analytic(ParamPoint(2, 1, 1), model(), BranchCut::natural_disk()).B;
  CHECK(t.rows[0][column(t, "Re_Bz")] == b.z().real());
  CHECK(std::abs(t.rows[0][column(t, "Re_divB")]) < 1e-6);
}

TEST_CASE("unevaluable points become NaN") {
  const DumpTable t = field_dump({ParamPoint(1, 0, 0), ParamPoint(0.5, 0, 0)}, model(), BranchCut::natural_disk(),
                                 kDumpB | kDumpE | kDumpLabels);
  for (const auto& row : t.rows)
    for (std::size_t c = 4; c < row.size(); ++c) CHECK(std::isnan(row[c]));
  std::ostringstream csv;
  t.write_csv(csv);
  CHECK(csv.str().find("nan") != std::string::npos);
}

TEST_CASE("label column flips at the plane") {
  const auto pts = line_samples(ParamPoint(2, 0, -1), ParamPoint(2, 0, 1), 10);
  const DumpTable t = field_dump(pts, model(), BranchCut::infinite_plane(), kDumpLabels | kDumpE);
  const std::size_t lc = column(t, "label");
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(t.rows[i][lc] == (pts[i].z() > 0 ? 2 : 1));

  // across the natural disk the labels stay, the labeled energy flips
  const auto disk = line_samples(ParamPoint(0.5, 0, -1), ParamPoint(0.5, 0, 1), 10);
  const DumpTable d = field_dump(disk, model(), BranchCut::natural_disk(), kDumpLabels | kDumpE);
  const std::size_t ic = column(d, "Im_e1");
  for (std::size_t i = 0; i < disk.size(); ++i) {
    CHECK(d.rows[i][column(d, "label")] == 1);
    CHECK((d.rows[i][ic] > 0) == (disk[i].z() > 0));
  }
}

TEST_CASE("sheet 2 dump") {
  const DumpTable one = field_dump({ParamPoint(2, 1, 1)}, model(), BranchCut::natural_disk(), kDumpB | kDumpE, 1);
  const DumpTable two = field_dump({ParamPoint(2, 1, 1)}, model(), BranchCut::natural_disk(), kDumpB | kDumpE, 2);
  CHECK(two.rows[0][3] == 2);
  for (std::size_t c = 4; c < 10; ++c) CHECK(two.rows[0][c] == -one.rows[0][c]);
  CHECK(two.rows[0][column(two, "Re_e1")] == one.rows[0][column(one, "Re_e2")]);
}

TEST_CASE("radial disk density scan is increasing") {
  const auto pts = line_samples(ParamPoint(0, 0, 0), ParamPoint(0.99, 0, 0), 50);
  Real prev = 0;
  for (const auto& p : pts) {
    const Real d = disk_density(p.x(), model());
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("csv output") {
  const DumpTable t = field_dump({ParamPoint(0.1, 0.2, 0.3)}, model(), BranchCut::natural_disk(), kDumpB);
  std::ostringstream a, b;
  t.write_csv(a);
  field_dump({ParamPoint(0.1, 0.2, 0.3)}, model(), BranchCut::natural_disk(), kDumpB, 1, 4).write_csv(b);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "px,py,pz,sheet,Re_Bx,Im_Bx,Re_By,Im_By,Re_Bz,Im_Bz");
  CHECK(row.rfind("0.10000000000000001,0.20000000000000001,0.29999999999999999,1,", 0) == 0);
  // values parse back exactly
  std::vector<double> vals;
  std::stringstream cells(row);
  for (std::string cell; std::getline(cells, cell, ',');) vals.push_back(std::stod(cell));
  CHECK(vals == t.rows[0]);
}

TEST_CASE("formatting and sampling helpers") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1) == "1");
  CHECK(format_real(std::nan("")) == "nan");
  CHECK(format_real(-INFINITY) == "-inf");

  const auto line = line_samples(ParamPoint(0, 0, 0), ParamPoint(1, 2, 3), 4);
  REQUIRE(line.size() == 4);
  CHECK(line.back() == ParamPoint(1, 2, 3));
  CHECK(line_samples(ParamPoint(1, 1, 1), ParamPoint(2, 2, 2), 1).front() == ParamPoint(1, 1, 1));
  CHECK_THROWS_AS(line_samples(ParamPoint(0, 0, 0), ParamPoint(1, 1, 1), 0), Error);

  const auto grid = grid_samples({ParamPoint(0, 0, 0), ParamPoint(1, 1, 1)}, {2, 3, 1});
  REQUIRE(grid.size() == 6);
  CHECK(grid[0] == ParamPoint(0, 0, 0.5));
  CHECK(grid[1] == ParamPoint(0, 0.5, 0.5));
  CHECK(grid[5] == ParamPoint(1, 1, 0.5));
}

TEST_CASE("loop specs") {
  const ParamLoop c = loop_from_json(json::parse(R"({"center":[1,0,0],"radius":0.5,"normal":[0,1,0],"samples":32})"));
  CHECK(c.samples == 32);
  CHECK((c.path(0) - ParamPoint(1, 0, 0)).norm() == doctest::Approx(0.5));
  const ParamLoop poly = loop_from_json(json::parse(R"({"points":[[0,0,0],[1,0,0],[1,1,0]]})"));
  CHECK(poly.points().size() == 4);
  CHECK_THROWS_AS(loop_from_json(json::parse(R"({"center":[1,0,0],"radius":0.5,"normal":[0,1,0],"samples":32,"x":1})")), Error);
  CHECK_THROWS_AS(loop_from_json(json::parse(R"({"center":[1,0],"radius":0.5,"normal":[0,1,0],"samples":32})")), Error);
  CHECK_THROWS_AS(loop_from_json(json::parse(R"({"center":[1,0,0],"normal":[0,1,0],"samples":32})")), Error);
  CHECK_THROWS_AS(loop_from_json(json::parse(R"({"center":[1,0,0],"radius":0.5,"normal":[0,1,0],"samples":2.5})")), Error);
}

TEST_CASE("mesh json round trip") {
  const SurfaceMesh ico = icosphere(ParamPoint(0, 0, 1), 2, 1);
  const json j = mesh_to_json(ico);
  const SurfaceMesh back = mesh_from_json(j);
  REQUIRE(back.vertices.size() == ico.vertices.size());
  for (std::size_t i = 0; i < ico.vertices.size(); ++i) CHECK(back.vertices[i] == ico.vertices[i]);
  CHECK(back.triangles == ico.triangles);
  CHECK(back.is_closed());
  CHECK_THROWS_AS(mesh_from_json(json::parse(R"({"vertices":[[0,0,0]],"triangles":[[0,0,1]]})")), Error);
  CHECK_THROWS_AS(mesh_from_json(json::parse(R"({"vertices":[],"triangles":[],"extra":1})")), Error);
  // a flat mesh imported from json still integrates to the enclosed charge
  const ChernResult c = flux(mesh_surface(back), model(), BranchCut::natural_disk(), 1, {6, 1});
  CHECK(std::abs(c.flux + 2 * std::numbers::pi) < 1e-3);
}
