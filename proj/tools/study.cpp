#include "study.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "nhmono/geometry.hpp"
#include "nhmono/io.hpp"

namespace nhmono::cli {

namespace {

using nlohmann::json;

constexpr Real kTwoPi = 2 * std::numbers::pi;

const std::set<std::string> kStudies{"chern",        "divergence-scan", "loop-trace",   "density",
                                     "limit-study",  "hermitian-loop",  "field-dump"};

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw ConfigError(join(path, key), "unknown key");
}

Real number(const json& obj, const std::string& key, const std::string& path,
            std::optional<Real> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(join(path, key), "expected a number");
  const Real x = v.get<Real>();
  if (!std::isfinite(x)) throw ConfigError(join(path, key), "must be finite");
  return x;
}

int integer(const json& obj, const std::string& key, const std::string& path, std::optional<int> fallback) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(join(path, key), "expected an integer");
  return v.get<int>();
}

std::string text(const json& obj, const std::string& key, const std::string& path,
                 std::optional<std::string> fallback) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "missing");
  }
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(join(path, key), "expected a string");
  return v.get<std::string>();
}

ParamPoint point(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(join(path, key), "missing");
  try {
    return point_from_json(obj.at(key), join(path, key));
  } catch (const Error& e) {
    throw ConfigError(join(path, key), "expected an array of three finite numbers");
  }
}

std::vector<Real> number_list(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key) || !obj.at(key).is_array() || obj.at(key).empty())
    throw ConfigError(join(path, key), "expected a non-empty array of numbers");
  std::vector<Real> out;
  for (const auto& v : obj.at(key)) {
    if (!v.is_number()) throw ConfigError(join(path, key), "expected numbers");
    out.push_back(v.get<Real>());
  }
  return out;
}

void require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

ModelConfig parse_model(const json& doc) {
  require(doc.contains("model"), "model", "missing");
  const json& m = doc.at("model");
  check_keys(m, {"s", "kind", "r"}, "model");
  ModelConfig cfg;
  const std::string kind = text(m, "kind", "model", "non_hermitian_dirac");
  if (kind == "non_hermitian_dirac") {
    cfg.kind = ModelKind::NonHermitianDirac;
    cfg.s = number(m, "s", "model");
    require(cfg.s > 0, "model.s", "must be > 0");
    cfg.r = number(m, "r", "model", 1.0);
  } else if (kind == "hermitian_disk") {
    cfg.kind = ModelKind::HermitianDisk;
    cfg.r = number(m, "r", "model");
    cfg.s = number(m, "s", "model", 1.0);
    require(cfg.s > 0, "model.s", "must be > 0");
  } else {
    throw ConfigError("model.kind", "expected non_hermitian_dirac or hermitian_disk");
  }
  require(cfg.r > 0, "model.r", "must be > 0");
  return cfg;
}

void parse_tolerances(const json& doc, Tolerances& tol) {
  if (!doc.contains("tolerances")) return;
  const json& t = doc.at("tolerances");
  check_keys(t, {"ep_tol", "axis_tol", "cut_tol", "quad_tol", "div_tol", "im_tol", "tracking_tie", "max_refinements"},
             "tolerances");
  auto positive = [&](const char* key, Real& slot) {
    if (!t.contains(key)) return;
    slot = number(t, key, "tolerances");
    require(slot > 0, join("tolerances", key), "must be > 0");
  };
  positive("ep_tol", tol.ep_tol);
  positive("axis_tol", tol.axis_tol);
  positive("cut_tol", tol.cut_tol);
  positive("quad_tol", tol.quad_tol);
  positive("div_tol", tol.div_tol);
  positive("im_tol", tol.im_tol);
  positive("tracking_tie", tol.tracking_tie);
  if (t.contains("max_refinements")) {
    tol.max_refinements = integer(t, "max_refinements", "tolerances", std::nullopt);
    require(tol.max_refinements > 0, "tolerances.max_refinements", "must be > 0");
  }
}

BranchCut parse_cut(const json& doc, json& spec) {
  spec = doc.contains("cut") ? doc.at("cut") : json{{"kind", "natural_disk"}};
  check_keys(spec, {"kind", "dome_height", "orientation"}, "cut");
  const std::string orient = text(spec, "orientation", "cut", "sheet1_outside");
  CutOrientation o;
  if (orient == "sheet1_outside") o = CutOrientation::Sheet1Outside;
  else if (orient == "sheet2_outside") o = CutOrientation::Sheet2Outside;
  else throw ConfigError("cut.orientation", "expected sheet1_outside or sheet2_outside");
  const std::string kind = text(spec, "kind", "cut", "natural_disk");
  if (kind == "natural_disk") return BranchCut::natural_disk(o);
  if (kind == "infinite_plane") return BranchCut::infinite_plane(o);
  if (kind == "finite_dome") {
    const Real h = number(spec, "dome_height", "cut");
    require(h > 0, "cut.dome_height", "must be > 0");
    return BranchCut::finite_dome(h, o);
  }
  throw ConfigError("cut.kind", "expected natural_disk, finite_dome or infinite_plane");
}

int sheet_param(const json& p, const std::string& path) {
  const int sheet = integer(p, "sheet", path, 1);
  require(sheet == 1 || sheet == 2, join(path, "sheet"), "must be 1 or 2");
  return sheet;
}

unsigned parse_fields(const json& p, const std::string& path) {
  if (!p.contains("what")) return kDumpB;
  const json& w = p.at("what");
  require(w.is_array() && !w.empty(), join(path, "what"), "expected a non-empty array");
  unsigned fields = 0;
  for (const auto& f : w) {
    require(f.is_string(), join(path, "what"), "expected strings");
    const std::string name = f.get<std::string>();
    if (name == "B") fields |= kDumpB;
    else if (name == "A") fields |= kDumpA;
    else if (name == "E") fields |= kDumpE;
    else if (name == "labels") fields |= kDumpLabels;
    else if (name == "divergence") fields |= kDumpDivergence;
    else throw ConfigError(join(path, "what"), "unknown field '" + name + "'");
  }
  return fields;
}

std::vector<ParamPoint> parse_samples(const json& p, const std::string& path) {
  int given = int(p.contains("points")) + int(p.contains("line")) + int(p.contains("grid"));
  require(given == 1, path, "exactly one of points, line, grid is required");
  if (p.contains("points")) {
    require(p.at("points").is_array(), join(path, "points"), "expected an array");
    std::vector<ParamPoint> pts;
    for (const auto& v : p.at("points")) {
      try {
        pts.push_back(point_from_json(v, join(path, "points")));
      } catch (const Error&) {
        throw ConfigError(join(path, "points"), "expected arrays of three finite numbers");
      }
    }
    return pts;
  }
  if (p.contains("line")) {
    const json& l = p.at("line");
    const std::string lp = join(path, "line");
    check_keys(l, {"from", "to", "count"}, lp);
    const int count = integer(l, "count", lp, std::nullopt);
    require(count >= 1, join(lp, "count"), "must be >= 1");
    return line_samples(point(l, "from", lp), point(l, "to", lp), count);
  }
  const json& g = p.at("grid");
  const std::string gp = join(path, "grid");
  check_keys(g, {"lo", "hi", "resolution"}, gp);
  const int n = integer(g, "resolution", gp, std::nullopt);
  require(n >= 1, join(gp, "resolution"), "must be >= 1");
  return grid_samples({point(g, "lo", gp), point(g, "hi", gp)}, {n, n, n});
}

StudyParams parse_params(const std::string& study, const json& doc, const ModelConfig& model) {
  const json p = doc.contains("params") ? doc.at("params") : json::object();
  const std::string path = "params";
  if (study == "chern") {
    check_keys(p, {"surface", "sheet", "max_level"}, path);
    ChernParams out;
    require(p.contains("surface"), "params.surface", "missing");
    out.surface = p.at("surface");
    surface_from_json(out.surface, "params.surface");
    out.sheet = sheet_param(p, path);
    out.max_level = integer(p, "max_level", path, 4);
    require(out.max_level >= 1, "params.max_level", "must be >= 1");
    return out;
  }
  if (study == "divergence-scan") {
    check_keys(p, {"lo", "hi", "resolution", "h", "richardson"}, path);
    DivergenceParams out;
    out.box = {point(p, "lo", path), point(p, "hi", path)};
    require((out.box.hi - out.box.lo).minCoeff() >= 0, "params.hi", "must be >= params.lo componentwise");
    const int n = integer(p, "resolution", path, 11);
    require(n >= 1, "params.resolution", "must be >= 1");
    out.grid = {n, n, n};
    out.h = number(p, "h", path, 1e-3 * model.s);
    require(out.h > 0, "params.h", "must be > 0");
    if (p.contains("richardson")) {
      require(p.at("richardson").is_boolean(), "params.richardson", "expected a boolean");
      out.richardson = p.at("richardson").get<bool>();
    }
    return out;
  }
  if (study == "loop-trace" || study == "hermitian-loop") {
    check_keys(p, {"loop"}, path);
    require(p.contains("loop"), "params.loop", "missing");
    try {
      loop_from_json(p.at("loop"));
    } catch (const Error& e) {
      throw ConfigError("params.loop", e.what());
    }
    return LoopParams{p.at("loop")};
  }
  if (study == "density") {
    check_keys(p, {"kind", "radii", "eps"}, path);
    DensityParams out;
    out.kind = text(p, "kind", path, "disk");
    require(out.kind == "disk" || out.kind == "plane", "params.kind", "expected disk or plane");
    out.radii = number_list(p, "radii", path);
    for (Real r : out.radii) {
      if (out.kind == "disk") require(r >= 0 && r < model.s, "params.radii", "disk radii must lie in [0, s)");
      else require(r > model.s, "params.radii", "plane radii must exceed s");
    }
    out.eps = number(p, "eps", path, 1e-6 * model.s);
    require(out.eps > 0, "params.eps", "must be > 0");
    return out;
  }
  if (study == "limit-study") {
    check_keys(p, {"radii", "orientation", "max_level"}, path);
    LimitParams out;
    out.radii = number_list(p, "radii", path);
    require(out.radii.size() >= 2, "params.radii", "needs at least two radii");
    for (std::size_t i = 0; i < out.radii.size(); ++i) {
      require(out.radii[i] > model.s, "params.radii", "radii must exceed s");
      require(i == 0 || out.radii[i] > out.radii[i - 1], "params.radii", "radii must be strictly increasing");
    }
    out.orientation = integer(p, "orientation", path, 1);
    require(out.orientation == 1 || out.orientation == 2, "params.orientation", "must be 1 or 2");
    out.max_level = integer(p, "max_level", path, 4);
    require(out.max_level >= 1, "params.max_level", "must be >= 1");
    return out;
  }
  // field-dump
  check_keys(p, {"points", "line", "grid", "what", "sheet"}, path);
  DumpParams out;
  out.points = parse_samples(p, path);
  out.fields = parse_fields(p, path);
  out.sheet = sheet_param(p, path);
  return out;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

void write_table(const DumpTable& table, const std::filesystem::path& path, const std::string& format) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("output.path", "cannot open '" + path.string() + "' for writing");
  if (format == "csv") {
    table.write_csv(out);
    return;
  }
  json j;
  j["columns"] = table.columns;
  j["rows"] = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(1) << '\n';
}

}  // namespace

Surface surface_from_json(const json& spec, const std::string& key) {
  if (!spec.is_object()) throw ConfigError(key, "expected an object");
  const std::string type = text(spec, "type", key, std::nullopt);
  auto base = [&](int fallback) {
    const int b = integer(spec, "base", key, fallback);
    require(b >= 1, join(key, "base"), "must be >= 1");
    return b;
  };
  auto positive = [&](const char* name) {
    const Real v = number(spec, name, key);
    require(v > 0, join(key, name), "must be > 0");
    return v;
  };
  if (type == "sphere") {
    check_keys(spec, {"type", "center", "radius", "base"}, key);
    return sphere_surface(point(spec, "center", key), positive("radius"), base(16));
  }
  if (type == "ellipsoid") {
    check_keys(spec, {"type", "center", "semi_axes", "base"}, key);
    const ParamPoint axes = point(spec, "semi_axes", key);
    require(axes.minCoeff() > 0, join(key, "semi_axes"), "must be > 0");
    return ellipsoid_surface(point(spec, "center", key), axes, base(16));
  }
  if (type == "cube") {
    check_keys(spec, {"type", "center", "side", "base"}, key);
    return cube_surface(point(spec, "center", key), positive("side"), base(8));
  }
  if (type == "icosphere") {
    check_keys(spec, {"type", "center", "radius", "subdivisions"}, key);
    const int sub = integer(spec, "subdivisions", key, 2);
    require(sub >= 0, join(key, "subdivisions"), "must be >= 0");
    return mesh_surface(icosphere(point(spec, "center", key), positive("radius"), sub), "icosphere");
  }
  if (type == "mesh") {
    check_keys(spec, {"type", "path", "vertices", "triangles"}, key);
    json mesh_doc;
    if (spec.contains("path")) {
      std::ifstream in(text(spec, "path", key, std::nullopt));
      if (!in) throw ConfigError(join(key, "path"), "cannot read mesh file");
      try {
        in >> mesh_doc;
      } catch (const json::exception& e) {
        throw ConfigError(join(key, "path"), e.what());
      }
    } else {
      if (!spec.contains("vertices") || !spec.contains("triangles"))
        throw ConfigError(key, "mesh needs path or vertices and triangles");
      mesh_doc = {{"vertices", spec.at("vertices")}, {"triangles", spec.at("triangles")}};
    }
    try {
      return mesh_surface(mesh_from_json(mesh_doc), "mesh");
    } catch (const Error& e) {
      throw ConfigError(key, e.what());
    } catch (const json::exception& e) {
      throw ConfigError(key, e.what());
    }
  }
  throw ConfigError(join(key, "type"), "expected sphere, ellipsoid, cube, icosphere or mesh");
}

StudyConfig parse_config(const json& doc) {
  check_keys(doc, {"model", "cut", "study", "params", "output", "tolerances"}, "");
  StudyConfig cfg;
  cfg.echo = doc;
  cfg.model = parse_model(doc);
  parse_tolerances(doc, cfg.model.tol);
  cfg.cut = parse_cut(doc, cfg.cut_spec);
  cfg.study = text(doc, "study", "", std::nullopt);
  if (!kStudies.count(cfg.study)) throw ConfigError("study", "unknown study '" + cfg.study + "'");
  if (cfg.study == "hermitian-loop")
    require(cfg.model.kind == ModelKind::HermitianDisk, "model.kind", "hermitian-loop needs hermitian_disk");
  else
    require(cfg.model.kind == ModelKind::NonHermitianDirac, "model.kind",
            "study '" + cfg.study + "' needs non_hermitian_dirac");
  cfg.params = parse_params(cfg.study, doc, cfg.model);
  const json out = doc.contains("output") ? doc.at("output") : json::object();
  check_keys(out, {"path", "format"}, "output");
  cfg.format = text(out, "format", "output", "csv");
  require(cfg.format == "csv" || cfg.format == "json", "output.format", "expected csv or json");
  cfg.output_path = text(out, "path", "output", cfg.study + "." + cfg.format);
  require(!cfg.output_path.empty(), "output.path", "must not be empty");
  return cfg;
}

json run(const StudyConfig& config, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ModelConfig& model = config.model;
  json results = json::object();
  json levels = json::object();
  DumpTable table;

  if (const auto* p = std::get_if<ChernParams>(&config.params)) {
    const Surface surface = surface_from_json(p->surface, "params.surface");
    const ChernResult c = flux(surface, model, config.cut, p->sheet, {p->max_level, options.threads});
    if (!c.converged)
      throw Error(ErrorKind::NonConvergence, "flux did not converge by level " + std::to_string(c.mesh_level));
    results["flux"] = complex_json(c.flux);
    results["normalized"] = complex_json(c.normalized);
    results["imag_residual"] = c.imag_residual;
    results["imag_within_tol"] = c.imag_residual <= model.tol.im_tol * std::max(std::abs(c.flux), 1.0);
    results["sheet"] = p->sheet;
    results["nodes"] = c.nodes;
    levels["mesh_level"] = c.mesh_level;
    table.columns = {"mesh_level", "nodes", "Re_flux", "Im_flux", "Re_normalized", "Im_normalized"};
    table.rows.push_back({double(c.mesh_level), double(c.nodes), c.flux.real(), c.flux.imag(),
                          c.normalized.real(), c.normalized.imag()});
  } else if (const auto* p = std::get_if<DivergenceParams>(&config.params)) {
    const DivergenceField f = divergence_scan(p->box, p->grid, model, config.cut, p->h, p->richardson, options.threads);
    results["max_abs_divergence"] = f.max_abs;
    results["flagged"] = f.flagged;
    results["points"] = f.points.size();
    results["within_tol"] = f.max_abs <= model.tol.div_tol;
    levels["h"] = p->h;
    levels["richardson"] = p->richardson;
    table.columns = {"px", "py", "pz", "Re_divB", "Im_divB", "flagged"};
    for (const auto& dp : f.points)
      table.rows.push_back({dp.p.x(), dp.p.y(), dp.p.z(), dp.divergence.real(), dp.divergence.imag(),
                            dp.crosses_cut ? 1.0 : 0.0});
  } else if (const auto* p = std::get_if<LoopParams>(&config.params)) {
    const ParamLoop loop = loop_from_json(p->loop);
    const MobiusReport r = config.study == "loop-trace" ? trace_loop(loop, model)
                                                        : trace_loop_hermitian(loop, model.r, model.tol);
    results["swapped"] = r.swapped;
    results["linking_number"] = r.linking_number;
    results["final_overlap"] = json::array({complex_json(r.final_overlap[0]), complex_json(r.final_overlap[1])});
    levels["samples"] = loop.samples;
    levels["refinements"] = r.refinements;
    table.columns = {"k", "Re_E", "Im_E"};
    for (std::size_t k = 0; k < r.energy_trace.size(); ++k)
      table.rows.push_back({double(k), r.energy_trace[k].real(), r.energy_trace[k].imag()});
  } else if (const auto* p = std::get_if<DensityParams>(&config.params)) {
    const bool disk = p->kind == "disk";
    const BranchCut cut = disk ? BranchCut::natural_disk() : BranchCut::infinite_plane();
    Real max_rel = 0;
    table.columns = {"p", "Re_rho", "Im_rho", "Re_jump", "Im_jump", "rel_err"};
    for (Real r : p->radii) {
      const Complex rho = disk ? Complex(disk_density(r, model)) : plane_density(r, model);
      const Complex jump = curvature_jump(r, 0, model, cut, p->eps).z();
      const Real rel = std::abs(jump - rho) / std::abs(rho);
      max_rel = std::max(max_rel, rel);
      table.rows.push_back({r, rho.real(), rho.imag(), jump.real(), jump.imag(), rel});
    }
    results["kind"] = p->kind;
    results["max_rel_err"] = max_rel;
    levels["eps"] = p->eps;
  } else if (const auto* p = std::get_if<LimitParams>(&config.params)) {
    const LimitStudyResult r = limit_study(p->radii, model, p->orientation, {p->max_level, options.threads});
    results["orientation"] = r.orientation;
    results["sigma_charge"] = r.sigma_charge;
    results["radii"] = r.radii;
    json cs = json::array(), belt = json::array();
    for (std::size_t i = 0; i < r.radii.size(); ++i) {
      cs.push_back(complex_json(r.hemisphere_charge[i]));
      belt.push_back(complex_json(r.belt_charge[i]));
    }
    results["hemisphere_charge"] = cs;
    results["belt_charge"] = belt;
    results["hemisphere_limit"] = complex_json(r.hemisphere_limit);
    results["chern_infinite"] = complex_json(r.chern_infinite);
    levels["mesh_levels"] = r.mesh_levels;
    table.columns = {"r", "Re_CS", "Im_CS", "Re_belt", "Im_belt"};
    for (std::size_t i = 0; i < r.radii.size(); ++i)
      table.rows.push_back({r.radii[i], r.hemisphere_charge[i].real(), r.hemisphere_charge[i].imag(),
                            r.belt_charge[i].real(), r.belt_charge[i].imag()});
  } else if (const auto* p = std::get_if<DumpParams>(&config.params)) {
    table = field_dump(p->points, model, config.cut, p->fields, p->sheet, options.threads);
    results["rows"] = table.rows.size();
  }

  const std::filesystem::path out_path = options.out_dir.empty()
                                             ? std::filesystem::path(config.output_path)
                                             : options.out_dir / config.output_path;
  write_table(table, out_path, config.format);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return json{{"study", config.study}, {"inputs", config.echo},   {"results", results},
              {"outputs", json::array({out_path.string()})},      {"wall_time_s", seconds},
              {"levels", levels}};
}

std::vector<std::pair<std::string, json>> reproduction_suite() {
  const json model = {{"s", 1.0}, {"kind", "non_hermitian_dirac"}};
  const json natural = {{"kind", "natural_disk"}};
  const json sphere2 = {{"type", "sphere"}, {"center", {0.0, 0.0, 0.0}}, {"radius", 2.0}};
  auto cfg = [&](const std::string& name, const std::string& study, json params, json cut) {
    return std::pair<std::string, json>{
        name + ".json",
        json{{"model", model}, {"cut", std::move(cut)}, {"study", study}, {"params", std::move(params)},
             {"output", {{"path", name + ".csv"}, {"format", "csv"}}}}};
  };
  std::vector<std::pair<std::string, json>> suite;
  suite.push_back(cfg("c01_chern_sheet1", "chern", {{"surface", sphere2}, {"sheet", 1}}, natural));
  suite.push_back(cfg("c01_chern_sheet2", "chern", {{"surface", sphere2}, {"sheet", 2}}, natural));
  suite.push_back(cfg("c02_chern_finite_dome", "chern", {{"surface", sphere2}, {"sheet", 1}},
                      {{"kind", "finite_dome"}, {"dome_height", 1.5}}));
  suite.push_back(cfg("c03_limit_study_orientation1", "limit-study",
                      {{"radii", {4.0, 8.0, 16.0, 20.0}}, {"orientation", 1}},
                      {{"kind", "infinite_plane"}, {"orientation", "sheet1_outside"}}));
  suite.push_back(cfg("c03_limit_study_orientation2", "limit-study",
                      {{"radii", {4.0, 8.0, 16.0, 20.0}}, {"orientation", 2}},
                      {{"kind", "infinite_plane"}, {"orientation", "sheet2_outside"}}));
  suite.push_back(cfg("c04_divergence_scan", "divergence-scan",
                      {{"lo", {1.5, 1.5, 1.5}}, {"hi", {2.5, 2.5, 2.5}}, {"resolution", 11}, {"h", 1e-3}},
                      natural));
  json radii = json::array();
  for (int i = 0; i < 20; ++i) radii.push_back(0.95 * i / 19.0);
  suite.push_back(cfg("c05_disk_density", "density", {{"kind", "disk"}, {"radii", radii}, {"eps", 1e-6}}, natural));
  suite.push_back(cfg("c05_plane_density", "density", {{"kind", "plane"}, {"radii", {1.5, 2.0, 3.0}}}, natural));
  suite.push_back(cfg("c06_loop_linking", "loop-trace",
                      {{"loop", {{"center", {1.0, 0.0, 0.0}}, {"radius", 0.5}, {"normal", {0.0, 1.0, 0.0}}, {"samples", 256}}}},
                      natural));
  suite.push_back(cfg("c06_loop_ordinary", "loop-trace",
                      {{"loop", {{"center", {3.0, 0.0, 3.0}}, {"radius", 0.3}, {"normal", {0.3, 0.4, 1.0}}, {"samples", 256}}}},
                      natural));
  suite.push_back(cfg("c06_loop_double_traversal", "loop-trace",
                      {{"loop",
                        {{"center", {1.0, 0.0, 0.0}}, {"radius", 0.5}, {"normal", {0.0, 1.0, 0.0}}, {"samples", 512}, {"turns", 2}}}},
                      natural));
  const json hermitian = {{"kind", "hermitian_disk"}, {"r", 1.0}};
  auto hcfg = [&](const std::string& name, json loop) {
    return std::pair<std::string, json>{
        name + ".json", json{{"model", hermitian}, {"study", "hermitian-loop"}, {"params", {{"loop", std::move(loop)}}},
                             {"output", {{"path", name + ".csv"}, {"format", "csv"}}}}};
  };
  suite.push_back(hcfg("c07_hermitian_through_disk",
                       {{"center", {1.0, 0.0, 0.0}}, {"radius", 0.6}, {"normal", {0.0, 1.0, 0.0}}, {"samples", 256}}));
  suite.push_back(hcfg("c07_hermitian_off_disk",
                       {{"center", {1.8, 0.0, 0.0}}, {"radius", 0.5}, {"normal", {0.0, 1.0, 0.0}}, {"samples", 256}}));
  suite.push_back(cfg("c08_gauge_fields", "field-dump",
                      {{"line", {{"from", {1.5, 0.2, 0.3}}, {"to", {2.5, 0.6, 0.9}}, {"count", 10}}}, {"what", {"B", "A", "E"}}},
                      natural));
  suite.push_back(cfg("c09_curvature_samples", "field-dump",
                      {{"grid", {{"lo", {1.5, 1.5, 1.5}}, {"hi", {2.5, 2.5, 2.5}}, {"resolution", 3}}},
                       {"what", {"B", "divergence"}}},
                      natural));
  suite.push_back(cfg("c10_energies_axis_scan", "field-dump",
                      {{"line", {{"from", {0.0, 0.0, -2.0}}, {"to", {0.0, 0.0, 2.0}}, {"count", 9}}}, {"what", {"E", "labels"}}},
                      natural));
  return suite;
}

std::vector<std::filesystem::path> emit_reproduction_suite(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("suite", "cannot create directory '" + dir.string() + "': " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& [name, doc] : reproduction_suite()) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ConfigError("suite", "cannot write '" + path.string() + "'");
    out << doc.dump(2) << '\n';
    if (!out) throw ConfigError("suite", "cannot write '" + path.string() + "'");
    written.push_back(path);
  }
  return written;
}

}  // namespace nhmono::cli
