#include "nhmono/branching.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace nhmono {

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi;

Real radial(const ParamPoint& p) { return std::hypot(p.x(), p.y()); }

// Scale used by the relative tolerances; falls back to 1 in the s = 0 limit.
Real length_scale(const ModelConfig& cfg) { return cfg.s > 0 ? cfg.s : Real(1); }

}  // namespace

BranchCut BranchCut::natural_disk(CutOrientation o) {
  BranchCut c;
  c.kind = CutKind::NaturalDisk;
  c.orientation = o;
  return c;
}

BranchCut BranchCut::finite_dome(Real height, CutOrientation o) {
  if (!(height > 0)) throw Error(ErrorKind::InvalidArgument, "dome height must be > 0");
  BranchCut c;
  c.kind = CutKind::FiniteDome;
  c.dome_height = height;
  c.orientation = o;
  return c;
}

BranchCut BranchCut::infinite_plane(CutOrientation o) {
  BranchCut c;
  c.kind = CutKind::InfinitePlane;
  c.orientation = o;
  return c;
}

BranchCut BranchCut::custom(std::function<bool(const ParamPoint&)> region, CutOrientation o) {
  if (!region) throw Error(ErrorKind::InvalidArgument, "custom cut needs a region predicate");
  BranchCut c;
  c.kind = CutKind::CustomRegion;
  c.region = std::move(region);
  c.orientation = o;
  return c;
}

bool BranchCut::in_swap_region(const ParamPoint& p, const ModelConfig& cfg) const {
  switch (kind) {
    case CutKind::NaturalDisk:
      return false;
    case CutKind::FiniteDome: {
      // p_z = 0 belongs to the region so the disk itself stays continuous.
      const Real zs = p.z() * cfg.s / dome_height;
      return p.z() >= 0 && p.x() * p.x() + p.y() * p.y() + zs * zs < cfg.s * cfg.s;
    }
    case CutKind::InfinitePlane:
      return p.z() >= 0;
    case CutKind::CustomRegion:
      return region(p);
  }
  return false;
}

bool BranchCut::on_cut(const ParamPoint& p, const ModelConfig& cfg) const {
  const Real tol = cfg.tol.cut_tol * length_scale(cfg);
  switch (kind) {
    case CutKind::NaturalDisk:
      return std::abs(p.z()) <= tol && radial(p) < cfg.s;
    case CutKind::InfinitePlane:
      return std::abs(p.z()) <= tol && radial(p) > cfg.s;
    case CutKind::FiniteDome: {
      if (p.z() < -tol) return false;
      const Real k = cfg.s / dome_height;
      const Real level = p.x() * p.x() + p.y() * p.y() + k * k * p.z() * p.z() - cfg.s * cfg.s;
      const Real grad = 2 * std::sqrt(p.x() * p.x() + p.y() * p.y() + k * k * k * k * p.z() * p.z());
      if (grad == 0) return false;
      return std::abs(level) / grad <= tol;
    }
    case CutKind::CustomRegion: {
      for (int axis = 0; axis < 3; ++axis) {
        ParamPoint lo = p, hi = p;
        lo[axis] -= tol;
        hi[axis] += tol;
        if (crosses_cut(lo, hi, *this, cfg)) return true;
      }
      return false;
    }
  }
  return false;
}

int label_point(const ParamPoint& p, const BranchCut& cut, const ModelConfig& cfg) {
  if (is_exceptional(p, cfg))
    throw Error(ErrorKind::EPDegenerate, "point lies on the exceptional circle");
  if (cut.kind != CutKind::CustomRegion && cut.on_cut(p, cfg))
    throw Error(ErrorKind::OnCutSurface, "point lies on the branch cut");
  int label = cut.in_swap_region(p, cfg) ? 2 : 1;
  if (cut.orientation == CutOrientation::Sheet2Outside) label = 3 - label;
  return label;
}

Complex labeled_energy(const ParamPoint& p, const BranchCut& cut, const ModelConfig& cfg) {
  int label = cut.in_swap_region(p, cfg) ? 2 : 1;
  if (cut.orientation == CutOrientation::Sheet2Outside) label = 3 - label;
  const Complex e = std::sqrt(radicand(p, cfg.s));
  return label == 1 ? e : -e;
}

bool crosses_cut(const ParamPoint& a, const ParamPoint& b, const BranchCut& cut,
                 const ModelConfig& cfg) {
  const Complex ea = labeled_energy(a, cut, cfg);
  const Complex eb = labeled_energy(b, cut, cfg);
  return std::abs(eb + ea) < std::abs(eb - ea);
}

BiorthoSystem labeled_eigensystem(const ParamPoint& p, const BranchCut& cut,
                                  const ModelConfig& cfg) {
  const int label = label_point(p, cut, cfg);
  BiorthoSystem sys = is_on_axis(p, cfg) ? robust_eigensystem(p, cfg) : analytic_eigensystem(p, cfg);
  return label == 2 ? sys.swapped() : sys;
}

std::vector<ParamPoint> ParamLoop::points() const {
  std::vector<ParamPoint> out;
  out.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 0; k < samples; ++k) out.push_back(path(Real(k) / samples));
  out.push_back(out.front());
  return out;
}

ParamLoop ParamLoop::circle(const ParamPoint& center, Real radius, const ParamPoint& normal,
                            int samples, int turns) {
  if (!(radius > 0) || samples < 3 || turns < 1 || normal.norm() == 0)
    throw Error(ErrorKind::InvalidArgument, "circle loop needs radius > 0, samples >= 3, turns >= 1");
  const ParamPoint n = normal.normalized();
  int least;
  n.cwiseAbs().minCoeff(&least);
  const ParamPoint u = n.cross(ParamPoint::Unit(least)).normalized();
  const ParamPoint v = n.cross(u);
  ParamLoop loop;
  loop.samples = samples;
  loop.path = [=](Real t) {
    const Real a = kTwoPi * turns * t;
    return ParamPoint(center + radius * (std::cos(a) * u + std::sin(a) * v));
  };
  return loop;
}

ParamLoop ParamLoop::polyline(std::vector<ParamPoint> vertices) {
  if (vertices.size() > 1 && vertices.front() == vertices.back()) vertices.pop_back();
  if (vertices.size() < 3)
    throw Error(ErrorKind::InvalidArgument, "polyline loop needs at least 3 distinct vertices");
  const int m = static_cast<int>(vertices.size());
  ParamLoop loop;
  loop.samples = m;
  loop.path = [vertices = std::move(vertices), m](Real t) {
    const Real x = t * m;
    int k = static_cast<int>(std::floor(x));
    if (k >= m) k = m - 1;
    if (k < 0) k = 0;
    const Real frac = x - k;
    if (frac == 0) return vertices[static_cast<std::size_t>(k)];
    const ParamPoint& a = vertices[static_cast<std::size_t>(k)];
    const ParamPoint& b = vertices[static_cast<std::size_t>((k + 1) % m)];
    return ParamPoint(a + frac * (b - a));
  };
  return loop;
}

int disk_linking_number(const std::vector<ParamPoint>& closed_polyline, Real radius) {
  int linking = 0;
  for (std::size_t k = 0; k + 1 < closed_polyline.size(); ++k) {
    const ParamPoint& a = closed_polyline[k];
    const ParamPoint& b = closed_polyline[k + 1];
    const bool up_a = a.z() >= 0;
    const bool up_b = b.z() >= 0;
    if (up_a == up_b) continue;
    const Real t = a.z() / (a.z() - b.z());
    const ParamPoint x = a + t * (b - a);
    if (radial(x) < radius) linking += up_b ? 1 : -1;
  }
  return linking;
}

namespace {

// Walks [t0, t1] in sub-steps, halving any step whose candidate choice is not
// clear-cut. `choose(t, depth_exhausted)` returns false to request a halving.
template <typename Choose>
int continue_segment(Real t0, Real t1, int max_depth, Choose&& choose) {
  struct Span {
    Real a, b;
    int depth;
  };
  std::vector<Span> stack{{t0, t1, 0}};
  int refinements = 0;
  while (!stack.empty()) {
    const Span span = stack.back();
    stack.pop_back();
    if (choose(span.b, span.depth >= max_depth)) continue;
    const Real mid = 0.5 * (span.a + span.b);
    // Second half is processed after the first.
    stack.push_back({mid, span.b, span.depth + 1});
    stack.push_back({span.a, mid, span.depth + 1});
    ++refinements;
  }
  return refinements;
}

}  // namespace

MobiusReport trace_loop(const ParamLoop& loop, const ModelConfig& cfg) {
  const std::vector<ParamPoint> pts = loop.points();
  for (const auto& p : pts)
    if (is_exceptional(p, cfg))
      throw Error(ErrorKind::EPDegenerate, "loop sample lies on the exceptional circle");

  const ParamPoint p0 = pts.front();
  const Complex e0 = std::sqrt(radicand(p0, cfg.s));
  Complex tracked = e0;

  Vector2c state = robust_eigensystem(p0, cfg).psi[0].normalized();

  MobiusReport report;
  report.energy_trace.push_back(tracked);

  auto choose = [&](Real t, bool exhausted) {
    const ParamPoint p = loop.path(t);
    if (is_exceptional(p, cfg))
      throw Error(ErrorKind::EPDegenerate, "loop passes through the exceptional circle");
    const Complex e = std::sqrt(radicand(p, cfg.s));
    const Real d_plus = std::abs(e - tracked);
    const Real d_minus = std::abs(-e - tracked);
    const Real near = std::min(d_plus, d_minus);
    const Real far = std::max(d_plus, d_minus);
    if (near > 0.5 * far && !exhausted) return false;
    if (exhausted && std::abs(d_plus - d_minus) <= cfg.tol.tracking_tie)
      throw Error(ErrorKind::AmbiguousTracking, "candidate energies equidistant at maximum refinement");
    tracked = d_plus <= d_minus ? e : -e;
    const Matrix2c proj = (Matrix2c::Identity() + hamiltonian(p, cfg) / tracked) / 2.0;
    state = (proj * state).normalized();
    return true;
  };

  for (int k = 0; k < loop.samples; ++k) {
    const Real t0 = Real(k) / loop.samples;
    const Real t1 = Real(k + 1) / loop.samples;
    report.refinements += continue_segment(t0, t1, cfg.tol.max_refinements, choose);
    report.energy_trace.push_back(tracked);
  }

  report.swapped = std::abs(tracked + e0) < std::abs(tracked - e0);
  const BiorthoSystem initial = robust_eigensystem(p0, cfg);
  for (int m = 0; m < 2; ++m)
    report.final_overlap[static_cast<std::size_t>(m)] =
        initial.phi[static_cast<std::size_t>(m)].dot(state) * initial.psi[static_cast<std::size_t>(m)].norm();
  report.linking_number = disk_linking_number(pts, cfg.s);
  return report;
}

MobiusReport trace_loop_hermitian(const ParamLoop& loop, Real r, const Tolerances& tol) {
  const std::vector<ParamPoint> pts = loop.points();
  const ParamPoint p0 = pts.front();
  const Real theta0 = hermitian_theta(p0.x(), p0.y(), p0.z(), r);
  Real unwrapped = theta0;
  Real raw_prev = theta0;

  MobiusReport report;
  report.energy_trace.push_back(std::cos(unwrapped / 2));

  auto choose = [&](Real t, bool exhausted) {
    const ParamPoint p = loop.path(t);
    const Real raw = hermitian_theta(p.x(), p.y(), p.z(), r);
    Real delta = std::remainder(raw - raw_prev, kTwoPi);
    if (std::abs(delta) > 0.5 * std::numbers::pi && !exhausted) return false;
    if (exhausted && std::abs(std::abs(delta) - std::numbers::pi) <= tol.tracking_tie)
      throw Error(ErrorKind::AmbiguousTracking, "theta step of pi at maximum refinement");
    unwrapped += delta;
    raw_prev = raw;
    return true;
  };

  for (int k = 0; k < loop.samples; ++k) {
    const Real t0 = Real(k) / loop.samples;
    const Real t1 = Real(k + 1) / loop.samples;
    report.refinements += continue_segment(t0, t1, tol.max_refinements, choose);
    report.energy_trace.push_back(std::cos(unwrapped / 2));
  }

  const long windings = std::lround((unwrapped - theta0) / kTwoPi);
  report.swapped = (windings % 2) != 0;
  const auto start = hermitian_eigensystem(theta0);
  const auto end = hermitian_eigensystem(unwrapped);
  report.final_overlap = {Complex(end.psi_plus.dot(start.psi_plus)),
                          Complex(end.psi_plus.dot(start.psi_minus))};
  report.linking_number = disk_linking_number(pts, r);
  return report;
}

}  // namespace nhmono
