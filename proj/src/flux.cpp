#include "nhmono/flux.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "nhmono/parallel.hpp"

namespace nhmono {

namespace {

constexpr Real kTwoPi = 2 * std::numbers::pi;

void check_surface(const SurfaceQuadrature& q, const ModelConfig& cfg, const BranchCut& cut) {
  for (const auto& node : q.nodes) {
    if (is_exceptional(node.x, cfg))
      throw Error(ErrorKind::EPDegenerate, "surface node lies on the exceptional circle");
    if (cut.on_cut(node.x, cfg))
      throw Error(ErrorKind::MeshTouchesCut, "surface node lies on the branch cut");
  }
  for (const auto& [a, b] : q.probes)
    if (crosses_cut(a, b, cut, cfg))
      throw Error(ErrorKind::MeshTouchesCut, "surface crosses the branch cut");
}

template <typename Evaluate>
ChernResult refine(const Surface& surface, const ModelConfig& cfg, const FluxOptions& options,
                   Evaluate&& evaluate) {
  ChernResult result;
  Complex previous;
  for (int level = 0; level <= options.max_level; ++level) {
    const SurfaceQuadrature q = surface.build(level);
    const Complex value = evaluate(q);
    result.flux = value;
    result.mesh_level = level;
    result.nodes = q.nodes.size();
    if (level > 0 && std::abs(value - previous) < cfg.tol.quad_tol * std::max(1.0, std::abs(value))) {
      result.converged = true;
      break;
    }
    previous = value;
  }
  result.normalized = result.flux / kTwoPi;
  result.imag_residual = std::abs(result.flux.imag());
  return result;
}

}  // namespace

Complex surface_integral(const SurfaceQuadrature& quadrature,
                         const std::function<Vector3c(const ParamPoint&)>& field, int threads) {
  std::vector<Complex> terms(quadrature.nodes.size());
  parallel_for(terms.size(), threads, [&](std::size_t i) {
    const auto& node = quadrature.nodes[i];
    terms[i] = field(node.x).cwiseProduct(node.dS.cast<Complex>()).sum();
  });
  Complex total = 0;
  for (const Complex& t : terms) total += t;
  return total;
}

ChernResult flux(const Surface& surface, const ModelConfig& cfg, const BranchCut& cut, int sheet,
                 const FluxOptions& options) {
  if (!surface.closed) throw Error(ErrorKind::NotClosed, "flux needs a closed surface");
  return refine(surface, cfg, options, [&](const SurfaceQuadrature& q) {
    check_surface(q, cfg, cut);
    return surface_integral(
        q, [&](const ParamPoint& x) { return curvature_analytic(x, cfg, cut, sheet).B; }, options.threads);
  });
}

Real disk_density(Real p_radial, const ModelConfig& cfg) {
  if (!(p_radial >= 0)) throw Error(ErrorKind::InvalidArgument, "radial distance must be >= 0");
  if (p_radial >= cfg.s) throw Error(ErrorKind::EdgeOfDisk, "disk density applies only for p < s");
  const Real d = cfg.s * cfg.s - p_radial * p_radial;
  return cfg.s / (d * std::sqrt(d));
}

Complex plane_density(Real p_radial, const ModelConfig& cfg) {
  if (p_radial <= cfg.s) throw Error(ErrorKind::EdgeOfDisk, "plane density applies only for p > s");
  const Real d = p_radial * p_radial - cfg.s * cfg.s;
  return {0, cfg.s / (d * std::sqrt(d))};
}

Vector3c curvature_jump(Real x, Real y, const ModelConfig& cfg, const BranchCut& cut, Real eps,
                        int sheet) {
  auto jump = [&](Real e) -> Vector3c {
    return curvature_analytic(ParamPoint(x, y, e), cfg, cut, sheet).B -
           curvature_analytic(ParamPoint(x, y, -e), cfg, cut, sheet).B;
  };
  // jump(e) = J + c e + O(e^2)
  return 2.0 * jump(eps / 2) - jump(eps);
}

ChernResult hemisphere_charge(Real radius, const ModelConfig& cfg, int orientation,
                              const FluxOptions& options) {
  if (orientation != 1 && orientation != 2)
    throw Error(ErrorKind::InvalidArgument, "orientation must be 1 or 2");
  if (!(radius > cfg.s)) throw Error(ErrorKind::InvalidArgument, "hemisphere radius must exceed s");
  const Surface hemi = hemisphere_surface(ParamPoint::Zero(), radius);
  const Real sign = orientation == 1 ? 1.0 : -1.0;
  // B_1 - B_2 of the principal-root state, which is continuous on p_z > 0.
  return refine(hemi, cfg, options, [&](const SurfaceQuadrature& q) {
    return surface_integral(
        q, [&](const ParamPoint& x) { return Vector3c(2.0 * sign * principal_curvature(x, cfg.s)); },
        options.threads);
  });
}

LimitStudyResult limit_study(const std::vector<Real>& radii, const ModelConfig& cfg,
                             int orientation, const FluxOptions& options) {
  if (radii.size() < 2) throw Error(ErrorKind::InvalidArgument, "limit study needs at least two radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > cfg.s)) throw Error(ErrorKind::InvalidArgument, "limit study radii must exceed s");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "limit study radii must be strictly increasing");
  }
  LimitStudyResult out;
  out.orientation = orientation;
  out.radii = radii;
  out.sigma_charge = orientation == 1 ? -kTwoPi : kTwoPi;
  for (Real r : radii) {
    const ChernResult c = hemisphere_charge(r, cfg, orientation, options);
    out.hemisphere_charge.push_back(c.flux);
    out.belt_charge.push_back(out.sigma_charge - c.flux);
    out.mesh_levels.push_back(c.mesh_level);
  }

  // Least squares C(S(r)) = C_inf + a / r over the three largest radii.
  const std::size_t n = std::min<std::size_t>(3, radii.size());
  const std::size_t first = radii.size() - n;
  Eigen::MatrixXcd design(static_cast<Eigen::Index>(n), 2);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    design(row, 0) = 1.0;
    design(row, 1) = 1.0 / radii[first + i];
    rhs(row) = out.hemisphere_charge[first + i];
  }
  const Eigen::VectorXcd coef = design.colPivHouseholderQr().solve(rhs);
  out.hemisphere_limit = coef(0);
  out.chern_infinite = out.sigma_charge - out.hemisphere_limit;
  return out;
}

}  // namespace nhmono
