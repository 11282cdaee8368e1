#pragma once

#include <functional>
#include <vector>

#include "nhmono/branching.hpp"
#include "nhmono/geometry.hpp"
#include "nhmono/surface.hpp"

namespace nhmono {

struct FluxOptions {
  int max_level = 4;
  int threads = 1;
};

struct ChernResult {
  Complex flux;
  Complex normalized;  // flux / (2 pi)
  Real imag_residual = 0;
  int mesh_level = 0;
  std::size_t nodes = 0;
  bool converged = false;
};

/// Sum of field(x) . dS over the nodes, evaluated in parallel and reduced in
/// node order.
Complex surface_integral(const SurfaceQuadrature& quadrature,
                         const std::function<Vector3c(const ParamPoint&)>& field, int threads = 1);

/// Flux of the labeled curvature (sheet 1) or of the other state (sheet 2)
/// through a closed surface, refining until successive levels differ by less
/// than quad_tol * max(1, |flux|).
ChernResult flux(const Surface& surface, const ModelConfig& cfg, const BranchCut& cut, int sheet = 1,
                 const FluxOptions& options = {});

/// s / (s^2 - p^2)^{3/2} for 0 <= p < s (sheet 1; sheet 2 is the negation).
Real disk_density(Real p_radial, const ModelConfig& cfg);

/// i s / (p^2 - s^2)^{3/2} for p > s.
Complex plane_density(Real p_radial, const ModelConfig& cfg);

/// B(x, y, +eps) - B(x, y, -eps) of the labeled curvature, extrapolated to
/// eps -> 0 from eps and eps/2.
Vector3c curvature_jump(Real x, Real y, const ModelConfig& cfg, const BranchCut& cut,
                        Real eps = 1e-6, int sheet = 1);

struct LimitStudyResult {
  int orientation = 1;
  std::vector<Real> radii;
  std::vector<Complex> hemisphere_charge;  // C(S(r))
  std::vector<Complex> belt_charge;        // C(Sigma(r)) - C(S(r))
  Real sigma_charge = 0;                   // C(Sigma(r)), -2 pi or +2 pi
  Complex hemisphere_limit;                // C(S(inf)) from C_inf + a / r
  Complex chern_infinite;                  // C(Sigma) - C(S(inf))
  std::vector<int> mesh_levels;
};

/// C(S(r)) = integral over the upper hemisphere of dS . (B_1 - B_2)
/// (orientation 1) or dS . (B_2 - B_1) (orientation 2), dS pointing to +p_z.
ChernResult hemisphere_charge(Real radius, const ModelConfig& cfg, int orientation,
                              const FluxOptions& options = {});

LimitStudyResult limit_study(const std::vector<Real>& radii, const ModelConfig& cfg,
                             int orientation = 1, const FluxOptions& options = {});

}  // namespace nhmono
