#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "nhmono/branching.hpp"
#include "nhmono/core.hpp"
#include "nhmono/spectra.hpp"

namespace nhmono {

struct CurvatureSample {
  Vector3c B;
  std::optional<Vector3c> A;
  int sheet = 1;
  ParamPoint p;
};

/// Smooth eigensystem field around an anchor point.
using EigenField = std::function<BiorthoSystem(const ParamPoint&)>;

/// 1e-5 * max(s, |p|).
Real default_step(const ParamPoint& p, const ModelConfig& cfg);

/// B of the principal-root state, -(p + i s z) / (2 E^3), with E^3 the cube
/// of the principal root.
Vector3c principal_curvature(const ParamPoint& p, Real s);

/// Closed-form curvature of the labeled branch (sheet 1) or the other state
/// (sheet 2).
CurvatureSample curvature_analytic(const ParamPoint& p, const ModelConfig& cfg,
                                   const BranchCut& cut, int sheet = 1);

/// Labeled eigensystems around `anchor` in one fixed gauge: projector
/// columns frozen at the anchor. Evaluating at a point across the cut from
/// the anchor throws StencilCrossesCut.
EigenField stencil_field(const ParamPoint& anchor, const ModelConfig& cfg, const BranchCut& cut);

/// Central-difference i <grad phi^j| x |grad psi_j> of an arbitrary smooth field.
Vector3c curvature_fd(const EigenField& field, const ParamPoint& p, Real h, int sheet = 1);
CurvatureSample curvature_fd(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut,
                             Real h, int sheet = 1);

/// (4 B(h/2) - B(h)) / 3 from curvature_fd.
CurvatureSample curvature_fd_richardson(const ParamPoint& p, const ModelConfig& cfg,
                                        const BranchCut& cut, Real h, int sheet = 1);

/// Central-difference i <phi^j| grad psi_j>.
Vector3c connection(const EigenField& field, const ParamPoint& p, Real h, int sheet = 1);
Vector3c connection(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut, Real h,
                    int sheet = 1);

using MatrixVector = std::array<Matrix2c, 3>;

/// F = -i sum_n |grad psi_n><phi^n| (right_form) and the completeness-based
/// equivalent i sum_n |psi_n><grad phi^n| (left_form).
struct FOperator {
  MatrixVector right_form;
  MatrixVector left_form;
};

FOperator f_operator(const EigenField& field, const ParamPoint& p, Real h);
FOperator f_operator(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut, Real h);

/// (F x G)_x = F_y G_z - F_z G_y, keeping operator order.
MatrixVector cross(const MatrixVector& f, const MatrixVector& g);

/// Curl of right_form F by central differences of step outer_h.
MatrixVector curl_f_operator(const EigenField& field, const ParamPoint& p, Real outer_h,
                             Real inner_h);

/// i <phi^j| F x F |psi_j>.
Vector3c curvature_from_f(const FOperator& f, const BiorthoSystem& sys, int sheet = 1);

struct Box {
  ParamPoint lo;
  ParamPoint hi;
};

struct DivergencePoint {
  ParamPoint p;
  Complex divergence;
  bool crosses_cut = false;  // flagged, not evaluated
};

struct DivergenceField {
  std::vector<DivergencePoint> points;
  Real max_abs = 0;  // over unflagged points
  int flagged = 0;
};

/// Central-difference divergence of the labeled closed-form curvature.
/// With `richardson`, combines steps h and h/2 as (4 D(h/2) - D(h)) / 3.
std::optional<Complex> divergence_at(const ParamPoint& p, const ModelConfig& cfg,
                                     const BranchCut& cut, Real h, bool richardson = true,
                                     int sheet = 1);

DivergenceField divergence_scan(const Box& region, const std::array<int, 3>& grid,
                                const ModelConfig& cfg, const BranchCut& cut, Real h,
                                bool richardson = true, int threads = 1);

}  // namespace nhmono
