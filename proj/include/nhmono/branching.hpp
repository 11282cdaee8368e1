#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nhmono/core.hpp"
#include "nhmono/spectra.hpp"

namespace nhmono {

enum class CutKind { NaturalDisk, FiniteDome, InfinitePlane, CustomRegion };

/// Which eigenstate is "branch 1" outside the swap region.
enum class CutOrientation { Sheet1Outside, Sheet2Outside };

/// A branch-cut strategy. Every cut is described by its swap region: the
/// labeled branch is the principal-root state outside the region and the
/// other state inside it.
///
///   NaturalDisk    no swap region; cut = disk p_x^2+p_y^2 < s^2, p_z = 0
///   FiniteDome     region under the dome rho^2 + (p_z s/h)^2 = s^2, p_z >= 0
///   InfinitePlane  region p_z >= 0; cut = plane outside the EP circle
///   CustomRegion   user membership predicate
struct BranchCut {
  CutKind kind = CutKind::NaturalDisk;
  Real dome_height = 1;
  std::function<bool(const ParamPoint&)> region;
  CutOrientation orientation = CutOrientation::Sheet1Outside;

  static BranchCut natural_disk(CutOrientation o = CutOrientation::Sheet1Outside);
  static BranchCut finite_dome(Real height, CutOrientation o = CutOrientation::Sheet1Outside);
  static BranchCut infinite_plane(CutOrientation o = CutOrientation::Sheet1Outside);
  static BranchCut custom(std::function<bool(const ParamPoint&)> region,
                          CutOrientation o = CutOrientation::Sheet1Outside);

  bool in_swap_region(const ParamPoint& p, const ModelConfig& cfg) const;

  /// True within cut_tol * s of the declared cut surface.
  bool on_cut(const ParamPoint& p, const ModelConfig& cfg) const;
};

/// 1 if the principal-root state is the labeled branch at p, else 2.
int label_point(const ParamPoint& p, const BranchCut& cut, const ModelConfig& cfg);

/// Eigensystem with index 0 holding the labeled branch. Uses the closed form
/// off the p_z axis and the robust construction on it.
BiorthoSystem labeled_eigensystem(const ParamPoint& p, const BranchCut& cut,
                                  const ModelConfig& cfg);

/// Energy of the labeled branch, without building eigenvectors.
Complex labeled_energy(const ParamPoint& p, const BranchCut& cut, const ModelConfig& cfg);

/// True when the labeled field jumps between a and b, i.e. the labeled energy
/// at b is closer to minus the energy at a than to it. Exact for segments
/// short compared with the energy's variation.
bool crosses_cut(const ParamPoint& a, const ParamPoint& b, const BranchCut& cut,
                 const ModelConfig& cfg);

struct SheetLabeling {
  BranchCut cut;
  ModelConfig cfg;

  int operator()(const ParamPoint& p) const { return label_point(p, cut, cfg); }
};

/// Closed path p(t), t in [0, 1], sampled at `samples` equal parameter steps.
struct ParamLoop {
  std::function<ParamPoint(Real)> path;
  int samples = 0;

  /// samples + 1 points; the last repeats the first.
  std::vector<ParamPoint> points() const;

  static ParamLoop circle(const ParamPoint& center, Real radius, const ParamPoint& normal,
                          int samples, int turns = 1);
  static ParamLoop polyline(std::vector<ParamPoint> vertices);
};

struct MobiusReport {
  bool swapped = false;
  int linking_number = 0;
  std::vector<Complex> energy_trace;
  std::array<Complex, 2> final_overlap{};
  int refinements = 0;
};

/// Signed crossings of the sampled loop through the disk x^2+y^2 < radius^2, z = 0.
int disk_linking_number(const std::vector<ParamPoint>& closed_polyline, Real radius);

/// Nearest-energy continuation of sheet 1 around the loop, independent of any
/// branch cut.
MobiusReport trace_loop(const ParamLoop& loop, const ModelConfig& cfg);

/// Continuous unwrapping of theta for the Hermitian disk model of radius r.
MobiusReport trace_loop_hermitian(const ParamLoop& loop, Real r,
                                  const Tolerances& tol = default_tolerances());

}  // namespace nhmono
