#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace nhmono {

using Real = double;
using Complex = std::complex<Real>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

/// A point (p_x, p_y, p_z) of the model's parameter space.
template <typename Scalar>
using ParamPointT = Vector3<Scalar>;

using ParamPoint = ParamPointT<Real>;
using Vector3c = Vector3<Complex>;
using Vector2c = Vector2<Complex>;
using Matrix2c = Matrix2<Complex>;

enum class ErrorKind {
  EPDegenerate,
  AxisSingular,
  DegenerateCircle,
  ZeroGauge,
  OnCutSurface,
  StencilCrossesCut,
  AmbiguousTracking,
  EdgeOfDisk,
  MeshTouchesCut,
  NotClosed,
  NonConvergence,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Numerical failure raised by the library. The CLI maps every instance
/// to exit code 3 and prints what() verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Default tolerances. Scales multiply by the non-Hermiticity s where noted.
struct Tolerances {
  Real ep_tol = 1e-10;          // |p^2 - s^2 + 2i p_z s| <= ep_tol * s^2 marks an EP
  Real axis_tol = 1e-6;         // p_x^2 + p_y^2 <= axis_tol^2 uses the robust eigensystem
  Real cut_tol = 1e-9;          // distance to a cut surface, times s
  Real quad_tol = 1e-6;         // successive flux refinements
  Real div_tol = 1e-4;          // |div B| acceptance
  Real im_tol = 1e-6;           // |Im flux| <= im_tol * |flux|
  Real tracking_tie = 1e-12;    // equidistant candidates during continuation
  int max_refinements = 20;     // step halvings during continuation
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace nhmono
