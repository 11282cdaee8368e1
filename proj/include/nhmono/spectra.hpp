#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>

#include <Eigen/Dense>

#include "nhmono/core.hpp"

namespace nhmono {

enum class ModelKind { NonHermitianDirac, HermitianDisk };

/// Model parameters. `s` is the non-Hermiticity strength of the Dirac model,
/// `r` the disk radius of the Hermitian comparison model.
template <typename Scalar>
struct ModelConfigT {
  Scalar s = 1;
  ModelKind kind = ModelKind::NonHermitianDirac;
  Scalar r = 1;
  Tolerances tol = default_tolerances();
};

using ModelConfig = ModelConfigT<Real>;

/// Throws InvalidArgument unless s > 0 (Dirac) or r > 0 (disk). Setting
/// `allow_hermitian_limit` admits s == 0 for the spinor reduction.
template <typename Scalar>
void validate(const ModelConfigT<Scalar>& cfg, bool allow_hermitian_limit = false) {
  if (cfg.kind == ModelKind::NonHermitianDirac) {
    const bool ok = allow_hermitian_limit ? cfg.s >= 0 : cfg.s > 0;
    if (!ok || !std::isfinite(static_cast<double>(cfg.s)))
      throw Error(ErrorKind::InvalidArgument, "model.s must be > 0");
  } else if (!(cfg.r > 0) || !std::isfinite(static_cast<double>(cfg.r))) {
    throw Error(ErrorKind::InvalidArgument, "model.r must be > 0");
  }
}

/// Principal square root; its cut on the negative real radicand axis is the
/// disk p_x^2 + p_y^2 < s^2, p_z = 0.
struct PrincipalSqrt {
  template <typename T>
  std::complex<T> operator()(const std::complex<T>& z) const {
    return std::sqrt(z);
  }
};

template <typename Scalar>
struct ComplexEnergyPairT {
  std::complex<Scalar> e1;
  std::complex<Scalar> e2;
};

using ComplexEnergyPair = ComplexEnergyPairT<Real>;

/// Right eigenvectors psi[n] and left eigenvectors phi[n] (stored as kets;
/// the pairing is phi[m]^† psi[n]).
template <typename Scalar>
struct BiorthoSystemT {
  using C = std::complex<Scalar>;
  std::array<Vector2<C>, 2> psi;
  std::array<Vector2<C>, 2> phi;
  ComplexEnergyPairT<Scalar> energies;

  Matrix2<C> pairing() const {
    Matrix2<C> m;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m(a, b) = phi[a].dot(psi[b]);
    return m;
  }

  Matrix2<C> completeness() const {
    return psi[0] * phi[0].adjoint() + psi[1] * phi[1].adjoint();
  }

  C energy(int index) const { return index == 0 ? energies.e1 : energies.e2; }

  BiorthoSystemT swapped() const {
    return {{psi[1], psi[0]}, {phi[1], phi[0]}, {energies.e2, energies.e1}};
  }
};

using BiorthoSystem = BiorthoSystemT<Real>;

template <typename Scalar>
std::complex<Scalar> radicand(const ParamPointT<Scalar>& p, Scalar s) {
  // + 0 maps a signed -0 imaginary part to +0 so p_z = -0 sits on the same side as p_z = +0
  return {p.squaredNorm() - s * s, 2 * p.z() * s + Scalar(0)};
}

template <typename Scalar>
bool is_exceptional(const ParamPointT<Scalar>& p, const ModelConfigT<Scalar>& cfg) {
  return std::abs(radicand(p, cfg.s)) <= Scalar(cfg.tol.ep_tol) * cfg.s * cfg.s;
}

template <typename Scalar>
bool is_on_axis(const ParamPointT<Scalar>& p, const ModelConfigT<Scalar>& cfg) {
  const Scalar t = Scalar(cfg.tol.axis_tol);
  return p.x() * p.x() + p.y() * p.y() <= t * t;
}

template <typename Scalar>
Matrix2<std::complex<Scalar>> pauli_x() {
  Matrix2<std::complex<Scalar>> m;
  m << 0, 1, 1, 0;
  return m;
}

template <typename Scalar>
Matrix2<std::complex<Scalar>> pauli_y() {
  using C = std::complex<Scalar>;
  Matrix2<C> m;
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Scalar>
Matrix2<std::complex<Scalar>> pauli_z() {
  Matrix2<std::complex<Scalar>> m;
  m << 1, 0, 0, -1;
  return m;
}

/// Polar angle of the Hermitian disk model. Pi on the open disk, 0 / 2 pi on
/// the plane outside it approached from z >= 0 / z < 0.
template <typename Scalar>
Scalar hermitian_theta(Scalar x, Scalar y, Scalar z, Scalar r) {
  using std::acos;
  using std::hypot;
  const Scalar d = hypot(x, y) - r;
  const Scalar den = hypot(d, z);
  if (den == Scalar(0))
    throw Error(ErrorKind::DegenerateCircle, "theta undefined on the circle x^2+y^2=r^2, z=0");
  Scalar arg = d / den;
  arg = arg > 1 ? Scalar(1) : (arg < -1 ? Scalar(-1) : arg);
  const Scalar base = acos(arg);
  return z >= 0 ? base : Scalar(2) * std::numbers::pi_v<Scalar> - base;
}

template <typename Scalar>
Matrix2<std::complex<Scalar>> hermitian_hamiltonian(Scalar theta) {
  using std::cos;
  using std::sin;
  const Scalar c = cos(theta / 2);
  return c * (c * pauli_z<Scalar>() + sin(theta / 2) * pauli_x<Scalar>());
}

template <typename Scalar>
struct HermitianEigenT {
  Scalar e_plus;
  Scalar e_minus;
  Vector2<Scalar> psi_plus;
  Vector2<Scalar> psi_minus;
};

/// Eigenpairs on theta in [0, 4 pi); psi_plus(theta + 2 pi) == psi_minus(theta).
template <typename Scalar>
HermitianEigenT<Scalar> hermitian_eigensystem(Scalar theta) {
  using std::cos;
  using std::sin;
  const Scalar q = theta / 4;
  HermitianEigenT<Scalar> out;
  out.e_plus = cos(theta / 2);
  out.e_minus = -out.e_plus;
  out.psi_plus << cos(q), sin(q);
  out.psi_minus << -sin(q), cos(q);
  return out;
}

template <typename Scalar>
Matrix2<std::complex<Scalar>> hamiltonian(const ParamPointT<Scalar>& p,
                                          const ModelConfigT<Scalar>& cfg) {
  using C = std::complex<Scalar>;
  if (cfg.kind == ModelKind::HermitianDisk)
    return hermitian_hamiltonian(hermitian_theta(p.x(), p.y(), p.z(), cfg.r));
  return p.x() * pauli_x<Scalar>() + p.y() * pauli_y<Scalar>() +
         C(p.z(), cfg.s) * pauli_z<Scalar>();
}

template <typename Scalar, typename SqrtRule = PrincipalSqrt>
ComplexEnergyPairT<Scalar> energies(const ParamPointT<Scalar>& p, const ModelConfigT<Scalar>& cfg,
                                    SqrtRule sqrt_rule = {}) {
  const std::complex<Scalar> e = sqrt_rule(radicand(p, cfg.s));
  return {e, -e};
}

/// Closed-form biorthonormal pair. Each psi_j is rescaled so that
/// phi^j† psi_j == 1; the conjugate radicand root in the left vectors is
/// taken as conj() of the same branch as the energy.
template <typename Scalar, typename SqrtRule = PrincipalSqrt>
BiorthoSystemT<Scalar> analytic_eigensystem(const ParamPointT<Scalar>& p,
                                            const ModelConfigT<Scalar>& cfg,
                                            SqrtRule sqrt_rule = {}) {
  using C = std::complex<Scalar>;
  if (is_exceptional(p, cfg))
    throw Error(ErrorKind::EPDegenerate, "point lies on the exceptional circle");
  if (is_on_axis(p, cfg))
    throw Error(ErrorKind::AxisSingular, "closed-form left vectors are singular on the p_z axis");

  const auto en = energies(p, cfg, sqrt_rule);
  const C e = en.e1;
  const C ec = std::conj(e);
  const C a(p.z(), cfg.s);
  const C c(p.x(), p.y());
  const C b(p.x(), -p.y());
  const C is(0, cfg.s);

  BiorthoSystemT<Scalar> out;
  out.energies = en;
  out.psi[0] << e + a, c;
  out.psi[1] << -e + a, c;
  out.phi[0] << Scalar(1) / (Scalar(2) * ec), (ec + is - p.z()) / (Scalar(2) * b * ec);
  out.phi[1] << Scalar(-1) / (Scalar(2) * (ec - is + p.z())), Scalar(1) / (Scalar(2) * b);
  for (int j = 0; j < 2; ++j) out.psi[j] /= out.phi[j].dot(out.psi[j]);
  return out;
}

/// Selects which principal root is sheet 1 at a point: returns 1 or 2.
template <typename Scalar>
using SheetAssignmentT = std::function<int(const ParamPointT<Scalar>&)>;

using SheetAssignment = SheetAssignmentT<Real>;
using GaugeColumns = std::array<int, 2>;

/// Column choice of the eigenprojectors that the robust path uses when no
/// columns are supplied: for each sheet, the larger projector column.
template <typename Scalar>
GaugeColumns robust_columns(const ParamPointT<Scalar>& p, const ModelConfigT<Scalar>& cfg) {
  using C = std::complex<Scalar>;
  const C e = std::sqrt(radicand(p, cfg.s));
  const Matrix2<C> h = hamiltonian(p, cfg);
  GaugeColumns cols{};
  for (int n = 0; n < 2; ++n) {
    const C en = n == 0 ? e : -e;
    const Matrix2<C> proj = (Matrix2<C>::Identity() + h / en) / Scalar(2);
    cols[n] = proj.col(0).squaredNorm() >= proj.col(1).squaredNorm() ? 0 : 1;
  }
  return cols;
}

/// Eigensystem by direct diagonalization. Right vectors are eigenprojector
/// columns, left vectors the rows of the inverse right matrix, so the pairing
/// is exact everywhere off EPs including the p_z axis. `columns`, when given,
/// refers to the principal-root ordering (before the sheet assignment).
template <typename Scalar>
BiorthoSystemT<Scalar> robust_eigensystem(const ParamPointT<Scalar>& p,
                                          const ModelConfigT<Scalar>& cfg,
                                          const SheetAssignmentT<Scalar>& sheet_assignment = {},
                                          const std::optional<GaugeColumns>& columns = std::nullopt) {
  using C = std::complex<Scalar>;
  if (is_exceptional(p, cfg))
    throw Error(ErrorKind::EPDegenerate, "point lies on the exceptional circle");

  const C e = std::sqrt(radicand(p, cfg.s));
  const Matrix2<C> h = hamiltonian(p, cfg);
  const GaugeColumns cols = columns ? *columns : robust_columns(p, cfg);

  BiorthoSystemT<Scalar> out;
  out.energies = {e, -e};
  Matrix2<C> right;
  for (int n = 0; n < 2; ++n) {
    const C en = n == 0 ? e : -e;
    const Matrix2<C> proj = (Matrix2<C>::Identity() + h / en) / Scalar(2);
    out.psi[n] = proj.col(cols[n]);
    right.col(n) = out.psi[n];
  }
  const Matrix2<C> left = right.inverse();
  for (int n = 0; n < 2; ++n) out.phi[n] = left.row(n).adjoint();

  if (sheet_assignment && sheet_assignment(p) == 2) return out.swapped();
  return out;
}

/// GL(1,C) scalar field with its gradient.
struct GaugeFunction {
  std::function<Complex(const ParamPoint&)> value;
  std::function<Vector3c(const ParamPoint&)> gradient;
};

/// psi_j -> f psi_j and <phi^j| -> (1/f) <phi^j| for one sheet (1 or 2).
BiorthoSystem gauge_transform(const BiorthoSystem& sys, const GaugeFunction& f,
                              const ParamPoint& p, int sheet);

}  // namespace nhmono
