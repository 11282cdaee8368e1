#include "nhmono/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "nhmono/parallel.hpp"

namespace nhmono {

namespace {

const Complex kI(0, 1);

void check_sheet(int sheet) {
  if (sheet != 1 && sheet != 2) throw Error(ErrorKind::InvalidArgument, "sheet must be 1 or 2");
}

struct Derivatives {
  // d[k] = d/dp_k of psi (resp. phi) for both sheets
  std::array<std::array<Vector2c, 2>, 3> dpsi;
  std::array<std::array<Vector2c, 2>, 3> dphi;
};

Derivatives differentiate(const EigenField& field, const ParamPoint& p, Real h) {
  Derivatives d;
  for (int k = 0; k < 3; ++k) {
    ParamPoint hi = p, lo = p;
    hi[k] += h;
    lo[k] -= h;
    const BiorthoSystem a = field(hi);
    const BiorthoSystem b = field(lo);
    for (std::size_t n = 0; n < 2; ++n) {
      d.dpsi[static_cast<std::size_t>(k)][n] = (a.psi[n] - b.psi[n]) / (2 * h);
      d.dphi[static_cast<std::size_t>(k)][n] = (a.phi[n] - b.phi[n]) / (2 * h);
    }
  }
  return d;
}

}  // namespace

Real default_step(const ParamPoint& p, const ModelConfig& cfg) {
  return 1e-5 * std::max(cfg.s, p.norm());
}

Vector3c principal_curvature(const ParamPoint& p, Real s) {
  const Complex e = std::sqrt(radicand(p, s));
  const Complex e3 = e * e * e;
  Vector3c q = p.cast<Complex>();
  q.z() += Complex(0, s);
  return -q / (2.0 * e3);
}

CurvatureSample curvature_analytic(const ParamPoint& p, const ModelConfig& cfg,
                                   const BranchCut& cut, int sheet) {
  check_sheet(sheet);
  const int label = label_point(p, cut, cfg);
  Vector3c b = principal_curvature(p, cfg.s);
  if (label != sheet) b = -b;
  return {b, std::nullopt, sheet, p};
}

EigenField stencil_field(const ParamPoint& anchor, const ModelConfig& cfg, const BranchCut& cut) {
  const int label = label_point(anchor, cut, cfg);
  const GaugeColumns columns = robust_columns(anchor, cfg);
  return [=](const ParamPoint& q) {
    if (is_exceptional(q, cfg))
      throw Error(ErrorKind::EPDegenerate, "stencil touches the exceptional circle");
    if (crosses_cut(anchor, q, cut, cfg))
      throw Error(ErrorKind::StencilCrossesCut, "finite-difference stencil straddles the branch cut");
    // The closed form loses digits in E + p_z + is near the negative axis;
    // projector columns frozen at the anchor stay well conditioned.
    const BiorthoSystem sys = robust_eigensystem(q, cfg, {}, columns);
    return label == 2 ? sys.swapped() : sys;
  };
}

Vector3c curvature_fd(const EigenField& field, const ParamPoint& p, Real h, int sheet) {
  check_sheet(sheet);
  const std::size_t j = static_cast<std::size_t>(sheet - 1);
  const Derivatives d = differentiate(field, p, h);
  Vector3c b;
  for (int i = 0; i < 3; ++i) {
    const std::size_t y = static_cast<std::size_t>((i + 1) % 3);
    const std::size_t z = static_cast<std::size_t>((i + 2) % 3);
    b[i] = kI * (d.dphi[y][j].dot(d.dpsi[z][j]) - d.dphi[z][j].dot(d.dpsi[y][j]));
  }
  return b;
}

CurvatureSample curvature_fd(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut,
                             Real h, int sheet) {
  const EigenField field = stencil_field(p, cfg, cut);
  return {curvature_fd(field, p, h, sheet), std::nullopt, sheet, p};
}

CurvatureSample curvature_fd_richardson(const ParamPoint& p, const ModelConfig& cfg,
                                        const BranchCut& cut, Real h, int sheet) {
  const EigenField field = stencil_field(p, cfg, cut);
  const Vector3c coarse = curvature_fd(field, p, h, sheet);
  const Vector3c fine = curvature_fd(field, p, h / 2, sheet);
  return {(4.0 * fine - coarse) / 3.0, std::nullopt, sheet, p};
}

Vector3c connection(const EigenField& field, const ParamPoint& p, Real h, int sheet) {
  check_sheet(sheet);
  const std::size_t j = static_cast<std::size_t>(sheet - 1);
  const BiorthoSystem center = field(p);
  const Derivatives d = differentiate(field, p, h);
  Vector3c a;
  for (std::size_t k = 0; k < 3; ++k) a[static_cast<Eigen::Index>(k)] = kI * center.phi[j].dot(d.dpsi[k][j]);
  return a;
}

Vector3c connection(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut, Real h,
                    int sheet) {
  return connection(stencil_field(p, cfg, cut), p, h, sheet);
}

FOperator f_operator(const EigenField& field, const ParamPoint& p, Real h) {
  const BiorthoSystem center = field(p);
  const Derivatives d = differentiate(field, p, h);
  FOperator f;
  for (std::size_t k = 0; k < 3; ++k) {
    f.right_form[k].setZero();
    f.left_form[k].setZero();
    for (std::size_t n = 0; n < 2; ++n) {
      f.right_form[k] += -kI * d.dpsi[k][n] * center.phi[n].adjoint();
      f.left_form[k] += kI * center.psi[n] * d.dphi[k][n].adjoint();
    }
  }
  return f;
}

FOperator f_operator(const ParamPoint& p, const ModelConfig& cfg, const BranchCut& cut, Real h) {
  return f_operator(stencil_field(p, cfg, cut), p, h);
}

MatrixVector cross(const MatrixVector& f, const MatrixVector& g) {
  MatrixVector out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t y = (i + 1) % 3;
    const std::size_t z = (i + 2) % 3;
    out[i] = f[y] * g[z] - f[z] * g[y];
  }
  return out;
}

MatrixVector curl_f_operator(const EigenField& field, const ParamPoint& p, Real outer_h,
                             Real inner_h) {
  // dF[k][c] = d F_c / d p_k
  std::array<MatrixVector, 3> df;
  for (std::size_t k = 0; k < 3; ++k) {
    ParamPoint hi = p, lo = p;
    hi[static_cast<Eigen::Index>(k)] += outer_h;
    lo[static_cast<Eigen::Index>(k)] -= outer_h;
    const FOperator a = f_operator(field, hi, inner_h);
    const FOperator b = f_operator(field, lo, inner_h);
    for (std::size_t c = 0; c < 3; ++c) df[k][c] = (a.right_form[c] - b.right_form[c]) / (2 * outer_h);
  }
  MatrixVector curl;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t y = (i + 1) % 3;
    const std::size_t z = (i + 2) % 3;
    curl[i] = df[y][z] - df[z][y];
  }
  return curl;
}

Vector3c curvature_from_f(const FOperator& f, const BiorthoSystem& sys, int sheet) {
  check_sheet(sheet);
  const std::size_t j = static_cast<std::size_t>(sheet - 1);
  const MatrixVector ff = cross(f.right_form, f.right_form);
  Vector3c b;
  for (std::size_t i = 0; i < 3; ++i)
    b[static_cast<Eigen::Index>(i)] = kI * sys.phi[j].dot(ff[i] * sys.psi[j]);
  return b;
}

std::optional<Complex> divergence_at(const ParamPoint& p, const ModelConfig& cfg,
                                     const BranchCut& cut, Real h, bool richardson, int sheet) {
  const int label = label_point(p, cut, cfg);
  auto field = [&](const ParamPoint& q) {
    Vector3c b = principal_curvature(q, cfg.s);
    return label == sheet ? b : Vector3c(-b);
  };
  auto central = [&](Real step) -> std::optional<Complex> {
    Complex div = 0;
    for (int k = 0; k < 3; ++k) {
      ParamPoint hi = p, lo = p;
      hi[k] += step;
      lo[k] -= step;
      if (is_exceptional(hi, cfg) || is_exceptional(lo, cfg)) return std::nullopt;
      if (crosses_cut(p, hi, cut, cfg) || crosses_cut(p, lo, cut, cfg)) return std::nullopt;
      div += (field(hi)[k] - field(lo)[k]) / (2 * step);
    }
    return div;
  };
  const auto d1 = central(h);
  if (!d1 || !richardson) return d1;
  const auto d2 = central(h / 2);
  if (!d2) return std::nullopt;
  return (4.0 * *d2 - *d1) / 3.0;
}

DivergenceField divergence_scan(const Box& region, const std::array<int, 3>& grid,
                                const ModelConfig& cfg, const BranchCut& cut, Real h,
                                bool richardson, int threads) {
  for (int n : grid)
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "grid resolution must be >= 1");
  auto coord = [&](int axis, int i) {
    const int n = grid[static_cast<std::size_t>(axis)];
    if (n == 1) return 0.5 * (region.lo[axis] + region.hi[axis]);
    return region.lo[axis] + (region.hi[axis] - region.lo[axis]) * Real(i) / (n - 1);
  };
  const std::size_t total = static_cast<std::size_t>(grid[0]) * grid[1] * grid[2];
  DivergenceField out;
  out.points.resize(total);
  parallel_for(total, threads, [&](std::size_t idx) {
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(grid[1]) * grid[2]));
    const int j = static_cast<int>((idx / grid[2]) % grid[1]);
    const int k = static_cast<int>(idx % grid[2]);
    DivergencePoint& dp = out.points[idx];
    dp.p = ParamPoint(coord(0, i), coord(1, j), coord(2, k));
    try {
      const auto d = divergence_at(dp.p, cfg, cut, h, richardson);
      if (d) dp.divergence = *d;
      else dp.crosses_cut = true;
    } catch (const Error&) {
      dp.crosses_cut = true;
    }
    if (dp.crosses_cut) dp.divergence = Complex(std::nan(""), std::nan(""));
  });
  for (const auto& dp : out.points) {
    if (dp.crosses_cut) {
      ++out.flagged;
      continue;
    }
    out.max_abs = std::max(out.max_abs, std::abs(dp.divergence));
  }
  return out;
}

}  // namespace nhmono
