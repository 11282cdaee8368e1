#include "nhmono/dump.hpp"

#include <cmath>
#include <ostream>

#include "nhmono/io.hpp"
#include "nhmono/parallel.hpp"

namespace nhmono {

namespace {

const double kNaN = std::nan("");

void push_complex(std::vector<double>& row, const Complex& z) {
  row.push_back(z.real());
  row.push_back(z.imag());
}

void push_nan(std::vector<double>& row, int count) { row.insert(row.end(), static_cast<std::size_t>(count), kNaN); }

}  // namespace

void DumpTable::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_real(row[c]);
    out << '\n';
  }
}

DumpTable field_dump(const std::vector<ParamPoint>& points, const ModelConfig& cfg,
                     const BranchCut& cut, unsigned fields, int sheet, int threads) {
  DumpTable table;
  table.columns = {"px", "py", "pz", "sheet"};
  if (fields & kDumpB)
    for (const char* c : {"Re_Bx", "Im_Bx", "Re_By", "Im_By", "Re_Bz", "Im_Bz"}) table.columns.emplace_back(c);
  if (fields & kDumpE)
    for (const char* c : {"Re_e1", "Im_e1", "Re_e2", "Im_e2"}) table.columns.emplace_back(c);
  if (fields & kDumpA)
    for (const char* c : {"Re_Ax", "Im_Ax", "Re_Ay", "Im_Ay", "Re_Az", "Im_Az"}) table.columns.emplace_back(c);
  if (fields & kDumpLabels) table.columns.emplace_back("label");
  if (fields & kDumpDivergence)
    for (const char* c : {"Re_divB", "Im_divB"}) table.columns.emplace_back(c);

  table.rows.resize(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const ParamPoint& p = points[i];
    std::vector<double>& row = table.rows[i];
    row = {p.x(), p.y(), p.z(), double(sheet)};
    if (fields & kDumpB) {
      try {
        const Vector3c b = curvature_analytic(p, cfg, cut, sheet).B;
        for (int k = 0; k < 3; ++k) push_complex(row, b[k]);
      } catch (const Error&) {
        push_nan(row, 6);
      }
    }
    if (fields & kDumpE) {
      if (is_exceptional(p, cfg) || cut.on_cut(p, cfg)) {
        push_nan(row, 4);
      } else {
        const Complex e = labeled_energy(p, cut, cfg);
        push_complex(row, sheet == 1 ? e : -e);
        push_complex(row, sheet == 1 ? -e : e);
      }
    }
    if (fields & kDumpA) {
      try {
        const Vector3c a = connection(p, cfg, cut, default_step(p, cfg), sheet);
        for (int k = 0; k < 3; ++k) push_complex(row, a[k]);
      } catch (const Error&) {
        push_nan(row, 6);
      }
    }
    if (fields & kDumpLabels) {
      try {
        row.push_back(label_point(p, cut, cfg));
      } catch (const Error&) {
        row.push_back(kNaN);
      }
    }
    if (fields & kDumpDivergence) {
      try {
        const auto d = divergence_at(p, cfg, cut, 1e-3 * std::max(cfg.s, 1e-300), true, sheet);
        if (d) push_complex(row, *d);
        else push_nan(row, 2);
      } catch (const Error&) {
        push_nan(row, 2);
      }
    }
  });
  return table;
}

std::vector<ParamPoint> line_samples(const ParamPoint& from, const ParamPoint& to, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "line scan needs at least one sample");
  std::vector<ParamPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Real t = count == 1 ? 0.0 : Real(i) / (count - 1);
    out.push_back(from + t * (to - from));
  }
  return out;
}

std::vector<ParamPoint> grid_samples(const Box& box, const std::array<int, 3>& grid) {
  for (int n : grid)
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "grid resolution must be >= 1");
  std::vector<ParamPoint> out;
  auto coord = [&](int axis, int i) {
    const int n = grid[static_cast<std::size_t>(axis)];
    if (n == 1) return 0.5 * (box.lo[axis] + box.hi[axis]);
    return box.lo[axis] + (box.hi[axis] - box.lo[axis]) * Real(i) / (n - 1);
  };
  for (int i = 0; i < grid[0]; ++i)
    for (int j = 0; j < grid[1]; ++j)
      for (int k = 0; k < grid[2]; ++k) out.emplace_back(coord(0, i), coord(1, j), coord(2, k));
  return out;
}

}  // namespace nhmono
