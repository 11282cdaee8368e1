#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nhmono/branching.hpp"
#include "nhmono/geometry.hpp"

namespace nhmono {

/// Column groups of a field dump; combine with |.
enum DumpFields : unsigned {
  kDumpB = 1u << 0,
  kDumpE = 1u << 1,
  kDumpA = 1u << 2,
  kDumpLabels = 1u << 3,
  kDumpDivergence = 1u << 4,
};

/// Rows in input order. Columns: px,py,pz,sheet then, per selected group,
/// Re_Bx..Im_Bz | Re_e1,Im_e1,Re_e2,Im_e2 | Re_Ax..Im_Az | label |
/// Re_divB,Im_divB. Values that cannot be evaluated (EP, cut) are NaN.
struct DumpTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write_csv(std::ostream& out) const;
};

DumpTable field_dump(const std::vector<ParamPoint>& points, const ModelConfig& cfg,
                     const BranchCut& cut, unsigned fields, int sheet = 1, int threads = 1);

std::vector<ParamPoint> line_samples(const ParamPoint& from, const ParamPoint& to, int count);
std::vector<ParamPoint> grid_samples(const Box& box, const std::array<int, 3>& grid);

}  // namespace nhmono
