#include "nhmono/core.hpp"

namespace nhmono {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EPDegenerate: return "EPDegenerate";
    case ErrorKind::AxisSingular: return "AxisSingular";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::ZeroGauge: return "ZeroGauge";
    case ErrorKind::OnCutSurface: return "OnCutSurface";
    case ErrorKind::StencilCrossesCut: return "StencilCrossesCut";
    case ErrorKind::AmbiguousTracking: return "AmbiguousTracking";
    case ErrorKind::EdgeOfDisk: return "EdgeOfDisk";
    case ErrorKind::MeshTouchesCut: return "MeshTouchesCut";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace nhmono
