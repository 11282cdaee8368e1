#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhmono/branching.hpp"
#include "nhmono/surface.hpp"

namespace nhmono {

/// {center:[x,y,z], radius, normal:[x,y,z], samples:N[, turns:k]} or
/// {points:[[x,y,z],...]}. Unknown keys are rejected.
ParamLoop loop_from_json(const nlohmann::json& j);

/// {vertices:[[x,y,z],...], triangles:[[i,j,k],...]}, counter-clockwise outward.
SurfaceMesh mesh_from_json(const nlohmann::json& j);
nlohmann::json mesh_to_json(const SurfaceMesh& mesh);

ParamPoint point_from_json(const nlohmann::json& j, const std::string& key);

/// %.17g, with "nan" / "inf" / "-inf" for non-finite values.
std::string format_real(double value);

}  // namespace nhmono
