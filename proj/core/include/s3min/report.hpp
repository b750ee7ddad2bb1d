#pragma once

#include "s3min/configuration.hpp"

#include <json.hpp>

namespace s3min {

using Json = nlohmann::ordered_json;

Json to_json(const Vec3& v);
Json to_json(const Vec4& v);

/// Structured summary of a configuration: counts, circle coordinates, Hopf
/// images, and the edge incidence table.
Json configuration_summary(const Configuration& cfg);

}  // namespace s3min
