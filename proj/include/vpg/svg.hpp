#pragma once

#include <optional>
#include <string>

#include "vpg/certificates.hpp"
#include "vpg/geometry.hpp"

namespace vpg {

/// Deterministic SVG 1.1 rendering: one polyline group per object, dashed
/// split/reference lines, one color per part when a decomposition is given.
std::string render_svg(const Representation& rep,
                       const std::optional<Decomposition>& dec = std::nullopt);

}  // namespace vpg
