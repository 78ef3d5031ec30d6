#pragma once

#include <string>

#include "pentaplex/core.hpp"

namespace pentaplex {

/// Canonical serialization: arrays sorted by id, face corners starting at the
/// label-1 corner, rotations starting at their least edge-end encoding. Output
/// is byte-stable under re-serialization.
std::string to_json(const PentComplex& c);

/// Throws Error(parse_error) with a location on malformed input.
PentComplex from_json(const std::string& bytes);

void save_complex(const PentComplex& c, const std::string& path);
PentComplex load_complex(const std::string& path);

}  // namespace pentaplex
