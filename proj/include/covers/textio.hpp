#pragma once

#include <string>

#include "covers/core.hpp"

namespace covers {

/// Parses the system text format: one class per line as "a mod n", blank
/// lines and lines starting with '#' ignored, line order defining the class
/// indices 1..k. Throws parse_error with the offending 1-based line number.
CoverSystem parse_system_text(const std::string& text);

CoverSystem load_system_file(const std::string& path);

/// Inverse of parse_system_text on normalized systems.
std::string serialize_system(const CoverSystem& system);

} // namespace covers
