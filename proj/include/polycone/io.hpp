#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polycone/conedef.hpp"

namespace polycone {

/// cdd-style text: "*" comment lines, an H-/V-representation header,
/// "begin", "R D rational", R rows "0 x_1 .. x_{D-1}", "end". The index
/// scheme and row tags travel in "* scheme ..." and "* tag ..." comments.
std::string write_representation(const Representation& rep);

/// Parses the text written above or any homogeneous cdd file. Without a
/// scheme comment the coordinates are taken as `fallback`, or as the
/// subsets(d,1) scheme of plain coordinates. Rows are scaled to primitive
/// integers. Throws InputError("line N: ...") on malformed input.
Representation parse_representation(std::string_view text, const std::optional<IndexScheme>& fallback = std::nullopt);

Representation read_representation_file(const std::string& path);
void write_representation_file(const std::string& path, const Representation& rep);

/// Inverse of IndexScheme::describe().
IndexScheme parse_scheme(std::string_view text);

}  // namespace polycone
