#pragma once

#include <string>
#include <string_view>

#include "brickforge/voxel.hpp"

namespace brickforge {

struct BvoxParseError : Error {
    BvoxParseError(std::string msg, int line);
    int line;
};

/// Canonical plain-text voxel dump. Line 1 is `BVOX 1 <dimX> <dimY> <dimZ>`,
/// then one `X Y Z BRICKNAME` line per occupied cell in ascending (x, y, z)
/// order. Single spaces, LF endings, trailing newline, nothing else.
std::string emit_bvox(const VirtualSpace& space);

/// Inverse of emit_bvox on canonical text; rejects malformed headers,
/// out-of-bounds cells, unknown brick names, duplicates, and out-of-order
/// lines, reporting the offending line number.
VirtualSpace parse_bvox(std::string_view text);

/// LXFML 5 scene as read by LDD 4.x: one 1x1 brick (designID 3005) per
/// occupied cell, refIDs dense and ascending in BVOX cell order. One stud
/// is 0.8 world units in x/z, one brick height 0.96 in y.
std::string emit_lxfml(const VirtualSpace& space, std::string_view title);

} // namespace brickforge
