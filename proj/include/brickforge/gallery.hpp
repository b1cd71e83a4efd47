#pragma once

#include <vector>

#include "brickforge/voxel.hpp"

namespace brickforge {

struct SierpinskiParams {
    int n;                              // must be 2^m + 1, m >= 1
    Brick even_brick = Brick::Red;      // the two cells above exist and agree
    Brick odd_brick = Brick::Blue;
};

struct CheckerboardParams {
    int board_size;
    int square_size;                    // must divide board_size
    Brick black = Brick::Black;
    Brick other = Brick::Orange;
};

/// Sierpinski gasket on an n x n x 1 slab, built top-down with 2x1 bricks,
/// each colored by whether the two cells directly above it agree. The
/// bottom row y = 0 is intentionally never drawn (the row loop stops one
/// short); tests encode that behavior.
VirtualSpace sierpinski(const SierpinskiParams& params);

/// Checkerboard on the y = 0 plane of a board_size^3 space, squares of
/// square_size cells grouped by (v div square_size) mod 2.
VirtualSpace big_checkerboard(const CheckerboardParams& params);

/// Concentric wireframe cubes: the outer box's 12 edges, then the box
/// shrunk by `inset` on every side, while the shrunk side is at least 2.
VirtualSpace nested_cubes(int n, int inset, Brick brick);

/// Diagonal sine waves: column (x, z) is filled up to height
/// round(amplitude * (sin(frequency * (x + z)) + 1)), banded through the
/// palette from bottom to top. Heights are clamped to the space.
VirtualSpace sine_shading(int n, double amplitude, double frequency,
                          const std::vector<Brick>& palette);

/// Default blues-ordered palette for sine_shading, darkest first.
const std::vector<Brick>& sine_palette();

} // namespace brickforge
