#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "brickforge/voxel.hpp"

namespace brickforge {

/// Parallel rewriting system. Symbols without a rule rewrite to themselves.
/// Only 90-degree rotations are supported, so turtle frames stay integer.
struct LSystem {
    std::string axiom;
    std::map<char, std::string> rules;
    int angle = 90;
    int iterations = 0; // default iteration count from a spec file
};

struct LsysParseError : Error {
    using Error::Error;
};

/// Pop on an empty turtle stack, or unbalanced brackets.
struct StackError : Error {
    using Error::Error;
};

/// Plain-text spec: lines `axiom: <string>`, `rule: <sym> -> <string>`,
/// `angle: 90`, `iterations: <k>`; `#` starts a comment.
LSystem parse_lsystem(std::string_view text);

/// Apply all rules simultaneously to every symbol, `iterations` times.
std::string expand(const LSystem& sys, int iterations);

struct Vec3i {
    int x = 0, y = 0, z = 0;
    friend bool operator==(const Vec3i&, const Vec3i&) = default;
};

/// 3D drawing cursor: position plus a right-handed orthonormal integer
/// frame (heading, up, left).
struct TurtleState {
    Point position{0, 0, 0};
    Vec3i heading{1, 0, 0};
    Vec3i up{0, 1, 0};
    Vec3i left{0, 0, -1};
    Brick pen = Brick::Blue;
    std::vector<TurtleState> stack;
};

/// Turtle command set:
///   F  draw `step` cells forward (via line) and move to the far end
///   f  move forward without drawing
///   +- yaw about up      &^ pitch about left     \/ roll about heading
///   |  turn around (180-degree yaw)
///   [] push / pop the full state
/// Other symbols are no-ops. Errors name the offending symbol index.
VirtualSpace interpret(std::string_view symbols, TurtleState start, int step,
                       VirtualSpace space);

/// Cells the turtle would draw starting at the origin, in visit order with
/// duplicates; coordinates may be negative. Used to pre-fit a space.
std::vector<Point> trace(std::string_view symbols, int step,
                         const TurtleState& start = TurtleState{});

/// The embedded 3D Hilbert curve L-system (axiom "X").
const LSystem& hilbert_system();

/// Space-filling Hilbert path of 8^order cells in a 2^order cube.
VirtualSpace hilbert_cube(int order, Brick brick);

} // namespace brickforge
