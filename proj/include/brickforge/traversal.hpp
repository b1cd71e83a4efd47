#pragma once

#include "brickforge/voxel.hpp"

namespace brickforge {

/// An axis-aligned plane of the space: the two named axes vary, the
/// remaining one is fixed.
struct Plane {
    enum class Selector { XY, XZ, YZ };
    Selector selector;
    int fixed;
};

/// Apply f to every cell of the box [lo, hi]. Cells where f returns Empty
/// are left unchanged (erasure is explicit via update / multi_brick_line).
/// Visitation order is x outermost, then y, then z, ascending.
VirtualSpace traverse_within(VirtualSpace space, Point lo, Point hi, const BrickFunction& f);

/// traverse_within over the full space.
VirtualSpace traverse_xyz(VirtualSpace space, const BrickFunction& f);

VirtualSpace traverse_plane(VirtualSpace space, Plane plane, const BrickFunction& f);

/// Fresh n^3 space with b wherever p holds. b must be a physical brick.
VirtualSpace predicate_show(int n, const Predicate& p, Brick b);

/// Fresh n^3 space with cell c = f(c).
VirtualSpace brickfn_show(int n, const BrickFunction& f);

} // namespace brickforge
