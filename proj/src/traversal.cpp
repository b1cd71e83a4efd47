#include "brickforge/traversal.hpp"

#include <string>

namespace brickforge {

VirtualSpace traverse_within(VirtualSpace space, Point lo, Point hi, const BrickFunction& f) {
    if (!space.in_bounds(lo) || !space.in_bounds(hi)) {
        throw BoundsError("traversal box exceeds space bounds");
    }
    if (lo.x > hi.x || lo.y > hi.y || lo.z > hi.z) {
        throw EmptyBoxError("traversal box has lo > hi");
    }
    for (int x = lo.x; x <= hi.x; ++x)
        for (int y = lo.y; y <= hi.y; ++y)
            for (int z = lo.z; z <= hi.z; ++z) {
                Brick b = f({x, y, z});
                if (b != Brick::Empty) space.set(b, {x, y, z});
            }
    return space;
}

VirtualSpace traverse_xyz(VirtualSpace space, const BrickFunction& f) {
    Point hi{space.dim_x() - 1, space.dim_y() - 1, space.dim_z() - 1};
    return traverse_within(std::move(space), {0, 0, 0}, hi, f);
}

VirtualSpace traverse_plane(VirtualSpace space, Plane plane, const BrickFunction& f) {
    Point lo{0, 0, 0};
    Point hi{space.dim_x() - 1, space.dim_y() - 1, space.dim_z() - 1};
    switch (plane.selector) {
    case Plane::Selector::XY:
        lo.z = hi.z = plane.fixed;
        break;
    case Plane::Selector::XZ:
        lo.y = hi.y = plane.fixed;
        break;
    case Plane::Selector::YZ:
        lo.x = hi.x = plane.fixed;
        break;
    }
    if (!space.in_bounds(lo)) {
        throw BoundsError("plane fixed coordinate " + std::to_string(plane.fixed) +
                          " out of bounds");
    }
    return traverse_within(std::move(space), lo, hi, f);
}

VirtualSpace predicate_show(int n, const Predicate& p, Brick b) {
    if (b == Brick::Empty) {
        throw InvalidBrickError("predicate_show requires a physical brick");
    }
    return brickfn_show(n, [&](Point c) { return p(c) ? b : Brick::Empty; });
}

VirtualSpace brickfn_show(int n, const BrickFunction& f) {
    VirtualSpace space = new_space(n, n, n);
    return traverse_xyz(std::move(space), f);
}

} // namespace brickforge
