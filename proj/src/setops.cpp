#include "brickforge/setops.hpp"

#include "brickforge/traversal.hpp"

namespace brickforge {

namespace {

void require_physical(Brick b) {
    if (b == Brick::Empty) {
        throw InvalidBrickError("comparison operations require physical bricks");
    }
}

} // namespace

VirtualSpace xor_show(int n, const Predicate& p1, Brick b1, const Predicate& p2, Brick b2) {
    require_physical(b1);
    require_physical(b2);
    return brickfn_show(n, [&](Point c) {
        bool a = p1(c), b = p2(c);
        if (a && !b) return b1;
        if (b && !a) return b2;
        return Brick::Empty;
    });
}

VirtualSpace union_show(int n, const Predicate& p1, Brick b1, const Predicate& p2, Brick b2,
                        Brick b_both) {
    require_physical(b1);
    require_physical(b2);
    require_physical(b_both);
    return brickfn_show(n, [&](Point c) {
        bool a = p1(c), b = p2(c);
        if (a && b) return b_both;
        if (a) return b1;
        if (b) return b2;
        return Brick::Empty;
    });
}

VirtualSpace intersection_show(int n, const Predicate& p1, const Predicate& p2, Brick b) {
    require_physical(b);
    return brickfn_show(n, [&](Point c) { return p1(c) && p2(c) ? b : Brick::Empty; });
}

VirtualSpace difference_show(int n, const Predicate& p1, const Predicate& p2, Brick b) {
    require_physical(b);
    return brickfn_show(n, [&](Point c) { return p1(c) && !p2(c) ? b : Brick::Empty; });
}

VirtualSpace complement_show(int n, const Predicate& p, Brick b) {
    require_physical(b);
    return brickfn_show(n, [&](Point c) { return !p(c) ? b : Brick::Empty; });
}

std::vector<VirtualSpace> slide_show(int n, const Predicate& p, Brick b) {
    require_physical(b);
    std::vector<VirtualSpace> frames;
    frames.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        frames.push_back(brickfn_show(
            n, [&](Point c) { return c.y <= k && p(c) ? b : Brick::Empty; }));
    }
    return frames;
}

} // namespace brickforge
