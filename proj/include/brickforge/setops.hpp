#pragma once

#include <vector>

#include "brickforge/voxel.hpp"

namespace brickforge {

// Cell-by-cell comparison of two predicate-generated artifacts. Every
// operation renders into a fresh n^3 space; all brick arguments must be
// physical (non-Empty).

/// b1 where only p1 holds, b2 where only p2 holds, Empty elsewhere.
VirtualSpace xor_show(int n, const Predicate& p1, Brick b1, const Predicate& p2, Brick b2);

/// b1 / b2 for the exclusive regions, b_both where both predicates hold.
VirtualSpace union_show(int n, const Predicate& p1, Brick b1, const Predicate& p2, Brick b2,
                        Brick b_both);

VirtualSpace intersection_show(int n, const Predicate& p1, const Predicate& p2, Brick b);

/// Cells of p1 not in p2.
VirtualSpace difference_show(int n, const Predicate& p1, const Predicate& p2, Brick b);

VirtualSpace complement_show(int n, const Predicate& p, Brick b);

/// n snapshots of predicate_show(n, p, b) growing bottom-up: snapshot k
/// holds exactly the cells with y <= k.
std::vector<VirtualSpace> slide_show(int n, const Predicate& p, Brick b);

} // namespace brickforge
