#include <doctest.h>

#include <set>

#include "brickforge/gallery.hpp"

using namespace brickforge;

namespace {

// Independent oracle: binomial-parity rows laid out with 2-cell bricks
// under the same geometry (apex row y = mid, rows stop before y = 0).
// C(k, j) is odd iff j's bits are a subset of k's bits (Lucas).
VirtualSpace pascal_oracle(int n, Brick even_brick, Brick odd_brick) {
    const int max = n - 1;
    const int mid = max / 2;
    VirtualSpace space = new_space(n, n, 1);
    for (int k = 0; mid + k < max; ++k) {
        int y = mid - k;
        for (int j = 0; j <= k; ++j) {
            bool odd = (j & ~k) == 0;
            Brick b = odd ? odd_brick : even_brick;
            int x = (mid - k) + 2 * j;
            space.set(b, {x, y, 0});
            space.set(b, {x + 1, y, 0});
        }
    }
    return space;
}

} // namespace

TEST_CASE("sierpinski matches the Pascal parity oracle") {
    for (int n : {5, 9, 17, 33}) {
        CAPTURE(n);
        CHECK(sierpinski({n}) == pascal_oracle(n, Brick::Red, Brick::Blue));
    }
    SUBCASE("custom colors flow through") {
        CHECK(sierpinski({9, Brick::Green, Brick::Yellow}) ==
              pascal_oracle(9, Brick::Green, Brick::Yellow));
    }
}

TEST_CASE("sierpinski(5) cells") {
    VirtualSpace s = sierpinski({5});
    CHECK(s.occupied_count() == 6);
    std::set<Point> expected{{2, 2, 0}, {3, 2, 0}, {1, 1, 0}, {2, 1, 0}, {3, 1, 0}, {4, 1, 0}};
    for (Point p : expected) CHECK(s.at(p) == Brick::Blue);
    // the n = 2^m + 1 guard never draws row y = 0
    for (int x = 0; x < 5; ++x) CHECK(s.at({x, 0, 0}) == Brick::Empty);
}

TEST_CASE("sierpinski parameter validation") {
    CHECK_THROWS_AS(sierpinski({4}), ParameterError);
    CHECK_THROWS_AS(sierpinski({6}), ParameterError);
    CHECK_THROWS_AS(sierpinski({2}), ParameterError);
    CHECK_THROWS_AS(sierpinski({1}), ParameterError);
}

TEST_CASE("big_checkerboard") {
    VirtualSpace s = big_checkerboard({4, 2});
    CHECK(s.occupied_count() == 16);
    int black = 0, orange = 0;
    for (Point p : s.occupied_cells()) {
        CHECK(p.y == 0);
        if (s.at(p) == Brick::Black) ++black;
        if (s.at(p) == Brick::Orange) ++orange;
    }
    CHECK(black == 8);
    CHECK(orange == 8);

    SUBCASE("square size 1 alternates cellwise") {
        VirtualSpace b = big_checkerboard({2, 1});
        CHECK(b.at({0, 0, 0}) == Brick::Black);
        CHECK(b.at({1, 0, 0}) == Brick::Orange);
        CHECK(b.at({0, 0, 1}) == Brick::Orange);
        CHECK(b.at({1, 0, 1}) == Brick::Black);
    }
    SUBCASE("occupancy is board_size^2 at y = 0 for any valid params") {
        for (auto [board, square] : {std::pair{6, 3}, {10, 5}, {9, 3}, {8, 1}}) {
            VirtualSpace b = big_checkerboard({board, square});
            CHECK(b.occupied_count() == static_cast<std::size_t>(board) * board);
            for (Point p : b.occupied_cells()) CHECK(p.y == 0);
        }
    }
    SUBCASE("divisibility enforced") {
        CHECK_THROWS_AS(big_checkerboard({5, 2}), ParameterError);
    }
}

TEST_CASE("nested_cubes") {
    SUBCASE("smallest case is the 8 corners") {
        CHECK(nested_cubes(2, 2, Brick::Blue).occupied_count() == 8);
    }
    SUBCASE("single wireframe of side s has 12s - 16 cells") {
        for (int s = 2; s <= 7; ++s) {
            // inset large enough that no inner shell fits
            VirtualSpace v = nested_cubes(s, s, Brick::Blue);
            CHECK(v.occupied_count() == static_cast<std::size_t>(12 * s - 16));
        }
    }
    SUBCASE("shells are disjoint and counts add up") {
        VirtualSpace v = nested_cubes(10, 2, Brick::Blue);
        CHECK(v.occupied_count() == 104 + 56 + 8); // sides 10, 6, 2
    }
}

TEST_CASE("sine_shading") {
    SUBCASE("zero amplitude gives a flat sheet of the first band") {
        VirtualSpace s = sine_shading(6, 0.0, 1.0, sine_palette());
        CHECK(s.occupied_count() == 36);
        for (Point p : s.occupied_cells()) {
            CHECK(p.y == 0);
            CHECK(s.at(p) == sine_palette().front());
        }
    }
    SUBCASE("zero frequency gives uniform columns of round(amplitude)") {
        VirtualSpace s = sine_shading(8, 2.4, 0.0, sine_palette());
        // height = round(2.4 * (sin 0 + 1)) = 2, columns of 3 cells
        CHECK(s.occupied_count() == 8 * 8 * 3);
    }
    SUBCASE("heights are periodic along x + z") {
        const double freq = 3.14159265358979323846 / 4.0;
        VirtualSpace s = sine_shading(16, 2.0, freq, sine_palette());
        auto column_height = [&](int x, int z) {
            int h = -1;
            while (h + 1 < 16 && s.at({x, h + 1, z}) != Brick::Empty) ++h;
            return h;
        };
        for (int x = 0; x + 8 < 16; ++x)
            CHECK(column_height(x, 0) == column_height(x + 8, 0));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(sine_shading(0, 1.0, 1.0, sine_palette()), ParameterError);
        CHECK_THROWS_AS(sine_shading(4, 1.0, 1.0, {}), ParameterError);
    }
}
