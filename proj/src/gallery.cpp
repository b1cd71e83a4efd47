#include "brickforge/gallery.hpp"

#include <cmath>
#include <string>

namespace brickforge {

namespace {

bool power_of_two(int v) { return v >= 2 && (v & (v - 1)) == 0; }

} // namespace

VirtualSpace sierpinski(const SierpinskiParams& params) {
    const int n = params.n;
    if (n < 3 || !power_of_two(n - 1)) {
        throw ParameterError("sierpinski size must be 2^m + 1 with m >= 1, got " +
                             std::to_string(n));
    }
    if (params.even_brick == Brick::Empty || params.odd_brick == Brick::Empty) {
        throw InvalidBrickError("sierpinski bricks must be physical");
    }
    const int max = n - 1;
    const int mid = max / 2;
    VirtualSpace space = new_space(n, n, 1);

    auto above_same = [&](int x, int y) {
        Brick above_left = space.at({x, y + 1, 0});
        Brick above_right = space.at({x + 1, y + 1, 0});
        return above_left != Brick::Empty && above_left == above_right;
    };
    auto binary_update = [&](Brick brick, int x, int y) {
        space.set(brick, {x, y, 0});
        space.set(brick, {x + 1, y, 0});
    };

    // Rows run from the 2x1 apex at y = mid downward; row y places bricks
    // at x = y, y + 2, ..., hi. The loop guard stops before hi reaches max,
    // so the bottom row y = 0 is never drawn.
    for (int lo = mid, hi = mid; hi < max; --lo, ++hi) {
        for (int x = lo; x <= hi; x += 2) {
            Brick brick = above_same(x, lo) ? params.even_brick : params.odd_brick;
            binary_update(brick, x, lo);
        }
    }
    return space;
}

VirtualSpace big_checkerboard(const CheckerboardParams& params) {
    if (params.board_size < 1 || params.square_size < 1 ||
        params.board_size % params.square_size != 0) {
        throw ParameterError("square size must divide board size");
    }
    if (params.black == Brick::Empty || params.other == Brick::Empty) {
        throw InvalidBrickError("checkerboard bricks must be physical");
    }
    auto equiv_class = [&](int v) { return (v / params.square_size) % 2; };
    VirtualSpace space = new_space(params.board_size, params.board_size,
                                   params.board_size);
    for (int x = 0; x < params.board_size; ++x)
        for (int z = 0; z < params.board_size; ++z)
            space.set(equiv_class(x) == equiv_class(z) ? params.black : params.other,
                      {x, 0, z});
    return space;
}

VirtualSpace nested_cubes(int n, int inset, Brick brick) {
    if (n < 2) throw ParameterError("nested cubes need n >= 2");
    if (inset < 1) throw ParameterError("inset must be >= 1");
    if (brick == Brick::Empty) throw InvalidBrickError("wireframe brick must be physical");

    VirtualSpace space = new_space(n, n, n);
    int lo = 0, hi = n - 1;
    while (true) {
        const Point corners[8] = {
            {lo, lo, lo}, {hi, lo, lo}, {lo, hi, lo}, {hi, hi, lo},
            {lo, lo, hi}, {hi, lo, hi}, {lo, hi, hi}, {hi, hi, hi},
        };
        // 12 edges: pairs of corners differing in exactly one coordinate
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b < 8; ++b) {
                int diff = (corners[a].x != corners[b].x) +
                           (corners[a].y != corners[b].y) +
                           (corners[a].z != corners[b].z);
                if (diff == 1) space = line(std::move(space), corners[a], corners[b], brick);
            }
        if ((hi - inset) - (lo + inset) + 1 < 2) break;
        lo += inset;
        hi -= inset;
    }
    return space;
}

VirtualSpace sine_shading(int n, double amplitude, double frequency,
                          const std::vector<Brick>& palette) {
    if (n < 1) throw ParameterError("sine shading needs n >= 1");
    if (palette.empty()) throw ParameterError("sine shading needs a nonempty palette");

    auto height = [&](int x, int z) {
        long long h = std::llround(amplitude * (std::sin(frequency * (x + z)) + 1.0));
        return static_cast<int>(std::min<long long>(h, n - 1));
    };
    int max_h = 0;
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) max_h = std::max(max_h, height(x, z));

    const int bands = static_cast<int>(palette.size());
    VirtualSpace space = new_space(n, n, n);
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int h = height(x, z);
            for (int y = 0; y <= h; ++y) {
                int band = std::min(y * bands / (max_h + 1), bands - 1);
                space.set(palette[static_cast<std::size_t>(band)], {x, y, z});
            }
        }
    return space;
}

const std::vector<Brick>& sine_palette() {
    static const std::vector<Brick> blues{Brick::DarkBlue, Brick::Blue,
                                          Brick::MediumBlue, Brick::LightBlue};
    return blues;
}

} // namespace brickforge
