#include "brickforge/voxel.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

namespace brickforge {

namespace {

// LDD material codes from the public materials table.
constexpr std::array<BrickInfo, 14> kPalette{{
    {Brick::Empty, "EMPTY", 0},
    {Brick::Blue, "BLUE", 23},        // Bright Blue
    {Brick::Red, "RED", 21},          // Bright Red
    {Brick::Green, "GREEN", 37},      // Bright Green
    {Brick::DarkGreen, "DARK_GREEN", 28},
    {Brick::Yellow, "YELLOW", 24},    // Bright Yellow
    {Brick::Black, "BLACK", 26},
    {Brick::Orange, "ORANGE", 106},   // Bright Orange
    {Brick::White, "WHITE", 1},
    {Brick::Gray, "GRAY", 194},       // Medium Stone Grey
    {Brick::DarkGray, "DARK_GRAY", 199},
    {Brick::LightBlue, "LIGHT_BLUE", 45},
    {Brick::MediumBlue, "MEDIUM_BLUE", 102},
    {Brick::DarkBlue, "DARK_BLUE", 140}, // Earth Blue
}};

std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
           std::to_string(p.z) + ")";
}

[[noreturn]] void throw_bounds(Point p, const VirtualSpace& s) {
    throw BoundsError("point " + point_str(p) + " out of bounds for space " +
                      std::to_string(s.dim_x()) + "x" + std::to_string(s.dim_y()) +
                      "x" + std::to_string(s.dim_z()));
}

} // namespace

std::span<const BrickInfo> palette() { return kPalette; }

std::string_view brick_name(Brick b) {
    return kPalette[static_cast<std::size_t>(b)].name;
}

std::optional<Brick> brick_from_name(std::string_view name) {
    for (const auto& info : kPalette) {
        if (info.name == name) return info.brick;
    }
    return std::nullopt;
}

int material_id(Brick b) {
    if (b == Brick::Empty) throw InvalidBrickError("EMPTY has no material code");
    return kPalette[static_cast<std::size_t>(b)].material_id;
}

VirtualSpace::VirtualSpace(int dim_x, int dim_y, int dim_z)
    : dx_(dim_x), dy_(dim_y), dz_(dim_z) {
    if (dim_x < 1 || dim_y < 1 || dim_z < 1) {
        throw DimensionError("space dimensions must be positive, got " +
                             std::to_string(dim_x) + "x" + std::to_string(dim_y) +
                             "x" + std::to_string(dim_z));
    }
    cells_.assign(static_cast<std::size_t>(dx_) * dy_ * dz_, Brick::Empty);
}

Brick VirtualSpace::at(Point p) const {
    if (!in_bounds(p)) throw_bounds(p, *this);
    return cells_[index(p)];
}

void VirtualSpace::set(Brick b, Point p) {
    if (!in_bounds(p)) throw_bounds(p, *this);
    cells_[index(p)] = b;
}

std::size_t VirtualSpace::occupied_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(),
                      [](Brick b) { return b != Brick::Empty; }));
}

std::vector<Point> VirtualSpace::occupied_cells() const {
    std::vector<Point> out;
    for (int x = 0; x < dx_; ++x)
        for (int y = 0; y < dy_; ++y)
            for (int z = 0; z < dz_; ++z)
                if (cells_[index({x, y, z})] != Brick::Empty) out.push_back({x, y, z});
    return out;
}

VirtualSpace new_space(int dim_x, int dim_y, int dim_z) {
    return VirtualSpace(dim_x, dim_y, dim_z);
}

Brick access(const VirtualSpace& space, Point p) { return space.at(p); }

VirtualSpace update(VirtualSpace space, Brick b, Point p) {
    space.set(b, p);
    return space;
}

VirtualSpace place_brick(VirtualSpace space, int w, int h, int d, Brick b, Point origin) {
    if (w < 1 || h < 1 || d < 1) {
        throw ParameterError("brick extents must be positive");
    }
    Point far{origin.x + w - 1, origin.y + h - 1, origin.z + d - 1};
    if (!space.in_bounds(origin)) throw_bounds(origin, space);
    if (!space.in_bounds(far)) throw_bounds(far, space);
    for (int x = origin.x; x <= far.x; ++x)
        for (int y = origin.y; y <= far.y; ++y)
            for (int z = origin.z; z <= far.z; ++z)
                space.set(b, {x, y, z});
    return space;
}

std::vector<Point> line_cells(Point p, Point q) {
    if (q < p) std::swap(p, q); // symmetry: one canonical direction per pair

    const int dx = std::abs(q.x - p.x);
    const int dy = std::abs(q.y - p.y);
    const int dz = std::abs(q.z - p.z);
    const int sx = q.x > p.x ? 1 : (q.x < p.x ? -1 : 0);
    const int sy = q.y > p.y ? 1 : (q.y < p.y ? -1 : 0);
    const int sz = q.z > p.z ? 1 : (q.z < p.z ? -1 : 0);
    const int steps = std::max({dx, dy, dz});

    std::vector<Point> cells;
    cells.reserve(static_cast<std::size_t>(steps) + 1);
    Point c = p;
    cells.push_back(c);

    // Bresenham driven by the dominant axis, the other two carry error terms.
    if (dx >= dy && dx >= dz) {
        int e1 = 2 * dy - dx, e2 = 2 * dz - dx;
        for (int i = 0; i < steps; ++i) {
            c.x += sx;
            if (e1 > 0) { c.y += sy; e1 -= 2 * dx; }
            if (e2 > 0) { c.z += sz; e2 -= 2 * dx; }
            e1 += 2 * dy;
            e2 += 2 * dz;
            cells.push_back(c);
        }
    } else if (dy >= dx && dy >= dz) {
        int e1 = 2 * dx - dy, e2 = 2 * dz - dy;
        for (int i = 0; i < steps; ++i) {
            c.y += sy;
            if (e1 > 0) { c.x += sx; e1 -= 2 * dy; }
            if (e2 > 0) { c.z += sz; e2 -= 2 * dy; }
            e1 += 2 * dx;
            e2 += 2 * dz;
            cells.push_back(c);
        }
    } else {
        int e1 = 2 * dx - dz, e2 = 2 * dy - dz;
        for (int i = 0; i < steps; ++i) {
            c.z += sz;
            if (e1 > 0) { c.x += sx; e1 -= 2 * dz; }
            if (e2 > 0) { c.y += sy; e2 -= 2 * dz; }
            e1 += 2 * dx;
            e2 += 2 * dy;
            cells.push_back(c);
        }
    }
    return cells;
}

VirtualSpace line(VirtualSpace space, Point p, Point q, Brick b) {
    if (!space.in_bounds(p)) throw_bounds(p, space);
    if (!space.in_bounds(q)) throw_bounds(q, space);
    for (Point c : line_cells(p, q)) space.set(b, c);
    return space;
}

VirtualSpace multi_brick_line(VirtualSpace space, Point p, Point q, const BrickFunction& f) {
    if (!space.in_bounds(p)) throw_bounds(p, space);
    if (!space.in_bounds(q)) throw_bounds(q, space);
    for (Point c : line_cells(p, q)) space.set(f(c), c);
    return space;
}

VirtualSpace overlay(const VirtualSpace& base, const VirtualSpace& top) {
    if (!base.same_dims(top)) {
        throw ShapeError("overlay requires equal dimensions");
    }
    VirtualSpace out = base;
    for (int x = 0; x < base.dim_x(); ++x)
        for (int y = 0; y < base.dim_y(); ++y)
            for (int z = 0; z < base.dim_z(); ++z) {
                Brick t = top.at({x, y, z});
                if (t != Brick::Empty) out.set(t, {x, y, z});
            }
    return out;
}

} // namespace brickforge
