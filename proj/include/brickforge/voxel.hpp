#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "brickforge/errors.hpp"

namespace brickforge {

/// Integer cell coordinate. y is the vertical axis.
struct Point {
    int x = 0;
    int y = 0;
    int z = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

/// The closed brick palette. Empty marks an unoccupied cell and is never
/// serialized as a physical brick.
enum class Brick : std::uint8_t {
    Empty,
    Blue,
    Red,
    Green,
    DarkGreen,
    Yellow,
    Black,
    Orange,
    White,
    Gray,
    DarkGray,
    LightBlue,
    MediumBlue,
    DarkBlue,
};

struct BrickInfo {
    Brick brick;
    std::string_view name; // uppercase, as serialized
    int material_id;       // LDD material code; 0 for Empty
};

/// The full palette table, Empty first.
std::span<const BrickInfo> palette();

std::string_view brick_name(Brick b);
std::optional<Brick> brick_from_name(std::string_view name);

/// LDD material code of a physical brick; throws InvalidBrickError for Empty.
int material_id(Brick b);

/// A bounded 3D grid of brick-valued cells, Empty by default. Plain value
/// type; copies are independent.
class VirtualSpace {
public:
    VirtualSpace(int dim_x, int dim_y, int dim_z);

    int dim_x() const { return dx_; }
    int dim_y() const { return dy_; }
    int dim_z() const { return dz_; }

    bool in_bounds(Point p) const {
        return p.x >= 0 && p.x < dx_ && p.y >= 0 && p.y < dy_ && p.z >= 0 && p.z < dz_;
    }

    /// Brick at p; throws BoundsError when p is outside the space.
    Brick at(Point p) const;

    /// Overwrite the cell at p (Empty clears). Throws BoundsError.
    void set(Brick b, Point p);

    std::size_t occupied_count() const;
    std::vector<Point> occupied_cells() const; // ascending (x, y, z)

    bool same_dims(const VirtualSpace& other) const {
        return dx_ == other.dx_ && dy_ == other.dy_ && dz_ == other.dz_;
    }

    friend bool operator==(const VirtualSpace&, const VirtualSpace&) = default;

private:
    std::size_t index(Point p) const {
        return (static_cast<std::size_t>(p.x) * dy_ + p.y) * dz_ + p.z;
    }

    int dx_, dy_, dz_;
    std::vector<Brick> cells_;
};

using Predicate = std::function<bool(Point)>;
using BrickFunction = std::function<Brick(Point)>;

/// Fresh all-Empty space. Throws DimensionError for non-positive dims.
VirtualSpace new_space(int dim_x, int dim_y, int dim_z);

Brick access(const VirtualSpace& space, Point p);
VirtualSpace update(VirtualSpace space, Brick b, Point p);

/// Fill the axis-aligned cuboid [origin, origin + (w-1, h-1, d-1)].
/// No partial write: bounds are checked before any cell changes.
VirtualSpace place_brick(VirtualSpace space, int w, int h, int d, Brick b, Point origin);

/// Cells of the 3D digital line from p to q, endpoints included.
/// Endpoints are canonicalized (swapped when q < p lexicographically) so
/// the cell set is symmetric in p and q. Cell count = 1 + max |delta|.
std::vector<Point> line_cells(Point p, Point q);

VirtualSpace line(VirtualSpace space, Point p, Point q, Brick b);

/// Same cell set as line, each cell c receiving f(c); f(c) = Empty clears.
VirtualSpace multi_brick_line(VirtualSpace space, Point p, Point q, const BrickFunction& f);

/// Pointwise: top's cell wherever top is occupied, base's cell elsewhere.
VirtualSpace overlay(const VirtualSpace& base, const VirtualSpace& top);

} // namespace brickforge
