#include "brickforge/io.hpp"

#include <charconv>
#include <vector>

namespace brickforge {

BvoxParseError::BvoxParseError(std::string msg, int line)
    : Error("BVOX parse error at line " + std::to_string(line) + ": " + msg),
      line(line) {}

std::string emit_bvox(const VirtualSpace& space) {
    std::string out = "BVOX 1 " + std::to_string(space.dim_x()) + " " +
                      std::to_string(space.dim_y()) + " " +
                      std::to_string(space.dim_z()) + "\n";
    for (Point p : space.occupied_cells()) {
        out += std::to_string(p.x) + " " + std::to_string(p.y) + " " +
               std::to_string(p.z) + " ";
        out += brick_name(space.at(p));
        out += "\n";
    }
    return out;
}

namespace {

// Splits on single spaces; rejects leading/trailing/double spaces so that
// the canonical form is the only accepted one.
std::vector<std::string_view> strict_fields(std::string_view line, int line_no) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t space = line.find(' ', start);
        std::string_view field = space == std::string_view::npos
                                     ? line.substr(start)
                                     : line.substr(start, space - start);
        if (field.empty()) throw BvoxParseError("stray whitespace", line_no);
        fields.push_back(field);
        if (space == std::string_view::npos) break;
        start = space + 1;
    }
    return fields;
}

int parse_int(std::string_view field, int line_no) {
    int value = 0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw BvoxParseError("bad integer '" + std::string(field) + "'", line_no);
    }
    return value;
}

} // namespace

VirtualSpace parse_bvox(std::string_view text) {
    if (text.empty() || text.back() != '\n') {
        throw BvoxParseError("missing trailing newline", 1);
    }

    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw BvoxParseError("empty input", 1);

    auto header = strict_fields(lines[0], 1);
    if (header.size() != 5 || header[0] != "BVOX" || header[1] != "1") {
        throw BvoxParseError("expected 'BVOX 1 <dimX> <dimY> <dimZ>'", 1);
    }
    int dx = parse_int(header[2], 1);
    int dy = parse_int(header[3], 1);
    int dz = parse_int(header[4], 1);
    if (dx < 1 || dy < 1 || dz < 1) throw BvoxParseError("non-positive dimension", 1);

    VirtualSpace space(dx, dy, dz);
    bool have_prev = false;
    Point prev{};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        auto fields = strict_fields(lines[i], line_no);
        if (fields.size() != 4) {
            throw BvoxParseError("expected 'X Y Z BRICKNAME'", line_no);
        }
        Point p{parse_int(fields[0], line_no), parse_int(fields[1], line_no),
                parse_int(fields[2], line_no)};
        if (!space.in_bounds(p)) throw BvoxParseError("cell out of bounds", line_no);
        auto brick = brick_from_name(fields[3]);
        if (!brick) {
            throw BvoxParseError("unknown brick '" + std::string(fields[3]) + "'",
                                 line_no);
        }
        if (*brick == Brick::Empty) {
            throw BvoxParseError("EMPTY is not a physical brick", line_no);
        }
        if (have_prev) {
            if (p == prev) throw BvoxParseError("duplicate cell", line_no);
            if (p < prev) throw BvoxParseError("cells out of order", line_no);
        }
        prev = p;
        have_prev = true;
        space.set(*brick, p);
    }
    return space;
}

namespace {

// Renders value/100 with trailing zeros stripped: 80 -> "0.8", 288 -> "2.88".
std::string hundredths(long long value) {
    bool negative = value < 0;
    if (negative) value = -value;
    std::string s = (negative ? "-" : "") + std::to_string(value / 100);
    long long frac = value % 100;
    if (frac != 0) {
        s += '.';
        s += static_cast<char>('0' + frac / 10);
        if (frac % 10 != 0) s += static_cast<char>('0' + frac % 10);
    }
    return s;
}

std::string xml_escape(std::string_view raw) {
    std::string out;
    for (char c : raw) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c; break;
        }
    }
    return out;
}

} // namespace

std::string emit_lxfml(const VirtualSpace& space, std::string_view title) {
    // One stud = 0.8 units in x/z, one plate-stack brick height = 0.96 in y.
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<LXFML versionMajor=\"5\" versionMinor=\"0\" name=\"" +
           xml_escape(title) + "\">\n";
    out += "  <Meta>\n";
    out += "    <Application name=\"brickforge\" versionMajor=\"1\" versionMinor=\"0\"/>\n";
    out += "    <Brand name=\"LDD\"/>\n";
    out += "    <BrickSet version=\"1564.2\"/>\n";
    out += "  </Meta>\n";
    out += "  <Bricks>\n";
    int ref_id = 0;
    for (Point p : space.occupied_cells()) {
        const std::string id = std::to_string(ref_id);
        const std::string transform =
            "1,0,0,0,1,0,0,0,1," + hundredths(80LL * p.x) + "," +
            hundredths(96LL * p.y) + "," + hundredths(80LL * p.z);
        out += "    <Brick refID=\"" + id + "\" designID=\"3005\">\n";
        out += "      <Part refID=\"" + id + "\" designID=\"3005\" materials=\"" +
               std::to_string(material_id(space.at(p))) + "\">\n";
        out += "        <Bone refID=\"" + id + "\" transformation=\"" + transform +
               "\"/>\n";
        out += "      </Part>\n";
        out += "    </Brick>\n";
        ++ref_id;
    }
    out += "  </Bricks>\n";
    out += "  <RigidSystems/>\n";
    out += "  <GroupSystems>\n";
    out += "    <GroupSystem/>\n";
    out += "  </GroupSystems>\n";
    out += "  <BuildingInstructions/>\n";
    out += "</LXFML>\n";
    return out;
}

} // namespace brickforge
