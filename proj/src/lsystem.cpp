#include "brickforge/lsystem.hpp"

#include <algorithm>
#include <sstream>

namespace brickforge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

Vec3i neg(Vec3i v) { return {-v.x, -v.y, -v.z}; }

} // namespace

LSystem parse_lsystem(std::string_view text) {
    LSystem sys;
    bool have_axiom = false;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw LsysParseError("line " + std::to_string(line_no) +
                                 ": expected 'key: value'");
        }
        std::string_view key = trim(line.substr(0, colon));
        std::string_view value = trim(line.substr(colon + 1));
        if (key == "axiom") {
            sys.axiom = std::string(value);
            have_axiom = true;
        } else if (key == "rule") {
            auto arrow = value.find("->");
            if (arrow == std::string_view::npos || trim(value.substr(0, arrow)).size() != 1) {
                throw LsysParseError("line " + std::to_string(line_no) +
                                     ": rule must be '<sym> -> <string>'");
            }
            char sym = trim(value.substr(0, arrow))[0];
            sys.rules[sym] = std::string(trim(value.substr(arrow + 2)));
        } else if (key == "angle") {
            int angle = 0;
            try {
                angle = std::stoi(std::string(value));
            } catch (const std::exception&) {
                throw LsysParseError("line " + std::to_string(line_no) + ": bad angle");
            }
            if (angle != 90) {
                throw LsysParseError("line " + std::to_string(line_no) +
                                     ": only angle 90 is supported");
            }
            sys.angle = angle;
        } else if (key == "iterations") {
            try {
                sys.iterations = std::stoi(std::string(value));
            } catch (const std::exception&) {
                throw LsysParseError("line " + std::to_string(line_no) +
                                     ": bad iteration count");
            }
            if (sys.iterations < 0) {
                throw LsysParseError("line " + std::to_string(line_no) +
                                     ": iterations must be >= 0");
            }
        } else {
            throw LsysParseError("line " + std::to_string(line_no) + ": unknown key '" +
                                 std::string(key) + "'");
        }
    }
    if (!have_axiom) throw LsysParseError("missing 'axiom:' line");
    return sys;
}

std::string expand(const LSystem& sys, int iterations) {
    std::string s = sys.axiom;
    for (int i = 0; i < iterations; ++i) {
        std::string next;
        next.reserve(s.size() * 2);
        for (char c : s) {
            auto it = sys.rules.find(c);
            if (it != sys.rules.end()) next += it->second;
            else next += c;
        }
        s = std::move(next);
    }
    return s;
}

namespace {

// 90-degree frame rotations; derived from the standard turtle rotation
// matrices specialized to quarter turns.
void apply_rotation(TurtleState& t, char cmd) {
    Vec3i& h = t.heading;
    Vec3i& l = t.left;
    Vec3i& u = t.up;
    switch (cmd) {
    case '+': { Vec3i nh = neg(l); l = h; h = nh; break; }       // yaw left
    case '-': { Vec3i nh = l; l = neg(h); h = nh; break; }       // yaw right
    case '&': { Vec3i nh = neg(u); u = h; h = nh; break; }       // pitch down
    case '^': { Vec3i nh = u; u = neg(h); h = nh; break; }       // pitch up
    case '\\': { Vec3i nl = neg(u); u = l; l = nl; break; }      // roll left
    case '/': { Vec3i nl = u; u = neg(l); l = nl; break; }       // roll right
    case '|': h = neg(h); l = neg(l); break;                     // turn around
    }
}

[[noreturn]] void stack_fail(std::size_t index) {
    throw StackError("']' at symbol index " + std::to_string(index) +
                     " pops an empty turtle stack");
}

} // namespace

VirtualSpace interpret(std::string_view symbols, TurtleState start, int step,
                       VirtualSpace space) {
    if (step < 1) throw ParameterError("turtle step must be positive");
    TurtleState t = std::move(start);
    if (!space.in_bounds(t.position)) {
        throw BoundsError("turtle start position out of bounds");
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        char c = symbols[i];
        switch (c) {
        case 'F': {
            Point from = t.position;
            Point to{from.x + step * t.heading.x, from.y + step * t.heading.y,
                     from.z + step * t.heading.z};
            if (!space.in_bounds(to)) {
                throw BoundsError("'F' at symbol index " + std::to_string(i) +
                                  " draws out of bounds");
            }
            space = line(std::move(space), from, to, t.pen);
            t.position = to;
            break;
        }
        case 'f': {
            Point to{t.position.x + step * t.heading.x, t.position.y + step * t.heading.y,
                     t.position.z + step * t.heading.z};
            if (!space.in_bounds(to)) {
                throw BoundsError("'f' at symbol index " + std::to_string(i) +
                                  " moves out of bounds");
            }
            t.position = to;
            break;
        }
        case '[': {
            TurtleState snapshot = t;
            snapshot.stack.clear();
            t.stack.push_back(std::move(snapshot));
            break;
        }
        case ']': {
            if (t.stack.empty()) stack_fail(i);
            TurtleState top = std::move(t.stack.back());
            t.stack.pop_back();
            top.stack = std::move(t.stack);
            t = std::move(top);
            break;
        }
        default:
            apply_rotation(t, c);
            break;
        }
    }
    return space;
}

std::vector<Point> trace(std::string_view symbols, int step, const TurtleState& start) {
    if (step < 1) throw ParameterError("turtle step must be positive");
    TurtleState t = start;
    std::vector<Point> cells;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        char c = symbols[i];
        switch (c) {
        case 'F': {
            Point to{t.position.x + step * t.heading.x, t.position.y + step * t.heading.y,
                     t.position.z + step * t.heading.z};
            // line_cells canonicalizes its endpoints, so re-orient the
            // segment to keep the cells in travel order.
            std::vector<Point> segment = line_cells(t.position, to);
            if (!segment.empty() && !(segment.front() == t.position)) {
                std::reverse(segment.begin(), segment.end());
            }
            cells.insert(cells.end(), segment.begin(), segment.end());
            t.position = to;
            break;
        }
        case 'f':
            t.position = {t.position.x + step * t.heading.x,
                          t.position.y + step * t.heading.y,
                          t.position.z + step * t.heading.z};
            break;
        case '[': {
            TurtleState snapshot = t;
            snapshot.stack.clear();
            t.stack.push_back(std::move(snapshot));
            break;
        }
        case ']': {
            if (t.stack.empty()) stack_fail(i);
            TurtleState top = std::move(t.stack.back());
            t.stack.pop_back();
            top.stack = std::move(t.stack);
            t = std::move(top);
            break;
        }
        default:
            apply_rotation(t, c);
            break;
        }
    }
    return cells;
}

const LSystem& hilbert_system() {
    static const LSystem sys = [] {
        LSystem s;
        s.axiom = "X";
        s.rules['X'] = "^/XF^/XFX-F^\\\\XFX&F+\\\\XFX-F\\X-\\";
        s.angle = 90;
        s.iterations = 1;
        return s;
    }();
    return sys;
}

VirtualSpace hilbert_cube(int order, Brick brick) {
    if (order < 1) throw ParameterError("hilbert order must be >= 1");
    std::string symbols = expand(hilbert_system(), order);
    std::vector<Point> cells = trace(symbols, 1);
    Point lo = cells.front(), hi = cells.front();
    for (Point c : cells) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
    }
    VirtualSpace space = new_space(hi.x - lo.x + 1, hi.y - lo.y + 1, hi.z - lo.z + 1);
    TurtleState start;
    start.position = {-lo.x, -lo.y, -lo.z};
    start.pen = brick;
    return interpret(symbols, std::move(start), 1, std::move(space));
}

} // namespace brickforge
