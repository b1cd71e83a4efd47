#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "brickforge/gallery.hpp"
#include "brickforge/io.hpp"
#include "brickforge/lsystem.hpp"
#include "brickforge/traversal.hpp"

using namespace brickforge;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Minimal well-formedness scan: matched/nested tags, quoted attributes.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    if (text.starts_with("<?xml")) {
        i = text.find("?>");
        if (i == std::string::npos) return false;
        i += 2;
    }
    while (i < text.size()) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        std::size_t end = text.find('>', i);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(i + 1, end - i - 1);
        if (tag.empty()) return false;
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
        if (tag[0] == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t")));
        }
        i = end + 1;
    }
    return stack.empty();
}

} // namespace

TEST_CASE("emit_bvox exact format") {
    CHECK(emit_bvox(new_space(2, 2, 2)) == "BVOX 1 2 2 2\n");

    VirtualSpace one = update(new_space(2, 2, 2), Brick::Blue, {0, 1, 0});
    CHECK(emit_bvox(one) == "BVOX 1 2 2 2\n0 1 0 BLUE\n");

    SUBCASE("square example: 400 RED lines") {
        auto s = predicate_show(20, [](Point p) { return p.y == 0; }, Brick::Red);
        std::string text = emit_bvox(s);
        std::size_t lines = std::count(text.begin(), text.end(), '\n');
        CHECK(lines == 401);
        std::istringstream in(text);
        std::string line;
        std::getline(in, line); // header
        while (std::getline(in, line)) CHECK(line.ends_with("RED"));
    }
    SUBCASE("cells ascend lexicographically") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> coord(0, 5);
        VirtualSpace s = new_space(6, 6, 6);
        for (int i = 0; i < 40; ++i)
            s.set(Brick::Green, {coord(rng), coord(rng), coord(rng)});
        auto cells = s.occupied_cells();
        CHECK(std::is_sorted(cells.begin(), cells.end()));
    }
}

TEST_CASE("bvox round trips") {
    SUBCASE("space -> text -> space") {
        VirtualSpace s = sierpinski({9});
        CHECK(parse_bvox(emit_bvox(s)) == s);
    }
    SUBCASE("text -> space -> text is byte identical") {
        VirtualSpace s = sierpinski({9});
        std::string text = emit_bvox(s);
        CHECK(emit_bvox(parse_bvox(text)) == text);
    }
    SUBCASE("random spaces") {
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> coord(0, 4);
        std::uniform_int_distribution<int> pick(1, 13);
        for (int trial = 0; trial < 25; ++trial) {
            VirtualSpace s = new_space(5, 5, 5);
            for (int i = 0; i < 12; ++i)
                s.set(static_cast<Brick>(pick(rng)), {coord(rng), coord(rng), coord(rng)});
            CHECK(parse_bvox(emit_bvox(s)) == s);
        }
    }
}

TEST_CASE("parse_bvox rejects malformed input") {
    auto line_of = [](const std::string& text) {
        try {
            parse_bvox(text);
            return -1;
        } catch (const BvoxParseError& e) {
            return e.line;
        }
    };
    CHECK(line_of("BVOX 1 2 2 2\n5 0 0 BLUE\n") == 2);     // out of bounds
    CHECK(line_of("BVOX 1 2 2 2\n0 0 0 BLUE\n0 0 0 RED\n") == 3); // duplicate
    CHECK(line_of("BVOX 1 2 2 2\n1 0 0 BLUE\n0 0 0 RED\n") == 3); // out of order
    CHECK(line_of("BVOX 1 2 2 2\n0 0 0 TEAL\n") == 2);      // unknown brick
    CHECK(line_of("BVOX 1 2 2 2\n0 0 0 EMPTY\n") == 2);
    CHECK(line_of("BVOX 2 2 2 2\n") == 1);                   // bad version
    CHECK(line_of("BVOX 1 2 2\n") == 1);                     // short header
    CHECK(line_of("BVOX 1 0 2 2\n") == 1);                   // zero dim
    CHECK(line_of("BVOX 1 2 2 2\n0  0 0 BLUE\n") == 2);     // double space
    CHECK(line_of("BVOX 1 2 2 2") == 1);                     // no trailing newline
}

TEST_CASE("emit_lxfml") {
    SUBCASE("empty space is well-formed with zero bricks") {
        std::string xml = emit_lxfml(new_space(3, 3, 3), "empty");
        CHECK(xml_well_formed(xml));
        CHECK(xml.find("<Brick ") == std::string::npos);
    }
    SUBCASE("single blue cell at origin") {
        std::string xml = emit_lxfml(update(new_space(2, 2, 2), Brick::Blue, {0, 0, 0}),
                                     "one");
        CHECK(xml_well_formed(xml));
        CHECK(xml.find("designID=\"3005\"") != std::string::npos);
        CHECK(xml.find("materials=\"23\"") != std::string::npos);
        CHECK(xml.find("transformation=\"1,0,0,0,1,0,0,0,1,0,0,0\"") != std::string::npos);
    }
    SUBCASE("brick element count equals occupancy and refIDs are unique") {
        VirtualSpace s = predicate_show(6, [](Point p) { return (p.x ^ p.z) % 3 == 0; },
                                        Brick::Green);
        std::string xml = emit_lxfml(s, "pattern");
        CHECK(xml_well_formed(xml));

        std::size_t bricks = 0, pos = 0;
        std::set<std::string> ref_ids;
        while ((pos = xml.find("<Brick refID=\"", pos)) != std::string::npos) {
            pos += 14;
            std::size_t end = xml.find('"', pos);
            ref_ids.insert(xml.substr(pos, end - pos));
            ++bricks;
        }
        CHECK(bricks == s.occupied_count());
        CHECK(ref_ids.size() == bricks);
    }
    SUBCASE("world units: stud pitch 0.8, brick height 0.96") {
        std::string xml = emit_lxfml(update(new_space(4, 4, 4), Brick::Red, {3, 2, 1}),
                                     "units");
        CHECK(xml.find("transformation=\"1,0,0,0,1,0,0,0,1,2.4,1.92,0.8\"") !=
              std::string::npos);
    }
    SUBCASE("title is escaped") {
        std::string xml = emit_lxfml(new_space(1, 1, 1), "a<b&c\"d");
        CHECK(xml_well_formed(xml));
        CHECK(xml.find("a&lt;b&amp;c&quot;d") != std::string::npos);
    }
}

TEST_CASE("golden files") {
    CHECK(emit_bvox(sierpinski({9})) ==
          read_file(std::string(BRICKFORGE_GOLDEN_DIR) + "/sierpinski9.bvox"));
    CHECK(emit_bvox(predicate_show(20, [](Point) { return true; }, Brick::Blue)) ==
          read_file(std::string(BRICKFORGE_GOLDEN_DIR) + "/cube20.bvox"));
    CHECK(emit_lxfml(sierpinski({9}), "sierpinski") ==
          read_file(std::string(BRICKFORGE_GOLDEN_DIR) + "/sierpinski9.lxfml"));
}
