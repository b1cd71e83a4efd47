#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "brickforge/gallery.hpp"
#include "brickforge/io.hpp"
#include "brickforge/lsystem.hpp"

using namespace brickforge;
namespace fs = std::filesystem;

namespace {

const std::string kBin = BRICKFORGE_BIN;
const std::string kData = BRICKFORGE_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "brickforge_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run(const std::string& args) {
    fs::path out = temp_dir() / "stdout.txt";
    std::string cmd = kBin + " " + args + " >" + out.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = temp_dir() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

} // namespace

TEST_CASE("render writes the cube example") {
    fs::path out = temp_dir() / "cube.bvox";
    auto r = run("render --mode predicate --size 20 --expr " + kData +
                 "/cube.brick --brick BLUE --out " + out.string());
    CHECK(r.exit_code == 0);
    std::string text = read_file(out);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8001);

    SUBCASE("byte-identical on repeat invocation") {
        fs::path out2 = temp_dir() / "cube2.bvox";
        auto r2 = run("render --mode predicate --size 20 --expr " + kData +
                      "/cube.brick --brick BLUE --out " + out2.string());
        CHECK(r2.exit_code == 0);
        CHECK(read_file(out2) == text);
    }
}

TEST_CASE("render error exit codes") {
    fs::path bad_type = write_file("bad_type.brick", "if x then 1 else 2\n");
    fs::path bad_syntax = write_file("bad_syntax.brick", "x + + 1\n");
    fs::path brick_body = write_file("brick_body.brick", "BLUE\n");
    fs::path bool_body = write_file("bool_body.brick", "true\n");
    fs::path out = temp_dir() / "never.bvox";
    fs::remove(out);

    CHECK(run("render --mode predicate --size 4 --expr " + bad_type.string() +
              " --out " + out.string()).exit_code == 2);
    CHECK(run("render --mode predicate --size 4 --expr " + bad_syntax.string() +
              " --out " + out.string()).exit_code == 2);
    CHECK(run("render --mode predicate --size 4 --expr " + brick_body.string() +
              " --out " + out.string()).exit_code == 2); // role error
    CHECK(run("render --mode brickfn --size 4 --expr " + bool_body.string() +
              " --out " + out.string()).exit_code == 2); // role error
    CHECK(!fs::exists(out)); // failures leave no output file

    CHECK(run("render --mode predicate --size 4 --expr /nonexistent.brick --out " +
              out.string()).exit_code == 4);
}

TEST_CASE("compare prints counts") {
    SUBCASE("difference of a predicate with itself is empty") {
        auto r = run("compare --op difference --size 6 --a " + kData +
                     "/square.brick --b " + kData + "/square.brick");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.starts_with("counts: A=36 B=36 result=0"));
    }
    SUBCASE("union of cube and square: square is a subset") {
        auto r = run("compare --op union --size 20 --a " + kData + "/cube.brick --b " +
                     kData + "/square.brick --out " + (temp_dir() / "u.bvox").string());
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.starts_with("counts: A=8000 B=400 result=8000"));
    }
    SUBCASE("xor of identical files is empty") {
        auto r = run("compare --op xor --size 8 --a " + kData + "/triangle.brick --b " +
                     kData + "/triangle.brick");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("result=0") != std::string::npos);
    }
    SUBCASE("compliment alias works and ignores --b") {
        auto r = run("compare --op compliment --size 4 --a " + kData + "/cube.brick");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("result=0") != std::string::npos);
    }
}

TEST_CASE("gallery subcommands") {
    fs::path out = temp_dir() / "g.bvox";

    CHECK(run("gallery sierpinski --n 9 --out " + out.string()).exit_code == 0);
    CHECK(read_file(out) == emit_bvox(sierpinski({9})));

    CHECK(run("gallery sierpinski --n 6 --out " + out.string()).exit_code == 5);
    CHECK(run("gallery checkerboard --board-size 5 --square-size 2 --out " +
              out.string()).exit_code == 5);

    CHECK(run("gallery hilbert --order 2 --out " + out.string()).exit_code == 0);
    CHECK(parse_bvox(read_file(out)).occupied_count() == 64);

    CHECK(run("gallery checkerboard --board-size 4 --square-size 2 --out " +
              out.string()).exit_code == 0);
    CHECK(parse_bvox(read_file(out)).occupied_count() == 16);

    CHECK(run("gallery nested-cubes --n 10 --inset 2 --out " + out.string()).exit_code == 0);
    CHECK(parse_bvox(read_file(out)).occupied_count() == 168);

    CHECK(run("gallery sine --n 8 --amplitude 2 --frequency 0.7853981633974483 --out " +
              out.string()).exit_code == 0);
    CHECK(parse_bvox(read_file(out)).occupied_count() > 64); // at least one full layer

    SUBCASE("lxfml output") {
        fs::path lx = temp_dir() / "g.lxfml";
        CHECK(run("gallery sierpinski --n 9 --out " + lx.string()).exit_code == 0);
        CHECK(read_file(lx) == emit_lxfml(sierpinski({9}), "sierpinski"));
    }
}

TEST_CASE("lsystem subcommand") {
    SUBCASE("plain segment with step 3") {
        fs::path spec = write_file("seg.lsys", "axiom: F\niterations: 0\n");
        fs::path out = temp_dir() / "seg.bvox";
        CHECK(run("lsystem --spec " + spec.string() + " --step 3 --out " +
                  out.string()).exit_code == 0);
        CHECK(parse_bvox(read_file(out)).occupied_count() == 4);
    }
    SUBCASE("unbalanced bracket is a stack error") {
        fs::path spec = write_file("bad.lsys", "axiom: F]\n");
        CHECK(run("lsystem --spec " + spec.string()).exit_code == 3);
    }
    SUBCASE("bad spec file is a parse error") {
        fs::path spec = write_file("nokey.lsys", "axim: F\n");
        CHECK(run("lsystem --spec " + spec.string()).exit_code == 2);
    }
    SUBCASE("shipped hilbert spec matches the gallery at order 1") {
        fs::path a = temp_dir() / "h_spec.bvox";
        fs::path b = temp_dir() / "h_gallery.bvox";
        CHECK(run("lsystem --spec " + kData + "/hilbert.lsys --iterations 1 --out " +
                  a.string()).exit_code == 0);
        CHECK(run("gallery hilbert --order 1 --out " + b.string()).exit_code == 0);
        CHECK(read_file(a) == read_file(b));
    }
    SUBCASE("explicit size enforces strict bounds") {
        fs::path spec = write_file("long.lsys", "axiom: FFFF\n");
        CHECK(run("lsystem --spec " + spec.string() + " --size 3").exit_code == 3);
    }
}
