#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "brickforge/expr.hpp"
#include "brickforge/gallery.hpp"
#include "brickforge/io.hpp"
#include "brickforge/lsystem.hpp"
#include "brickforge/setops.hpp"
#include "brickforge/traversal.hpp"
#include "brickforge/voxel.hpp"

namespace {

using namespace brickforge;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;  // DSL / L-system spec parse or type errors
constexpr int kExitRender = 3; // bounds, stack, arithmetic, shape errors
constexpr int kExitIo = 4;
constexpr int kExitParam = 5;

struct CliFailure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{kExitIo, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Brick parse_brick_flag(const std::string& name) {
    auto b = brick_from_name(name);
    if (!b || *b == Brick::Empty) {
        throw CliFailure{kExitParam, "unknown or non-physical brick '" + name + "'"};
    }
    return *b;
}

void write_output(const VirtualSpace& space, const std::string& out_path,
                  const std::string& title, bool open_viewer) {
    std::string payload;
    if (out_path.empty()) {
        std::cout << emit_bvox(space);
        return;
    }
    if (out_path.ends_with(".bvox")) {
        payload = emit_bvox(space);
    } else if (out_path.ends_with(".lxfml")) {
        payload = emit_lxfml(space, title);
    } else {
        throw CliFailure{kExitParam, "output file must end in .bvox or .lxfml"};
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << payload) || !out.flush()) {
        throw CliFailure{kExitIo, "cannot write '" + out_path + "'"};
    }
    if (open_viewer) {
        const char* viewer = std::getenv("BRICKFORGE_VIEWER");
        if (viewer == nullptr || *viewer == '\0') {
            std::cerr << "warning: --open requested but BRICKFORGE_VIEWER is unset\n";
        } else {
            std::string command = std::string(viewer) + " " + out_path;
            if (std::system(command.c_str()) != 0) {
                std::cerr << "warning: viewer command failed: " << command << "\n";
            }
        }
    }
}

struct RenderArgs {
    std::string mode;
    int size = 0;
    std::string expr_path;
    std::string brick = "BLUE";
    std::string out;
    bool open_viewer = false;
};

int run_render(const RenderArgs& args) {
    std::string source = read_file(args.expr_path);
    VirtualSpace space = args.mode == "predicate"
                             ? predicate_show(args.size, dsl::compile_predicate(source),
                                              parse_brick_flag(args.brick))
                             : brickfn_show(args.size, dsl::compile_brickfn(source));
    write_output(space, args.out, args.expr_path, args.open_viewer);
    return kExitOk;
}

struct CompareArgs {
    std::string op;
    int size = 0;
    std::string a_path;
    std::string b_path;
    std::string brick_a = "BLUE";    // instructor / first artifact
    std::string brick_b = "YELLOW";  // student / second artifact
    std::string brick_both = "GREEN";
    std::string out;
    bool open_viewer = false;
};

int run_compare(const CompareArgs& args) {
    Predicate a = dsl::compile_predicate(read_file(args.a_path));
    Brick ba = parse_brick_flag(args.brick_a);
    Brick bb = parse_brick_flag(args.brick_b);
    Brick bboth = parse_brick_flag(args.brick_both);

    std::string op = args.op == "compliment" ? "complement" : args.op;
    Predicate b = [](Point) { return false; };
    if (op == "complement") {
        if (!args.b_path.empty()) {
            std::cerr << "warning: complement ignores --b\n";
        }
    } else {
        if (args.b_path.empty()) {
            throw CliFailure{kExitParam, "--b is required for op '" + op + "'"};
        }
        b = dsl::compile_predicate(read_file(args.b_path));
    }

    VirtualSpace result = [&] {
        if (op == "xor") return xor_show(args.size, a, ba, b, bb);
        if (op == "union") return union_show(args.size, a, ba, b, bb, bboth);
        if (op == "intersection") return intersection_show(args.size, a, b, bboth);
        if (op == "difference") return difference_show(args.size, a, b, ba);
        if (op == "complement") return complement_show(args.size, a, ba);
        throw CliFailure{kExitParam, "unknown op '" + args.op + "'"};
    }();

    std::size_t count_a = 0, count_b = 0;
    for (int x = 0; x < args.size; ++x)
        for (int y = 0; y < args.size; ++y)
            for (int z = 0; z < args.size; ++z) {
                if (a({x, y, z})) ++count_a;
                if (b({x, y, z})) ++count_b;
            }
    std::cout << "counts: A=" << count_a << " B=" << count_b
              << " result=" << result.occupied_count() << "\n";
    write_output(result, args.out, args.op, args.open_viewer);
    return kExitOk;
}

struct LsystemArgs {
    std::string spec_path;
    int iterations = -1; // -1: take the count from the spec file
    int step = 1;
    int size = 0;        // 0: fit the space to the traced path
    std::string brick = "BLUE";
    std::string out;
    bool open_viewer = false;
};

int run_lsystem(const LsystemArgs& args) {
    LSystem sys = parse_lsystem(read_file(args.spec_path));
    int iterations = args.iterations >= 0 ? args.iterations : sys.iterations;
    std::string symbols = expand(sys, iterations);

    TurtleState start;
    start.pen = parse_brick_flag(args.brick);
    VirtualSpace space = [&] {
        if (args.size > 0) {
            // explicit size: start at the origin corner, strict bounds
            return interpret(symbols, start, args.step, new_space(args.size, args.size, args.size));
        }
        std::vector<Point> cells = trace(symbols, args.step, start);
        Point lo{0, 0, 0}, hi{0, 0, 0};
        for (Point c : cells) {
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
        }
        start.position = {-lo.x, -lo.y, -lo.z};
        return interpret(symbols, start, args.step,
                         new_space(hi.x - lo.x + 1, hi.y - lo.y + 1, hi.z - lo.z + 1));
    }();
    write_output(space, args.out, args.spec_path, args.open_viewer);
    return kExitOk;
}

int dispatch_errors(const std::function<int()>& body) {
    try {
        return body();
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const dsl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dsl::TypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dsl::RoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const LsysParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRender;
    } catch (const StackError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRender;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRender;
    } catch (const EmptyBoxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRender;
    } catch (const ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRender;
    } catch (const Error& e) {
        // ParameterError, DimensionError, InvalidBrickError
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"brickforge: voxel artifact generator"};
    app.require_subcommand(1);

    long long seed = 0; // reserved for future randomized recipes
    app.add_option("--seed", seed, "random seed (reserved, currently unused)");

    RenderArgs render;
    auto* render_cmd = app.add_subcommand("render", "render a .brick program");
    render_cmd->add_option("--mode", render.mode, "predicate | brickfn")
        ->required()
        ->check(CLI::IsMember({"predicate", "brickfn"}));
    render_cmd->add_option("--size", render.size, "cube side length")->required();
    render_cmd->add_option("--expr", render.expr_path, ".brick source file")->required();
    render_cmd->add_option("--brick", render.brick, "brick for predicate mode");
    render_cmd->add_option("--out", render.out, "output .bvox or .lxfml file");
    render_cmd->add_flag("--open", render.open_viewer, "open in $BRICKFORGE_VIEWER");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "set-compare two predicates");
    compare_cmd->add_option("--op", compare.op, "xor | union | intersection | difference | complement")
        ->required()
        ->check(CLI::IsMember({"xor", "union", "intersection", "difference",
                               "complement", "compliment"}));
    compare_cmd->add_option("--size", compare.size, "cube side length")->required();
    compare_cmd->add_option("--a", compare.a_path, "first .brick predicate")->required();
    compare_cmd->add_option("--b", compare.b_path, "second .brick predicate");
    compare_cmd->add_option("--brick-a", compare.brick_a, "brick for A-only cells");
    compare_cmd->add_option("--brick-b", compare.brick_b, "brick for B-only cells");
    compare_cmd->add_option("--brick-both", compare.brick_both, "brick for common cells");
    compare_cmd->add_option("--out", compare.out, "output file");
    compare_cmd->add_flag("--open", compare.open_viewer, "open in $BRICKFORGE_VIEWER");

    auto* gallery_cmd = app.add_subcommand("gallery", "built-in constructions");
    gallery_cmd->require_subcommand(1);

    int sier_n = 0;
    std::string sier_even = "RED", sier_odd = "BLUE", gal_out;
    bool gal_open = false;
    auto* sier_cmd = gallery_cmd->add_subcommand("sierpinski", "Pascal-parity gasket");
    sier_cmd->add_option("--n", sier_n, "side length, must be 2^m + 1")->required();
    sier_cmd->add_option("--even", sier_even, "brick for even positions");
    sier_cmd->add_option("--odd", sier_odd, "brick for odd positions");

    int board_size = 0, square_size = 0;
    std::string cb_black = "BLACK", cb_other = "ORANGE";
    auto* cb_cmd = gallery_cmd->add_subcommand("checkerboard", "big-square checkerboard");
    cb_cmd->add_option("--board-size", board_size, "board side length")->required();
    cb_cmd->add_option("--square-size", square_size, "square side length")->required();
    cb_cmd->add_option("--black", cb_black, "brick for the 'black' squares");
    cb_cmd->add_option("--other", cb_other, "brick for the other squares");

    int nc_n = 0, nc_inset = 2;
    std::string nc_brick = "BLUE";
    auto* nc_cmd = gallery_cmd->add_subcommand("nested-cubes", "concentric wireframes");
    nc_cmd->add_option("--n", nc_n, "outer side length")->required();
    nc_cmd->add_option("--inset", nc_inset, "shrink per nesting step");
    nc_cmd->add_option("--brick", nc_brick, "wireframe brick");

    int sine_n = 0;
    double sine_amplitude = 3.0, sine_frequency = 0.5;
    auto* sine_cmd = gallery_cmd->add_subcommand("sine", "diagonal sine waves");
    sine_cmd->add_option("--n", sine_n, "side length")->required();
    sine_cmd->add_option("--amplitude", sine_amplitude, "wave amplitude");
    sine_cmd->add_option("--frequency", sine_frequency, "wave frequency");

    int hilbert_order = 0;
    std::string hilbert_brick = "BLUE";
    auto* hilbert_cmd = gallery_cmd->add_subcommand("hilbert", "space-filling Hilbert path");
    hilbert_cmd->add_option("--order", hilbert_order, "curve order")->required();
    hilbert_cmd->add_option("--brick", hilbert_brick, "path brick");

    for (auto* cmd : {sier_cmd, cb_cmd, nc_cmd, sine_cmd, hilbert_cmd}) {
        cmd->add_option("--out", gal_out, "output file");
        cmd->add_flag("--open", gal_open, "open in $BRICKFORGE_VIEWER");
    }

    LsystemArgs lsys;
    auto* lsys_cmd = app.add_subcommand("lsystem", "expand and draw an L-system spec");
    lsys_cmd->add_option("--spec", lsys.spec_path, "L-system spec file")->required();
    lsys_cmd->add_option("--iterations", lsys.iterations, "override spec iterations");
    lsys_cmd->add_option("--step", lsys.step, "cells per F segment");
    lsys_cmd->add_option("--size", lsys.size,
                         "cube side (default: fit space to the path)");
    lsys_cmd->add_option("--brick", lsys.brick, "pen brick");
    lsys_cmd->add_option("--out", lsys.out, "output file");
    lsys_cmd->add_flag("--open", lsys.open_viewer, "open in $BRICKFORGE_VIEWER");

    CLI11_PARSE(app, argc, argv);

    return dispatch_errors([&]() -> int {
        if (render_cmd->parsed()) return run_render(render);
        if (compare_cmd->parsed()) return run_compare(compare);
        if (lsys_cmd->parsed()) return run_lsystem(lsys);
        if (sier_cmd->parsed()) {
            SierpinskiParams params{sier_n, parse_brick_flag(sier_even),
                                    parse_brick_flag(sier_odd)};
            write_output(sierpinski(params), gal_out, "sierpinski", gal_open);
            return kExitOk;
        }
        if (cb_cmd->parsed()) {
            CheckerboardParams params{board_size, square_size,
                                      parse_brick_flag(cb_black),
                                      parse_brick_flag(cb_other)};
            write_output(big_checkerboard(params), gal_out, "checkerboard", gal_open);
            return kExitOk;
        }
        if (nc_cmd->parsed()) {
            write_output(nested_cubes(nc_n, nc_inset, parse_brick_flag(nc_brick)),
                         gal_out, "nested-cubes", gal_open);
            return kExitOk;
        }
        if (sine_cmd->parsed()) {
            write_output(sine_shading(sine_n, sine_amplitude, sine_frequency,
                                      sine_palette()),
                         gal_out, "sine", gal_open);
            return kExitOk;
        }
        if (hilbert_cmd->parsed()) {
            write_output(hilbert_cube(hilbert_order, parse_brick_flag(hilbert_brick)),
                         gal_out, "hilbert", gal_open);
            return kExitOk;
        }
        return kExitParam;
    });
}
