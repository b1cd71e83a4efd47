#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "brickforge/voxel.hpp"

namespace brickforge::dsl {

// The .brick expression language: a single typed, total, non-recursive
// expression over the cell coordinates x, y, z. A predicate program has
// type Bool, a brick-function program has type Brick.
//
// Grammar (lowest precedence first):
//   expr    := "let" NAME "=" expr "in" expr
//            | "if" expr "then" expr "else" expr
//            | or
//   or      := xor ("or" xor)*
//   xor     := and ("xor" and)*
//   and     := cmp ("and" cmp)*
//   cmp     := add (("<" | "<=" | "=" | "<>" | ">=" | ">") add)?
//   add     := mul (("+" | "-") mul)*
//   mul     := unary (("*" | "div" | "mod") unary)*
//   unary   := ("-" | "not") unary | primary
//   primary := INT | FLOAT | "true" | "false" | BRICK | NAME
//            | ("sin" | "cos" | "abs" | "toFloat" | "round") "(" expr ")"
//            | "(" expr ")"
// Comments run from '#' to end of line.

enum class Type { Int, Float, Bool, Brick };

std::string_view type_name(Type t);

enum class UnOp { Neg, Not };
enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Eq, Ne, Ge, Gt, And, Or, Xor };
enum class Builtin { Sin, Cos, Abs, ToFloat, Round };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { IntLit, FloatLit, BoolLit, BrickLit, Var, Unary, Binary, Call, If, Let };

    Kind kind;
    long long int_val = 0;
    double float_val = 0.0;
    bool bool_val = false;
    Brick brick_val = Brick::Empty;
    std::string name; // Var reference or Let binder
    UnOp un_op = UnOp::Neg;
    BinOp bin_op = BinOp::Add;
    Builtin builtin = Builtin::Sin;
    std::vector<ExprPtr> kids;
};

bool equal(const Expr& a, const Expr& b);

struct ParseError : Error {
    ParseError(std::string msg, int line, int column);
    int line;
    int column;
};

struct TypeError : Error {
    using Error::Error;
};

/// Top-level expression has the wrong role (predicate vs brick function).
struct RoleError : Error {
    using Error::Error;
};

ExprPtr parse(std::string_view text);

/// The unique type of e, with x, y, z in scope as Int.
Type typecheck(const Expr& e);

using Value = std::variant<long long, double, bool, Brick>;

/// Strict evaluation of a well-typed expression at cell p. Integer div and
/// mod floor toward negative infinity; zero divisors raise ArithmeticError.
Value eval(const Expr& e, Point p);

/// Fully parenthesized rendering; parsing it back yields an equal AST.
std::string to_string(const Expr& e);

Predicate compile_predicate(std::string_view text);
BrickFunction compile_brickfn(std::string_view text);

} // namespace brickforge::dsl
