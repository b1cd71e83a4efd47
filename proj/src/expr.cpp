#include "brickforge/expr.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

namespace brickforge::dsl {

std::string_view type_name(Type t) {
    switch (t) {
    case Type::Int: return "Int";
    case Type::Float: return "Float";
    case Type::Bool: return "Bool";
    case Type::Brick: return "Brick";
    }
    return "?";
}

ParseError::ParseError(std::string msg, int line, int column)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
            ": " + msg),
      line(line), column(column) {}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case Expr::Kind::IntLit: return a.int_val == b.int_val;
    case Expr::Kind::FloatLit: return a.float_val == b.float_val;
    case Expr::Kind::BoolLit: return a.bool_val == b.bool_val;
    case Expr::Kind::BrickLit: return a.brick_val == b.brick_val;
    case Expr::Kind::Var: return a.name == b.name;
    case Expr::Kind::Unary:
        if (a.un_op != b.un_op) return false;
        break;
    case Expr::Kind::Binary:
        if (a.bin_op != b.bin_op) return false;
        break;
    case Expr::Kind::Call:
        if (a.builtin != b.builtin) return false;
        break;
    case Expr::Kind::If:
        break;
    case Expr::Kind::Let:
        if (a.name != b.name) return false;
        break;
    }
    if (a.kids.size() != b.kids.size()) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
        if (!equal(*a.kids[i], *b.kids[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Int, Float, Ident, Brick,
    Plus, Minus, Star, Lt, Le, Eq, Ne, Ge, Gt, LParen, RParen,
    KwLet, KwIn, KwIf, KwThen, KwElse, KwTrue, KwFalse,
    KwDiv, KwMod, KwAnd, KwOr, KwXor, KwNot,
    KwSin, KwCos, KwAbs, KwToFloat, KwRound,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    long long int_val = 0;
    double float_val = 0.0;
    int line = 1;
    int column = 1;
};

const std::map<std::string_view, Tok> kKeywords = {
    {"let", Tok::KwLet},   {"in", Tok::KwIn},     {"if", Tok::KwIf},
    {"then", Tok::KwThen}, {"else", Tok::KwElse}, {"true", Tok::KwTrue},
    {"false", Tok::KwFalse}, {"div", Tok::KwDiv}, {"mod", Tok::KwMod},
    {"and", Tok::KwAnd},   {"or", Tok::KwOr},     {"xor", Tok::KwXor},
    {"not", Tok::KwNot},   {"sin", Tok::KwSin},   {"cos", Tok::KwCos},
    {"abs", Tok::KwAbs},   {"toFloat", Tok::KwToFloat}, {"round", Tok::KwRound},
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws_and_comments();
            Token t = next();
            out.push_back(t);
            if (t.kind == Tok::End) break;
        }
        return out;
    }

private:
    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_; ++line_; col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_; ++col_;
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    Token make(Tok kind, std::string text) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.line = line_;
        t.column = col_;
        col_ += static_cast<int>(t.text.size());
        pos_ += t.text.size();
        return t;
    }

    Token next() {
        if (pos_ >= text_.size()) {
            Token t;
            t.kind = Tok::End;
            t.line = line_;
            t.column = col_;
            return t;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
        switch (c) {
        case '+': return make(Tok::Plus, "+");
        case '-': return make(Tok::Minus, "-");
        case '*': return make(Tok::Star, "*");
        case '(': return make(Tok::LParen, "(");
        case ')': return make(Tok::RParen, ")");
        case '=': return make(Tok::Eq, "=");
        case '<':
            if (peek(1) == '=') return make(Tok::Le, "<=");
            if (peek(1) == '>') return make(Tok::Ne, "<>");
            return make(Tok::Lt, "<");
        case '>':
            if (peek(1) == '=') return make(Tok::Ge, ">=");
            return make(Tok::Gt, ">");
        default:
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    char peek(std::size_t ahead) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    Token number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        bool is_float = false;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            is_float = true;
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            is_float = true;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        std::string lexeme(text_.substr(start, pos_ - start));
        pos_ = start; // make() re-advances
        Token t = make(is_float ? Tok::Float : Tok::Int, lexeme);
        if (is_float) {
            t.float_val = std::strtod(lexeme.c_str(), nullptr);
        } else {
            auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(),
                                       t.int_val);
            if (res.ec != std::errc()) fail("integer literal out of range: " + lexeme);
        }
        return t;
    }

    Token ident() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        std::string lexeme(text_.substr(start, pos_ - start));
        pos_ = start;
        if (auto it = kKeywords.find(lexeme); it != kKeywords.end())
            return make(it->second, lexeme);
        if (brick_from_name(lexeme)) return make(Tok::Brick, lexeme);
        return make(Tok::Ident, lexeme);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }

    bool accept(Tok kind) {
        if (cur().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok kind, const std::string& what) {
        if (cur().kind != kind) {
            throw ParseError("expected " + what + ", found '" +
                                 (cur().kind == Tok::End ? "<end>" : cur().text) + "'",
                             cur().line, cur().column);
        }
        return toks_[pos_++];
    }

    static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    ExprPtr expr() {
        if (accept(Tok::KwLet)) {
            const Token& name = expect(Tok::Ident, "name after 'let'");
            expect(Tok::Eq, "'='");
            ExprPtr bound = expr();
            expect(Tok::KwIn, "'in'");
            ExprPtr body = expr();
            Expr e;
            e.kind = Expr::Kind::Let;
            e.name = name.text;
            e.kids = {std::move(bound), std::move(body)};
            return node(std::move(e));
        }
        if (accept(Tok::KwIf)) {
            ExprPtr cond = expr();
            expect(Tok::KwThen, "'then'");
            ExprPtr then_e = expr();
            expect(Tok::KwElse, "'else'");
            ExprPtr else_e = expr();
            Expr e;
            e.kind = Expr::Kind::If;
            e.kids = {std::move(cond), std::move(then_e), std::move(else_e)};
            return node(std::move(e));
        }
        return or_expr();
    }

    ExprPtr binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
        Expr e;
        e.kind = Expr::Kind::Binary;
        e.bin_op = op;
        e.kids = {std::move(lhs), std::move(rhs)};
        return node(std::move(e));
    }

    ExprPtr or_expr() {
        ExprPtr e = xor_expr();
        while (accept(Tok::KwOr)) e = binary(BinOp::Or, std::move(e), xor_expr());
        return e;
    }

    ExprPtr xor_expr() {
        ExprPtr e = and_expr();
        while (accept(Tok::KwXor)) e = binary(BinOp::Xor, std::move(e), and_expr());
        return e;
    }

    ExprPtr and_expr() {
        ExprPtr e = cmp_expr();
        while (accept(Tok::KwAnd)) e = binary(BinOp::And, std::move(e), cmp_expr());
        return e;
    }

    std::optional<BinOp> cmp_op() {
        switch (cur().kind) {
        case Tok::Lt: return BinOp::Lt;
        case Tok::Le: return BinOp::Le;
        case Tok::Eq: return BinOp::Eq;
        case Tok::Ne: return BinOp::Ne;
        case Tok::Ge: return BinOp::Ge;
        case Tok::Gt: return BinOp::Gt;
        default: return std::nullopt;
        }
    }

    ExprPtr cmp_expr() {
        ExprPtr e = add_expr();
        if (auto op = cmp_op()) {
            ++pos_;
            e = binary(*op, std::move(e), add_expr());
        }
        return e;
    }

    ExprPtr add_expr() {
        ExprPtr e = mul_expr();
        while (true) {
            if (accept(Tok::Plus)) e = binary(BinOp::Add, std::move(e), mul_expr());
            else if (accept(Tok::Minus)) e = binary(BinOp::Sub, std::move(e), mul_expr());
            else return e;
        }
    }

    ExprPtr mul_expr() {
        ExprPtr e = unary_expr();
        while (true) {
            if (accept(Tok::Star)) e = binary(BinOp::Mul, std::move(e), unary_expr());
            else if (accept(Tok::KwDiv)) e = binary(BinOp::Div, std::move(e), unary_expr());
            else if (accept(Tok::KwMod)) e = binary(BinOp::Mod, std::move(e), unary_expr());
            else return e;
        }
    }

    ExprPtr unary_node(UnOp op, ExprPtr kid) {
        Expr e;
        e.kind = Expr::Kind::Unary;
        e.un_op = op;
        e.kids = {std::move(kid)};
        return node(std::move(e));
    }

    ExprPtr unary_expr() {
        if (accept(Tok::Minus)) return unary_node(UnOp::Neg, unary_expr());
        if (accept(Tok::KwNot)) return unary_node(UnOp::Not, unary_expr());
        return primary();
    }

    std::optional<Builtin> builtin_tok() {
        switch (cur().kind) {
        case Tok::KwSin: return Builtin::Sin;
        case Tok::KwCos: return Builtin::Cos;
        case Tok::KwAbs: return Builtin::Abs;
        case Tok::KwToFloat: return Builtin::ToFloat;
        case Tok::KwRound: return Builtin::Round;
        default: return std::nullopt;
        }
    }

    ExprPtr primary() {
        if (auto b = builtin_tok()) {
            ++pos_;
            expect(Tok::LParen, "'('");
            ExprPtr arg = expr();
            expect(Tok::RParen, "')'");
            Expr e;
            e.kind = Expr::Kind::Call;
            e.builtin = *b;
            e.kids = {std::move(arg)};
            return node(std::move(e));
        }
        const Token& t = cur();
        switch (t.kind) {
        case Tok::Int: {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::IntLit;
            e.int_val = t.int_val;
            return node(std::move(e));
        }
        case Tok::Float: {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::FloatLit;
            e.float_val = t.float_val;
            return node(std::move(e));
        }
        case Tok::KwTrue:
        case Tok::KwFalse: {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::BoolLit;
            e.bool_val = t.kind == Tok::KwTrue;
            return node(std::move(e));
        }
        case Tok::Brick: {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::BrickLit;
            e.brick_val = *brick_from_name(t.text);
            return node(std::move(e));
        }
        case Tok::Ident: {
            ++pos_;
            Expr e;
            e.kind = Expr::Kind::Var;
            e.name = t.text;
            return node(std::move(e));
        }
        case Tok::LParen: {
            ++pos_;
            ExprPtr e = expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        default:
            throw ParseError("expected an expression, found '" +
                                 (t.kind == Tok::End ? "<end>" : t.text) + "'",
                             t.line, t.column);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

// ---------------------------------------------------------------------------
// Typechecker

namespace {

using TypeEnv = std::map<std::string, Type, std::less<>>;

[[noreturn]] void type_fail(const Expr& e, const std::string& msg) {
    throw TypeError("type error in '" + to_string(e) + "': " + msg);
}

Type check(const Expr& e, TypeEnv& env) {
    switch (e.kind) {
    case Expr::Kind::IntLit: return Type::Int;
    case Expr::Kind::FloatLit: return Type::Float;
    case Expr::Kind::BoolLit: return Type::Bool;
    case Expr::Kind::BrickLit: return Type::Brick;
    case Expr::Kind::Var: {
        auto it = env.find(e.name);
        if (it == env.end()) type_fail(e, "unbound name '" + e.name + "'");
        return it->second;
    }
    case Expr::Kind::Unary: {
        Type t = check(*e.kids[0], env);
        if (e.un_op == UnOp::Neg) {
            if (t != Type::Int && t != Type::Float)
                type_fail(e, "'-' needs Int or Float, found " + std::string(type_name(t)));
            return t;
        }
        if (t != Type::Bool)
            type_fail(e, "'not' needs Bool, found " + std::string(type_name(t)));
        return Type::Bool;
    }
    case Expr::Kind::Binary: {
        Type a = check(*e.kids[0], env);
        Type b = check(*e.kids[1], env);
        switch (e.bin_op) {
        case BinOp::Add:
        case BinOp::Sub:
        case BinOp::Mul:
            if (a != b || (a != Type::Int && a != Type::Float))
                type_fail(e, "arithmetic needs two Ints or two Floats");
            return a;
        case BinOp::Div:
        case BinOp::Mod:
            if (a != Type::Int || b != Type::Int)
                type_fail(e, "div/mod are integer-only");
            return Type::Int;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Ge:
        case BinOp::Gt:
            if (a != b || (a != Type::Int && a != Type::Float))
                type_fail(e, "ordering needs two Ints or two Floats");
            return Type::Bool;
        case BinOp::Eq:
        case BinOp::Ne:
            if (a != b) type_fail(e, "'='/'<>' need operands of the same type");
            if (a == Type::Float)
                type_fail(e, "'='/'<>' are not defined on Float");
            return Type::Bool;
        case BinOp::And:
        case BinOp::Or:
        case BinOp::Xor:
            if (a != Type::Bool || b != Type::Bool)
                type_fail(e, "logical operators need Bool operands");
            return Type::Bool;
        }
        type_fail(e, "unknown operator");
    }
    case Expr::Kind::Call: {
        Type t = check(*e.kids[0], env);
        switch (e.builtin) {
        case Builtin::Sin:
        case Builtin::Cos:
            if (t != Type::Float) type_fail(e, "sin/cos need a Float argument");
            return Type::Float;
        case Builtin::Abs:
            if (t != Type::Int && t != Type::Float)
                type_fail(e, "abs needs Int or Float");
            return t;
        case Builtin::ToFloat:
            if (t != Type::Int) type_fail(e, "toFloat needs an Int argument");
            return Type::Float;
        case Builtin::Round:
            if (t != Type::Float) type_fail(e, "round needs a Float argument");
            return Type::Int;
        }
        type_fail(e, "unknown builtin");
    }
    case Expr::Kind::If: {
        Type c = check(*e.kids[0], env);
        if (c != Type::Bool) type_fail(e, "if-condition must be Bool");
        Type a = check(*e.kids[1], env);
        Type b = check(*e.kids[2], env);
        if (a != b)
            type_fail(e, "if-branches disagree: " + std::string(type_name(a)) +
                             " vs " + std::string(type_name(b)));
        return a;
    }
    case Expr::Kind::Let: {
        Type bound = check(*e.kids[0], env);
        auto it = env.find(e.name);
        std::optional<Type> shadowed;
        if (it != env.end()) shadowed = it->second;
        env[e.name] = bound;
        Type body = check(*e.kids[1], env);
        if (shadowed) env[e.name] = *shadowed;
        else env.erase(e.name);
        return body;
    }
    }
    type_fail(e, "unknown node");
}

} // namespace

Type typecheck(const Expr& e) {
    TypeEnv env{{"x", Type::Int}, {"y", Type::Int}, {"z", Type::Int}};
    return check(e, env);
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

using ValueEnv = std::map<std::string, Value, std::less<>>;

long long floor_div(long long a, long long b, Point p) {
    if (b == 0) {
        throw ArithmeticError("division by zero at cell (" + std::to_string(p.x) + ", " +
                              std::to_string(p.y) + ", " + std::to_string(p.z) + ")");
    }
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long floor_mod(long long a, long long b, Point p) {
    return a - floor_div(a, b, p) * b;
}

Value eval_in(const Expr& e, Point p, ValueEnv& env) {
    switch (e.kind) {
    case Expr::Kind::IntLit: return e.int_val;
    case Expr::Kind::FloatLit: return e.float_val;
    case Expr::Kind::BoolLit: return e.bool_val;
    case Expr::Kind::BrickLit: return e.brick_val;
    case Expr::Kind::Var: return env.at(e.name);
    case Expr::Kind::Unary: {
        Value v = eval_in(*e.kids[0], p, env);
        if (e.un_op == UnOp::Not) return !std::get<bool>(v);
        if (auto* i = std::get_if<long long>(&v)) return -*i;
        return -std::get<double>(v);
    }
    case Expr::Kind::Binary: {
        Value a = eval_in(*e.kids[0], p, env);
        Value b = eval_in(*e.kids[1], p, env);
        switch (e.bin_op) {
        case BinOp::Add:
            if (auto* i = std::get_if<long long>(&a)) return *i + std::get<long long>(b);
            return std::get<double>(a) + std::get<double>(b);
        case BinOp::Sub:
            if (auto* i = std::get_if<long long>(&a)) return *i - std::get<long long>(b);
            return std::get<double>(a) - std::get<double>(b);
        case BinOp::Mul:
            if (auto* i = std::get_if<long long>(&a)) return *i * std::get<long long>(b);
            return std::get<double>(a) * std::get<double>(b);
        case BinOp::Div: return floor_div(std::get<long long>(a), std::get<long long>(b), p);
        case BinOp::Mod: return floor_mod(std::get<long long>(a), std::get<long long>(b), p);
        case BinOp::Lt:
            if (auto* i = std::get_if<long long>(&a)) return *i < std::get<long long>(b);
            return std::get<double>(a) < std::get<double>(b);
        case BinOp::Le:
            if (auto* i = std::get_if<long long>(&a)) return *i <= std::get<long long>(b);
            return std::get<double>(a) <= std::get<double>(b);
        case BinOp::Ge:
            if (auto* i = std::get_if<long long>(&a)) return *i >= std::get<long long>(b);
            return std::get<double>(a) >= std::get<double>(b);
        case BinOp::Gt:
            if (auto* i = std::get_if<long long>(&a)) return *i > std::get<long long>(b);
            return std::get<double>(a) > std::get<double>(b);
        case BinOp::Eq: return a == b;
        case BinOp::Ne: return a != b;
        case BinOp::And: return std::get<bool>(a) && std::get<bool>(b);
        case BinOp::Or: return std::get<bool>(a) || std::get<bool>(b);
        case BinOp::Xor: return std::get<bool>(a) != std::get<bool>(b);
        }
        break;
    }
    case Expr::Kind::Call: {
        Value v = eval_in(*e.kids[0], p, env);
        switch (e.builtin) {
        case Builtin::Sin: return std::sin(std::get<double>(v));
        case Builtin::Cos: return std::cos(std::get<double>(v));
        case Builtin::Abs:
            if (auto* i = std::get_if<long long>(&v)) return *i < 0 ? -*i : *i;
            return std::fabs(std::get<double>(v));
        case Builtin::ToFloat: return static_cast<double>(std::get<long long>(v));
        case Builtin::Round:
            return static_cast<long long>(std::llround(std::get<double>(v)));
        }
        break;
    }
    case Expr::Kind::If:
        return std::get<bool>(eval_in(*e.kids[0], p, env))
                   ? eval_in(*e.kids[1], p, env)
                   : eval_in(*e.kids[2], p, env);
    case Expr::Kind::Let: {
        Value bound = eval_in(*e.kids[0], p, env);
        std::optional<Value> shadowed;
        if (auto it = env.find(e.name); it != env.end()) shadowed = it->second;
        env[e.name] = std::move(bound);
        Value out = eval_in(*e.kids[1], p, env);
        if (shadowed) env[e.name] = std::move(*shadowed);
        else env.erase(e.name);
        return out;
    }
    }
    assert(false && "eval on ill-typed expression");
    return false;
}

} // namespace

Value eval(const Expr& e, Point p) {
    ValueEnv env{{"x", Value(static_cast<long long>(p.x))},
                 {"y", Value(static_cast<long long>(p.y))},
                 {"z", Value(static_cast<long long>(p.z))}};
    return eval_in(e, p, env);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string float_literal(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, res.ptr);
    // keep the lexeme unambiguously a float
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find('E') == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string_view bin_op_text(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "div";
    case BinOp::Mod: return "mod";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Eq: return "=";
    case BinOp::Ne: return "<>";
    case BinOp::Ge: return ">=";
    case BinOp::Gt: return ">";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
    case BinOp::Xor: return "xor";
    }
    return "?";
}

std::string_view builtin_text(Builtin b) {
    switch (b) {
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Abs: return "abs";
    case Builtin::ToFloat: return "toFloat";
    case Builtin::Round: return "round";
    }
    return "?";
}

} // namespace

std::string to_string(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::IntLit: return std::to_string(e.int_val);
    case Expr::Kind::FloatLit: return float_literal(e.float_val);
    case Expr::Kind::BoolLit: return e.bool_val ? "true" : "false";
    case Expr::Kind::BrickLit: return std::string(brick_name(e.brick_val));
    case Expr::Kind::Var: return e.name;
    case Expr::Kind::Unary:
        return std::string("(") + (e.un_op == UnOp::Neg ? "-" : "not ") +
               to_string(*e.kids[0]) + ")";
    case Expr::Kind::Binary:
        return "(" + to_string(*e.kids[0]) + " " + std::string(bin_op_text(e.bin_op)) +
               " " + to_string(*e.kids[1]) + ")";
    case Expr::Kind::Call:
        return std::string(builtin_text(e.builtin)) + "(" + to_string(*e.kids[0]) + ")";
    case Expr::Kind::If:
        return "(if " + to_string(*e.kids[0]) + " then " + to_string(*e.kids[1]) +
               " else " + to_string(*e.kids[2]) + ")";
    case Expr::Kind::Let:
        return "(let " + e.name + " = " + to_string(*e.kids[0]) + " in " +
               to_string(*e.kids[1]) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Compilation to traversal callbacks

Predicate compile_predicate(std::string_view text) {
    ExprPtr ast = parse(text);
    Type t = typecheck(*ast);
    if (t != Type::Bool) {
        throw RoleError("expected predicate, found " + std::string(type_name(t)));
    }
    return [ast](Point p) { return std::get<bool>(eval(*ast, p)); };
}

BrickFunction compile_brickfn(std::string_view text) {
    ExprPtr ast = parse(text);
    Type t = typecheck(*ast);
    if (t != Type::Brick) {
        throw RoleError("expected brick function, found " + std::string(type_name(t)));
    }
    return [ast](Point p) { return std::get<Brick>(eval(*ast, p)); };
}

} // namespace brickforge::dsl
