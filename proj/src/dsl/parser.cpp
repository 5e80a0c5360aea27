#include <algorithm>
#include <optional>

#include "indiv/dsl.hpp"

namespace indiv::dsl {

std::string_view to_string(MeasureKind kind) noexcept
{
    switch (kind) {
    case MeasureKind::Area: return "area";
    case MeasureKind::Volume: return "volume";
    case MeasureKind::Surface: return "surface";
    case MeasureKind::LateralArea: return "lateral_area";
    case MeasureKind::Perimeter: return "perimeter";
    case MeasureKind::CentroidRho: return "centroid_rho";
    }
    return "unknown";
}

const std::vector<std::string>& constructor_names()
{
    static const std::vector<std::string> names{"triangle", "polygon",  "disk", "rect", "half_disk",
                                                "profile",  "sphere",   "cylinder", "cone", "hoof",
                                                "revolve",  "tangent_polyhedron"};
    return names;
}

const std::vector<std::string>& transform_names()
{
    static const std::vector<std::string> names{"shear",  "move_apex",       "unroll",
                                                "twist", "meridian_unfold", "unfold_revolution"};
    return names;
}

namespace {

bool listed(const std::vector<std::string>& names, const std::string& name)
{
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::optional<MeasureKind> measure_kind(const std::string& name)
{
    static const std::pair<const char*, MeasureKind> table[] = {
        {"area", MeasureKind::Area},          {"volume", MeasureKind::Volume},
        {"surface", MeasureKind::Surface},    {"lateral_area", MeasureKind::LateralArea},
        {"perimeter", MeasureKind::Perimeter}, {"centroid_rho", MeasureKind::CentroidRho},
    };
    for (const auto& [n, k] : table) {
        if (name == n) {
            return k;
        }
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Ast program()
    {
        Ast ast;
        while (cur().kind != TokenKind::End) {
            ast.statements.push_back(statement());
        }
        return ast;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& cur() const { return toks_[i_]; }
    const Token& peek(std::size_t k) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }

    bool at_punct(char c) const { return cur().kind == TokenKind::Punct && cur().lexeme[0] == c; }
    bool at_ident(const char* word) const { return cur().kind == TokenKind::Ident && cur().lexeme == word; }

    static std::string describe(const Token& t)
    {
        if (t.kind == TokenKind::End) {
            return "end of input";
        }
        return "'" + t.lexeme + "'";
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        throw ParseError(cur().line, cur().column, expected, describe(cur()));
    }

    void expect_punct(char c)
    {
        if (!at_punct(c)) {
            fail(std::string("'") + c + "'");
        }
        ++i_;
    }

    std::string expect_ident()
    {
        if (cur().kind != TokenKind::Ident) {
            fail("IDENT");
        }
        return toks_[i_++].lexeme;
    }

    Span span_from(const Token& first) const
    {
        const Token& last = toks_[i_ > 0 ? i_ - 1 : 0];
        return {first.line, first.column, last.line, last.column + static_cast<int>(last.lexeme.size()) - 1};
    }

    Statement statement()
    {
        const Token first = cur();
        if (first.kind == TokenKind::Keyword && first.lexeme == "let") {
            ++i_;
            std::string name = expect_ident();
            expect_punct('=');
            Expr value = expr();
            expect_punct(';');
            return LetBinding{std::move(name), std::move(value), span_from(first)};
        }
        if (first.kind == TokenKind::Keyword && first.lexeme == "assert_close") {
            ++i_;
            expect_punct('(');
            MExpr left = mexpr();
            expect_punct(',');
            MExpr right = mexpr();
            expect_punct(',');
            if (!at_ident("tol")) {
                fail("'tol'");
            }
            ++i_;
            expect_punct('=');
            if (cur().kind != TokenKind::Number) {
                fail("NUMBER");
            }
            if (!(cur().number > 0.0)) {
                fail("positive NUMBER");
            }
            const double tol = toks_[i_++].number;
            expect_punct(')');
            expect_punct(';');
            return Assertion{std::move(left), std::move(right), tol, span_from(first)};
        }
        fail("'let' or 'assert_close'");
    }

    Expr expr()
    {
        const Token first = cur();
        if (first.kind != TokenKind::Ident) {
            fail("expression");
        }
        if (peek(1).kind != TokenKind::Punct || peek(1).lexeme != "(") {
            ++i_;
            return Expr{Reference{first.lexeme}, span_from(first)};
        }
        const bool is_constructor = listed(constructor_names(), first.lexeme);
        const bool is_transform = listed(transform_names(), first.lexeme);
        if (!is_constructor && !is_transform) {
            fail("constructor or transform");
        }
        i_ += 2;
        std::vector<Argument> args;
        if (!at_punct(')')) {
            args.push_back(argument());
            while (at_punct(',')) {
                ++i_;
                args.push_back(argument());
            }
        }
        expect_punct(')');
        const Span span = span_from(first);
        if (is_constructor) {
            return Expr{Constructor{first.lexeme, std::move(args)}, span};
        }
        if (args.empty() || !args.front().name.empty() ||
            !std::holds_alternative<Box<Expr>>(args.front().value)) {
            const Span& at = args.empty() ? span : args.front().span;
            throw ParseError(at.line, at.column, "transform target",
                             args.empty() ? "')'" : "argument");
        }
        Box<Expr> target = std::get<Box<Expr>>(args.front().value);
        args.erase(args.begin());
        for (const Argument& a : args) {
            if (a.name.empty()) {
                throw ParseError(a.span.line, a.span.column, "named argument", "positional argument");
            }
        }
        return Expr{TransformCall{first.lexeme, std::move(target), std::move(args)}, span};
    }

    Argument argument()
    {
        const Token first = cur();
        if (first.kind == TokenKind::Ident && peek(1).kind == TokenKind::Punct && peek(1).lexeme == "=") {
            i_ += 2;
            Argument a{first.lexeme, number_or_tuple(), {}};
            a.span = span_from(first);
            return a;
        }
        if (first.kind == TokenKind::Ident && first.lexeme != "pi" &&
            !(measure_kind(first.lexeme) && peek(1).lexeme == "(")) {
            Argument a{"", Box<Expr>(expr()), {}};
            a.span = span_from(first);
            return a;
        }
        Argument a{"", number_or_tuple(), {}};
        a.span = span_from(first);
        return a;
    }

    std::variant<MExpr, Tuple, Box<Expr>> number_or_tuple()
    {
        if (!at_punct('(')) {
            return mexpr();
        }
        const std::size_t save = i_;
        ++i_;
        MExpr head = mexpr();
        if (!at_punct(',')) {
            i_ = save;
            return mexpr();
        }
        Tuple t;
        t.items.push_back(std::move(head));
        while (at_punct(',')) {
            if (t.items.size() == 3) {
                fail("')'");
            }
            ++i_;
            t.items.push_back(mexpr());
        }
        expect_punct(')');
        return t;
    }

    MExpr mexpr()
    {
        const Token first = cur();
        MExpr lhs = term();
        while (at_punct('+') || at_punct('-')) {
            const char op = toks_[i_++].lexeme[0];
            MExpr rhs = term();
            lhs = MExpr{Binary{op, std::move(lhs), std::move(rhs)}, {}};
            lhs.span = span_from(first);
        }
        return lhs;
    }

    MExpr term()
    {
        const Token first = cur();
        MExpr lhs = factor();
        while (at_punct('*') || at_punct('/')) {
            const char op = toks_[i_++].lexeme[0];
            MExpr rhs = factor();
            lhs = MExpr{Binary{op, std::move(lhs), std::move(rhs)}, {}};
            lhs.span = span_from(first);
        }
        return lhs;
    }

    MExpr factor()
    {
        const Token first = cur();
        if (first.kind == TokenKind::Number) {
            ++i_;
            return MExpr{Number{first.number}, span_from(first)};
        }
        if (at_ident("pi")) {
            ++i_;
            return MExpr{PiConstant{}, span_from(first)};
        }
        if (at_punct('-')) {
            ++i_;
            MExpr operand = factor();
            return MExpr{Negate{std::move(operand)}, span_from(first)};
        }
        if (at_punct('(')) {
            ++i_;
            MExpr inner = mexpr();
            expect_punct(')');
            inner.span = span_from(first);
            return inner;
        }
        if (first.kind == TokenKind::Ident) {
            if (const auto kind = measure_kind(first.lexeme)) {
                ++i_;
                expect_punct('(');
                Expr target = expr();
                expect_punct(')');
                return MExpr{Measure{*kind, std::move(target)}, span_from(first)};
            }
        }
        fail("NUMBER");
    }
};

} // namespace

Ast parse(std::string_view source) { return Parser(tokenize(source)).program(); }

} // namespace indiv::dsl
