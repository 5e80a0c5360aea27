#ifndef INDIV_DSL_HPP
#define INDIV_DSL_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indiv/transforms.hpp"

// Construction scripts (.igeo):
//
//   script := stmt*
//   stmt   := "let" IDENT "=" expr ";"
//           | "assert_close" "(" mexpr "," mexpr "," "tol" "=" NUMBER ")" ";"
//   expr   := IDENT "(" [arg {"," arg}] ")" | IDENT
//   arg    := [IDENT "="] (mexpr | tuple | expr)
//   tuple  := "(" mexpr "," mexpr ["," mexpr] ")"
//   mexpr  := term {("+" | "-") term}
//   term   := factor {("*" | "/") factor}
//   factor := NUMBER | "pi" | "-" factor | "(" mexpr ")" | MEASURE "(" expr ")"
//
// "#" starts a comment that runs to the end of the line.
namespace indiv::dsl {

struct Span {
    int line = 1;
    int column = 1;
    int end_line = 1;
    int end_column = 1;
};

enum class TokenKind { Ident, Number, Keyword, Punct, End };

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;
    int column = 1;
    double number = 0.0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, std::string expected, std::string found);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    int line_;
    int column_;
    std::string expected_;
    std::string found_;
};

std::vector<Token> tokenize(std::string_view source);

// Owning pointer with value semantics, for recursive AST nodes.
template <class T>
class Box {
public:
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other)
    {
        ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

private:
    std::unique_ptr<T> ptr_;
};

enum class MeasureKind { Area, Volume, Surface, LateralArea, Perimeter, CentroidRho };

std::string_view to_string(MeasureKind kind) noexcept;

struct Expr;
struct MExpr;

struct Number {
    double value = 0.0;
    friend bool operator==(const Number&, const Number&) = default;
};

struct PiConstant {
    friend bool operator==(const PiConstant&, const PiConstant&) = default;
};

struct Measure {
    MeasureKind kind;
    Box<Expr> target;
    friend bool operator==(const Measure&, const Measure&) = default;
};

struct Negate {
    Box<MExpr> operand;
    friend bool operator==(const Negate&, const Negate&) = default;
};

struct Binary {
    char op;
    Box<MExpr> lhs;
    Box<MExpr> rhs;
    friend bool operator==(const Binary&, const Binary&) = default;
};

// Spans are positional metadata and never take part in structural equality.
struct MExpr {
    std::variant<Number, PiConstant, Measure, Negate, Binary> node;
    Span span;
    friend bool operator==(const MExpr& a, const MExpr& b) { return a.node == b.node; }
};

struct Tuple {
    std::vector<MExpr> items;
    friend bool operator==(const Tuple&, const Tuple&) = default;
};

struct Argument {
    std::string name;   // empty for positional arguments
    std::variant<MExpr, Tuple, Box<Expr>> value;
    Span span;
    friend bool operator==(const Argument& a, const Argument& b) { return a.name == b.name && a.value == b.value; }
};

struct Constructor {
    std::string name;
    std::vector<Argument> args;
    friend bool operator==(const Constructor&, const Constructor&) = default;
};

struct TransformCall {
    std::string name;
    Box<Expr> target;
    std::vector<Argument> args;
    friend bool operator==(const TransformCall&, const TransformCall&) = default;
};

struct Reference {
    std::string name;
    friend bool operator==(const Reference&, const Reference&) = default;
};

struct Expr {
    std::variant<Constructor, TransformCall, Reference> node;
    Span span;
    friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

struct LetBinding {
    std::string name;
    Expr value;
    Span span;
    friend bool operator==(const LetBinding& a, const LetBinding& b) { return a.name == b.name && a.value == b.value; }
};

struct Assertion {
    MExpr left;
    MExpr right;
    double tolerance = 0.0;
    Span span;
    friend bool operator==(const Assertion& a, const Assertion& b)
    {
        return a.left == b.left && a.right == b.right && a.tolerance == b.tolerance;
    }
};

using Statement = std::variant<LetBinding, Assertion>;

struct Ast {
    std::vector<Statement> statements;
    friend bool operator==(const Ast&, const Ast&) = default;
};

const std::vector<std::string>& constructor_names();
const std::vector<std::string>& transform_names();

// Stops at the first error.
Ast parse(std::string_view source);

// Canonical source text; parse(to_source(ast)) == ast.
std::string to_source(const Ast& ast);

enum class EvalErrorKind { NameError, TypeError, GeometryError };

std::string_view to_string(EvalErrorKind kind) noexcept;

class EvalError : public std::runtime_error {
public:
    EvalError(EvalErrorKind kind, Span span, const std::string& message);

    EvalErrorKind kind() const noexcept { return kind_; }
    const Span& span() const noexcept { return span_; }

private:
    EvalErrorKind kind_;
    Span span_;
};

struct AssertionRecord {
    Span span;
    double left = 0.0;
    double right = 0.0;
    double difference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RunReport {
    std::vector<AssertionRecord> records;
    bool pass = true;   // conjunction of the records
};

using Value = Figure;
using Environment = std::map<std::string, Value>;

// Runs statements in order; failed assertions are recorded and execution
// continues. Name, type and geometry errors abort with an EvalError.
RunReport evaluate(const Ast& ast, Environment& env);

RunReport run_script(std::string_view source);

} // namespace indiv::dsl

#endif
