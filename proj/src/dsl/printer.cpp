#include <cstdio>

#include "indiv/detail/overloaded.hpp"
#include "indiv/dsl.hpp"

namespace indiv::dsl {

namespace {

using detail::overloaded;

std::string number_text(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string print(const Expr& e);

std::string print(const MExpr& m)
{
    return std::visit(overloaded{
                          [](const Number& n) { return number_text(n.value); },
                          [](const PiConstant&) { return std::string("pi"); },
                          [](const Measure& me) {
                              return std::string(to_string(me.kind)) + "(" + print(*me.target) + ")";
                          },
                          [](const Negate& n) { return "(-" + print(*n.operand) + ")"; },
                          [](const Binary& b) {
                              return "(" + print(*b.lhs) + " " + b.op + " " + print(*b.rhs) + ")";
                          },
                      },
                      m.node);
}

std::string print(const Argument& a)
{
    std::string value = std::visit(overloaded{
                                       [](const MExpr& m) { return print(m); },
                                       [](const Tuple& t) {
                                           std::string s = "(";
                                           for (std::size_t i = 0; i < t.items.size(); ++i) {
                                               s += (i ? ", " : "") + print(t.items[i]);
                                           }
                                           return s + ")";
                                       },
                                       [](const Box<Expr>& e) { return print(*e); },
                                   },
                                   a.value);
    return a.name.empty() ? value : a.name + " = " + value;
}

std::string print_args(const std::vector<Argument>& args, bool leading_comma)
{
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        s += (i || leading_comma ? ", " : "") + print(args[i]);
    }
    return s;
}

std::string print(const Expr& e)
{
    return std::visit(overloaded{
                          [](const Constructor& c) { return c.name + "(" + print_args(c.args, false) + ")"; },
                          [](const TransformCall& t) {
                              return t.name + "(" + print(*t.target) + print_args(t.args, true) + ")";
                          },
                          [](const Reference& r) { return r.name; },
                      },
                      e.node);
}

} // namespace

std::string to_source(const Ast& ast)
{
    std::string out;
    for (const Statement& s : ast.statements) {
        out += std::visit(overloaded{
                              [](const LetBinding& l) { return "let " + l.name + " = " + print(l.value) + ";\n"; },
                              [](const Assertion& a) {
                                  return "assert_close(" + print(a.left) + ", " + print(a.right) +
                                         ", tol = " + number_text(a.tolerance) + ");\n";
                              },
                          },
                          s);
    }
    return out;
}

} // namespace indiv::dsl
