#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indiv/dsl.hpp"

using namespace indiv;
using namespace indiv::dsl;

namespace {

const std::filesystem::path scripts_dir = std::filesystem::path(INDIV_SOURCE_DIR) / "scripts";

const std::vector<std::string> corpus{
    "triangle_shear",    "circle_unroll", "twisted_column",  "cone_apex",
    "cube_pyramids",     "sphere_cones",  "hat_box",         "sphere_cylinder",
    "hoof_from_orange",  "hoof",          "guldin_volume",   "guldin_surface",
};

std::string read(const std::filesystem::path& p)
{
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ParseError parse_error(std::string_view source)
{
    try {
        parse(source);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("source parsed: " << source);
    return ParseError(0, 0, "", "");
}

EvalError eval_error(std::string_view source)
{
    try {
        run_script(source);
    } catch (const EvalError& e) {
        return e;
    }
    FAIL("source evaluated: " << source);
    return EvalError(EvalErrorKind::NameError, {}, "");
}

// Number of code points on each line, for position checks.
std::vector<int> line_lengths(std::string_view source)
{
    std::vector<int> lengths{0};
    for (unsigned char c : source) {
        if (c == '\n') {
            lengths.push_back(0);
        } else if ((c & 0xC0) != 0x80) {
            ++lengths.back();
        }
    }
    return lengths;
}

class ProgramGenerator {
public:
    explicit ProgramGenerator(std::uint64_t seed) : rng_(seed) {}

    std::string program()
    {
        std::string s;
        const int n = pick(1, 6);
        for (int i = 0; i < n; ++i) {
            if (pick(0, 1) == 0) {
                s += "let v" + std::to_string(i) + " = " + expr(2) + ";\n";
            } else {
                s += "assert_close(" + mexpr(3) + ", " + mexpr(3) + ", tol=" + number() + ");\n";
            }
        }
        return s;
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::string number()
    {
        static const std::vector<std::string> forms{"1", "0.5", "2e-3", "1e-12", "3.25", "10", "7E2", ".5"};
        return forms[static_cast<std::size_t>(pick(0, static_cast<int>(forms.size()) - 1))];
    }

    std::string ident()
    {
        static const std::vector<std::string> names{"s", "c", "base", "x_1", "Cone2"};
        return names[static_cast<std::size_t>(pick(0, 4))];
    }

    std::string expr(int depth)
    {
        switch (depth <= 0 ? 0 : pick(0, 2)) {
        case 0: return ident();
        case 1: {
            std::string s = "sphere(r=" + mexpr(depth - 1) + ")";
            if (pick(0, 1) == 0) {
                s = "disk(r=" + number() + ", center=(" + mexpr(0) + ", " + mexpr(0) + "))";
            }
            return s;
        }
        default: return "twist(" + expr(depth - 1) + ", rate=" + mexpr(depth - 1) + ")";
        }
    }

    std::string mexpr(int depth)
    {
        static const std::vector<std::string> measures{"area", "volume", "surface", "lateral_area", "perimeter",
                                                       "centroid_rho"};
        switch (depth <= 0 ? pick(0, 1) : pick(0, 5)) {
        case 0: return number();
        case 1: return "pi";
        case 2: return "-" + mexpr(depth - 1);
        case 3: return "(" + mexpr(depth - 1) + ")";
        case 4: return measures[static_cast<std::size_t>(pick(0, 5))] + "(" + expr(depth - 1) + ")";
        default: {
            static const char ops[] = {'+', '-', '*', '/'};
            return mexpr(depth - 1) + " " + ops[pick(0, 3)] + " " + mexpr(depth - 1);
        }
        }
    }

    std::mt19937_64 rng_;
};

} // namespace

TEST_SUITE("dsl")
{
    TEST_CASE("tokenize tracks 1-based positions")
    {
        const auto t = tokenize("let s =\n  sphere(r=1.5e0); # note\n");
        REQUIRE(t.size() == 11);
        CHECK(t[0].kind == TokenKind::Keyword);
        CHECK(t[0].line == 1);
        CHECK(t[0].column == 1);
        CHECK(t[1].kind == TokenKind::Ident);
        CHECK(t[1].column == 5);
        CHECK(t[3].lexeme == "sphere");
        CHECK(t[3].line == 2);
        CHECK(t[3].column == 3);
        CHECK(t[7].kind == TokenKind::Number);
        CHECK(t[7].number == 1.5);
        CHECK(t.back().kind == TokenKind::End);
        for (const Token& tok : t) {
            if (tok.kind != TokenKind::End) {
                CHECK_FALSE(tok.lexeme.empty());
            }
        }
    }

    TEST_CASE("parse examples")
    {
        const Ast one = parse("let s = sphere(r=1);");
        REQUIRE(one.statements.size() == 1);
        const auto& let = std::get<LetBinding>(one.statements[0]);
        CHECK(let.name == "s");
        CHECK(std::get<Constructor>(let.value.node).name == "sphere");

        const Ast a = parse("assert_close(volume(s), (2/3)*volume(c), tol=1e-12);");
        REQUIRE(a.statements.size() == 1);
        const auto& as = std::get<Assertion>(a.statements[0]);
        CHECK(as.tolerance == 1e-12);
        CHECK(std::holds_alternative<Measure>(as.left.node));
        const auto& rhs = std::get<Binary>(as.right.node);
        CHECK(rhs.op == '*');

        const Ast t = parse("let t = shear(triangle((0,0),(4,0),(1,3)), base_y=0, shift=3);");
        const auto& call = std::get<TransformCall>(std::get<LetBinding>(t.statements[0]).value.node);
        CHECK(call.name == "shear");
        CHECK(call.args.size() == 2);
        CHECK(std::get<Constructor>(call.target->node).args.size() == 3);

        CHECK(parse("").statements.empty());
        CHECK(parse("# only a comment\n\n").statements.empty());
    }

    TEST_CASE("parse errors")
    {
        const ParseError e = parse_error("let s = sphere(r=);");
        CHECK(e.line() == 1);
        CHECK(e.column() == 18);
        CHECK(e.expected() == "NUMBER");
        CHECK(e.found() == "')'");

        const ParseError eof = parse_error("let s = sphere(r=1)");
        CHECK(eof.line() == 1);
        CHECK(eof.column() >= 1);
        CHECK(eof.column() <= 20);

        const ParseError tol = parse_error("assert_close(1, 1, tol=0);");
        CHECK(tol.column() == 24);

        const ParseError kw = parse_error("let let = disk(r=1);");
        CHECK(kw.column() == 5);

        const ParseError bad = parse_error("let s = sphere(r=1) $;");
        CHECK(bad.column() == 21);
    }

    TEST_CASE("columns count code points")
    {
        const ParseError e = parse_error("# \xC3\xA9t\xC3\xA9\nlet \xC3\xA9 = disk(r=1);");
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
        const ParseError f = parse_error("let s = disk(r=1); # \xCF\x80\n  let = 2;");
        CHECK(f.line() == 2);
        CHECK(f.column() == 7);
    }

    TEST_CASE("evaluate examples")
    {
        const RunReport sc = run_script(
            "let s=sphere(r=1); let c=cylinder(r=1,h=2); assert_close(volume(s),(2/3)*volume(c),tol=1e-12);");
        REQUIRE(sc.records.size() == 1);
        CHECK(sc.pass);
        CHECK(sc.records[0].left == doctest::Approx(4.188790).epsilon(1e-6));
        CHECK(sc.records[0].right == doctest::Approx(4.188790).epsilon(1e-6));

        const RunReport fail = run_script("assert_close(area(disk(r=1)), 4, tol=1e-6);");
        REQUIRE(fail.records.size() == 1);
        CHECK_FALSE(fail.pass);
        CHECK_FALSE(fail.records[0].pass);
        CHECK(fail.records[0].difference == doctest::Approx(4.0 - pi));
        CHECK(fail.records[0].span.line == 1);
        CHECK(fail.records[0].span.column == 1);

        const RunReport sh = run_script(
            "let t = shear(triangle((0,0),(4,0),(1,3)), base_y=0, shift=3); assert_close(area(t), 6, tol=1e-12);");
        CHECK(sh.pass);

        const RunReport empty = run_script("");
        CHECK(empty.pass);
        CHECK(empty.records.empty());
    }

    TEST_CASE("execution continues past failed assertions")
    {
        const RunReport r = run_script("assert_close(1, 2, tol=0.5);\nassert_close(pi, 3.14159, tol=1e-5);\n");
        REQUIRE(r.records.size() == 2);
        CHECK_FALSE(r.records[0].pass);
        CHECK(r.records[1].pass);
        CHECK(r.records[1].span.line == 2);
        CHECK_FALSE(r.pass);
    }

    TEST_CASE("tolerance is absolute")
    {
        CHECK(run_script("assert_close(1000, 1000.5, tol=0.6);").pass);
        CHECK_FALSE(run_script("assert_close(1000, 1000.5, tol=0.4);").pass);
    }

    TEST_CASE("evaluation errors carry spans")
    {
        const EvalError n = eval_error("let s = sphere(r=1);\nassert_close(volume(q), 1, tol=1);");
        CHECK(n.kind() == EvalErrorKind::NameError);
        CHECK(n.span().line == 2);
        CHECK(n.span().column == 21);

        const EvalError t = eval_error("let d = disk(r=1);\nassert_close(volume(d), 1, tol=1);");
        CHECK(t.kind() == EvalErrorKind::TypeError);
        CHECK(t.span().line == 2);

        const EvalError u = eval_error("let d = disk(r=1, colour=2);");
        CHECK(u.kind() == EvalErrorKind::TypeError);

        const EvalError g = eval_error("let c = cone(r=1, h=3);\nlet m = move_apex(c, apex=(1,1,4));");
        CHECK(g.kind() == EvalErrorKind::GeometryError);
        CHECK(g.span().line == 2);
        CHECK(std::string(g.what()).find("ApexHeightChanged") != std::string::npos);

        // Unknown callables are rejected by the grammar, not the evaluator.
        const ParseError f = parse_error("let x = frobnicate(r=1);");
        CHECK(f.column() == 9);
    }

    TEST_CASE("every constructor and transform is reachable")
    {
        const RunReport r = run_script(R"(
let t = triangle((0,0),(4,0),(1,3));
let p = polygon((0,0),(2,0),(2,1),(0,1));
let q = rect(x0=1, y0=0, x1=2, y1=1);
let d = disk(r=1);
let pr = profile(q);
let rv = revolve(pr);
let s = sphere(r=1);
let cy = cylinder(r=1, h=2);
let co = cone(r=1, h=3);
let hf = hoof(r=1, h=1);
let tp = tangent_polyhedron(4, 4, 4, 4, 4, 4, r=1);
let sh = shear(t, shift=1);
let ma = move_apex(co, apex=(2, 3, 3));
let un = unroll(d, n=64);
let tw = twist(cy, rate=1);
let mu = meridian_unfold(s, n=256);
let uf = unfold_revolution(pr);
assert_close(area(t), 6, tol=1e-12);
assert_close(area(p), 2, tol=1e-12);
assert_close(volume(rv), 3*pi, tol=1e-12);
assert_close(volume(uf), volume(rv), tol=1e-12);
assert_close(volume(tp), 8, tol=1e-12);
assert_close(volume(ma), pi, tol=1e-12);
assert_close(volume(tw), 2*pi, tol=1e-12);
assert_close(lateral_area(hf), 2, tol=1e-12);
assert_close(surface(s), lateral_area(cy), tol=1e-12);
assert_close(perimeter(p), 6, tol=1e-12);
assert_close(centroid_rho(q), 1.5, tol=1e-12);
assert_close(area(sh), 6, tol=1e-12);
assert_close(area(un), 3.1365484905459, tol=1e-12);
assert_close(volume(mu), 4*pi/3, tol=1e-3);
)");
        CHECK(r.records.size() == 14);
        for (const AssertionRecord& a : r.records) {
            CAPTURE(a.span.line);
            CHECK(a.pass);
        }
        CHECK(constructor_names().size() == 12);
        CHECK(transform_names().size() == 6);
    }

    TEST_CASE("bundled corpus passes")
    {
        for (const std::string& name : corpus) {
            CAPTURE(name);
            const RunReport r = run_script(read(scripts_dir / (name + ".igeo")));
            CHECK(r.pass);
            CHECK_FALSE(r.records.empty());
        }
    }

    TEST_CASE("property: evaluation is deterministic")
    {
        for (const std::string& name : corpus) {
            const std::string src = read(scripts_dir / (name + ".igeo"));
            const RunReport a = run_script(src);
            const RunReport b = run_script(src);
            REQUIRE(a.records.size() == b.records.size());
            for (std::size_t i = 0; i < a.records.size(); ++i) {
                CHECK(a.records[i].left == b.records[i].left);
                CHECK(a.records[i].right == b.records[i].right);
                CHECK(a.records[i].pass == b.records[i].pass);
            }
        }
    }

    TEST_CASE("property: printing and re-parsing preserves structure")
    {
        for (const std::string& name : corpus) {
            CAPTURE(name);
            const Ast ast = parse(read(scripts_dir / (name + ".igeo")));
            const std::string printed = to_source(ast);
            CHECK(parse(printed) == ast);
            CHECK(to_source(parse(printed)) == printed);
        }
        ProgramGenerator gen(51);
        for (int i = 0; i < 500; ++i) {
            const std::string src = gen.program();
            CAPTURE(src);
            const Ast ast = parse(src);
            CHECK(parse(to_source(ast)) == ast);
        }
    }

    TEST_CASE("property: parse error positions lie within the source")
    {
        std::mt19937_64 rng(52);
        const std::string punct = "();,=+-*/#\n $x1.e";
        int errors = 0;
        for (const std::string& name : corpus) {
            const std::string src = read(scripts_dir / (name + ".igeo"));
            for (int i = 0; i < 60; ++i) {
                std::string mutated = src;
                const std::size_t at = std::uniform_int_distribution<std::size_t>(0, mutated.size() - 1)(rng);
                switch (i % 3) {
                case 0: mutated.resize(at); break;
                case 1: mutated.erase(at, 1); break;
                default: mutated[at] = punct[static_cast<std::size_t>(i) % punct.size()]; break;
                }
                try {
                    parse(mutated);
                } catch (const ParseError& e) {
                    ++errors;
                    const std::vector<int> lengths = line_lengths(mutated);
                    CAPTURE(mutated);
                    REQUIRE(e.line() >= 1);
                    REQUIRE(e.line() <= static_cast<int>(lengths.size()));
                    CHECK(e.column() >= 1);
                    CHECK(e.column() <= lengths[static_cast<std::size_t>(e.line() - 1)] + 1);
                }
            }
        }
        CHECK(errors > 100);
    }
}
