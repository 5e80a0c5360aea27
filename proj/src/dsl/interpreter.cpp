#include <cmath>
#include <optional>

#include "indiv/detail/overloaded.hpp"
#include "indiv/dsl.hpp"

namespace indiv::dsl {

std::string_view to_string(EvalErrorKind kind) noexcept
{
    switch (kind) {
    case EvalErrorKind::NameError: return "NameError";
    case EvalErrorKind::TypeError: return "TypeError";
    case EvalErrorKind::GeometryError: return "GeometryError";
    }
    return "Error";
}

EvalError::EvalError(EvalErrorKind kind, Span span, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " at line " + std::to_string(span.line) + ", column " +
                         std::to_string(span.column) + ": " + message),
      kind_(kind), span_(span)
{
}

namespace {

using detail::overloaded;

std::string_view value_kind(const Value& v)
{
    return std::visit(overloaded{
                          [](const PlanarRegion&) { return std::string_view("region"); },
                          [](const Profile&) { return std::string_view("profile"); },
                          [](const Solid&) { return std::string_view("solid"); },
                      },
                      v);
}

class Interpreter {
public:
    explicit Interpreter(Environment& env) : env_(env) {}

    RunReport run(const Ast& ast)
    {
        RunReport report;
        for (const Statement& s : ast.statements) {
            std::visit(overloaded{
                           [&](const LetBinding& l) { env_.insert_or_assign(l.name, eval(l.value)); },
                           [&](const Assertion& a) {
                               AssertionRecord r;
                               r.span = a.span;
                               r.left = number(a.left);
                               r.right = number(a.right);
                               r.difference = std::abs(r.left - r.right);
                               r.tolerance = a.tolerance;
                               r.pass = r.difference <= a.tolerance;
                               report.pass = report.pass && r.pass;
                               report.records.push_back(r);
                           },
                       },
                       s);
        }
        return report;
    }

private:
    Environment& env_;

    // Arguments of one call, consumed by name or position.
    class Args {
    public:
        Args(Interpreter& in, const std::string& callee, const std::vector<Argument>& args, Span span)
            : in_(in), callee_(callee), args_(args), span_(span), used_(args.size(), false)
        {
        }

        const Argument* find(const std::string& name)
        {
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (args_[i].name == name) {
                    used_[i] = true;
                    return &args_[i];
                }
            }
            return nullptr;
        }

        double number(const std::string& name)
        {
            const Argument* a = find(name);
            if (a == nullptr) {
                throw EvalError(EvalErrorKind::TypeError, span_, callee_ + " needs argument '" + name + "'");
            }
            return as_number(*a);
        }

        std::optional<double> maybe_number(const std::string& name)
        {
            const Argument* a = find(name);
            return a == nullptr ? std::nullopt : std::optional<double>(as_number(*a));
        }

        std::optional<std::vector<double>> maybe_tuple(const std::string& name, std::size_t size)
        {
            const Argument* a = find(name);
            return a == nullptr ? std::nullopt : std::optional(as_tuple(*a, size));
        }

        std::vector<const Argument*> positional()
        {
            std::vector<const Argument*> out;
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (args_[i].name.empty()) {
                    used_[i] = true;
                    out.push_back(&args_[i]);
                }
            }
            return out;
        }

        double as_number(const Argument& a)
        {
            if (const auto* m = std::get_if<MExpr>(&a.value)) {
                return in_.number(*m);
            }
            throw EvalError(EvalErrorKind::TypeError, a.span, "expected a number");
        }

        std::vector<double> as_tuple(const Argument& a, std::size_t size)
        {
            const auto* t = std::get_if<Tuple>(&a.value);
            if (t == nullptr || t->items.size() != size) {
                throw EvalError(EvalErrorKind::TypeError, a.span,
                                "expected a " + std::to_string(size) + "-component point");
            }
            std::vector<double> out;
            for (const MExpr& m : t->items) {
                out.push_back(in_.number(m));
            }
            return out;
        }

        Point2 as_point(const Argument& a)
        {
            const std::vector<double> v = as_tuple(a, 2);
            return {v[0], v[1]};
        }

        Value as_figure(const Argument& a)
        {
            if (const auto* e = std::get_if<Box<Expr>>(&a.value)) {
                return in_.eval(**e);
            }
            throw EvalError(EvalErrorKind::TypeError, a.span, "expected a figure");
        }

        // Rejects arguments nobody asked for.
        void done() const
        {
            for (std::size_t i = 0; i < args_.size(); ++i) {
                if (!used_[i]) {
                    const std::string what =
                        args_[i].name.empty() ? "unexpected positional argument" : "unknown argument '" + args_[i].name + "'";
                    throw EvalError(EvalErrorKind::TypeError, args_[i].span, what + " to " + callee_);
                }
            }
        }

        Span span() const { return span_; }

    private:
        Interpreter& in_;
        const std::string& callee_;
        const std::vector<Argument>& args_;
        Span span_;
        std::vector<bool> used_;
    };

    template <class F>
    static auto guarded(Span span, F&& f) -> decltype(f())
    {
        try {
            return f();
        } catch (const GeometryError& e) {
            throw EvalError(EvalErrorKind::GeometryError, span, e.what());
        }
    }

    static PlanarRegion region_of(const Value& v, Span span, const std::string& what)
    {
        if (const auto* r = std::get_if<PlanarRegion>(&v)) {
            return *r;
        }
        if (const auto* p = std::get_if<Profile>(&v)) {
            return p->region();
        }
        throw EvalError(EvalErrorKind::TypeError, span,
                        what + " needs a region, got a " + std::string(value_kind(v)));
    }

    static const Solid& solid_of(const Value& v, Span span, const std::string& what)
    {
        if (const auto* s = std::get_if<Solid>(&v)) {
            return *s;
        }
        throw EvalError(EvalErrorKind::TypeError, span,
                        what + " needs a solid, got a " + std::string(value_kind(v)));
    }

    double number(const MExpr& m)
    {
        return std::visit(overloaded{
                              [](const Number& n) { return n.value; },
                              [](const PiConstant&) { return pi; },
                              [&](const Negate& n) { return -number(*n.operand); },
                              [&](const Binary& b) {
                                  const double l = number(*b.lhs);
                                  const double r = number(*b.rhs);
                                  switch (b.op) {
                                  case '+': return l + r;
                                  case '-': return l - r;
                                  case '*': return l * r;
                                  default: return l / r;
                                  }
                              },
                              [&](const Measure& me) { return measure(me, m.span); },
                          },
                          m.node);
    }

    double measure(const Measure& me, Span span)
    {
        const Value v = eval(*me.target);
        const std::string name(to_string(me.kind));
        return guarded(span, [&]() -> double {
            switch (me.kind) {
            case MeasureKind::Area: return area(region_of(v, span, name));
            case MeasureKind::Perimeter: return perimeter(boundary(region_of(v, span, name)));
            case MeasureKind::CentroidRho: return centroid_region(region_of(v, span, name)).x;
            case MeasureKind::Volume: return volume(solid_of(v, span, name));
            case MeasureKind::Surface: return surface_area(solid_of(v, span, name));
            case MeasureKind::LateralArea: return lateral_area(solid_of(v, span, name));
            }
            return 0.0;
        });
    }

    Value eval(const Expr& e)
    {
        return std::visit(overloaded{
                              [&](const Reference& r) -> Value {
                                  const auto it = env_.find(r.name);
                                  if (it == env_.end()) {
                                      throw EvalError(EvalErrorKind::NameError, e.span,
                                                      "'" + r.name + "' is not bound");
                                  }
                                  return it->second;
                              },
                              [&](const Constructor& c) { return construct(c, e.span); },
                              [&](const TransformCall& t) { return transform(t, e.span); },
                          },
                          e.node);
    }

    Value construct(const Constructor& c, Span span)
    {
        Args args(*this, c.name, c.args, span);
        const std::string& n = c.name;
        Value out = guarded(span, [&]() -> Value {
            if (n == "triangle" || n == "polygon") {
                std::vector<Point2> pts;
                for (const Argument* a : args.positional()) {
                    pts.push_back(args.as_point(*a));
                }
                if (n == "triangle" && pts.size() != 3) {
                    throw EvalError(EvalErrorKind::TypeError, span, "triangle needs exactly 3 points");
                }
                return PlanarRegion{Polygon(std::move(pts))};
            }
            if (n == "disk") {
                const auto c0 = args.maybe_tuple("center", 2);
                const Point2 center = c0 ? Point2{(*c0)[0], (*c0)[1]} : Point2{};
                return PlanarRegion{Disk{center, args.number("r")}};
            }
            if (n == "rect") {
                const double x0 = args.number("x0");
                const double y0 = args.number("y0");
                const double x1 = args.number("x1");
                const double y1 = args.number("y1");
                if (!(x1 > x0) || !(y1 > y0)) {
                    throw GeometryError(ErrorKind::InvalidArgument, "rect needs x1 > x0 and y1 > y0");
                }
                return PlanarRegion{Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}})};
            }
            if (n == "half_disk") {
                const auto c0 = args.maybe_tuple("center", 2);
                const Point2 center = c0 ? Point2{(*c0)[0], (*c0)[1]} : Point2{};
                const double slabs = args.maybe_number("slabs").value_or(default_slab_resolution);
                if (!(slabs >= 1.0) || slabs != std::floor(slabs) || slabs > 1e8) {
                    throw GeometryError(ErrorKind::InvalidArgument, "slabs must be a positive integer");
                }
                return PlanarRegion{right_half_disk(center, args.number("r"), static_cast<int>(slabs))};
            }
            if (n == "profile" || n == "revolve") {
                const auto pos = args.positional();
                if (pos.size() != 1) {
                    throw EvalError(EvalErrorKind::TypeError, span, n + " takes one region or profile");
                }
                const Value v = args.as_figure(*pos.front());
                const Profile profile(region_of(v, pos.front()->span, n));
                if (n == "profile") {
                    return profile;
                }
                return Solid{SolidOfRevolution{profile}};
            }
            if (n == "sphere") {
                return Solid{Sphere{args.number("r")}};
            }
            if (n == "hoof") {
                return Solid{Hoof{args.number("r"), args.number("h")}};
            }
            if (n == "cylinder") {
                return Solid{Cylinder{base_region(args, n), args.number("h")}};
            }
            if (n == "cone") {
                const PlanarRegion base = base_region(args, n);
                if (const auto apex = args.maybe_tuple("apex", 3)) {
                    return Solid{Cone{base, {(*apex)[0], (*apex)[1], (*apex)[2]}}};
                }
                const Point2 c0 = centroid_region(base);
                return Solid{Cone{base, {c0.x, c0.y, args.number("h")}}};
            }
            if (n == "tangent_polyhedron") {
                TangentPolyhedron p;
                for (const Argument* a : args.positional()) {
                    p.face_areas.push_back(args.as_number(*a));
                }
                p.insphere_radius = args.number("r");
                return Solid{std::move(p)};
            }
            throw EvalError(EvalErrorKind::NameError, span, "unknown constructor '" + n + "'");
        });
        args.done();
        return out;
    }

    // Either one positional region argument or r= for a disk at the origin.
    PlanarRegion base_region(Args& args, const std::string& callee)
    {
        const auto pos = args.positional();
        if (pos.size() > 1) {
            throw EvalError(EvalErrorKind::TypeError, args.span(), callee + " takes at most one base region");
        }
        if (pos.size() == 1) {
            return region_of(args.as_figure(*pos.front()), pos.front()->span, callee);
        }
        return Disk{{}, args.number("r")};
    }

    Value transform(const TransformCall& t, Span span)
    {
        static const std::map<std::string, TransformKind> kinds{
            {"shear", TransformKind::Shear2d},
            {"move_apex", TransformKind::MoveApex},
            {"unroll", TransformKind::UnrollDisk},
            {"twist", TransformKind::TwistColumn},
            {"meridian_unfold", TransformKind::MeridianUnfold},
            {"unfold_revolution", TransformKind::UnfoldRevolution},
        };
        const TransformKind kind = kinds.at(t.name);
        const Value target = eval(*t.target);

        Args args(*this, t.name, t.args, span);
        std::map<std::string, double> params;
        if (kind == TransformKind::MoveApex) {
            const auto apex = args.maybe_tuple("apex", 3);
            if (!apex) {
                throw EvalError(EvalErrorKind::TypeError, span, "move_apex needs apex=(x, y, z)");
            }
            params = {{"x", (*apex)[0]}, {"y", (*apex)[1]}, {"z", (*apex)[2]}};
        } else {
            for (const Argument& a : t.args) {
                params[a.name] = args.as_number(a);
                args.find(a.name);
            }
        }
        args.done();

        return guarded(span, [&]() -> Value {
            const Transform tr = Transform::make(kind, std::move(params));
            if (kind == TransformKind::UnfoldRevolution && std::holds_alternative<PlanarRegion>(target)) {
                return apply(tr, Profile(std::get<PlanarRegion>(target)));
            }
            return apply(tr, target);
        });
    }
};

} // namespace

RunReport evaluate(const Ast& ast, Environment& env) { return Interpreter(env).run(ast); }

RunReport run_script(std::string_view source)
{
    const Ast ast = parse(source);
    Environment env;
    return evaluate(ast, env);
}

} // namespace indiv::dsl
