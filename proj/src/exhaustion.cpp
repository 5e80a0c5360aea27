#include "indiv/exhaustion.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace indiv {

std::string_view to_string(EnclosureMethod method) noexcept
{
    switch (method) {
    case EnclosureMethod::InnerOuterRectangles: return "inner-outer-rectangles";
    case EnclosureMethod::InnerOuterDisks: return "inner-outer-disks";
    }
    return "unknown";
}

std::vector<double> slab_boundaries(const PiecewiseMonotone& f, int n)
{
    const double a = f.lower();
    const double b = f.upper();
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1 + f.breakpoints().size());
    for (int i = 0; i < n; ++i) {
        grid.push_back(a + (b - a) * i / n);
    }
    grid.push_back(b);
    grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

MeasureInterval enclose(const PiecewiseMonotone& f, int n, EnclosureMethod method)
{
    if (n < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "slab count must be >= 1");
    }
    f.check_monotonicity();

    const std::vector<double> t = slab_boundaries(f, n);
    std::vector<double> value(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        value[i] = f(t[i]);
    }

    // Sequential summation in slab order keeps the result reproducible.
    double inner = 0.0;
    double outer = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double h = t[i + 1] - t[i];
        inner += h * std::min(value[i], value[i + 1]);
        outer += h * std::max(value[i], value[i + 1]);
    }

    MeasureInterval out;
    out.lo = std::max(0.0, inner - rounding_inflation * std::abs(inner));
    out.hi = outer + rounding_inflation * std::abs(outer);
    out.slabs = n;
    out.method = method;
    return out;
}

MeasureInterval refine(const PiecewiseMonotone& f, double tol, int n_max, EnclosureMethod method)
{
    if (!(tol > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    if (n_max < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "n_max must be >= 1");
    }
    MeasureInterval best = enclose(f, 16, method);
    for (int n = 16;;) {
        if (best.width() <= tol) {
            return best;
        }
        if (n > n_max / 2) {
            throw ToleranceNotReached(best, tol);
        }
        n *= 2;
        MeasureInterval next = enclose(f, n, method);
        // Both enclose the true measure, so their intersection does too.
        next.lo = std::max(next.lo, best.lo);
        next.hi = std::min(next.hi, best.hi);
        best = next;
    }
}

} // namespace

ToleranceNotReached::ToleranceNotReached(const MeasureInterval& best, double tol)
    : GeometryError(ErrorKind::ToleranceNotReached,
                    "width " + std::to_string(best.width()) + " > tol " + std::to_string(tol) + " at n = " +
                        std::to_string(best.slabs)),
      best_(best)
{
}

MeasureInterval area_bounds(const WidthFunction& width, int n)
{
    return enclose(width, n, EnclosureMethod::InnerOuterRectangles);
}

MeasureInterval volume_bounds(const SectionFunction& section, int n)
{
    return enclose(section, n, EnclosureMethod::InnerOuterDisks);
}

MeasureInterval refine_until(const WidthFunction& width, double tol, int n_max)
{
    return refine(width, tol, n_max, EnclosureMethod::InnerOuterRectangles);
}

MeasureInterval refine_until(const SectionFunction& section, double tol, int n_max)
{
    return refine(section, tol, n_max, EnclosureMethod::InnerOuterDisks);
}

} // namespace indiv
