#ifndef INDIV_EXHAUSTION_HPP
#define INDIV_EXHAUSTION_HPP

#include <string_view>
#include <vector>

#include "indiv/geometry.hpp"

namespace indiv {

enum class EnclosureMethod { InnerOuterRectangles, InnerOuterDisks };

std::string_view to_string(EnclosureMethod method) noexcept;

// Certified enclosure of a measure: inner sum `lo`, outer sum `hi`.
struct MeasureInterval {
    double lo = 0.0;
    double hi = 0.0;
    int slabs = 1;
    EnclosureMethod method = EnclosureMethod::InnerOuterRectangles;

    double width() const { return hi - lo; }
    bool contains(double value) const { return lo <= value && value <= hi; }
    bool within(const MeasureInterval& outer) const { return outer.lo <= lo && hi <= outer.hi; }
};

// Cross-section area of a solid as a function of height.
struct SectionFunction : PiecewiseMonotone {
    using PiecewiseMonotone::PiecewiseMonotone;
    explicit SectionFunction(PiecewiseMonotone f) : PiecewiseMonotone(std::move(f)) {}
};

// Relative widening applied to each slab sum to absorb rounding.
inline constexpr double rounding_inflation = 1e-12;

// Uniform grid a + (b - a) i / n merged with the breakpoints, sorted.
std::vector<double> slab_boundaries(const PiecewiseMonotone& f, int n);

// Inner and outer rectangle sums over n uniform slabs of [a, b], with every
// breakpoint added as an extra slab boundary. On each slab the minimum and
// maximum are read at its endpoints, which is exact for monotone pieces.
MeasureInterval area_bounds(const WidthFunction& width, int n);
MeasureInterval volume_bounds(const SectionFunction& section, int n);

class ToleranceNotReached : public GeometryError {
public:
    ToleranceNotReached(const MeasureInterval& best, double tol);

    const MeasureInterval& best() const noexcept { return best_; }

private:
    MeasureInterval best_;
};

// Doubles n from 16 until hi - lo <= tol. Each returned interval is the
// intersection with every coarser one, so refinement is monotone.
MeasureInterval refine_until(const WidthFunction& width, double tol, int n_max);
MeasureInterval refine_until(const SectionFunction& section, double tol, int n_max);

} // namespace indiv

#endif
