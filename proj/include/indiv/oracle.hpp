#ifndef INDIV_ORACLE_HPP
#define INDIV_ORACLE_HPP

#include <cstdint>
#include <functional>

#include "indiv/exhaustion.hpp"
#include "indiv/geometry.hpp"
#include "indiv/solids.hpp"

// Brute-force estimators that share no code path with the exact formulas.
namespace indiv::oracle {

struct Estimate {
    double mean = 0.0;
    double standard_error = 0.0;   // sample standard deviation / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Uniform double in [0, 1) that depends only on (seed, counter).
double uniform(std::uint64_t seed, std::uint64_t counter) noexcept;

using Membership2 = std::function<bool(Point2)>;
using Membership3 = std::function<bool(Point3)>;

// Hit-or-miss sampling. Sample i uses counters 2i, 2i+1 (3i.. in 3D), so the
// result does not depend on how the work is split across threads. The
// membership predicate must be safe to call concurrently.
Estimate mc_area(const Membership2& inside, const Box2& box, std::uint64_t samples, std::uint64_t seed);
Estimate mc_volume(const Membership3& inside, const Box3& box, std::uint64_t samples, std::uint64_t seed);

// Composite midpoint rule, summed in slab order.
double riemann_volume(const SectionFunction& section, int n);
double riemann_area(const WidthFunction& width, int n);

// Composite midpoint rule over arclength with n pieces per edge or arc.
double boundary_integral(const Curve& curve, const std::function<double(Point2)>& integrand, int n);

} // namespace indiv::oracle

#endif
