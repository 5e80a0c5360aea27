#include "indiv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "indiv/detail/overloaded.hpp"

namespace indiv::oracle {

namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counts hits over sample indices in parallel chunks. Integer counts make
// the total independent of the chunking.
template <class Hit>
std::uint64_t count_hits(std::uint64_t samples, const Hit& hit)
{
    constexpr std::uint64_t serial_cutoff = 1 << 16;
    const std::uint64_t workers =
        samples < serial_cutoff ? 1 : std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::uint64_t> hits(workers, 0);
    const auto run = [&](std::uint64_t w) {
        const std::uint64_t begin = samples * w / workers;
        const std::uint64_t end = samples * (w + 1) / workers;
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            local += hit(i) ? 1 : 0;
        }
        hits[w] = local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w);
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) {
        total += h;
    }
    return total;
}

Estimate hit_or_miss(double box_measure, std::uint64_t hits, std::uint64_t samples, std::uint64_t seed)
{
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    Estimate e;
    e.mean = box_measure * p;
    e.standard_error = samples > 1 ? box_measure * std::sqrt(p * (1.0 - p) / (n - 1.0)) : 0.0;
    e.samples = samples;
    e.seed = seed;
    return e;
}

void require_samples(std::uint64_t samples)
{
    if (samples < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "need at least one sample");
    }
}

bool positive_extent(double lo, double hi) { return std::isfinite(lo) && std::isfinite(hi) && hi > lo; }

template <class F>
double midpoint_sum(const PiecewiseMonotone& f, int n, F&& weight)
{
    if (n < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    const double a = f.lower();
    const double h = (f.upper() - a) / n;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        total += weight(f(a + (i + 0.5) * h)) * h;
    }
    return total;
}

} // namespace

double uniform(std::uint64_t seed, std::uint64_t counter) noexcept
{
    return static_cast<double>(mix(mix(seed) ^ counter) >> 11) * 0x1.0p-53;
}

Estimate mc_area(const Membership2& inside, const Box2& box, std::uint64_t samples, std::uint64_t seed)
{
    require_samples(samples);
    if (!positive_extent(box.lo.x, box.hi.x) || !positive_extent(box.lo.y, box.hi.y)) {
        throw GeometryError(ErrorKind::EmptyBox, "sampling box has no area");
    }
    const double wx = box.hi.x - box.lo.x;
    const double wy = box.hi.y - box.lo.y;
    const std::uint64_t hits = count_hits(samples, [&](std::uint64_t i) {
        return inside({box.lo.x + wx * uniform(seed, 2 * i), box.lo.y + wy * uniform(seed, 2 * i + 1)});
    });
    return hit_or_miss(wx * wy, hits, samples, seed);
}

Estimate mc_volume(const Membership3& inside, const Box3& box, std::uint64_t samples, std::uint64_t seed)
{
    require_samples(samples);
    if (!positive_extent(box.lo.x, box.hi.x) || !positive_extent(box.lo.y, box.hi.y) ||
        !positive_extent(box.lo.z, box.hi.z)) {
        throw GeometryError(ErrorKind::EmptyBox, "sampling box has no volume");
    }
    const double wx = box.hi.x - box.lo.x;
    const double wy = box.hi.y - box.lo.y;
    const double wz = box.hi.z - box.lo.z;
    const std::uint64_t hits = count_hits(samples, [&](std::uint64_t i) {
        return inside({box.lo.x + wx * uniform(seed, 3 * i), box.lo.y + wy * uniform(seed, 3 * i + 1),
                       box.lo.z + wz * uniform(seed, 3 * i + 2)});
    });
    return hit_or_miss(wx * wy * wz, hits, samples, seed);
}

double riemann_volume(const SectionFunction& section, int n)
{
    return midpoint_sum(section, n, [](double v) { return v; });
}

double riemann_area(const WidthFunction& width, int n)
{
    return midpoint_sum(width, n, [](double v) { return v; });
}

double boundary_integral(const Curve& curve, const std::function<double(Point2)>& integrand, int n)
{
    if (n < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    if (!(perimeter(curve) > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateCurve, "curve has zero length");
    }
    return std::visit(detail::overloaded{
                          [&](const Polyline& p) {
                              double total = 0.0;
                              const std::size_t m = p.points.size();
                              const std::size_t edges = p.closed && m > 2 ? m : m - 1;
                              for (std::size_t e = 0; e < edges; ++e) {
                                  const Point2 a = p.points[e];
                                  const Point2 b = p.points[(e + 1) % m];
                                  const double ds = norm(b - a) / n;
                                  for (int j = 0; j < n; ++j) {
                                      total += integrand(a + ((j + 0.5) / n) * (b - a)) * ds;
                                  }
                              }
                              return total;
                          },
                          [&](const CircleArc& a) {
                              const double step = a.span / n;
                              const double ds = a.radius * step;
                              double total = 0.0;
                              for (int j = 0; j < n; ++j) {
                                  const double theta = a.start + (j + 0.5) * step;
                                  total += integrand(a.center +
                                                     a.radius * Point2{std::cos(theta), std::sin(theta)}) *
                                           ds;
                              }
                              return total;
                          },
                      },
                      curve);
}

} // namespace indiv::oracle
