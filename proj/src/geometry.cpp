#include "indiv/geometry.hpp"

#include "indiv/detail/overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>

namespace indiv {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnsupportedExact: return "UnsupportedExact";
    case ErrorKind::UnsupportedRegion: return "UnsupportedRegion";
    case ErrorKind::UnsupportedMeasure: return "UnsupportedMeasure";
    case ErrorKind::DegenerateRegion: return "DegenerateRegion";
    case ErrorKind::DegenerateCurve: return "DegenerateCurve";
    case ErrorKind::DegenerateSolid: return "DegenerateSolid";
    case ErrorKind::InvalidMonotonicity: return "InvalidMonotonicity";
    case ErrorKind::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorKind::ApexHeightChanged: return "ApexHeightChanged";
    case ErrorKind::AxisCrossing: return "AxisCrossing";
    case ErrorKind::SlabOutOfRange: return "SlabOutOfRange";
    case ErrorKind::EmptyBox: return "EmptyBox";
    }
    return "Unknown";
}

namespace {

using detail::overloaded;

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

bool properly_cross(Point2 p1, Point2 p2, Point2 q1, Point2 q2)
{
    const double o1 = orient(p1, p2, q1);
    const double o2 = orient(p1, p2, q2);
    const double o3 = orient(q1, q2, p1);
    const double o4 = orient(q1, q2, p2);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

// Sweep over edges sorted by min x; only edges with overlapping x ranges are
// compared.
bool has_proper_crossing(const std::vector<Point2>& v)
{
    const std::size_t n = v.size();
    struct Edge {
        std::size_t index;
        double xmin;
        double xmax;
    };
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = v[i];
        const Point2 b = v[(i + 1) % n];
        edges.push_back({i, std::min(a.x, b.x), std::max(a.x, b.x)});
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
        return l.xmin < r.xmin || (l.xmin == r.xmin && l.index < r.index);
    });
    for (std::size_t i = 0; i < n; ++i) {
        const Edge& e = edges[i];
        for (std::size_t j = i + 1; j < n && edges[j].xmin <= e.xmax; ++j) {
            const std::size_t a = e.index;
            const std::size_t b = edges[j].index;
            const std::size_t diff = a > b ? a - b : b - a;
            if (diff == 1 || diff == n - 1) {
                continue;
            }
            if (properly_cross(v[a], v[(a + 1) % n], v[b], v[(b + 1) % n])) {
                return true;
            }
        }
    }
    return false;
}

// Shoelace moments of a closed ring, accumulated relative to its first vertex.
Moments ring_moments(std::span<const Point2> ring)
{
    Moments m;
    if (ring.size() < 3) {
        return m;
    }
    const Point2 origin = ring.front();
    double twice_area = 0.0;
    Point2 six_moment;
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
        const Point2 a = ring[i] - origin;
        const Point2 b = ring[i + 1] - origin;
        const double c = cross(a, b);
        twice_area += c;
        six_moment = six_moment + c * (a + b);
    }
    m.measure = 0.5 * twice_area;
    m.moment = (1.0 / 6.0) * six_moment + m.measure * origin;
    return m;
}

std::vector<Point2> clip_positive(const std::vector<Point2>& ring, const Line2& line)
{
    std::vector<Point2> out;
    const std::size_t n = ring.size();
    out.reserve(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = ring[(i + n - 1) % n];
        const Point2 cur = ring[i];
        const double sp = line.signed_distance(prev);
        const double sc = line.signed_distance(cur);
        const bool prev_in = sp >= 0.0;
        const bool cur_in = sc >= 0.0;
        if (cur_in != prev_in) {
            const double s = sp / (sp - sc);
            out.push_back(prev + s * (cur - prev));
        }
        if (cur_in) {
            out.push_back(cur);
        }
    }
    return out;
}

Line2 reversed(const Line2& line)
{
    return Line2(line.point(), -1.0 * line.direction());
}

// Integral of the positive part of (d + u) over the disk |u| <= r, where u is
// the coordinate along the line normal.
double disk_positive_moment(double r, double d)
{
    const double u0 = std::clamp(-d, -r, r);
    const double q = std::sqrt(std::max(r * r - u0 * u0, 0.0));
    return (2.0 / 3.0) * q * q * q + d * (r * r * pi / 2.0 - u0 * q - r * r * std::asin(u0 / r));
}

void require_disk(const Disk& d)
{
    if (!finite(d.center) || !std::isfinite(d.radius)) {
        throw GeometryError(ErrorKind::InvalidArgument, "disk parameters must be finite");
    }
    if (!(d.radius > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "disk radius must be positive");
    }
}

void require_slab(const SlabRegion& s)
{
    if (s.resolution < 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "slab resolution must be >= 1");
    }
    if (!s.center) {
        throw GeometryError(ErrorKind::InvalidArgument, "slab region needs a center function");
    }
}

template <class F>
void for_each_slab(const SlabRegion& s, F&& f)
{
    require_slab(s);
    const double a = s.width.lower();
    const double b = s.width.upper();
    const double h = (b - a) / s.resolution;
    for (int i = 0; i < s.resolution; ++i) {
        const double t = a + (i + 0.5) * h;
        f(t, s.width(t), s.center(t), h);
    }
}

void require_curve(const Curve& curve)
{
    std::visit(overloaded{
                   [](const Polyline& p) {
                       if (p.points.size() < 2) {
                           throw GeometryError(ErrorKind::DegenerateCurve, "polyline needs at least 2 points");
                       }
                       for (const Point2& q : p.points) {
                           if (!finite(q)) {
                               throw GeometryError(ErrorKind::InvalidArgument, "polyline point not finite");
                           }
                       }
                   },
                   [](const CircleArc& a) {
                       if (!finite(a.center) || !std::isfinite(a.start) || !std::isfinite(a.radius)) {
                           throw GeometryError(ErrorKind::InvalidArgument, "arc parameters must be finite");
                       }
                       if (!(a.radius > 0.0)) {
                           throw GeometryError(ErrorKind::DegenerateCurve, "arc radius must be positive");
                       }
                       if (!(a.span > 0.0) || a.span > 2.0 * pi * (1.0 + 1e-15)) {
                           throw GeometryError(ErrorKind::InvalidArgument, "arc span must lie in (0, 2pi]");
                       }
                   },
               },
               curve);
}

template <class F>
void for_each_edge(const Polyline& p, F&& f)
{
    const std::size_t n = p.points.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        f(p.points[i], p.points[i + 1]);
    }
    if (p.closed && n > 2) {
        f(p.points[n - 1], p.points[0]);
    }
}

} // namespace

double norm(Point2 p) { return std::hypot(p.x, p.y); }

Line2::Line2(Point2 point, Point2 direction) : point_(point)
{
    const double len = norm(direction);
    if (!finite(point) || !std::isfinite(len) || !(len > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "line needs a finite point and nonzero direction");
    }
    direction_ = (1.0 / len) * direction;
}

Line2 Line2::horizontal(double y) { return Line2({0.0, y}, {1.0, 0.0}); }

Line2 Line2::vertical(double x) { return Line2({x, 0.0}, {0.0, -1.0}); }

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() > 3 && vertices_.front() == vertices_.back()) {
        vertices_.pop_back();
    }
    if (vertices_.size() < 3) {
        throw GeometryError(ErrorKind::InvalidArgument, "polygon needs at least 3 vertices");
    }
    for (const Point2& p : vertices_) {
        if (!finite(p)) {
            throw GeometryError(ErrorKind::InvalidArgument, "polygon vertex not finite");
        }
    }
    if (has_proper_crossing(vertices_)) {
        throw GeometryError(ErrorKind::InvalidArgument, "polygon is self-intersecting");
    }
    if (ring_moments(vertices_).measure < 0.0) {
        std::reverse(vertices_.begin(), vertices_.end());
    }
}

PiecewiseMonotone::PiecewiseMonotone(Evaluator f, double a, double b, std::vector<double> breakpoints,
                                     std::vector<Monotonicity> pieces)
    : f_(std::move(f)), a_(a), b_(b), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces))
{
    if (!f_) {
        throw GeometryError(ErrorKind::InvalidArgument, "missing evaluator");
    }
    if (!std::isfinite(a_) || !std::isfinite(b_) || !(a_ < b_)) {
        throw GeometryError(ErrorKind::InvalidArgument, "interval must satisfy a < b");
    }
    double prev = a_;
    for (double t : breakpoints_) {
        if (!(t > prev) || !(t < b_)) {
            throw GeometryError(ErrorKind::InvalidArgument,
                                "breakpoints must be strictly increasing inside (a, b)");
        }
        prev = t;
    }
    if (pieces_.size() != breakpoints_.size() + 1) {
        throw GeometryError(ErrorKind::InvalidArgument, "need one monotonicity flag per piece");
    }
}

std::vector<double> PiecewiseMonotone::knots() const
{
    std::vector<double> k;
    k.reserve(breakpoints_.size() + 2);
    k.push_back(a_);
    k.insert(k.end(), breakpoints_.begin(), breakpoints_.end());
    k.push_back(b_);
    return k;
}

double PiecewiseMonotone::total_variation() const
{
    const std::vector<double> k = knots();
    double tv = 0.0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        tv += std::abs(f_(k[i + 1]) - f_(k[i]));
    }
    return tv;
}

void PiecewiseMonotone::check_monotonicity() const
{
    constexpr int samples = 17;
    const std::vector<double> k = knots();
    for (std::size_t p = 0; p + 1 < k.size(); ++p) {
        double values[samples];
        double scale = 0.0;
        for (int j = 0; j < samples; ++j) {
            const double t = j == samples - 1 ? k[p + 1] : k[p] + (k[p + 1] - k[p]) * j / (samples - 1);
            values[j] = f_(t);
            if (!std::isfinite(values[j])) {
                throw GeometryError(ErrorKind::InvalidArgument, "function value not finite");
            }
            scale = std::max(scale, std::abs(values[j]));
        }
        const double tol = 1e-12 * scale;
        for (int j = 0; j < samples; ++j) {
            if (values[j] < -tol) {
                throw GeometryError(ErrorKind::InvalidArgument, "function takes negative values");
            }
        }
        const bool increasing = pieces_[p] == Monotonicity::Increasing;
        for (int j = 0; j + 1 < samples; ++j) {
            const double step = values[j + 1] - values[j];
            if ((increasing && step < -tol) || (!increasing && step > tol)) {
                throw GeometryError(ErrorKind::InvalidMonotonicity,
                                    "piece " + std::to_string(p) + " is not " +
                                        (increasing ? "increasing" : "decreasing"));
            }
        }
    }
}

bool is_closed(const Curve& curve)
{
    return std::visit(overloaded{
                          [](const Polyline& p) { return p.closed; },
                          [](const CircleArc& a) { return a.span >= 2.0 * pi; },
                      },
                      curve);
}

Profile::Profile(PlanarRegion region) : region_(std::move(region))
{
    if (min_signed_distance(region_, Line2::vertical(0.0)) < -1e-12) {
        throw GeometryError(ErrorKind::AxisCrossing, "profile has points with rho < 0");
    }
}

Moments moments(const PlanarRegion& region)
{
    return std::visit(overloaded{
                          [](const Polygon& p) { return ring_moments(p.vertices()); },
                          [](const Disk& d) {
                              require_disk(d);
                              const double a = pi * d.radius * d.radius;
                              return Moments{a, a * d.center};
                          },
                          [](const SlabRegion& s) {
                              Moments m;
                              for_each_slab(s, [&](double t, double w, double c, double h) {
                                  m.measure += w * h;
                                  m.moment = m.moment + Point2{c * w * h, t * w * h};
                              });
                              return m;
                          },
                      },
                      region);
}

Moments moments(const Curve& curve)
{
    require_curve(curve);
    return std::visit(overloaded{
                          [](const Polyline& p) {
                              Moments m;
                              for_each_edge(p, [&](Point2 a, Point2 b) {
                                  const double len = norm(b - a);
                                  m.measure += len;
                                  m.moment = m.moment + (0.5 * len) * (a + b);
                              });
                              return m;
                          },
                          [](const CircleArc& a) {
                              const double r = a.radius;
                              const double e = a.start + a.span;
                              const double len = r * a.span;
                              const Point2 offset{r * r * (std::sin(e) - std::sin(a.start)),
                                                  -r * r * (std::cos(e) - std::cos(a.start))};
                              return Moments{len, len * a.center + offset};
                          },
                      },
                      curve);
}

double area(const PlanarRegion& region)
{
    if (std::holds_alternative<SlabRegion>(region)) {
        throw GeometryError(ErrorKind::UnsupportedExact, "slab regions have no exact area; use exhaustion bounds");
    }
    return std::abs(moments(region).measure);
}

double perimeter(const Curve& curve) { return moments(curve).measure; }

Curve boundary(const PlanarRegion& region)
{
    return std::visit(overloaded{
                          [](const Polygon& p) -> Curve { return Polyline{p.vertices(), true}; },
                          [](const Disk& d) -> Curve {
                              require_disk(d);
                              return CircleArc{d.center, d.radius, 0.0, 2.0 * pi};
                          },
                          [](const SlabRegion&) -> Curve {
                              throw GeometryError(ErrorKind::UnsupportedExact,
                                                  "slab regions have no explicit boundary curve");
                          },
                      },
                      region);
}

Point2 centroid_region(const PlanarRegion& region)
{
    const Moments m = moments(region);
    if (!(m.measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "region has zero area");
    }
    return (1.0 / m.measure) * m.moment;
}

Point2 centroid_curve(const Curve& curve)
{
    const Moments m = moments(curve);
    if (!(m.measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateCurve, "curve has zero length");
    }
    return (1.0 / m.measure) * m.moment;
}

double first_moment(const PlanarRegion& region, const Line2& line)
{
    const Moments m = moments(region);
    if (!(m.measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "region has zero area");
    }
    return dot(line.normal(), m.moment - m.measure * line.point());
}

double first_moment_curve(const Curve& curve, const Line2& line)
{
    const Moments m = moments(curve);
    if (!(m.measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateCurve, "curve has zero length");
    }
    return dot(line.normal(), m.moment - m.measure * line.point());
}

double positive_part_linear(double f0, double f1, double length)
{
    if (f0 >= 0.0 && f1 >= 0.0) {
        return 0.5 * length * (f0 + f1);
    }
    if (f0 <= 0.0 && f1 <= 0.0) {
        return 0.0;
    }
    const double pos = std::max(f0, f1);
    const double neg = -std::min(f0, f1);
    return length * pos * pos / (2.0 * (pos + neg));
}

SplitMoment split_first_moment(const PlanarRegion& region, const Line2& line)
{
    if (!(moments(region).measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "region has zero area");
    }
    return std::visit(
        overloaded{
            [&](const Polygon& p) {
                const auto half = [&](const Line2& l) {
                    const Moments m = ring_moments(clip_positive(p.vertices(), l));
                    return std::max(0.0, dot(l.normal(), m.moment - m.measure * l.point()));
                };
                return SplitMoment{half(line), half(reversed(line))};
            },
            [&](const Disk& d) {
                const double dist = line.signed_distance(d.center);
                return SplitMoment{disk_positive_moment(d.radius, dist), disk_positive_moment(d.radius, -dist)};
            },
            [&](const SlabRegion& s) {
                SplitMoment out;
                for_each_slab(s, [&](double t, double w, double c, double h) {
                    const double f0 = line.signed_distance({c - 0.5 * w, t});
                    const double f1 = line.signed_distance({c + 0.5 * w, t});
                    out.positive += h * positive_part_linear(f0, f1, w);
                    out.negative += h * positive_part_linear(-f0, -f1, w);
                });
                return out;
            },
        },
        region);
}

SplitMoment split_first_moment_curve(const Curve& curve, const Line2& line)
{
    if (!(moments(curve).measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateCurve, "curve has zero length");
    }
    return std::visit(
        overloaded{
            [&](const Polyline& p) {
                SplitMoment out;
                for_each_edge(p, [&](Point2 a, Point2 b) {
                    const double len = norm(b - a);
                    const double fa = line.signed_distance(a);
                    const double fb = line.signed_distance(b);
                    out.positive += positive_part_linear(fa, fb, len);
                    out.negative += positive_part_linear(-fa, -fb, len);
                });
                return out;
            },
            [&](const CircleArc& a) {
                // Along the arc the signed distance is d + r cos(theta - phi).
                const double r = a.radius;
                const double d = line.signed_distance(a.center);
                const Point2 n = line.normal();
                const double phi = std::atan2(n.y, n.x);
                const double lo = a.start;
                const double hi = a.start + a.span;
                std::vector<double> cuts{lo, hi};
                if (std::abs(d) < r) {
                    const double alpha = std::acos(-d / r);
                    for (double c : {phi + alpha, phi - alpha}) {
                        double k = std::ceil((lo - c) / (2.0 * pi));
                        for (double theta = c + k * 2.0 * pi; theta < hi; theta += 2.0 * pi) {
                            if (theta > lo) {
                                cuts.push_back(theta);
                            }
                        }
                    }
                }
                std::sort(cuts.begin(), cuts.end());
                const auto primitive = [&](double theta) { return r * (d * theta + r * std::sin(theta - phi)); };
                SplitMoment out;
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                    const double value = primitive(cuts[i + 1]) - primitive(cuts[i]);
                    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
                    if (d + r * std::cos(mid - phi) >= 0.0) {
                        out.positive += std::max(value, 0.0);
                    } else {
                        out.negative += std::max(-value, 0.0);
                    }
                }
                return out;
            },
        },
        curve);
}

bool contains(const PlanarRegion& region, Point2 p)
{
    return std::visit(overloaded{
                          [&](const Polygon& poly) {
                              const auto& v = poly.vertices();
                              bool inside = false;
                              for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
                                  if ((v[i].y > p.y) != (v[j].y > p.y)) {
                                      const double x = v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
                                      if (p.x < x) {
                                          inside = !inside;
                                      }
                                  }
                              }
                              return inside;
                          },
                          [&](const Disk& d) {
                              const Point2 q = p - d.center;
                              return dot(q, q) <= d.radius * d.radius;
                          },
                          [&](const SlabRegion& s) {
                              if (p.y < s.width.lower() || p.y > s.width.upper()) {
                                  return false;
                              }
                              return std::abs(p.x - s.center(p.y)) <= 0.5 * s.width(p.y);
                          },
                      },
                      region);
}

namespace {

// Sample heights for slab regions: the knots plus the quadrature grid.
template <class F>
void for_each_slab_sample(const SlabRegion& s, F&& f)
{
    require_slab(s);
    for (double t : s.width.knots()) {
        f(t, s.width(t), s.center(t));
    }
    const double a = s.width.lower();
    const double b = s.width.upper();
    for (int i = 0; i <= s.resolution; ++i) {
        const double t = a + (b - a) * i / s.resolution;
        f(t, s.width(t), s.center(t));
    }
}

} // namespace

Box2 bounding_box(const PlanarRegion& region)
{
    return std::visit(overloaded{
                          [](const Polygon& poly) {
                              Box2 box{poly.vertices().front(), poly.vertices().front()};
                              for (const Point2& v : poly.vertices()) {
                                  box.lo = {std::min(box.lo.x, v.x), std::min(box.lo.y, v.y)};
                                  box.hi = {std::max(box.hi.x, v.x), std::max(box.hi.y, v.y)};
                              }
                              return box;
                          },
                          [](const Disk& d) {
                              return Box2{{d.center.x - d.radius, d.center.y - d.radius},
                                          {d.center.x + d.radius, d.center.y + d.radius}};
                          },
                          [](const SlabRegion& s) {
                              double xlo = std::numeric_limits<double>::infinity();
                              double xhi = -xlo;
                              for_each_slab_sample(s, [&](double, double w, double c) {
                                  xlo = std::min(xlo, c - 0.5 * w);
                                  xhi = std::max(xhi, c + 0.5 * w);
                              });
                              // Sampled extent; pad so the box still covers the region.
                              const double pad = 0.01 * (xhi - xlo);
                              return Box2{{xlo - pad, s.width.lower()}, {xhi + pad, s.width.upper()}};
                          },
                      },
                      region);
}

double min_signed_distance(const PlanarRegion& region, const Line2& line)
{
    return std::visit(overloaded{
                          [&](const Polygon& poly) {
                              double m = std::numeric_limits<double>::infinity();
                              for (const Point2& v : poly.vertices()) {
                                  m = std::min(m, line.signed_distance(v));
                              }
                              return m;
                          },
                          [&](const Disk& d) { return line.signed_distance(d.center) - d.radius; },
                          [&](const SlabRegion& s) {
                              double m = std::numeric_limits<double>::infinity();
                              for_each_slab_sample(s, [&](double t, double w, double c) {
                                  m = std::min({m, line.signed_distance({c - 0.5 * w, t}),
                                                line.signed_distance({c + 0.5 * w, t})});
                              });
                              return m;
                          },
                      },
                      region);
}

double min_signed_distance(const Curve& curve, const Line2& line)
{
    require_curve(curve);
    return std::visit(overloaded{
                          [&](const Polyline& p) {
                              double m = std::numeric_limits<double>::infinity();
                              for (const Point2& v : p.points) {
                                  m = std::min(m, line.signed_distance(v));
                              }
                              return m;
                          },
                          [&](const CircleArc& a) {
                              const auto at = [&](double theta) {
                                  return line.signed_distance(
                                      a.center + a.radius * Point2{std::cos(theta), std::sin(theta)});
                              };
                              double m = std::min(at(a.start), at(a.start + a.span));
                              const Point2 n = line.normal();
                              const double lowest = std::atan2(-n.y, -n.x);
                              const double k = std::ceil((a.start - lowest) / (2.0 * pi));
                              if (lowest + k * 2.0 * pi <= a.start + a.span) {
                                  m = std::min(m, line.signed_distance(a.center) - a.radius);
                              }
                              return m;
                          },
                      },
                      curve);
}

Point2 RigidMotion::operator()(Point2 p) const
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Point2{c * p.x - s * p.y, s * p.x + c * p.y} + offset;
}

PlanarRegion apply(const RigidMotion& motion, const PlanarRegion& region)
{
    return std::visit(overloaded{
                          [&](const Polygon& poly) -> PlanarRegion {
                              std::vector<Point2> v;
                              v.reserve(poly.size());
                              for (const Point2& p : poly.vertices()) {
                                  v.push_back(motion(p));
                              }
                              return Polygon(std::move(v));
                          },
                          [&](const Disk& d) -> PlanarRegion { return Disk{motion(d.center), d.radius}; },
                          [&](const SlabRegion& s) -> PlanarRegion {
                              if (motion.angle != 0.0) {
                                  throw GeometryError(ErrorKind::UnsupportedRegion,
                                                      "slab regions only support translations");
                              }
                              const double dx = motion.offset.x;
                              const double dy = motion.offset.y;
                              std::vector<double> bps = s.width.breakpoints();
                              for (double& t : bps) {
                                  t += dy;
                              }
                              WidthFunction w([f = s.width, dy](double t) { return f(t - dy); },
                                              s.width.lower() + dy, s.width.upper() + dy, std::move(bps),
                                              s.width.pieces());
                              return SlabRegion{std::move(w),
                                                [c = s.center, dx, dy](double t) { return c(t - dy) + dx; },
                                                s.resolution};
                          },
                      },
                      region);
}

SlabRegion right_half_disk(Point2 center, double radius, int resolution)
{
    if (!(radius > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");
    }
    const auto half_chord = [center, radius](double t) {
        const double u = t - center.y;
        return std::sqrt(std::max(radius * radius - u * u, 0.0));
    };
    WidthFunction w(half_chord, center.y - radius, center.y + radius, {center.y},
                    {Monotonicity::Increasing, Monotonicity::Decreasing});
    return SlabRegion{std::move(w), [half_chord, cx = center.x](double t) { return cx + 0.5 * half_chord(t); },
                      resolution};
}

SlabRegion upper_half_disk(Point2 center, double radius, int resolution)
{
    if (!(radius > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");
    }
    WidthFunction w(
        [center, radius](double t) {
            const double u = t - center.y;
            return 2.0 * std::sqrt(std::max(radius * radius - u * u, 0.0));
        },
        center.y, center.y + radius, {}, {Monotonicity::Decreasing});
    return SlabRegion{std::move(w), [cx = center.x](double) { return cx; }, resolution};
}

} // namespace indiv
