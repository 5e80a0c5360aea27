#ifndef INDIV_GEOMETRY_HPP
#define INDIV_GEOMETRY_HPP

#include <functional>
#include <numbers>
#include <utility>
#include <variant>
#include <vector>

#include "indiv/error.hpp"

namespace indiv {

inline constexpr double pi = std::numbers::pi;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 p);

// Oriented line. Signed distance is positive on the left of `direction`.
class Line2 {
public:
    Line2(Point2 point, Point2 direction);

    static Line2 horizontal(double y);   // positive side: above
    static Line2 vertical(double x);     // positive side: x greater than `x`

    Point2 point() const { return point_; }
    Point2 direction() const { return direction_; }
    Point2 normal() const { return {-direction_.y, direction_.x}; }
    double signed_distance(Point2 p) const { return dot(normal(), p - point_); }

private:
    Point2 point_;
    Point2 direction_;
};

// Simple polygon, stored counterclockwise. Clockwise input is reversed.
// Edges may touch (weakly simple rings such as sawtooth outlines) but never
// cross properly.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

private:
    std::vector<Point2> vertices_;
};

struct Disk {
    Point2 center;
    double radius = 1.0;
};

enum class Monotonicity { Increasing, Decreasing };

// A nonnegative function on [a, b], monotone on each piece between
// consecutive breakpoints. Monotonicity is declared by the caller.
class PiecewiseMonotone {
public:
    using Evaluator = std::function<double(double)>;

    PiecewiseMonotone(Evaluator f, double a, double b, std::vector<double> breakpoints,
                      std::vector<Monotonicity> pieces);

    double operator()(double t) const { return f_(t); }
    double lower() const { return a_; }
    double upper() const { return b_; }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Monotonicity>& pieces() const { return pieces_; }

    // a, the breakpoints, then b.
    std::vector<double> knots() const;

    // Sum of |f(end) - f(start)| over the pieces.
    double total_variation() const;

    // Samples 17 points per piece; throws InvalidMonotonicity if a piece
    // contradicts its declared direction, InvalidArgument on negative values.
    void check_monotonicity() const;

private:
    Evaluator f_;
    double a_;
    double b_;
    std::vector<double> breakpoints_;
    std::vector<Monotonicity> pieces_;
};

struct WidthFunction : PiecewiseMonotone {
    using PiecewiseMonotone::PiecewiseMonotone;
    explicit WidthFunction(PiecewiseMonotone f) : PiecewiseMonotone(std::move(f)) {}
};

inline constexpr int default_slab_resolution = 4096;

// Region swept by horizontal slabs: at height y = t in [a, b] the region is
// the segment centered at x = center(t) of length width(t).
struct SlabRegion {
    WidthFunction width;
    std::function<double(double)> center = [](double) { return 0.0; };
    int resolution = default_slab_resolution;
};

using PlanarRegion = std::variant<Polygon, Disk, SlabRegion>;

struct Polyline {
    std::vector<Point2> points;
    bool closed = false;
};

// Arc of the circle centered at `center`, from angle `start` counterclockwise
// through `span` radians. A span of 2*pi is a closed circle.
struct CircleArc {
    Point2 center;
    double radius = 1.0;
    double start = 0.0;
    double span = 2.0 * pi;
};

using Curve = std::variant<Polyline, CircleArc>;

bool is_closed(const Curve& curve);

// Meridian section: the first coordinate is the distance to the revolution
// axis (rho), the second the position along it. rho must be nonnegative.
class Profile {
public:
    explicit Profile(PlanarRegion region);

    const PlanarRegion& region() const { return region_; }

private:
    PlanarRegion region_;
};

// Zeroth and first moments: area (or length) and the integral of the position.
struct Moments {
    double measure = 0.0;
    Point2 moment;
};

struct SplitMoment {
    double positive = 0.0;   // integral of the signed distance where it is > 0
    double negative = 0.0;   // integral of |signed distance| where it is < 0
};

struct Box2 {
    Point2 lo;
    Point2 hi;
};

double area(const PlanarRegion& region);
double perimeter(const Curve& curve);
Curve boundary(const PlanarRegion& region);

Moments moments(const PlanarRegion& region);
Moments moments(const Curve& curve);

Point2 centroid_region(const PlanarRegion& region);
Point2 centroid_curve(const Curve& curve);

double first_moment(const PlanarRegion& region, const Line2& line);
double first_moment_curve(const Curve& curve, const Line2& line);

SplitMoment split_first_moment(const PlanarRegion& region, const Line2& line);
SplitMoment split_first_moment_curve(const Curve& curve, const Line2& line);

bool contains(const PlanarRegion& region, Point2 p);
Box2 bounding_box(const PlanarRegion& region);

// Smallest signed distance from `line` attained on the region or curve.
double min_signed_distance(const PlanarRegion& region, const Line2& line);
double min_signed_distance(const Curve& curve, const Line2& line);

// Rotation by `angle` about the origin followed by translation by `offset`.
struct RigidMotion {
    double angle = 0.0;
    Point2 offset;

    Point2 operator()(Point2 p) const;
};

PlanarRegion apply(const RigidMotion& motion, const PlanarRegion& region);

// Integral of max(f, 0) over a segment of length `length` on which f varies
// linearly from f0 to f1.
double positive_part_linear(double f0, double f1, double length);

// Right half of the disk (x >= center.x) as slabs over y.
SlabRegion right_half_disk(Point2 center, double radius, int resolution = default_slab_resolution);
// Upper half of the disk (y >= center.y) as slabs over y.
SlabRegion upper_half_disk(Point2 center, double radius, int resolution = default_slab_resolution);

} // namespace indiv

#endif
