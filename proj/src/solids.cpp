#include "indiv/solids.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "indiv/detail/overloaded.hpp"

namespace indiv {

namespace {

using detail::overloaded;

// Exact area for polygons and disks, midpoint quadrature for slab regions.
double base_area(const PlanarRegion& region)
{
    const double a = moments(region).measure;
    if (!(a > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateSolid, "base region has zero area");
    }
    return a;
}

double positive(double value, const char* what)
{
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateSolid, std::string(what) + " must be positive");
    }
    return value;
}

const Disk* right_circular_base(const Cone& cone)
{
    const Disk* d = std::get_if<Disk>(&cone.base);
    if (d == nullptr) {
        return nullptr;
    }
    const double off = std::hypot(cone.apex.x - d->center.x, cone.apex.y - d->center.y);
    return off <= 1e-12 * std::max(1.0, d->radius) ? d : nullptr;
}

double polyhedron_surface(const TangentPolyhedron& p)
{
    if (p.face_areas.empty()) {
        throw GeometryError(ErrorKind::DegenerateSolid, "tangent polyhedron needs faces");
    }
    double s = 0.0;
    for (double a : p.face_areas) {
        s += positive(a, "face area");
    }
    return s;
}

// Integral of the affine height offset + slope * x over a polygon, one fan
// triangle at a time: triangle area times the mean vertex height.
double fan_height_integral(const Polygon& poly, double offset, double slope)
{
    const auto& v = poly.vertices();
    const auto height = [&](Point2 p) { return offset + slope * p.x; };
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const double tri = 0.5 * cross(v[i] - v[0], v[i + 1] - v[0]);
        total += tri * (height(v[0]) + height(v[i]) + height(v[i + 1])) / 3.0;
    }
    return total;
}

double height_field_volume(const HeightFieldCylinder& c)
{
    return std::visit(overloaded{
                          [&](const Polygon& p) { return fan_height_integral(p, c.offset, c.slope); },
                          [&](const Disk& d) {
                              const double a = base_area(d);
                              return a * (c.offset + c.slope * d.center.x);
                          },
                          [&](const SlabRegion& s) {
                              const Moments m = moments(s);
                              return c.offset * m.measure + c.slope * m.moment.x;
                          },
                      },
                      c.base);
}

double height_field_lateral(const HeightFieldCylinder& c)
{
    const Curve edge = boundary(c.base);
    return std::visit(overloaded{
                          [&](const Polyline& p) {
                              double total = 0.0;
                              const std::size_t n = p.points.size();
                              for (std::size_t i = 0; i < n; ++i) {
                                  const Point2 a = p.points[i];
                                  const Point2 b = p.points[(i + 1) % n];
                                  total += norm(b - a) * (c.offset + c.slope * 0.5 * (a.x + b.x));
                              }
                              return total;
                          },
                          [&](const CircleArc& a) {
                              return 2.0 * pi * a.radius * (c.offset + c.slope * a.center.x);
                          },
                      },
                      edge);
}

double wedge_half_angle(const UnfoldedSphere& u)
{
    if (u.wedges < 4 || u.wedges % 2 != 0) {
        throw GeometryError(ErrorKind::InvalidArgument, "wedge count must be even and >= 4");
    }
    positive(u.radius, "radius");
    return pi / u.wedges;
}

double unfolded_volume(const UnfoldedSphere& u)
{
    const double a = wedge_half_angle(u);
    const double r = u.radius;
    const double c = std::cos(a);
    // Each wedge: slope 2 tan(a) in x per unit depth over a half-ellipse
    // whose first moment about the rib is (2/3) c^2 r^3.
    const double wedge = 2.0 * std::tan(a) * (2.0 / 3.0) * c * c * r * r * r;
    double total = 0.0;
    for (int k = 0; k < u.wedges; ++k) {
        total += wedge;
    }
    return total;
}

double unfolded_lateral(const UnfoldedSphere& u)
{
    const double a = wedge_half_angle(u);
    const double r = u.radius;
    // 2 sin(a) * integral of sqrt(r^2 - sin(a)^2 y^2) over [-r, r].
    const double wedge = 2.0 * r * r * (std::sin(a) * std::cos(a) + a);
    double total = 0.0;
    for (int k = 0; k < u.wedges; ++k) {
        total += wedge;
    }
    return total;
}

} // namespace

Line2 revolution_axis() { return Line2::vertical(0.0); }

double volume(const Solid& solid)
{
    return std::visit(
        overloaded{
            [](const Cone& c) { return base_area(c.base) * positive(std::abs(c.apex.z), "cone height") / 3.0; },
            [](const Cylinder& c) { return base_area(c.base) * positive(c.height, "height"); },
            [](const Sphere& s) {
                const double r = positive(s.radius, "radius");
                return 4.0 * pi * r * r * r / 3.0;
            },
            [](const Hoof& h) {
                const double r = positive(h.radius, "radius");
                return (2.0 / 3.0) * r * r * positive(h.height, "height");
            },
            [](const TangentPolyhedron& p) {
                return polyhedron_surface(p) * positive(p.insphere_radius, "insphere radius") / 3.0;
            },
            [](const SolidOfRevolution& s) { return guldin_volume(s.profile); },
            [](const HeightFieldCylinder& c) { return positive(height_field_volume(c), "volume"); },
            [](const TwistedColumn& c) { return base_area(c.base) * positive(c.height, "height"); },
            [](const UnfoldedSphere& u) { return unfolded_volume(u); },
        },
        solid);
}

double lateral_area(const Solid& solid)
{
    return std::visit(
        overloaded{
            [](const Cone& c) -> double {
                const Disk* d = right_circular_base(c);
                if (d == nullptr) {
                    throw GeometryError(ErrorKind::UnsupportedMeasure, "lateral area needs a right circular cone");
                }
                const double r = positive(d->radius, "radius");
                const double h = positive(std::abs(c.apex.z), "cone height");
                return pi * r * std::hypot(r, h);
            },
            [](const Cylinder& c) { return perimeter(boundary(c.base)) * positive(c.height, "height"); },
            [](const Sphere& s) {
                const double r = positive(s.radius, "radius");
                return 4.0 * pi * r * r;
            },
            [](const Hoof& h) { return 2.0 * positive(h.radius, "radius") * positive(h.height, "height"); },
            [](const TangentPolyhedron&) -> double {
                throw GeometryError(ErrorKind::UnsupportedMeasure, "polyhedra have no lateral surface");
            },
            [](const SolidOfRevolution& s) { return guldin_surface(boundary(s.profile.region()), revolution_axis()); },
            [](const HeightFieldCylinder& c) { return height_field_lateral(c); },
            [](const TwistedColumn&) -> double {
                throw GeometryError(ErrorKind::UnsupportedMeasure, "twisting does not preserve lateral area");
            },
            [](const UnfoldedSphere& u) { return unfolded_lateral(u); },
        },
        solid);
}

double surface_area(const Solid& solid)
{
    return std::visit(
        overloaded{
            [&](const Cone& c) {
                const double lateral = lateral_area(solid);
                return lateral + base_area(c.base);
            },
            [&](const Cylinder& c) { return lateral_area(solid) + 2.0 * base_area(c.base); },
            [&](const Sphere&) { return lateral_area(solid); },
            [&](const Hoof& h) {
                const double r = h.radius;
                // curved side + half-disk base + half-ellipse cut face
                return lateral_area(solid) + 0.5 * pi * r * r + 0.5 * pi * r * std::hypot(r, h.height);
            },
            [](const TangentPolyhedron& p) { return polyhedron_surface(p); },
            [&](const SolidOfRevolution&) { return lateral_area(solid); },
            [&](const HeightFieldCylinder& c) {
                const double a = base_area(c.base);
                return lateral_area(solid) + a + a * std::hypot(1.0, c.slope);
            },
            [](const TwistedColumn&) -> double {
                throw GeometryError(ErrorKind::UnsupportedMeasure, "twisted column surface is not modelled");
            },
            [](const UnfoldedSphere&) -> double {
                throw GeometryError(ErrorKind::UnsupportedMeasure,
                                    "only the lateral (ruled) surface of an unfolded sphere is tracked");
            },
        },
        solid);
}

bool contains(const Solid& solid, Point3 p)
{
    return std::visit(
        overloaded{
            [&](const Cone& c) {
                const double s = p.z / c.apex.z;
                if (!(s >= 0.0) || s >= 1.0) {
                    return false;
                }
                const Point2 q{(p.x - s * c.apex.x) / (1.0 - s), (p.y - s * c.apex.y) / (1.0 - s)};
                return contains(c.base, q);
            },
            [&](const Cylinder& c) { return p.z >= 0.0 && p.z <= c.height && contains(c.base, Point2{p.x, p.y}); },
            [&](const Sphere& s) { return p.x * p.x + p.y * p.y + p.z * p.z <= s.radius * s.radius; },
            [&](const Hoof& h) {
                return p.x >= 0.0 && p.x * p.x + p.y * p.y <= h.radius * h.radius && p.z >= 0.0 &&
                       p.z * h.radius <= h.height * p.x;
            },
            [](const TangentPolyhedron&) -> bool {
                throw GeometryError(ErrorKind::UnsupportedMeasure, "tangent polyhedra carry no face geometry");
            },
            [&](const SolidOfRevolution& s) { return contains(s.profile.region(), Point2{std::hypot(p.x, p.y), p.z}); },
            [&](const HeightFieldCylinder& c) {
                return p.z >= 0.0 && p.z <= c.offset + c.slope * p.x && contains(c.base, Point2{p.x, p.y});
            },
            [&](const TwistedColumn& c) {
                if (p.z < 0.0 || p.z > c.height) {
                    return false;
                }
                const RigidMotion undo{-c.twist_rate * p.z, {}};
                return contains(c.base, undo(Point2{p.x, p.y}));
            },
            [&](const UnfoldedSphere& u) {
                const double a = wedge_half_angle(u);
                const double r = u.radius;
                if (std::abs(p.y) > r || p.z < 0.0) {
                    return false;
                }
                return p.z <= std::cos(a) * std::sqrt(r * r - p.y * p.y) && p.x >= 0.0 &&
                       p.x <= 2.0 * u.wedges * std::tan(a) * p.z;
            },
        },
        solid);
}

Box3 bounding_box(const Solid& solid)
{
    return std::visit(
        overloaded{
            [](const Cone& c) {
                const Box2 b = bounding_box(c.base);
                return Box3{{std::min(b.lo.x, c.apex.x), std::min(b.lo.y, c.apex.y), std::min(0.0, c.apex.z)},
                            {std::max(b.hi.x, c.apex.x), std::max(b.hi.y, c.apex.y), std::max(0.0, c.apex.z)}};
            },
            [](const Cylinder& c) {
                const Box2 b = bounding_box(c.base);
                return Box3{{b.lo.x, b.lo.y, 0.0}, {b.hi.x, b.hi.y, c.height}};
            },
            [](const Sphere& s) {
                const double r = s.radius;
                return Box3{{-r, -r, -r}, {r, r, r}};
            },
            [](const Hoof& h) { return Box3{{0.0, -h.radius, 0.0}, {h.radius, h.radius, h.height}}; },
            [](const TangentPolyhedron&) -> Box3 {
                throw GeometryError(ErrorKind::UnsupportedMeasure, "tangent polyhedra carry no face geometry");
            },
            [](const SolidOfRevolution& s) {
                const Box2 b = bounding_box(s.profile.region());
                const double r = std::max(std::abs(b.lo.x), std::abs(b.hi.x));
                return Box3{{-r, -r, b.lo.y}, {r, r, b.hi.y}};
            },
            [](const HeightFieldCylinder& c) {
                const Box2 b = bounding_box(c.base);
                const double h0 = c.offset + c.slope * b.lo.x;
                const double h1 = c.offset + c.slope * b.hi.x;
                return Box3{{b.lo.x, b.lo.y, std::min({0.0, h0, h1})}, {b.hi.x, b.hi.y, std::max({0.0, h0, h1})}};
            },
            [](const TwistedColumn& c) {
                const Box2 b = bounding_box(c.base);
                const double r = std::max({std::hypot(b.lo.x, b.lo.y), std::hypot(b.lo.x, b.hi.y),
                                           std::hypot(b.hi.x, b.lo.y), std::hypot(b.hi.x, b.hi.y)});
                return Box3{{-r, -r, 0.0}, {r, r, c.height}};
            },
            [](const UnfoldedSphere& u) {
                const double a = wedge_half_angle(u);
                const double depth = std::cos(a) * u.radius;
                return Box3{{0.0, -u.radius, 0.0}, {2.0 * u.wedges * std::tan(a) * depth, u.radius, depth}};
            },
        },
        solid);
}

ZoneBand sphere_zone_vs_band(double r, double z1, double z2)
{
    if (!std::isfinite(r) || !(r > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "radius must be positive");
    }
    if (!(z1 >= -r && z1 < z2 && z2 <= r)) {
        throw GeometryError(ErrorKind::SlabOutOfRange, "need -r <= z1 < z2 <= r");
    }
    const double height = z2 - z1;
    // A thin sphere slice at height z has circumference 2 pi rho and slant
    // width (r / rho) dz; rho cancels, leaving 2 pi r dz at every height.
    const double zone = (2.0 * pi * r) * height;
    // The cylinder band is circumference 2 pi r times height.
    const double band = (2.0 * pi * r) * height;
    return {zone, band};
}

CutPair oblique_cut_volumes(const PlanarRegion& base, const Line2& cut_line, double slope)
{
    if (!std::isfinite(slope) || !(slope > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "slope must be positive");
    }
    const SplitMoment m = split_first_moment(base, cut_line);
    return {slope * m.positive, slope * m.negative};
}

CutPair oblique_cut_lateral_areas(const Curve& boundary, const Line2& cut_line, double slope)
{
    if (!std::isfinite(slope) || !(slope > 0.0)) {
        throw GeometryError(ErrorKind::InvalidArgument, "slope must be positive");
    }
    if (!is_closed(boundary)) {
        throw GeometryError(ErrorKind::InvalidArgument, "boundary curve must be closed");
    }
    const SplitMoment m = split_first_moment_curve(boundary, cut_line);
    return {slope * m.positive, slope * m.negative};
}

double guldin_volume(const Profile& profile)
{
    const Moments m = moments(profile.region());
    if (!(m.measure > 0.0)) {
        throw GeometryError(ErrorKind::DegenerateRegion, "profile has zero area");
    }
    const double rho_bar = m.moment.x / m.measure;
    return 2.0 * pi * rho_bar * m.measure;
}

double guldin_surface(const Curve& boundary, const Line2& axis)
{
    if (min_signed_distance(boundary, axis) < -1e-12) {
        throw GeometryError(ErrorKind::AxisCrossing, "curve crosses the revolution axis");
    }
    const Point2 c = centroid_curve(boundary);
    return 2.0 * pi * axis.signed_distance(c) * perimeter(boundary);
}

std::array<Hoof, 2> unfolded_sphere_limit(const Sphere& sphere)
{
    const double r = positive(sphere.radius, "radius");
    return {Hoof{r, pi * r}, Hoof{r, pi * r}};
}

} // namespace indiv
