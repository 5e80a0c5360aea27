#ifndef INDIV_SOLIDS_HPP
#define INDIV_SOLIDS_HPP

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "indiv/geometry.hpp"

namespace indiv {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const Point3&, const Point3&) = default;
};

struct Box3 {
    Point3 lo;
    Point3 hi;
};

// Base lies in the plane z = 0; the height is |apex.z|.
struct Cone {
    PlanarRegion base;
    Point3 apex;
};

struct Cylinder {
    PlanarRegion base;
    double height = 1.0;
};

struct Sphere {
    double radius = 1.0;
};

// Ungula: the part of the right cylinder of radius r over the half-disk
// x >= 0 lying below the plane z = (height / radius) x, which passes through
// the diameter x = 0 of the base.
struct Hoof {
    double radius = 1.0;
    double height = 1.0;
};

// Polyhedron whose faces are all tangent to a sphere of radius
// `insphere_radius`; only the face areas are needed.
struct TangentPolyhedron {
    std::vector<double> face_areas;
    double insphere_radius = 1.0;
};

struct SolidOfRevolution {
    Profile profile;
};

// Right cylinder over `base` (in the plane z = 0) cut by the plane
// z = offset + slope * x, i.e. fibre heights affine in rho = x.
struct HeightFieldCylinder {
    PlanarRegion base;
    double offset = 0.0;
    double slope = 2.0 * pi;
};

// Cylinder whose cross-section at height z is the base rotated about the
// z axis by twist_rate * z.
struct TwistedColumn {
    PlanarRegion base;
    double height = 1.0;
    double twist_rate = 0.0;
};

// Sphere cut into `wedges` meridian wedges with each latitude circle replaced
// by its inscribed regular polygon, laid flat and with the ribs gathered.
// The result is a cylinder over a half-ellipse (semi-axes r along the rib and
// r cos(pi/n) in depth) cut by a plane through the rib.
struct UnfoldedSphere {
    double radius = 1.0;
    int wedges = 4;
};

using Solid = std::variant<Cone, Cylinder, Sphere, Hoof, TangentPolyhedron, SolidOfRevolution,
                           HeightFieldCylinder, TwistedColumn, UnfoldedSphere>;

double volume(const Solid& solid);
double surface_area(const Solid& solid);
double lateral_area(const Solid& solid);

bool contains(const Solid& solid, Point3 p);
Box3 bounding_box(const Solid& solid);

struct ZoneBand {
    double zone = 0.0;   // sphere area between the planes z1 and z2
    double band = 0.0;   // lateral area of the circumscribed cylinder between them
};

ZoneBand sphere_zone_vs_band(double r, double z1, double z2);

struct CutPair {
    double above = 0.0;
    double below = 0.0;
};

// Vertical cylinder over `base` cut by the plane through `cut_line` rising
// with `slope` per unit signed distance: the volume between the base plane
// and the cutting plane on each side.
CutPair oblique_cut_volumes(const PlanarRegion& base, const Line2& cut_line, double slope);
CutPair oblique_cut_lateral_areas(const Curve& boundary, const Line2& cut_line, double slope);

// Pappus-Guldin: 2 pi * centroid rho * area.
double guldin_volume(const Profile& profile);
// Pappus-Guldin: 2 pi * curve-centroid distance to the axis * length.
double guldin_surface(const Curve& boundary, const Line2& axis);

// Revolution axis of a profile (rho = 0), oriented so rho is positive.
Line2 revolution_axis();

// The two hoofs (radius r, apex height pi r) the unfolded sphere tends to.
std::array<Hoof, 2> unfolded_sphere_limit(const Sphere& sphere);

} // namespace indiv

#endif
