#ifndef INDIV_TRANSFORMS_HPP
#define INDIV_TRANSFORMS_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "indiv/geometry.hpp"
#include "indiv/solids.hpp"

namespace indiv {

enum class TransformKind { Shear2d, MoveApex, UnrollDisk, TwistColumn, MeridianUnfold, UnfoldRevolution };
enum class Quantity { Area, Volume, LateralArea };

std::string_view to_string(TransformKind kind) noexcept;
std::string_view to_string(Quantity quantity) noexcept;

// Quantities each construction leaves unchanged (in the limit, for the
// discretized unroll-disk and meridian-unfold).
const std::set<Quantity>& preserved_quantities(TransformKind kind);

// A validated, named construction step.
//
// Parameters per kind:
//   Shear2d          shift (required); base_x, base_y, base_angle (default 0)
//   MoveApex         x, y, z (required)
//   UnrollDisk       n (integer >= 3)
//   TwistColumn      rate (required)
//   MeridianUnfold   n (even integer >= 4)
//   UnfoldRevolution none
struct Transform {
    TransformKind kind;
    std::map<std::string, double> parameters;
    std::set<Quantity> preserves;

    static Transform make(TransformKind kind, std::map<std::string, double> parameters);

    double parameter(const std::string& name) const;
};

using Figure = std::variant<PlanarRegion, Profile, Solid>;

Figure apply(const Transform& transform, const Figure& figure);

// Slides every point along the base direction by shift_per_unit_distance
// times its signed distance from the base.
PlanarRegion shear_region(const PlanarRegion& region, const Line2& base, double shift_per_unit_distance);

Cone move_apex(const Cone& cone, Point3 new_apex);

// Disk cut into n equal sectors, each replaced by its isosceles triangle
// (chord on the baseline y = 0, apex at height apothem), laid side by side.
struct Sawtooth {
    std::vector<Polygon> teeth;
    double chord = 0.0;
    double apothem = 0.0;

    double baseline_length() const { return chord * static_cast<double>(teeth.size()); }
};

Sawtooth sawtooth(const Disk& disk, int n);

// Outline of the sawtooth as one (weakly simple) polygon.
Polygon unroll_disk(const Disk& disk, int n);

// Shears each tooth parallel to the baseline so all apexes meet at
// (apex_x, apothem). The teeth then tile a single triangle.
std::vector<Polygon> gather_teeth(const Sawtooth& saw, double apex_x);

Solid twist_column(const Cylinder& cylinder, double twist_rate);

UnfoldedSphere meridian_unfold(const Sphere& sphere, int n);

// Fibre over each profile point has length 2 pi rho.
HeightFieldCylinder unfold_revolution(const Profile& profile);

} // namespace indiv

#endif
