#include <doctest.h>

#include <cmath>
#include <random>

#include "indiv/oracle.hpp"
#include "indiv/transforms.hpp"
#include "support/random_shapes.hpp"

using namespace indiv;
using indiv::testing::random_star_polygon;
using indiv::testing::uniform;

namespace {

ErrorKind kind_of(const auto& f)
{
    try {
        f();
    } catch (const GeometryError& e) {
        return e.kind();
    }
    FAIL("expected a GeometryError");
    return ErrorKind::InvalidArgument;
}

double chord_formula(double r, int n)
{
    const double a = pi / n;
    return pi * r * r * (std::sin(a) / a) * std::cos(a);
}

const PlanarRegion& region_of(const Figure& f) { return std::get<PlanarRegion>(f); }
const Solid& solid_of(const Figure& f) { return std::get<Solid>(f); }

} // namespace

TEST_SUITE("transforms")
{
    TEST_CASE("shear2d examples")
    {
        const Polygon t({{0, 0}, {4, 0}, {1, 3}});
        const PlanarRegion s = shear_region(t, Line2::horizontal(0.0), 3.0);
        const auto& v = std::get<Polygon>(s).vertices();
        CHECK(std::find(v.begin(), v.end(), Point2{10.0, 3.0}) != v.end());
        CHECK(area(s) == doctest::Approx(6.0).epsilon(1e-15));

        const PlanarRegion same = shear_region(t, Line2({1, 1}, {1, 2}), 0.0);
        CHECK(std::get<Polygon>(same).vertices() == t.vertices());

        const Polygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        const PlanarRegion par = shear_region(sq, Line2::horizontal(0.0), 1.0);
        CHECK(area(par) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::get<Polygon>(par).vertices()[2] == Point2{2.0, 1.0});

        CHECK(kind_of([] { shear_region(Disk{{0, 0}, 1.0}, Line2::horizontal(0.0), 1.0); }) ==
              ErrorKind::UnsupportedRegion);
        CHECK(kind_of([] { shear_region(right_half_disk({0, 0}, 1.0), Line2::horizontal(0.0), 1.0); }) ==
              ErrorKind::UnsupportedRegion);
    }

    TEST_CASE("move_apex examples")
    {
        const Cone c{Disk{{0, 0}, 1.0}, {0, 0, 3}};
        CHECK(volume(c) == doctest::Approx(pi).epsilon(1e-15));
        const Cone moved = move_apex(c, {7, 5, 3});
        CHECK(moved.apex == Point3{7, 5, 3});
        CHECK(volume(moved) == doctest::Approx(pi).epsilon(1e-15));
        CHECK(move_apex(c, c.apex).apex == c.apex);
        CHECK(kind_of([&] { move_apex(c, {0, 0, 4}); }) == ErrorKind::ApexHeightChanged);
        CHECK_NOTHROW(move_apex(c, {1, 1, 3.0 * (1.0 + 1e-13)}));
    }

    TEST_CASE("unroll_disk examples")
    {
        CHECK(area(unroll_disk(Disk{{0, 0}, 1.0}, 3)) == doctest::Approx(1.299038).epsilon(1e-6));
        CHECK(area(unroll_disk(Disk{{0, 0}, 1.0}, 3)) == doctest::Approx(chord_formula(1.0, 3)).epsilon(1e-14));
        const double a64 = area(unroll_disk(Disk{{0, 0}, 1.0}, 64));
        CHECK(a64 == doctest::Approx(chord_formula(1.0, 64)).epsilon(1e-12));
        CHECK(std::abs(a64 - 3.136551) <= 5e-6);
        CHECK(kind_of([] { unroll_disk(Disk{{0, 0}, 1.0}, 2); }) == ErrorKind::InvalidArgument);

        const Sawtooth saw = sawtooth(Disk{{2, 3}, 2.0}, 16);
        CHECK(saw.teeth.size() == 16);
        CHECK(saw.chord == doctest::Approx(4.0 * std::sin(pi / 16)));
        CHECK(saw.apothem == doctest::Approx(2.0 * std::cos(pi / 16)));
        CHECK(saw.baseline_length() == doctest::Approx(16 * saw.chord));
    }

    TEST_CASE("gathered teeth tile a single triangle")
    {
        for (int n : {3, 8, 64, 500}) {
            const Sawtooth saw = sawtooth(Disk{{0, 0}, 1.5}, n);
            const std::vector<Polygon> gathered = gather_teeth(saw, 0.3 * saw.baseline_length());
            double sum = 0.0;
            for (const Polygon& p : gathered) {
                sum += area(p);
                for (const Point2& v : p.vertices()) {
                    CHECK(v.y >= -1e-15);
                    CHECK(v.y <= saw.apothem + 1e-15);
                }
            }
            const double triangle = 0.5 * saw.baseline_length() * saw.apothem;
            CHECK(sum == doctest::Approx(triangle).epsilon(1e-12));
            CHECK(area(unroll_disk(Disk{{0, 0}, 1.5}, n)) == doctest::Approx(triangle).epsilon(1e-12));
        }
    }

    TEST_CASE("property: unroll error stays inside the second-order envelope")
    {
        for (int n = 8; n <= 1024; n *= 2) {
            for (double r : {0.5, 1.0, 3.0}) {
                const double err = std::abs(area(unroll_disk(Disk{{0, 0}, r}, n)) - pi * r * r);
                CHECK(err <= pi * r * r * 1.5 * (pi / n) * (pi / n));
            }
        }
    }

    TEST_CASE("twist_column")
    {
        const Cylinder c{Disk{{0, 0}, 1.0}, 2.0};
        for (double rate : {0.0, 0.3, -2.0, 17.0}) {
            CHECK(volume(twist_column(c, rate)) == doctest::Approx(2.0 * pi).epsilon(1e-15));
        }
        CHECK(std::holds_alternative<Cylinder>(twist_column(c, 0.0)));

        const Polygon sq({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
        const Solid twisted = twist_column(Cylinder{sq, 1.0}, pi / 2);
        CHECK(volume(twisted) == doctest::Approx(4.0).epsilon(1e-15));
        const auto inside = [&](Point3 p) { return contains(twisted, p); };
        const oracle::Estimate e = oracle::mc_volume(inside, bounding_box(twisted), 400000, 3);
        CHECK(std::abs(e.mean - 4.0) <= 5.0 * e.standard_error);
    }

    TEST_CASE("twisted disk column against Monte Carlo")
    {
        const Solid twisted = twist_column(Cylinder{Disk{{0.2, 0}, 1.0}, 1.0}, pi / 2);
        const auto inside = [&](Point3 p) { return contains(twisted, p); };
        const oracle::Estimate e = oracle::mc_volume(inside, bounding_box(twisted), 1000000, 42);
        CHECK(std::abs(e.mean - pi) <= 5.0 * e.standard_error);
    }

    TEST_CASE("meridian_unfold")
    {
        const UnfoldedSphere u = meridian_unfold(Sphere{1.0}, 256);
        CHECK(u.wedges == 256);
        CHECK(std::abs(volume(u) - 4.0 * pi / 3.0) <= 1e-3);
        CHECK(std::abs(lateral_area(u) - 4.0 * pi) <= 1e-2);
        CHECK(kind_of([] { meridian_unfold(Sphere{1.0}, 5); }) == ErrorKind::InvalidArgument);
        CHECK(kind_of([] { meridian_unfold(Sphere{1.0}, 2); }) == ErrorKind::InvalidArgument);

        const auto [h1, h2] = unfolded_sphere_limit(Sphere{2.0});
        CHECK(volume(h1) + volume(h2) == doctest::Approx(4.0 * pi * 8.0 / 3.0).epsilon(1e-14));
        CHECK(lateral_area(h1) + lateral_area(h2) == doctest::Approx(4.0 * pi * 4.0).epsilon(1e-14));
    }

    TEST_CASE("property: meridian unfold errors shrink with n")
    {
        double prev_v = INFINITY;
        double prev_s = INFINITY;
        for (int n = 8; n <= 1024; n *= 2) {
            const UnfoldedSphere u = meridian_unfold(Sphere{1.0}, n);
            const double ev = std::abs(volume(u) - 4.0 * pi / 3.0);
            const double es = std::abs(lateral_area(u) - 4.0 * pi);
            CHECK(ev <= 4.0 * pi / 3.0 * (pi / n) * (pi / n));
            CHECK(es <= 4.0 * pi * (pi / n) * (pi / n));
            CHECK(ev < prev_v);
            CHECK(es < prev_s);
            prev_v = ev;
            prev_s = es;
        }
    }

    TEST_CASE("unfold_revolution")
    {
        const Profile half(right_half_disk({0, 0}, 1.0, 1 << 17));
        CHECK(volume(unfold_revolution(half)) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-9));
        const Profile rect(Polygon({{1, 0}, {2, 0}, {2, 1}, {1, 1}}));
        const HeightFieldCylinder h = unfold_revolution(rect);
        CHECK(volume(h) == doctest::Approx(3.0 * pi).epsilon(1e-14));
        CHECK(volume(h) == doctest::Approx(pi * (4.0 - 1.0)).epsilon(1e-14));
        CHECK(lateral_area(h) == doctest::Approx(guldin_surface(boundary(rect.region()), revolution_axis())));
    }

    TEST_CASE("property: unfold_revolution volume two ways")
    {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 100; ++i) {
            const Polygon p = random_star_polygon(rng, {uniform(rng, 1.2, 4.0), uniform(rng, -2, 2)});
            const Profile prof(p);
            const double a = volume(unfold_revolution(prof));
            const double b = guldin_volume(prof);
            const double c = 2.0 * pi * first_moment(p, revolution_axis());
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
            CHECK(a == doctest::Approx(c).epsilon(1e-12));
        }
    }

    TEST_CASE("Transform::make validates parameters per kind")
    {
        const Transform s = Transform::make(TransformKind::Shear2d, {{"shift", 2.0}});
        CHECK(s.preserves == std::set<Quantity>{Quantity::Area});
        CHECK(s.parameter("base_angle") == 0.0);
        CHECK(kind_of([] { Transform::make(TransformKind::Shear2d, {}); }) == ErrorKind::InvalidArgument);
        CHECK(kind_of([] { Transform::make(TransformKind::Shear2d, {{"shift", 1}, {"bogus", 1}}); }) ==
              ErrorKind::InvalidArgument);
        CHECK(kind_of([] { Transform::make(TransformKind::TwistColumn, {{"rate", NAN}}); }) ==
              ErrorKind::InvalidArgument);
        CHECK(kind_of([] { Transform::make(TransformKind::UnrollDisk, {{"n", 2.5}}); }) ==
              ErrorKind::InvalidArgument);
        CHECK(kind_of([] { Transform::make(TransformKind::MeridianUnfold, {{"n", 7.0}}); }) ==
              ErrorKind::InvalidArgument);
        CHECK_NOTHROW(Transform::make(TransformKind::MeridianUnfold, {{"n", 8}}));
        CHECK_NOTHROW(Transform::make(TransformKind::UnfoldRevolution, {}));
        CHECK(kind_of([] { Transform::make(TransformKind::MoveApex, {{"x", 1}, {"y", 1}}); }) ==
              ErrorKind::InvalidArgument);

        CHECK(preserved_quantities(TransformKind::MeridianUnfold) ==
              std::set<Quantity>{Quantity::Volume, Quantity::LateralArea});
        CHECK(to_string(TransformKind::UnrollDisk) == "unroll-disk");
        CHECK(to_string(Quantity::LateralArea) == "lateral-area");
    }

    TEST_CASE("apply dispatches on the figure and rejects the wrong kind")
    {
        const Figure tri = PlanarRegion{Polygon({{0, 0}, {4, 0}, {1, 3}})};
        const Figure sheared = indiv::apply(Transform::make(TransformKind::Shear2d, {{"shift", 3}}), tri);
        CHECK(area(region_of(sheared)) == doctest::Approx(6.0));

        const Figure cone = Solid{Cone{Disk{{0, 0}, 1.0}, {0, 0, 3}}};
        const Figure moved = indiv::apply(Transform::make(TransformKind::MoveApex, {{"x", 7}, {"y", 5}, {"z", 3}}), cone);
        CHECK(volume(solid_of(moved)) == doctest::Approx(pi));

        const Figure disk = PlanarRegion{Disk{{0, 0}, 1.0}};
        CHECK(area(region_of(indiv::apply(Transform::make(TransformKind::UnrollDisk, {{"n", 3}}), disk))) ==
              doctest::Approx(1.299038).epsilon(1e-6));

        const Figure prof = Profile(Polygon({{1, 0}, {2, 0}, {2, 1}, {1, 1}}));
        CHECK(volume(solid_of(indiv::apply(Transform::make(TransformKind::UnfoldRevolution, {}), prof))) ==
              doctest::Approx(3.0 * pi));

        CHECK(kind_of([&] { indiv::apply(Transform::make(TransformKind::UnrollDisk, {{"n", 3}}), tri); }) ==
              ErrorKind::InvalidArgument);
        CHECK(kind_of([&] { indiv::apply(Transform::make(TransformKind::MeridianUnfold, {{"n", 8}}), cone); }) ==
              ErrorKind::InvalidArgument);
    }

    TEST_CASE("property: declared quantities are preserved by the exact kinds")
    {
        std::mt19937_64 rng(32);
        for (int i = 0; i < 100; ++i) {
            const Polygon p = random_star_polygon(rng, {uniform(rng, -2, 2), uniform(rng, -2, 2)});
            const double angle = uniform(rng, -pi, pi);
            const Transform t = Transform::make(TransformKind::Shear2d, {{"shift", uniform(rng, -5, 5)},
                                                                         {"base_x", uniform(rng, -2, 2)},
                                                                         {"base_y", uniform(rng, -2, 2)},
                                                                         {"base_angle", angle}});
            CHECK(area(region_of(indiv::apply(t, PlanarRegion{p}))) == doctest::Approx(area(p)).epsilon(1e-12));

            const Cone c{p, {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 0.5, 4)}};
            const Transform m = Transform::make(
                TransformKind::MoveApex, {{"x", uniform(rng, -9, 9)}, {"y", uniform(rng, -9, 9)}, {"z", c.apex.z}});
            CHECK(volume(solid_of(indiv::apply(m, Solid{c}))) == doctest::Approx(volume(c)).epsilon(1e-12));

            const Cylinder cyl{p, uniform(rng, 0.5, 4)};
            const Transform w = Transform::make(TransformKind::TwistColumn, {{"rate", uniform(rng, -5, 5)}});
            CHECK(volume(solid_of(indiv::apply(w, Solid{cyl}))) == doctest::Approx(volume(cyl)).epsilon(1e-12));
        }
    }
}
