#include <doctest.h>

#include <cmath>
#include <random>

#include "indiv/oracle.hpp"
#include "indiv/solids.hpp"
#include "support/random_shapes.hpp"

using namespace indiv;
using indiv::testing::random_line_through;
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

Polygon square(double side, Point2 lo)
{
    return Polygon({lo, lo + Point2{side, 0.0}, lo + Point2{side, side}, lo + Point2{0.0, side}});
}

bool same(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

} // namespace

TEST_SUITE("solids")
{
    TEST_CASE("volume closed forms")
    {
        CHECK(volume(Sphere{1.0}) == doctest::Approx(4.188790).epsilon(1e-6));
        CHECK(volume(Sphere{1.0}) == doctest::Approx(2.0 / 3.0 * volume(Cylinder{Disk{{0, 0}, 1.0}, 2.0})));
        CHECK(volume(Cylinder{Disk{{0, 0}, 1.0}, 2.0}) == doctest::Approx(2.0 * pi));
        CHECK(volume(Hoof{1.0, 1.0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(volume(Cone{Polygon({{0, 0}, {3, 0}, {0, 2}}), {5, 5, -4}}) == doctest::Approx(4.0));

        // Cube of side 2 from six pyramids with apex at the centre.
        const Polygon face = square(2.0, {-1, -1});
        double six = 0.0;
        for (int i = 0; i < 6; ++i) {
            six += volume(Cone{face, {0, 0, 1}});
        }
        CHECK(volume(Cone{face, {0, 0, 1}}) == doctest::Approx(4.0 / 3.0));
        CHECK(six == doctest::Approx(8.0));
        CHECK(six == doctest::Approx(volume(Cylinder{face, 2.0})));

        CHECK(volume(TangentPolyhedron{{4, 4, 4, 4, 4, 4}, 1.0}) == doctest::Approx(8.0));
    }

    TEST_CASE("tangent polyhedron tends to the circumscribed cylinder")
    {
        // Regular n-gon prism around the unit sphere: n side faces and two caps.
        for (int n : {4, 16, 256, 4096}) {
            const double side = 2.0 * std::tan(pi / n);
            const double cap = 0.5 * n * side;
            std::vector<double> faces(static_cast<std::size_t>(n), side * 2.0);
            faces.push_back(cap);
            faces.push_back(cap);
            const double v = volume(TangentPolyhedron{faces, 1.0});
            CHECK(v == doctest::Approx(cap * 2.0).epsilon(1e-12));
            if (n == 4096) {
                CHECK(v == doctest::Approx(2.0 * pi).epsilon(1e-6));
            }
        }
    }

    TEST_CASE("hoof volume against a Riemann oracle")
    {
        constexpr int n = 1000000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = (i + 0.5) / n;
            sum += x * 2.0 * std::sqrt(1.0 - x * x);
        }
        CHECK(volume(Hoof{1.0, 1.0}) == doctest::Approx(sum / n).epsilon(1e-9));
    }

    TEST_CASE("surface and lateral areas")
    {
        CHECK(surface_area(Sphere{1.0}) == doctest::Approx(12.566371).epsilon(1e-7));
        const Cylinder circ{Disk{{0, 0}, 1.0}, 2.0};
        CHECK(lateral_area(circ) == doctest::Approx(surface_area(Sphere{1.0})));
        CHECK(surface_area(circ) == doctest::Approx(6.0 * pi));
        CHECK(surface_area(Sphere{1.0}) == doctest::Approx(2.0 / 3.0 * surface_area(circ)));
        CHECK(lateral_area(Hoof{1.0, 1.0}) == doctest::Approx(2.0));
        CHECK(lateral_area(Hoof{1.0, 2.0}) == doctest::Approx(4.0));

        const CircleArc semicircle{{0, 0}, 1.0, -pi / 2, pi};
        const double quad = 2.0 * pi * oracle::boundary_integral(semicircle, [](Point2 p) { return p.x; }, 4096);
        CHECK(surface_area(Sphere{1.0}) == doctest::Approx(quad).epsilon(1e-6));

        // Lateral surface of the hoof: height h x / r over the arc.
        const double r = 1.0;
        const double h = 1.0;
        const double hoof_quad = oracle::boundary_integral(CircleArc{{0, 0}, r, -pi / 2, pi},
                                                           [=](Point2 p) { return h * p.x / r; }, 4096);
        CHECK(lateral_area(Hoof{r, h}) == doctest::Approx(hoof_quad).epsilon(1e-6));
    }

    TEST_CASE("degenerate solids")
    {
        CHECK(kind_of([] { volume(Sphere{0.0}); }) == ErrorKind::DegenerateSolid);
        CHECK(kind_of([] { volume(Hoof{1.0, -1.0}); }) == ErrorKind::DegenerateSolid);
        CHECK(kind_of([] { volume(Cylinder{Disk{{0, 0}, 1.0}, 0.0}); }) == ErrorKind::DegenerateSolid);
        CHECK(kind_of([] { volume(Cone{Disk{{0, 0}, 1.0}, {0, 0, 0}}); }) == ErrorKind::DegenerateSolid);
        CHECK(kind_of([] { volume(TangentPolyhedron{{}, 1.0}); }) == ErrorKind::DegenerateSolid);
        CHECK(surface_area(TangentPolyhedron{{1.0, 2.5}, 1.0}) == doctest::Approx(3.5));
        CHECK(kind_of([] { lateral_area(TangentPolyhedron{{1.0}, 1.0}); }) == ErrorKind::UnsupportedMeasure);
        CHECK(kind_of([] { contains(Solid{TangentPolyhedron{{1.0}, 1.0}}, Point3{}); }) ==
              ErrorKind::UnsupportedMeasure);
    }

    TEST_CASE("property: sphere chain")
    {
        for (double r : {0.5, 1.0, 2.0, 10.0}) {
            const Sphere s{r};
            const Cylinder c{Disk{{0, 0}, r}, 2.0 * r};
            CHECK(same(volume(s), surface_area(s) * r / 3.0, 1e-12));
            CHECK(same(surface_area(s), lateral_area(c), 1e-12));
            CHECK(same(volume(s), 2.0 / 3.0 * volume(c), 1e-12));
        }
    }

    TEST_CASE("sphere_zone_vs_band")
    {
        const ZoneBand a = sphere_zone_vs_band(1.0, 0.0, 0.5);
        CHECK(a.zone == doctest::Approx(pi));
        CHECK(a.band == a.zone);
        const ZoneBand b = sphere_zone_vs_band(1.0, -1.0, 1.0);
        CHECK(b.zone == doctest::Approx(4.0 * pi));
        CHECK(b.band == b.zone);
        const ZoneBand c = sphere_zone_vs_band(2.0, 1.0, 1.5);
        CHECK(c.zone == doctest::Approx(2.0 * pi));
        CHECK(c.band == c.zone);
        CHECK(kind_of([] { sphere_zone_vs_band(1.0, 0.5, 0.5); }) == ErrorKind::SlabOutOfRange);
        CHECK(kind_of([] { sphere_zone_vs_band(1.0, -2.0, 0.5); }) == ErrorKind::SlabOutOfRange);
    }

    TEST_CASE("property: zone equals band over random slabs")
    {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 1000; ++i) {
            const double r = uniform(rng, 0.1, 10.0);
            double z1 = uniform(rng, -r, r);
            double z2 = uniform(rng, -r, r);
            if (z1 == z2) {
                continue;
            }
            if (z1 > z2) {
                std::swap(z1, z2);
            }
            const ZoneBand zb = sphere_zone_vs_band(r, z1, z2);
            CHECK(zb.zone == zb.band);
            // Independent check: revolve the meridian arc between the planes.
            const double t1 = std::asin(z1 / r);
            const double t2 = std::asin(z2 / r);
            const double arc = guldin_surface(CircleArc{{0, 0}, r, t1, t2 - t1}, revolution_axis());
            CHECK(same(zb.zone, arc, 1e-9));
        }
    }

    TEST_CASE("oblique cut volumes")
    {
        const CutPair d = oblique_cut_volumes(Disk{{0, 0}, 1.0}, Line2({0, 0}, {0, 1}), 1.0);
        CHECK(d.above == doctest::Approx(2.0 / 3.0));
        CHECK(d.below == doctest::Approx(2.0 / 3.0));

        const Polygon sq = square(2.0, {0, 0});
        const CutPair s = oblique_cut_volumes(sq, Line2({1, 0}, {0, -1}), 2.0);
        CHECK(s.above == doctest::Approx(2.0));
        CHECK(s.below == doctest::Approx(2.0));

        const Line2 off({0.5, 0}, {0, -1});
        const CutPair u = oblique_cut_volumes(sq, off, 1.0);
        CHECK(u.above != doctest::Approx(u.below));
        CHECK(u.above == doctest::Approx(2.25));
        CHECK(u.below == doctest::Approx(0.25));
        CHECK(u.above - u.below == doctest::Approx(first_moment(sq, off)));
        CHECK(u.above - u.below == doctest::Approx(2.0));

        CHECK(kind_of([&] { oblique_cut_volumes(sq, off, 0.0); }) == ErrorKind::InvalidArgument);
    }

    TEST_CASE("oblique cut lateral areas")
    {
        const CutPair c = oblique_cut_lateral_areas(CircleArc{{0, 0}, 1.0}, Line2({0, 0}, {1, 1}), 1.0);
        CHECK(c.above == doctest::Approx(2.0));
        CHECK(c.below == doctest::Approx(2.0));

        const Curve sq = boundary(square(2.0, {-1, -1}));
        // Right edge 2 * 1 plus two half edges of integral 1/2 each.
        const CutPair s = oblique_cut_lateral_areas(sq, Line2::vertical(0.0), 1.0);
        const double quad = oracle::boundary_integral(sq, [](Point2 p) { return std::max(p.x, 0.0); }, 4096);
        CHECK(s.above == doctest::Approx(3.0));
        CHECK(s.below == doctest::Approx(3.0));
        CHECK(s.above == doctest::Approx(quad).epsilon(1e-9));

        const Line2 off = Line2::vertical(-0.3);
        const CutPair u = oblique_cut_lateral_areas(sq, off, 1.5);
        CHECK(u.above - u.below == doctest::Approx(1.5 * first_moment_curve(sq, off)));

        CHECK(kind_of([] {
                  oblique_cut_lateral_areas(Polyline{{{0, 0}, {1, 0}}, false}, Line2::vertical(0.0), 1.0);
              }) == ErrorKind::InvalidArgument);
    }

    TEST_CASE("property: centroid cuts balance and offsets shift by slope * area * offset")
    {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 200; ++i) {
            const Polygon p = random_star_polygon(rng, {uniform(rng, -3, 3), uniform(rng, -3, 3)});
            const double slope = uniform(rng, 0.1, 5.0);
            const Line2 through = random_line_through(rng, centroid_region(p));
            const CutPair balanced = oblique_cut_volumes(p, through, slope);
            CHECK(same(balanced.above, balanced.below, 1e-10));

            const double delta = uniform(rng, -0.5, 0.5);
            const Line2 shifted(through.point() - delta * through.normal(), through.direction());
            const CutPair cut = oblique_cut_volumes(p, shifted, slope);
            const double expect = slope * area(p) * delta;
            CHECK(std::abs(cut.above - cut.below - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));

            const Curve edge = boundary(p);
            const CutPair lat = oblique_cut_lateral_areas(edge, random_line_through(rng, centroid_curve(edge)), slope);
            CHECK(same(lat.above, lat.below, 1e-10));
        }
    }

    TEST_CASE("guldin_volume")
    {
        const Profile half(right_half_disk({0, 0}, 1.0, 1 << 17));
        CHECK(guldin_volume(half) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-9));
        CHECK(guldin_volume(Profile(Disk{{3, 0}, 1.0})) == doctest::Approx(59.217626).epsilon(1e-7));
        CHECK(guldin_volume(Profile(square(1.0, {1, 0}))) == doctest::Approx(9.424778).epsilon(1e-7));
        CHECK(kind_of([] { guldin_volume(Profile(Polygon({{1, 0}, {2, 0}, {3, 0}}))); }) ==
              ErrorKind::DegenerateRegion);
    }

    TEST_CASE("torus volume against Monte Carlo")
    {
        const Solid torus = SolidOfRevolution{Profile(Disk{{3, 0}, 1.0})};
        const auto inside = [&](Point3 p) { return contains(torus, p); };
        const oracle::Estimate e = oracle::mc_volume(inside, bounding_box(torus), 1000000, 42);
        CHECK(std::abs(e.mean - 6.0 * pi * pi) <= 0.01 * 6.0 * pi * pi);
        CHECK(volume(torus) == doctest::Approx(6.0 * pi * pi));
    }

    TEST_CASE("guldin_surface")
    {
        const Line2 axis = revolution_axis();
        CHECK(guldin_surface(CircleArc{{0, 0}, 1.0, -pi / 2, pi}, axis) == doctest::Approx(12.566371).epsilon(1e-7));
        CHECK(guldin_surface(CircleArc{{3, 0}, 1.0}, axis) == doctest::Approx(118.435253).epsilon(1e-7));
        const double quad =
            2.0 * pi * oracle::boundary_integral(CircleArc{{3, 0}, 1.0}, [](Point2 p) { return p.x; }, 4096);
        CHECK(guldin_surface(CircleArc{{3, 0}, 1.0}, axis) == doctest::Approx(quad).epsilon(1e-9));
        CHECK(guldin_surface(boundary(square(1.0, {1.5, -0.5})), axis) == doctest::Approx(50.265482).epsilon(1e-7));
        CHECK(kind_of([&] { guldin_surface(CircleArc{{0.5, 0}, 1.0}, axis); }) == ErrorKind::AxisCrossing);
        CHECK(kind_of([&] { guldin_surface(Polyline{{{1, 1}, {1, 1}}, false}, axis); }) ==
              ErrorKind::DegenerateCurve);
    }

    TEST_CASE("property: Guldin consistency with the unfolded cylinder")
    {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 100; ++i) {
            const Polygon p = random_star_polygon(rng, {uniform(rng, 1.1, 5.0), uniform(rng, -2, 2)});
            const Profile prof(p);
            const HeightFieldCylinder unfolded{p, 0.0, 2.0 * pi};
            CHECK(same(guldin_volume(prof), volume(unfolded), 1e-12));
            CHECK(same(guldin_volume(prof), volume(SolidOfRevolution{prof}), 1e-12));
            CHECK(same(guldin_surface(boundary(p), revolution_axis()), lateral_area(unfolded), 1e-12));
            CHECK(same(guldin_surface(boundary(p), revolution_axis()), lateral_area(SolidOfRevolution{prof}), 1e-12));
        }
    }

    TEST_CASE("property: hoof volume and lateral area are proportional to height")
    {
        std::mt19937_64 rng(44);
        for (double r : {0.5, 1.0, 3.0}) {
            const double v1 = volume(Hoof{r, 1.0});
            const double l1 = lateral_area(Hoof{r, 1.0});
            for (int i = 0; i < 50; ++i) {
                const double h = uniform(rng, 0.01, 100.0);
                CHECK(same(volume(Hoof{r, h}) / h, v1, 1e-12));
                CHECK(same(lateral_area(Hoof{r, h}) / h, l1, 1e-12));
            }
        }
    }

    TEST_CASE("membership and bounding boxes")
    {
        const Solid hoof = Hoof{1.0, 2.0};
        CHECK(contains(hoof, {0.5, 0.0, 0.9}));
        CHECK_FALSE(contains(hoof, {0.5, 0.0, 1.1}));
        CHECK_FALSE(contains(hoof, {-0.1, 0.0, 0.0}));
        const Box3 b = bounding_box(hoof);
        CHECK(b.hi.z >= 2.0);
        CHECK(contains(Solid{Sphere{1.0}}, {0.5, 0.5, 0.5}));
        CHECK_FALSE(contains(Solid{Sphere{1.0}}, {0.6, 0.6, 0.6}));
        const Solid cone = Cone{Disk{{0, 0}, 1.0}, {0, 0, 3}};
        CHECK(contains(cone, {0.0, 0.0, 2.9}));
        CHECK_FALSE(contains(cone, {0.5, 0.0, 2.0}));
    }
}
