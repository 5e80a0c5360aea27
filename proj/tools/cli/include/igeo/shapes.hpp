#ifndef IGEO_SHAPES_HPP
#define IGEO_SHAPES_HPP

#include <string>
#include <vector>

#include "indiv/exhaustion.hpp"
#include "indiv/solids.hpp"

namespace igeo {

// Named shapes understood by `bounds` and `oracle`.
struct ShapeSpec {
    std::string name;
    double r = 1.0;
    double h = 1.0;
    double major = 3.0;   // torus only
};

const std::vector<std::string>& bounds_shapes();
const std::vector<std::string>& oracle_shapes();

// Width of the disk of radius r at height y in [-r, r].
indiv::WidthFunction disk_width(double r);

// Cross-section areas along the slicing axis.
indiv::SectionFunction sphere_sections(double r);
indiv::SectionFunction cone_sections(double r, double h);
indiv::SectionFunction hoof_sections(double r, double h);
indiv::SectionFunction torus_sections(double major, double r);

// Closed-form area (disk) or volume (solids) of the named shape.
double closed_form(const ShapeSpec& shape);

// True for planar shapes, whose slices are widths rather than sections.
bool is_planar(const ShapeSpec& shape);

indiv::MeasureInterval certified_bounds(const ShapeSpec& shape, int slices);

// Slab function of the shape, for drawing.
indiv::PiecewiseMonotone slice_function(const ShapeSpec& shape);

} // namespace igeo

#endif
