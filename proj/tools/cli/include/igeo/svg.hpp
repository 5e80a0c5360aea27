#ifndef IGEO_SVG_HPP
#define IGEO_SVG_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "indiv/geometry.hpp"

namespace igeo {

// SVG 1.1 document over a world window. World y points up; all numbers are
// printed with fixed precision so equal inputs give equal bytes.
class SvgDocument {
public:
    SvgDocument(indiv::Box2 window, double pixels_per_unit, std::string title);

    void polygon(const std::vector<indiv::Point2>& points, std::string_view cls);
    void polyline(const std::vector<indiv::Point2>& points, std::string_view cls);
    void rect(indiv::Point2 lo, indiv::Point2 hi, std::string_view cls);
    void line(indiv::Point2 a, indiv::Point2 b, std::string_view cls);
    void circle(indiv::Point2 center, double radius, std::string_view cls);
    void text(indiv::Point2 at, std::string_view content, std::string_view cls);

    // Elements drawn so far, keyed by class.
    const std::map<std::string, int>& counts() const { return counts_; }

    std::string str() const;

private:
    indiv::Box2 window_;
    double scale_;
    std::string title_;
    std::string body_;
    std::map<std::string, int> counts_;

    std::string x(double wx) const;
    std::string y(double wy) const;
    std::string points(const std::vector<indiv::Point2>& pts) const;
    void tally(std::string_view cls);
};

std::string format_fixed(double v, int digits = 3);

} // namespace igeo

#endif
