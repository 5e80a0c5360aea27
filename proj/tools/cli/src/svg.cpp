#include "igeo/svg.hpp"

#include <cmath>
#include <cstdio>

namespace igeo {

std::string format_fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s(buf);
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) {
        return digits > 0 ? "0." + std::string(static_cast<std::size_t>(digits), '0') : "0";
    }
    return s;
}

namespace {

std::string escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

SvgDocument::SvgDocument(indiv::Box2 window, double pixels_per_unit, std::string title)
    : window_(window), scale_(pixels_per_unit), title_(std::move(title))
{
}

std::string SvgDocument::x(double wx) const { return format_fixed((wx - window_.lo.x) * scale_); }
std::string SvgDocument::y(double wy) const { return format_fixed((window_.hi.y - wy) * scale_); }

std::string SvgDocument::points(const std::vector<indiv::Point2>& pts) const
{
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) {
            s += ' ';
        }
        s += x(pts[i].x) + ',' + y(pts[i].y);
    }
    return s;
}

void SvgDocument::tally(std::string_view cls) { ++counts_[std::string(cls)]; }

void SvgDocument::polygon(const std::vector<indiv::Point2>& pts, std::string_view cls)
{
    body_ += "  <polygon class=\"" + std::string(cls) + "\" points=\"" + points(pts) + "\"/>\n";
    tally(cls);
}

void SvgDocument::polyline(const std::vector<indiv::Point2>& pts, std::string_view cls)
{
    body_ += "  <polyline class=\"" + std::string(cls) + "\" points=\"" + points(pts) + "\"/>\n";
    tally(cls);
}

void SvgDocument::rect(indiv::Point2 lo, indiv::Point2 hi, std::string_view cls)
{
    body_ += "  <rect class=\"" + std::string(cls) + "\" x=\"" + x(lo.x) + "\" y=\"" + y(hi.y) + "\" width=\"" +
             format_fixed((hi.x - lo.x) * scale_) + "\" height=\"" + format_fixed((hi.y - lo.y) * scale_) + "\"/>\n";
    tally(cls);
}

void SvgDocument::line(indiv::Point2 a, indiv::Point2 b, std::string_view cls)
{
    body_ += "  <line class=\"" + std::string(cls) + "\" x1=\"" + x(a.x) + "\" y1=\"" + y(a.y) + "\" x2=\"" +
             x(b.x) + "\" y2=\"" + y(b.y) + "\"/>\n";
    tally(cls);
}

void SvgDocument::circle(indiv::Point2 c, double r, std::string_view cls)
{
    body_ += "  <circle class=\"" + std::string(cls) + "\" cx=\"" + x(c.x) + "\" cy=\"" + y(c.y) + "\" r=\"" +
             format_fixed(r * scale_) + "\"/>\n";
    tally(cls);
}

void SvgDocument::text(indiv::Point2 at, std::string_view content, std::string_view cls)
{
    body_ += "  <text class=\"" + std::string(cls) + "\" x=\"" + x(at.x) + "\" y=\"" + y(at.y) + "\">" +
             escape(content) + "</text>\n";
    tally(cls);
}

std::string SvgDocument::str() const
{
    const std::string w = format_fixed((window_.hi.x - window_.lo.x) * scale_);
    const std::string h = format_fixed((window_.hi.y - window_.lo.y) * scale_);
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
         "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
    s += "  <title>" + escape(title_) + "</title>\n";
    s += "  <style>\n"
         "    .disk, .profile { fill: #dde8f4; stroke: #1f4e79; stroke-width: 1.5 }\n"
         "    .tooth { fill: #f4e3c1; stroke: #8a5a00; stroke-width: 1 }\n"
         "    .outer { fill: #f6d5d5; stroke: #a33; stroke-width: 0.5 }\n"
         "    .inner { fill: #cfe8cf; stroke: #363; stroke-width: 0.5 }\n"
         "    .baseline, .axis { stroke: #000; stroke-width: 1.5 }\n"
         "    .curve { fill: none; stroke: #1f4e79; stroke-width: 1.5 }\n"
         "    .centroid { fill: #c00 }\n"
         "    .boundary-centroid { fill: none; stroke: #c00; stroke-width: 1.5 }\n"
         "    text { font-family: sans-serif; font-size: 12px }\n"
         "  </style>\n";
    s += body_;
    s += "</svg>\n";
    return s;
}

} // namespace igeo
