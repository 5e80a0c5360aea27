#ifndef INDIV_ERROR_HPP
#define INDIV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace indiv {

enum class ErrorKind {
    InvalidArgument,
    UnsupportedExact,
    UnsupportedRegion,
    UnsupportedMeasure,
    DegenerateRegion,
    DegenerateCurve,
    DegenerateSolid,
    InvalidMonotonicity,
    ToleranceNotReached,
    ApexHeightChanged,
    AxisCrossing,
    SlabOutOfRange,
    EmptyBox,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every precondition failure in the library surfaces as a GeometryError
// tagged with the kind the caller can switch on.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace indiv

#endif
