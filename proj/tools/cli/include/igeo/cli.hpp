#ifndef IGEO_CLI_HPP
#define IGEO_CLI_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "indiv/geometry.hpp"

namespace igeo {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_geometry = 3,
    exit_io = 4,
};

// Meridian section read from a profile file:
//   {"name": "square", "points": [[rho, z], ...]}
// The polyline is closed implicitly, so the last point must differ from the
// first.
struct ProfileFile {
    std::string name;
    std::vector<indiv::Point2> points;
};

// Unreadable or malformed input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ProfileFile read_profile_file(const std::string& path);

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace igeo

#endif
