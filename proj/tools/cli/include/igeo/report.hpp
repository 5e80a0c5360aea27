#ifndef IGEO_REPORT_HPP
#define IGEO_REPORT_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace igeo {

inline constexpr int report_schema_version = 1;

std::string_view tool_version() noexcept;

// JSON Lines report. The first line is a header echoing the command and its
// inputs; each following line is one record with a "type" field; the last
// line is the summary.
class ReportWriter {
public:
    ReportWriter(std::ostream& out, std::string command, nlohmann::ordered_json inputs);

    void record(std::string_view type, nlohmann::ordered_json fields);
    void summary(int exit_code, bool pass);

private:
    std::ostream& out_;
};

// Problems found in a report, one message per problem; empty when valid.
std::vector<std::string> validate_report(std::string_view text);

} // namespace igeo

#endif
