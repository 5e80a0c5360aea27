#include "igeo/report.hpp"

#include <map>
#include <sstream>

#ifndef IGEO_VERSION
#define IGEO_VERSION "0.0.0"
#endif

namespace igeo {

using nlohmann::ordered_json;

std::string_view tool_version() noexcept { return IGEO_VERSION; }

ReportWriter::ReportWriter(std::ostream& out, std::string command, ordered_json inputs) : out_(out)
{
    ordered_json header;
    header["schema_version"] = report_schema_version;
    header["tool"] = "igeo";
    header["version"] = tool_version();
    header["command"] = std::move(command);
    header["inputs"] = std::move(inputs);
    out_ << header.dump() << '\n';
}

void ReportWriter::record(std::string_view type, ordered_json fields)
{
    ordered_json line;
    line["type"] = type;
    for (auto& [key, value] : fields.items()) {
        line[key] = std::move(value);
    }
    out_ << line.dump() << '\n';
}

void ReportWriter::summary(int exit_code, bool pass)
{
    record("summary", {{"exit_code", exit_code}, {"pass", pass}});
}

namespace {

enum class Kind { Number, Integer, Boolean, String, Object };

bool has_kind(const ordered_json& v, Kind kind)
{
    switch (kind) {
    case Kind::Number: return v.is_number();
    case Kind::Integer: return v.is_number_integer();
    case Kind::Boolean: return v.is_boolean();
    case Kind::String: return v.is_string();
    case Kind::Object: return v.is_object();
    }
    return false;
}

const std::map<std::string, std::vector<std::pair<std::string, Kind>>>& record_fields()
{
    static const std::map<std::string, std::vector<std::pair<std::string, Kind>>> fields{
        {"assertion",
         {{"line", Kind::Integer},
          {"column", Kind::Integer},
          {"left", Kind::Number},
          {"right", Kind::Number},
          {"difference", Kind::Number},
          {"tolerance", Kind::Number},
          {"pass", Kind::Boolean}}},
        {"interval",
         {{"name", Kind::String},
          {"lo", Kind::Number},
          {"hi", Kind::Number},
          {"width", Kind::Number},
          {"slabs", Kind::Integer},
          {"method", Kind::String},
          {"closed_form", Kind::Number},
          {"pass", Kind::Boolean}}},
        {"value", {{"name", Kind::String}, {"value", Kind::Number}}},
        {"estimate",
         {{"name", Kind::String},
          {"mean", Kind::Number},
          {"standard_error", Kind::Number},
          {"samples", Kind::Integer},
          {"seed", Kind::Integer},
          {"reference", Kind::Number},
          {"pass", Kind::Boolean}}},
        {"quadrature",
         {{"name", Kind::String},
          {"value", Kind::Number},
          {"n", Kind::Integer},
          {"reference", Kind::Number},
          {"pass", Kind::Boolean}}},
        {"file", {{"path", Kind::String}, {"bytes", Kind::Integer}, {"elements", Kind::Object}}},
        {"error", {{"kind", Kind::String}, {"message", Kind::String}}},
        {"summary", {{"exit_code", Kind::Integer}, {"pass", Kind::Boolean}}},
    };
    return fields;
}

void require(const ordered_json& obj, const std::string& key, Kind kind, const std::string& where,
             std::vector<std::string>& problems)
{
    if (!obj.contains(key)) {
        problems.push_back(where + ": missing field '" + key + "'");
    } else if (!has_kind(obj.at(key), kind)) {
        problems.push_back(where + ": field '" + key + "' has the wrong type");
    }
}

} // namespace

std::vector<std::string> validate_report(std::string_view text)
{
    std::vector<std::string> problems;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    std::string last_type;
    while (std::getline(in, line)) {
        ++number;
        const std::string where = "line " + std::to_string(number);
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            problems.push_back(where + ": not valid JSON");
            continue;
        }
        if (!obj.is_object()) {
            problems.push_back(where + ": not a JSON object");
            continue;
        }
        if (number == 1) {
            require(obj, "schema_version", Kind::Integer, where, problems);
            require(obj, "tool", Kind::String, where, problems);
            require(obj, "version", Kind::String, where, problems);
            require(obj, "command", Kind::String, where, problems);
            require(obj, "inputs", Kind::Object, where, problems);
            if (obj.contains("schema_version") && obj["schema_version"] != report_schema_version) {
                problems.push_back(where + ": unsupported schema_version");
            }
            continue;
        }
        if (!obj.contains("type") || !obj["type"].is_string()) {
            problems.push_back(where + ": missing record type");
            continue;
        }
        last_type = obj["type"].get<std::string>();
        const auto fields = record_fields().find(last_type);
        if (fields == record_fields().end()) {
            problems.push_back(where + ": unknown record type '" + last_type + "'");
            continue;
        }
        for (const auto& [key, kind] : fields->second) {
            require(obj, key, kind, where, problems);
        }
    }
    if (number == 0) {
        problems.emplace_back("empty report");
    } else if (last_type != "summary") {
        problems.emplace_back("last record is not a summary");
    }
    return problems;
}

} // namespace igeo
