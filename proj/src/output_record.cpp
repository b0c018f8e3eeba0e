#include "latsum/output_record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace latsum {

double round12(long double v) {
    if (!std::isfinite(v))
        return (double)v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return std::strtod(buf, nullptr);
}

std::string format_cell(const Cell& cell) {
    switch (cell.index()) {
    case 0:
        return std::to_string(std::get<std::int64_t>(cell));
    case 1:
        return std::to_string(std::get<std::uint64_t>(cell));
    case 2: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(cell));
        return buf;
    }
    default:
        return std::get<std::string>(cell);
    }
}

std::string to_csv(const OutputRecord& record) {
    std::string out;
    for (std::size_t i = 0; i < record.columns.size(); ++i) {
        if (i)
            out += ',';
        out += record.columns[i];
    }
    out += '\n';
    for (const std::vector<Cell>& row : record.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const OutputRecord& record) {
    nlohmann::json j;
    j["schema_version"] = record.schema_version;
    j["command"] = record.command;
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& kv : record.inputs)
        inputs[kv.first] = kv.second;
    j["inputs"] = std::move(inputs);
    j["columns"] = record.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const std::vector<Cell>& row : record.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const Cell& cell : row) {
            switch (cell.index()) {
            case 0:
                jr.push_back(std::get<std::int64_t>(cell));
                break;
            case 1:
                jr.push_back(std::get<std::uint64_t>(cell));
                break;
            case 2:
                jr.push_back(std::get<double>(cell));
                break;
            default:
                jr.push_back(std::get<std::string>(cell));
                break;
            }
        }
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["generated_at"] = record.generated_at;
    return j.dump(2) + "\n";
}

OutputRecord parse_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    OutputRecord record;
    record.schema_version = j.at("schema_version").get<std::string>();
    record.command = j.at("command").get<std::string>();
    const nlohmann::json& inputs = j.at("inputs");
    for (auto it = inputs.begin(); it != inputs.end(); ++it)
        record.inputs.emplace_back(it.key(), it.value().get<std::string>());
    record.columns = j.at("columns").get<std::vector<std::string>>();
    for (const nlohmann::json& jr : j.at("rows")) {
        std::vector<Cell> row;
        row.reserve(jr.size());
        for (const nlohmann::json& cell : jr) {
            if (cell.is_number_unsigned())
                row.emplace_back(cell.get<std::uint64_t>());
            else if (cell.is_number_integer())
                row.emplace_back(cell.get<std::int64_t>());
            else if (cell.is_number_float())
                row.emplace_back(cell.get<double>());
            else if (cell.is_string())
                row.emplace_back(cell.get<std::string>());
            else
                throw std::domain_error("parse_json: unsupported cell type");
        }
        record.rows.push_back(std::move(row));
    }
    record.generated_at = j.value("generated_at", std::string());
    return record;
}

bool cell_equal(const Cell& a, const Cell& b) {
    const bool a_str = std::holds_alternative<std::string>(a);
    const bool b_str = std::holds_alternative<std::string>(b);
    if (a_str || b_str)
        return a_str && b_str &&
               std::get<std::string>(a) == std::get<std::string>(b);
    // Numeric cells compare by value across signedness and width; every
    // 64-bit integer is exact in a long double's 64-bit mantissa.
    const auto to_ld = [](const Cell& c) -> long double {
        if (const auto* p = std::get_if<std::int64_t>(&c))
            return (long double)*p;
        if (const auto* p = std::get_if<std::uint64_t>(&c))
            return (long double)*p;
        return (long double)std::get<double>(c);
    };
    return to_ld(a) == to_ld(b);
}

bool record_equal(const OutputRecord& a, const OutputRecord& b) {
    if (a.schema_version != b.schema_version || a.command != b.command ||
        a.inputs != b.inputs || a.columns != b.columns ||
        a.rows.size() != b.rows.size())
        return false;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        if (a.rows[r].size() != b.rows[r].size())
            return false;
        for (std::size_t c = 0; c < a.rows[r].size(); ++c)
            if (!cell_equal(a.rows[r][c], b.rows[r][c]))
                return false;
    }
    return true;
}

std::string iso8601_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace latsum
