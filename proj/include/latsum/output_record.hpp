#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace latsum {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

// One command's tabular output: a fixed column list plus typed rows.
// Floating-point cells are pre-rounded to 12 significant digits so that
// identical invocations serialize byte-identically.
struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::string generated_at;
};

// Nearest double with 12 significant decimal digits.
double round12(long double v);

std::string format_cell(const Cell& cell);

// Header line plus one line per row; period decimal separator, no
// thousands grouping.
std::string to_csv(const OutputRecord& record);

std::string to_json(const OutputRecord& record);

OutputRecord parse_json(const std::string& text);

// Value equality; integer cells compare across signedness.
bool cell_equal(const Cell& a, const Cell& b);
bool record_equal(const OutputRecord& a, const OutputRecord& b);

// UTC timestamp for OutputRecord::generated_at.
std::string iso8601_now();

} // namespace latsum
