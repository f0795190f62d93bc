#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hd::cli {

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

/// 7 significant digits, the precision of the published tables.
std::string format_energy(double value);

/// One output value in both renderings.
struct Cell {
    std::string csv;
    nlohmann::json json;
};

Cell cell(const std::string& text);
Cell cell(const char* text);
Cell cell(int value);
Cell cell(bool value);
/// Rounded to 7 significant digits.
Cell cell(double value);
/// "not-real" / null when empty.
Cell cell(const std::optional<double>& value);
/// Empty / null.
Cell empty_cell();

/// CSV with a header line, or one JSON object per line.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format, std::vector<std::string> columns);

    void comment(const std::string& key, const Cell& value);
    void row(const std::vector<Cell>& cells);

private:
    void header();

    std::ostream& out_;
    Format format_;
    std::vector<std::string> columns_;
    bool header_done_ = false;
};

} // namespace hd::cli
