#include "hd/cli/output.hpp"

#include "hd/errors.hpp"

#include <cmath>
#include <cstdio>

namespace hd::cli {

Format parse_format(const std::string& text)
{
    if (text == "csv")
        return Format::Csv;
    if (text == "json")
        return Format::Json;
    throw DomainError("unknown format '" + text + "' (expected csv or json)");
}

std::string format_energy(double value)
{
    if (!std::isfinite(value))
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.7g", value);
    return buf;
}

Cell cell(const std::string& text) { return {text, text}; }

Cell cell(const char* text) { return cell(std::string(text)); }

Cell cell(int value) { return {std::to_string(value), value}; }

Cell cell(bool value) { return {value ? "1" : "0", value}; }

Cell cell(double value)
{
    const std::string text = format_energy(value);
    if (!std::isfinite(value))
        return {text, nullptr};
    return {text, std::stod(text)};
}

Cell cell(const std::optional<double>& value)
{
    if (!value)
        return {"not-real", nullptr};
    return cell(*value);
}

Cell empty_cell() { return {"", nullptr}; }

namespace {

// RFC 4180 quoting for fields that carry separators or quotes.
std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace

RecordWriter::RecordWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns))
{
}

void RecordWriter::comment(const std::string& key, const Cell& value)
{
    if (format_ == Format::Csv) {
        out_ << "# " << key << "=" << value.csv << "\n";
    } else {
        nlohmann::json j;
        j[key] = value.json;
        out_ << j.dump() << "\n";
    }
}

void RecordWriter::header()
{
    if (header_done_ || format_ != Format::Csv)
        return;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out_ << (i ? "," : "") << columns_[i];
    out_ << "\n";
    header_done_ = true;
}

void RecordWriter::row(const std::vector<Cell>& cells)
{
    if (cells.size() != columns_.size())
        throw DomainError("row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
    if (format_ == Format::Csv) {
        header();
        for (std::size_t i = 0; i < cells.size(); ++i)
            out_ << (i ? "," : "") << csv_field(cells[i].csv);
        out_ << "\n";
        return;
    }
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < cells.size(); ++i)
        j[columns_[i]] = cells[i].json;
    out_ << j.dump() << "\n";
}

} // namespace hd::cli
