#include "core/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "core/error.hpp"

namespace drc {

Dataset::Dataset(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty())
        throw std::invalid_argument("dataset needs at least one column");
}

const std::string &Dataset::column_name(std::size_t c) const {
    if (c >= columns_.size())
        throw std::invalid_argument("column index out of range");
    return columns_[c];
}

void Dataset::append_row(const std::vector<double> &values) {
    if (values.size() != columns_.size())
        throw std::invalid_argument("row width does not match column count");
    numeric_.insert(numeric_.end(), values.begin(), values.end());
    ++rows_;
}

void Dataset::set_text(std::size_t row, std::size_t col, std::string text) {
    check(row, col);
    text_[{row, col}] = std::move(text);
}

void Dataset::check(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= columns_.size())
        throw std::invalid_argument("cell index out of range");
}

double Dataset::cell(std::size_t row, std::size_t col) const {
    check(row, col);
    return numeric_[row * columns_.size() + col];
}

bool Dataset::is_text(std::size_t row, std::size_t col) const {
    check(row, col);
    return text_.count({row, col}) != 0;
}

std::string Dataset::cell_string(std::size_t row, std::size_t col) const {
    check(row, col);
    auto it = text_.find({row, col});
    if (it != text_.end())
        return it->second;
    return format_number(numeric_[row * columns_.size() + col]);
}

std::string Dataset::format_number(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof buf, v,
                             std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string Dataset::to_string() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c)
            out += ',';
        out += columns_[c];
    }
    out += '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (c)
                out += ',';
            out += cell_string(r, c);
        }
        out += '\n';
    }
    return out;
}

void Dataset::write_csv(const std::string &path) const {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw io_error("cannot open for writing: " + path);
    const std::string body = to_string();
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f)
        throw io_error("write failed: " + path);
}

} // namespace drc
