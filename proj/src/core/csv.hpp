#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace drc {

// Column-ordered table of numeric and text cells. Numeric cells are rendered
// with up to 12 significant digits (shortest round-trip within that budget),
// so identical inputs always produce byte-identical CSV output.
class Dataset {
  public:
    explicit Dataset(std::vector<std::string> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const std::string &column_name(std::size_t c) const;

    // Appends one row; the vector length must equal cols(). Text cells can be
    // set afterwards with set_text (numeric value is kept for cell()).
    void append_row(const std::vector<double> &values);
    void set_text(std::size_t row, std::size_t col, std::string text);

    double cell(std::size_t row, std::size_t col) const;
    bool is_text(std::size_t row, std::size_t col) const;
    // Rendered form of a cell (numeric formatting or the stored text).
    std::string cell_string(std::size_t row, std::size_t col) const;

    std::string to_string() const;
    void write_csv(const std::string &path) const; // throws io_error

    static std::string format_number(double v);

  private:
    void check(std::size_t row, std::size_t col) const;

    std::vector<std::string> columns_;
    std::vector<double> numeric_;                        // row-major
    std::map<std::pair<std::size_t, std::size_t>, std::string> text_;
    std::size_t rows_ = 0;
};

} // namespace drc
