#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "incmat/subset.hpp"

namespace incmat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense matrix over the integers, arbitrary precision, row-major. Rows and
// columns optionally carry subset labels; arithmetic ignores labels and
// equality compares shape and entries only.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int n);
    static ExactMatrix diagonal(const IntVec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const ExactMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix scaled(const Int& c) const;
    ExactMatrix transpose() const;

    IntVec apply(const IntVec& x) const;
    RatVec apply(const RatVec& x) const;

    // Rows of `top` followed by rows of `bottom`; labels concatenate when both
    // operands carry them.
    static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

    // Keeps the given columns, in the given order.
    ExactMatrix select_columns(const std::vector<int>& idx) const;

    bool is_zero() const;

    // Text form: first line "rows cols", then per-row "#row <subset>" and
    // per-column "#col <subset>" label lines when labels are present, then
    // one line per row of space separated entries.
    std::string to_text() const;
    static ExactMatrix from_text(std::istream& in);
    static ExactMatrix from_text(const std::string& text);

    std::string to_csv() const;

    std::optional<std::vector<SubsetWord>> row_labels;
    std::optional<std::vector<SubsetWord>> col_labels;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

// One entry per line; each entry is preceded by a "#label <subset>" line when
// labels are present.
std::string vector_to_text(const IntVec& x, const std::optional<std::vector<SubsetWord>>& labels);
IntVec vector_from_text(std::istream& in, std::optional<std::vector<SubsetWord>>* labels = nullptr);

std::string rational_to_string(const Rat& r);  // "p/q", or "p" when q = 1

}  // namespace incmat
