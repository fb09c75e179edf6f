#include "incmat/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace incmat {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const IntVec& d) {
    ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Int& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    }
    out.row_labels = row_labels;
    out.col_labels = other.col_labels;
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    ExactMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) + other.at(i, j);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Int& c) const {
    ExactMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) *= c;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    out.row_labels = col_labels;
    out.col_labels = row_labels;
    return out;
}

IntVec ExactMatrix::apply(const IntVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    IntVec out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0) out[i] += at(i, j) * x[j];
    return out;
}

RatVec ExactMatrix::apply(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    RatVec out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0) out[i] += Rat(at(i, j)) * x[j];
    return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack column mismatch");
    ExactMatrix out(top.rows_ + bottom.rows_, top.cols_);
    for (int i = 0; i < top.rows_; ++i)
        for (int j = 0; j < top.cols_; ++j) out.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows_; ++i)
        for (int j = 0; j < bottom.cols_; ++j) out.at(top.rows_ + i, j) = bottom.at(i, j);
    if (top.row_labels && bottom.row_labels) {
        out.row_labels = *top.row_labels;
        out.row_labels->insert(out.row_labels->end(), bottom.row_labels->begin(),
                               bottom.row_labels->end());
    }
    out.col_labels = top.col_labels;
    return out;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<int>& idx) const {
    ExactMatrix out(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < out.cols_; ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw std::invalid_argument("column index out of range");
        for (int i = 0; i < rows_; ++i) out.at(i, j) = at(i, idx[j]);
    }
    out.row_labels = row_labels;
    if (col_labels) {
        out.col_labels.emplace();
        for (int j : idx) out.col_labels->push_back((*col_labels)[j]);
    }
    return out;
}

bool ExactMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

std::string ExactMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    if (row_labels)
        for (const SubsetWord& s : *row_labels) out << "#row " << s.str() << '\n';
    if (col_labels)
        for (const SubsetWord& s : *col_labels) out << "#col " << s.str() << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) out << ' ';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

ExactMatrix ExactMatrix::from_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty matrix text");
    std::istringstream header(line);
    int rows = -1, cols = -1;
    if (!(header >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("bad matrix header line");
    ExactMatrix m(rows, cols);
    std::vector<SubsetWord> rlabels, clabels;
    int next_row = 0;
    while (next_row < rows && std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream tagged(line);
            std::string tag;
            tagged >> tag;
            std::string rest;
            std::getline(tagged, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            if (tag == "#row")
                rlabels.push_back(SubsetWord::parse(rest));
            else if (tag == "#col")
                clabels.push_back(SubsetWord::parse(rest));
            else
                throw std::invalid_argument("unknown label line '" + line + "'");
            continue;
        }
        std::istringstream row(line);
        for (int j = 0; j < cols; ++j) {
            std::string tok;
            if (!(row >> tok)) throw std::invalid_argument("short matrix row");
            m.at(next_row, j) = Int(tok);
        }
        std::string extra;
        if (row >> extra) throw std::invalid_argument("long matrix row");
        ++next_row;
    }
    if (next_row < rows) throw std::invalid_argument("missing matrix rows");
    if (!rlabels.empty()) {
        if (static_cast<int>(rlabels.size()) != rows)
            throw std::invalid_argument("row label count mismatch");
        m.row_labels = std::move(rlabels);
    }
    if (!clabels.empty()) {
        if (static_cast<int>(clabels.size()) != cols)
            throw std::invalid_argument("column label count mismatch");
        m.col_labels = std::move(clabels);
    }
    return m;
}

ExactMatrix ExactMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

std::string ExactMatrix::to_csv() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j > 0) out << ',';
            out << at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string vector_to_text(const IntVec& x, const std::optional<std::vector<SubsetWord>>& labels) {
    if (labels && labels->size() != x.size())
        throw std::invalid_argument("label count mismatch");
    std::ostringstream out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (labels) out << "#label " << (*labels)[i].str() << '\n';
        out << x[i] << '\n';
    }
    return out.str();
}

IntVec vector_from_text(std::istream& in, std::optional<std::vector<SubsetWord>>* labels) {
    IntVec out;
    std::vector<SubsetWord> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("#label", 0) == 0) {
            std::string rest = line.substr(6);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            found.push_back(SubsetWord::parse(rest));
            continue;
        }
        if (line[0] == '#') continue;
        std::istringstream row(line);
        std::string tok;
        row >> tok;
        std::string extra;
        if (tok.empty() || (row >> extra))
            throw std::invalid_argument("bad vector line '" + line + "'");
        out.push_back(Int(tok));
    }
    if (labels) {
        if (!found.empty() && found.size() != out.size())
            throw std::invalid_argument("label count mismatch");
        if (!found.empty()) *labels = std::move(found);
    }
    return out;
}

std::string rational_to_string(const Rat& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

}  // namespace incmat
