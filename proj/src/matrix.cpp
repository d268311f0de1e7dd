#include "grsq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace grsq {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (e_.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::selected_columns(std::span<const std::size_t> cols) const {
    RatMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
            m.at(r, j) = at(r, cols[j]);
        }
    return m;
}

std::size_t RatMatrix::rank() const {
    std::vector<Rat> a = e_;
    auto cell = [&](std::size_t r, std::size_t c) -> Rat& { return a[r * cols_ + c]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && cell(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols_; ++c) std::swap(cell(pivot, c), cell(rank, c));
        Rat inv = cell(rank, col).inv();
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            if (cell(r, col).is_zero()) continue;
            Rat f = cell(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) cell(r, c) -= f * cell(rank, c);
        }
        ++rank;
    }
    return rank;
}

Rat RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<Rat> a = e_;
    auto cell = [&](std::size_t r, std::size_t c) -> Rat& { return a[r * cols_ + c]; };
    Rat result(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && cell(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return Rat();
        if (pivot != col) {
            for (std::size_t c = col; c < cols_; ++c) std::swap(cell(pivot, c), cell(col, c));
            result = -result;
        }
        result *= cell(col, col);
        Rat inv = cell(col, col).inv();
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (cell(r, col).is_zero()) continue;
            Rat f = cell(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) cell(r, c) -= f * cell(col, c);
        }
    }
    return result;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t i = 0; i < a.cols_; ++i) {
            const Rat& x = a.at(r, i);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out.at(r, c) += x * b.at(i, c);
        }
    return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    Rat acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

std::vector<Rat> row_times_matrix(std::span<const Rat> u, const RatMatrix& m) {
    if (u.size() != m.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
    std::vector<Rat> out(m.cols());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += u[i] * m.at(i, c);
    }
    return out;
}

}  // namespace grsq
