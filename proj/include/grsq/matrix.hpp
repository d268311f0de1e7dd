#pragma once

#include <span>
#include <vector>

#include "grsq/rat.hpp"

namespace grsq {

/// Dense row-major matrix over Rat.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::span<const Rat> entries() const { return e_; }

    const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::span<const Rat> row(std::size_t r) const { return {e_.data() + r * cols_, cols_}; }

    bool is_zero() const;
    RatMatrix transposed() const;
    RatMatrix selected_columns(std::span<const std::size_t> cols) const;

    /// Exact rank by Gaussian elimination.
    std::size_t rank() const;
    /// Exact determinant; square matrices only.
    Rat det() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
/// Row vector times matrix: (1 x rows) * (rows x cols).
std::vector<Rat> row_times_matrix(std::span<const Rat> u, const RatMatrix& m);

}  // namespace grsq
