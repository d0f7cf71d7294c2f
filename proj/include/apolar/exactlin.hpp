#pragma once

#include "apolar/multipoly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace apolar {

// Dense row-major matrix over the rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }
    std::vector<Rational> column(std::size_t j) const;
    std::span<const Rational> entries() const noexcept { return entries_; }

    bool is_zero() const;
    ExactMatrix transpose() const;

    bool operator==(const ExactMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// [a | b]; row counts must agree.
ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

std::size_t rank(const ExactMatrix& m);

// Columns form the reduced-echelon basis of the right kernel: one column per free
// (non-pivot) column f, with a 1 in position f and zeros at the other free positions.
ExactMatrix kernel_basis(const ExactMatrix& m);

// Block matrix [a(i,j) * b]; row (i, k) sits at i * b.rows() + k, matching the
// product order of monomial_basis over concatenated groups.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

// dim(colspan(a) + colspan(b)).
std::size_t span_union_rank(const ExactMatrix& a, const ExactMatrix& b);

} // namespace apolar
