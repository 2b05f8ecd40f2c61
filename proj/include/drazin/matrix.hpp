#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drazin/rational.hpp"

namespace drazin {

/// Dense row-major matrix over Rational with exact elimination.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& rhs) const;
    bool operator==(const QMatrix& rhs) const;

    Rational trace() const;

    std::size_t rank() const;

    /// Basis of { x : Ax = 0 }.
    std::vector<std::vector<Rational>> nullspace() const;

    /// Solves Ax = b exactly; nullopt when inconsistent.  For underdetermined
    /// systems free variables are set to zero.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Row space kept incrementally in reduced echelon form (pivot entries 1,
/// pivot columns cleared in all other rows, rows ordered by pivot column).
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    /// Adds v to the span.  Returns false when v was already in the span.
    bool insert(std::vector<Rational> v);

    bool contains(const std::vector<Rational>& v) const;

    /// Coordinates of v in the stored echelon basis; nullopt when v is
    /// outside the span.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

    const std::vector<std::vector<Rational>>& basis() const { return rows_; }
    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }

private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace drazin
