#pragma once

#include "ciq/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ciq {

// Dense matrix over exact rationals. Everything here is plain Gaussian
// elimination; sizes stay desk-scale throughout.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Mat&) const = default;

    bool is_symmetric() const;
    Rational det() const;
    std::size_t rank() const;

    // Throws DegenerateForm if singular.
    Mat inverse() const;

    // Basis of the right null space, one vector per column.
    std::vector<std::vector<Rational>> nullspace() const;

    // One solution of A x = b, or nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    void append_row(const std::vector<Rational>& row);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace ciq
