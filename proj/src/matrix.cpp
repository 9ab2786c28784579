#include "ciq/matrix.hpp"

#include "ciq/errors.hpp"

#include <cassert>
#include <utility>

namespace ciq {

Mat Mat::identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

bool Mat::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<Rational>>& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[row], m[piv]);
        Rational inv = Rational(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> to_rows(const Mat& m)
{
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m.at(r, c);
    return rows;
}

}  // namespace

Rational Mat::det() const
{
    assert(rows_ == cols_);
    auto m = to_rows(*this);
    Rational d = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && m[piv][col] == 0)
            ++piv;
        if (piv == rows_)
            return 0;
        if (piv != col) {
            std::swap(m[col], m[piv]);
            d = -d;
        }
        d *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m[r][col] == 0)
                continue;
            Rational f = m[r][col] * inv;
            for (std::size_t c = col; c < cols_; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    return d;
}

std::size_t Mat::rank() const
{
    auto m = to_rows(*this);
    return echelonize(m).size();
}

Mat Mat::inverse() const
{
    assert(rows_ == cols_);
    auto m = to_rows(*this);
    for (std::size_t r = 0; r < rows_; ++r) {
        m[r].resize(2 * cols_);
        m[r][cols_ + r] = 1;
    }
    auto pivots = echelonize(m);
    if (pivots.size() != rows_)
        throw DegenerateForm("matrix is singular");
    Mat inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            inv.at(r, c) = m[r][cols_ + c];
    return inv;
}

std::vector<std::vector<Rational>> Mat::nullspace() const
{
    auto m = to_rows(*this);
    auto pivots = echelonize(m);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(cols_);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> Mat::solve(const std::vector<Rational>& b) const
{
    assert(b.size() == rows_);
    auto m = to_rows(*this);
    for (std::size_t r = 0; r < rows_; ++r)
        m[r].push_back(b[r]);
    auto pivots = echelonize(m);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    std::vector<Rational> x(cols_);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = m[k][cols_];
    return x;
}

void Mat::append_row(const std::vector<Rational>& row)
{
    assert(rows_ == 0 || row.size() == cols_);
    if (rows_ == 0)
        cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

}  // namespace ciq
