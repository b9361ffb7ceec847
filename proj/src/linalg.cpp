#include "superq/linalg.hpp"

#include <utility>

namespace superq {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0))
{
}

std::vector<std::size_t> Matrix::reduce()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pr = row;
        while (pr < rows_ && at(pr, col) == 0)
            ++pr;
        if (pr == rows_)
            continue;
        if (pr != row)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(at(pr, c), at(row, c));
        Scalar inv = field_.inv(at(row, col));
        for (std::size_t c = col; c < cols_; ++c)
            at(row, c) = field_.mul(at(row, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0)
                continue;
            Scalar factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                if (at(row, c) != 0)
                    at(r, c) = field_.sub(at(r, c), field_.mul(factor, at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return m.reduce().size(); }

std::vector<Vector> kernel(Matrix m)
{
    auto pivots = m.reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> out;
    const auto& f = m.field();
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols(), Scalar(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(m.at(r, free));
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    const auto& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    auto pivots = aug.reduce();
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols(), Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

Vector IncrementalSpan::reduced(Vector v) const
{
    for (const auto& [pivot, row] : rows_) {
        if (v[pivot] == 0)
            continue;
        Scalar factor = v[pivot];
        for (std::size_t c = 0; c < dimension_; ++c)
            if (row[c] != 0)
                v[c] = field_.sub(v[c], field_.mul(factor, row[c]));
    }
    return v;
}

bool IncrementalSpan::contains(const Vector& v) const
{
    auto r = reduced(v);
    for (const auto& x : r)
        if (x != 0)
            return false;
    return true;
}

bool IncrementalSpan::add(const Vector& v)
{
    auto r = reduced(v);
    std::size_t pivot = 0;
    while (pivot < dimension_ && r[pivot] == 0)
        ++pivot;
    if (pivot == dimension_)
        return false;
    Scalar inv = field_.inv(r[pivot]);
    for (auto& x : r)
        x = field_.mul(x, inv);
    for (auto& [p, row] : rows_) {
        if (row[pivot] == 0)
            continue;
        Scalar factor = row[pivot];
        for (std::size_t c = 0; c < dimension_; ++c)
            if (r[c] != 0)
                row[c] = field_.sub(row[c], field_.mul(factor, r[c]));
    }
    rows_.emplace_back(pivot, std::move(r));
    return true;
}

}  // namespace superq
