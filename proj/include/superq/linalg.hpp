#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superq/field.hpp"

namespace superq {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field with exact Gauss-Jordan elimination.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> reduce();

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

std::size_t rank(Matrix m);
/// Basis of {v : M v = 0}, one vector per free column in ascending order.
std::vector<Vector> kernel(Matrix m);
/// A particular solution of M x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Echelon basis of a growing subspace of F^n, for membership tests and
/// greedy extension.  Vectors are kept fully reduced against each other.
class IncrementalSpan {
public:
    IncrementalSpan(Field field, std::size_t dimension) : field_(field), dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rows_.size(); }
    bool contains(const Vector& v) const;
    /// Adds v; returns false (and leaves the span unchanged) when v is dependent.
    bool add(const Vector& v);

private:
    Vector reduced(Vector v) const;

    Field field_;
    std::size_t dimension_;
    std::vector<std::pair<std::size_t, Vector>> rows_;  // (pivot column, normalized row)
};

/// Assigns dense column indices to sparse keys in first-seen order.
template <class Key>
class Coordinates {
public:
    std::size_t index(const Key& k)
    {
        auto [it, inserted] = index_.try_emplace(k, keys_.size());
        if (inserted)
            keys_.push_back(k);
        return it->second;
    }
    std::optional<std::size_t> find(const Key& k) const
    {
        auto it = index_.find(k);
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }
    std::size_t size() const { return keys_.size(); }
    const std::vector<Key>& keys() const { return keys_; }

private:
    std::map<Key, std::size_t> index_;
    std::vector<Key> keys_;
};

}  // namespace superq
