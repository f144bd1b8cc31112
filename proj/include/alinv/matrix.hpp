#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alinv/field.hpp"

namespace alinv {

/// Dense row-major matrix over a finite field, entries integer-encoded.
/// Immutable conventionally: operations return fresh values. Rows may be 0.
class Matrix {
public:
    Matrix(Field field, size_t rows, size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(const Field& f, size_t d);
    static Matrix from_rows(const Field& f, size_t cols,
                            const std::vector<std::vector<uint32_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    uint32_t at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { e_[i * cols_ + j] = v; }
    const std::vector<uint32_t>& entries() const { return e_; }

    std::vector<uint32_t> row(size_t i) const;

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<uint32_t> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& m, uint32_t c);

/// Entrywise Frobenius x -> x^(p^j).
Matrix frobenius(const Matrix& m, uint32_t j);

struct Rref {
    Matrix reduced; // RREF with zero rows removed
    size_t rank;
    std::vector<size_t> pivots;
};

/// Reduced row echelon form; the row space is preserved and the result is
/// canonical for it.
Rref rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Rows form a basis of the right null space { v : M v^T = 0 }.
Matrix kernel(const Matrix& m);

/// One solution x of A x = b, or nullopt when inconsistent.
std::optional<std::vector<uint32_t>> solve(const Matrix& a, const std::vector<uint32_t>& b);

Matrix inverse(const Matrix& m); // throws NotInvertible

/// Matrix-vector product A v.
std::vector<uint32_t> operator*(const Matrix& a, const std::vector<uint32_t>& v);

} // namespace alinv
