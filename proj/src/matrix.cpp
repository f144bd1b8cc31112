#include "alinv/matrix.hpp"

namespace alinv {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) fail(Errc::field_mismatch, "matrices over different fields");
}

} // namespace

Matrix Matrix::identity(const Field& f, size_t d) {
    Matrix m(f, d, d);
    for (size_t i = 0; i < d; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const Field& f, size_t cols,
                         const std::vector<std::vector<uint32_t>>& rows) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(Errc::dimension_mismatch, "ragged row list");
        for (size_t j = 0; j < cols; ++j) {
            f.check_element(rows[i][j]);
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

std::vector<uint32_t> Matrix::row(size_t i) const {
    return std::vector<uint32_t>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

bool Matrix::is_zero() const {
    for (uint32_t v : e_)
        if (v != 0) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) fail(Errc::dimension_mismatch, "product shape mismatch");
    const Field& f = a.field();
    Matrix r(f, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                uint32_t t = f.mul(aik, b.at(k, j));
                if (t != 0) r.set(i, j, f.add(r.at(i, j), t));
            }
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::dimension_mismatch, "sum shape mismatch");
    const Field& f = a.field();
    Matrix r(f, a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.set(i, j, f.add(a.at(i, j), b.at(i, j)));
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        fail(Errc::dimension_mismatch, "difference shape mismatch");
    const Field& f = a.field();
    Matrix r(f, a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.set(i, j, f.sub(a.at(i, j), b.at(i, j)));
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix r(m.field(), m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.set(j, i, m.at(i, j));
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) fail(Errc::dimension_mismatch, "vstack width mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) fail(Errc::dimension_mismatch, "hstack height mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Matrix scale(const Matrix& m, uint32_t c) {
    const Field& f = m.field();
    Matrix r(f, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.set(i, j, f.mul(m.at(i, j), c));
    return r;
}

Matrix frobenius(const Matrix& m, uint32_t j) {
    const Field& f = m.field();
    Matrix r(f, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t k = 0; k < m.cols(); ++k) r.set(i, k, f.frobenius(m.at(i, k), j));
    return r;
}

Rref rref(const Matrix& m) {
    const Field& f = m.field();
    Matrix w = m;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
        size_t sel = w.rows();
        for (size_t i = r; i < w.rows(); ++i)
            if (w.at(i, col) != 0) { sel = i; break; }
        if (sel == w.rows()) continue;
        if (sel != r)
            for (size_t j = 0; j < w.cols(); ++j) {
                uint32_t t = w.at(r, j);
                w.set(r, j, w.at(sel, j));
                w.set(sel, j, t);
            }
        uint32_t piv_inv = f.inv(w.at(r, col));
        for (size_t j = col; j < w.cols(); ++j) w.set(r, j, f.mul(w.at(r, j), piv_inv));
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == r) continue;
            uint32_t c = w.at(i, col);
            if (c == 0) continue;
            for (size_t j = col; j < w.cols(); ++j)
                w.set(i, j, f.sub(w.at(i, j), f.mul(c, w.at(r, j))));
        }
        pivots.push_back(col);
        ++r;
    }
    Matrix reduced(f, r, w.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < w.cols(); ++j) reduced.set(i, j, w.at(i, j));
    return Rref{std::move(reduced), r, std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
    const Field& f = m.field();
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    size_t nfree = m.cols() - r.rank;
    Matrix basis(f, nfree, m.cols());
    size_t out = 0;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out, free_col, 1);
        for (size_t t = 0; t < r.rank; ++t)
            basis.set(out, r.pivots[t], f.neg(r.reduced.at(t, free_col)));
        ++out;
    }
    return basis;
}

std::optional<std::vector<uint32_t>> solve(const Matrix& a, const std::vector<uint32_t>& b) {
    if (b.size() != a.rows()) fail(Errc::dimension_mismatch, "rhs length mismatch");
    const Field& f = a.field();
    Matrix rhs(f, a.rows(), 1);
    for (size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
    Rref r = rref(hstack(a, rhs));
    // Inconsistent iff the augmented column is a pivot.
    for (size_t c : r.pivots)
        if (c == a.cols()) return std::nullopt;
    std::vector<uint32_t> x(a.cols(), 0);
    for (size_t t = 0; t < r.rank; ++t) x[r.pivots[t]] = r.reduced.at(t, a.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::not_invertible, "non-square matrix");
    Rref r = rref(hstack(m, Matrix::identity(m.field(), m.rows())));
    if (r.rank < m.rows()) fail(Errc::not_invertible, "singular matrix");
    for (size_t t = 0; t < m.rows(); ++t)
        if (r.pivots[t] != t) fail(Errc::not_invertible, "singular matrix");
    Matrix inv(m.field(), m.rows(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.rows(); ++j) inv.set(i, j, r.reduced.at(i, m.cols() + j));
    return inv;
}

std::vector<uint32_t> operator*(const Matrix& a, const std::vector<uint32_t>& v) {
    if (v.size() != a.cols()) fail(Errc::dimension_mismatch, "vector length mismatch");
    const Field& f = a.field();
    std::vector<uint32_t> r(a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            r[i] = f.add(r[i], f.mul(a.at(i, j), v[j]));
    return r;
}

} // namespace alinv
