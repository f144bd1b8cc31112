#include "alinv/subspace.hpp"

#include <algorithm>

namespace alinv {

void require_compatible(const Subspace& a, const Subspace& b) {
    if (a.field() != b.field()) fail(Errc::field_mismatch, "subspaces over different fields");
    if (a.ambient_dim() != b.ambient_dim())
        fail(Errc::ambient_mismatch, "subspaces in different ambient spaces");
}

Subspace Subspace::span(const Matrix& vectors) {
    return Subspace(vectors.cols(), rref(vectors).reduced);
}

Subspace Subspace::zero(const Field& f, size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const Field& f, size_t ambient_dim) {
    return Subspace(ambient_dim, Matrix::identity(f, ambient_dim));
}

bool Subspace::contains(const std::vector<uint32_t>& v) const {
    if (v.size() != ambient_) fail(Errc::ambient_mismatch, "vector length mismatch");
    // Reduce v against the RREF basis; membership iff it reduces to zero.
    const Field& f = field();
    std::vector<uint32_t> w = v;
    for (size_t i = 0; i < basis_.rows(); ++i) {
        // pivot column of row i = first nonzero entry
        size_t pc = 0;
        while (pc < ambient_ && basis_.at(i, pc) == 0) ++pc;
        uint32_t c = w[pc];
        if (c == 0) continue;
        for (size_t j = pc; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
    }
    for (uint32_t x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    require_compatible(*this, o);
    if (o.dim() > dim()) return false;
    for (size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

bool Subspace::less_than(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.entries() < o.basis_.entries();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    const Field& f = a.field();
    size_t d = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return Subspace::zero(f, d);
    // Zassenhaus: RREF of [A | A; B | 0]. Rows whose left block vanished
    // carry a basis of the intersection in the right block.
    Matrix block(f, a.dim() + b.dim(), 2 * d);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < d; ++j) {
            block.set(i, j, a.basis().at(i, j));
            block.set(i, d + j, a.basis().at(i, j));
        }
    for (size_t i = 0; i < b.dim(); ++i)
        for (size_t j = 0; j < d; ++j) block.set(a.dim() + i, j, b.basis().at(i, j));
    Rref r = rref(block);
    Matrix inter(f, 0, d);
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < r.rank; ++i) {
        bool left_zero = true;
        for (size_t j = 0; j < d; ++j)
            if (r.reduced.at(i, j) != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        std::vector<uint32_t> row(d);
        for (size_t j = 0; j < d; ++j) row[j] = r.reduced.at(i, d + j);
        rows.push_back(std::move(row));
    }
    return Subspace::span(Matrix::from_rows(f, d, rows));
}

size_t quotient_dim(const Subspace& a, const Subspace& b) {
    require_compatible(a, b);
    return rank(vstack(a.basis(), b.basis())) - b.dim();
}

Subspace apply_map(const Matrix& m, const Subspace& a) {
    if (m.cols() != a.ambient_dim()) fail(Errc::dimension_mismatch, "map width mismatch");
    if (m.field() != a.field()) fail(Errc::field_mismatch, "map over a different field");
    // Row vectors transform by the transpose.
    return Subspace::span(a.basis() * transpose(m));
}

Subspace frobenius_image(const Subspace& a, uint32_t j) {
    return Subspace::span(frobenius(a.basis(), j));
}

std::vector<Subspace> canonical_collection(std::vector<Subspace> xs) {
    std::sort(xs.begin(), xs.end(),
              [](const Subspace& a, const Subspace& b) { return a.less_than(b); });
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace alinv
