#pragma once

#include "alinv/subspace.hpp"

namespace alinv {

inline constexpr size_t kClosureCap = 10000;

/// One semilinear map v -> M * frobenius^j(v). Linear elements carry j = 0.
struct SemilinearElement {
    uint32_t frobenius_power;
    Matrix matrix;

    bool operator==(const SemilinearElement& o) const {
        return frobenius_power == o.frobenius_power && matrix == o.matrix;
    }
};

/// Composition (j1,M1) ∘ (j2,M2) = (j1+j2 mod n, M1 · frobenius^j1(M2)).
SemilinearElement compose(const SemilinearElement& a, const SemilinearElement& b);

std::vector<uint32_t> act(const SemilinearElement& g, const std::vector<uint32_t>& v);
Subspace act(const SemilinearElement& g, const Subspace& a);

/// A finite group of invertible matrices (possibly semilinear pairs) acting
/// on F^d, materialized as the full element list with the identity first.
/// Closed under composition. Immutable after closure.
class MatrixGroup {
public:
    /// Breadth-first closure of the generators, deterministic element order
    /// (discovery order from sorted generators). Empty generator list gives
    /// the trivial group.
    static MatrixGroup close(const Field& f, size_t dim,
                             std::vector<SemilinearElement> generators,
                             size_t cap = kClosureCap);

    /// Convenience for purely linear generators.
    static MatrixGroup close_linear(const Field& f, size_t dim, std::vector<Matrix> generators,
                                    size_t cap = kClosureCap);

    size_t order() const { return elements_.size(); }
    size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    const std::vector<SemilinearElement>& elements() const { return elements_; }
    const SemilinearElement& element(size_t i) const { return elements_[i]; }

    bool is_linear() const;

    /// Matrices of a linear group (fails on semilinear elements).
    std::vector<Matrix> linear_elements() const;

private:
    MatrixGroup(Field f, size_t dim, std::vector<SemilinearElement> elements)
        : field_(std::move(f)), dim_(dim), elements_(std::move(elements)) {}

    Field field_;
    size_t dim_;
    std::vector<SemilinearElement> elements_;
};

/// Deduplicated canonical list of { g·A : g in G }; G permutes it setwise.
std::vector<Subspace> orbit_subspace(const MatrixGroup& g, const Subspace& a);

struct CollectionR {
    size_t raw;      // max over ordered pairs of quotient_dim(A_x, A_y)
    size_t reported; // max(raw, 1), the r the theorems assume
};

CollectionR compute_r(const std::vector<Subspace>& xs);

/// Permutations in one-line notation on {0, ..., degree-1}, identity first,
/// closed under composition.
class PermGroup {
public:
    static PermGroup close(size_t degree, std::vector<std::vector<uint32_t>> generators,
                           size_t cap = kClosureCap);

    size_t degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const std::vector<std::vector<uint32_t>>& elements() const { return elements_; }

private:
    PermGroup(size_t degree, std::vector<std::vector<uint32_t>> elements)
        : degree_(degree), elements_(std::move(elements)) {}

    size_t degree_;
    std::vector<std::vector<uint32_t>> elements_;
};

} // namespace alinv
