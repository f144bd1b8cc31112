#pragma once

#include "alinv/matrix.hpp"

namespace alinv {

/// A linear subspace of F^d in canonical form: the basis is the RREF of any
/// generating set, with zero rows removed. Two subspaces are equal as sets
/// iff their basis matrices are identical. The zero subspace keeps an
/// explicit ambient dimension with an empty basis.
class Subspace {
public:
    /// Canonical subspace spanned by the rows of `vectors`.
    static Subspace span(const Matrix& vectors);
    static Subspace zero(const Field& f, size_t ambient_dim);
    static Subspace full(const Field& f, size_t ambient_dim);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    bool contains(const std::vector<uint32_t>& v) const;
    bool contains(const Subspace& o) const;

    bool is_zero() const { return basis_.rows() == 0; }
    bool is_full() const { return basis_.rows() == ambient_; }

    /// Total order key for deterministic sorting of collections.
    bool less_than(const Subspace& o) const;

private:
    Subspace(size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

    size_t ambient_;
    Matrix basis_; // RREF, no zero rows
};

/// Smallest subspace containing both; dim(A+B) = dim A + dim B - dim(A∩B).
Subspace sum(const Subspace& a, const Subspace& b);

/// Largest common subspace, by the Zassenhaus block construction.
Subspace intersect(const Subspace& a, const Subspace& b);

/// dim A/(A∩B) = dim(A+B) - dim B, without forming a quotient object.
size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Image { M v : v in A }; M maps columns of width ambient_dim(A).
Subspace apply_map(const Matrix& m, const Subspace& a);

/// Image of A under the entrywise Frobenius x -> x^(p^j). A semilinear
/// image of a subspace is again a subspace.
Subspace frobenius_image(const Subspace& a, uint32_t j);

/// Deduplicates and sorts a collection into its canonical order. This order
/// is part of the certificate format: witness indices refer to it.
std::vector<Subspace> canonical_collection(std::vector<Subspace> xs);

void require_compatible(const Subspace& a, const Subspace& b);

} // namespace alinv
