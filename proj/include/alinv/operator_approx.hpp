#pragma once

#include "alinv/wagner.hpp"

namespace alinv {

/// A common abstract group acting on V and V', given as index-paired
/// invertible matrices (identity pair first), plus the operator T: V -> V'.
struct OperatorInstance {
    Field field;
    size_t dim_v;
    size_t dim_w;
    std::vector<std::pair<Matrix, Matrix>> pairs; // full closed list
    Matrix T;                                     // dim_w x dim_v
};

/// Closes paired generators under componentwise product. Rejects pairings
/// that fail to respect composition (two pairs sharing a V-side element
/// with different V'-sides).
OperatorInstance make_operator_instance(const Field& f, size_t dim_v, size_t dim_w,
                                        std::vector<std::pair<Matrix, Matrix>> generator_pairs,
                                        Matrix t, size_t cap = kClosureCap);

struct OperatorCertificate {
    size_t r = 0;            // max over g of rk(g T g^-1 - T)
    WagnerCertificate inner; // run over the graph orbit in V ⊕ V'
    Subspace K;              // { v' : (0,v') in W } inside V'
    Subspace I;              // p1(W) inside V
    Matrix T0;               // exactly equivariant
    size_t rank_defect = 0;  // rk(T - T0)
    uint64_t bound = 0;      // 2r + r(r+1)^(r+1)
};

/// The graph {(v, Tv)} as a subspace of V ⊕ V'; its basis is [I | T^t].
Subspace graph(const Matrix& t);

enum class ProjectorMode { onto, killing };

/// Maschke averaging: (1/|G|) Σ g Q g^-1 of a coordinate projector Q onto U.
/// mode onto: image U; mode killing: kernel U, image a G-invariant
/// complement. Requires char not dividing |G| and U invariant.
Matrix invariant_projector(const std::vector<Matrix>& group, const Subspace& u,
                           ProjectorMode mode);

/// Plain coordinate projector onto the pivot columns of U's basis; not
/// equivariant by itself, the averaging seed.
Matrix coordinate_projector(const Subspace& u);

OperatorCertificate approximate_operator(const OperatorInstance& inst,
                                         size_t collection_cap = kDefaultCollectionCap);

/// g acting on operators: g_W T g_V^-1.
Matrix conjugate_operator(const Matrix& t, const Matrix& g_v, const Matrix& g_w);

/// { v' : (0, v') in W } as a subspace of V', for W inside V ⊕ V'.
Subspace extract_k(const Subspace& w, size_t dim_v, size_t dim_w);

/// p1(W) inside V.
Subspace project_first(const Subspace& w, size_t dim_v, size_t dim_w);

} // namespace alinv
