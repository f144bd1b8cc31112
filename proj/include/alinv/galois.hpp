#pragma once

#include "alinv/operator_approx.hpp"

namespace alinv {

/// E = GF(p^n) over k = GF(p) with the Galois group generated by Frobenius.
struct GaloisContext {
    Field E;
    size_t dim_v;
    size_t dim_w = 0; // second ambient dimension, operators only

    Field prime_field() const { return Field::gf(E.p(), 1); }
};

/// The n semilinear elements (frobenius_power j, identity), the full Galois
/// group of E/k acting on E^ambient.
MatrixGroup frobenius_group(const GaloisContext& ctx, size_t ambient);

/// sigma^j A: entrywise Frobenius on the basis, re-canonicalized.
Subspace conjugate_subspace(const GaloisContext& ctx, const Subspace& a, uint32_t j);

/// Basis over k of { w in W : sigma w = w } for a Frobenius-stable W.
/// Galois descent guarantees dim_k = dim_E W and that the E-span recovers
/// W; both are asserted. Entries of the result lie in {0, ..., p-1}.
Matrix fixed_space(const GaloisContext& ctx, const Subspace& w);

struct DescentCertificate {
    size_t r = 0;            // max_j dim_E A/(A ∩ sigma^j A)
    WagnerCertificate inner; // over the conjugate orbit
    Subspace W;              // Frobenius-stable E-subspace
    Matrix W0;               // k-form: basis over GF(p), E-span = W
    size_t dim_w_over_wa = 0; // dim_E W/(W∩A)   <= r
    size_t dim_a_over_wa = 0; // dim_E A/(W∩A)   <= r(r+1)^(r+1)
    uint64_t bound_dim = 0;
};

DescentCertificate descend_subspace(const GaloisContext& ctx, const Subspace& a,
                                    size_t collection_cap = kDefaultCollectionCap);

struct OperatorDescentCertificate {
    size_t r = 0;            // max_j rk_E(sigma^j(T) - T)
    WagnerCertificate inner; // over the graph orbit in E^(d+d')
    Subspace K;              // E-side, inside V'
    Subspace I;              // E-side, inside V
    Matrix W0;               // k-form of the graph approximant
    Matrix T0;               // entries in GF(p)
    size_t rank_defect = 0;  // rk_E(T - (T0)_E)
    uint64_t bound = 0;      // 2r + r(r+1)^(r+1)
};

OperatorDescentCertificate descend_operator(const GaloisContext& ctx, const Matrix& t,
                                            size_t collection_cap = kDefaultCollectionCap);

/// Reinterprets a prime-field matrix inside E (encodings below p are shared).
Matrix lift_to_extension(const Field& e, const Matrix& m);

/// A k-basis of an E-subspace seen as a GF(p)-space of dimension n*dim_E,
/// inside k^(n*d) by coordinatewise digit expansion. Test instrumentation
/// for the dimension-scaling law.
Subspace flatten_to_prime(const GaloisContext& ctx, const Subspace& a);

} // namespace alinv
