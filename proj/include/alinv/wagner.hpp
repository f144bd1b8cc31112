#pragma once

#include <cstdint>
#include <optional>

#include "alinv/group.hpp"

namespace alinv {

/// Hard cap on |X|: the subset search below is exponential in |X|.
inline constexpr size_t kDefaultCollectionCap = 16;

/// Saturating r * (r+1)^(r+1), the certified dimension bound.
uint64_t theorem_dim_bound(uint64_t r);

/// Saturating base^e.
uint64_t pow_sat(uint64_t base, uint64_t e);

/// Full transcript of one approximation run. Witness indices refer to the
/// canonical order of the input collection (canonical_collection).
struct WagnerCertificate {
    size_t r = 0;
    std::vector<size_t> h_table;                       // h(0) .. h(r)
    int case_id = 2;                                   // 1 or 2
    std::optional<size_t> chosen_m;                    // case 1 only
    std::vector<std::vector<size_t>> witness_subsets;  // the S used to build W
    Subspace W;
    // per x: (dim W/(W∩A_x), dim A_x/(W∩A_x)), aligned with the sorted X
    std::vector<std::pair<size_t, size_t>> per_x_bounds;
    uint64_t bound_codim = 0; // = r
    uint64_t bound_dim = 0;   // = r(r+1)^(r+1)
};

/// Whether S (indices into X) lies in the class 𝒮_m: with A_S the
/// intersection over S, dim (A_S+A_x)/A_x <= m for every x in X.
bool in_class_m(const std::vector<size_t>& subset, const std::vector<Subspace>& xs, size_t m);

struct HResult {
    size_t h;                                      // min |S| over S in 𝒮_m
    std::vector<std::vector<size_t>> witnesses;    // all members of that size
};

/// h(m) with every witness of the minimal cardinality. X finite makes h(m)
/// always finite: S = X lies in 𝒮_0.
HResult compute_h(const std::vector<Subspace>& xs, size_t m,
                  size_t collection_cap = kDefaultCollectionCap);

/// The constructive approximation: sorts X canonically, checks the pairwise
/// hypothesis against r (computing r when absent), picks Case 1 or Case 2,
/// builds W and certifies both bounds. Pure function of (X, r).
WagnerCertificate wagner_approximate(const std::vector<Subspace>& xs,
                                     std::optional<size_t> r = std::nullopt,
                                     size_t collection_cap = kDefaultCollectionCap);

/// True iff g·W = W (canonical-form equality) for every g in G.
bool certify_invariance(const MatrixGroup& g, const Subspace& w);

/// Rebuilds W from a certificate's witness subsets over the sorted X; used
/// by tests and the independent verifier.
Subspace rebuild_w(const std::vector<Subspace>& sorted_xs,
                   const std::vector<std::vector<size_t>>& witness_subsets);

} // namespace alinv
