#include "alinv/wagner.hpp"

#include <algorithm>

namespace alinv {

uint64_t pow_sat(uint64_t base, uint64_t e) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

uint64_t theorem_dim_bound(uint64_t r) {
    uint64_t t = pow_sat(r + 1, r + 1);
    if (r != 0 && t > UINT64_MAX / r) return UINT64_MAX;
    return r * t;
}

namespace {

void require_collection(const std::vector<Subspace>& xs, size_t cap) {
    if (xs.empty()) fail(Errc::empty_collection, "empty collection of subspaces");
    if (xs.size() > cap)
        fail(Errc::collection_too_large,
             "|X| = " + std::to_string(xs.size()) + " exceeds the subset-search cap " +
                 std::to_string(cap));
    for (const auto& x : xs) require_compatible(xs.front(), x);
}

size_t class_value(const Subspace& a_s, const std::vector<Subspace>& xs) {
    size_t worst = 0;
    for (const auto& x : xs) worst = std::max(worst, quotient_dim(a_s, x));
    return worst;
}

// class_of[mask] = minimal m with the subset in 𝒮_m, i.e. the max over x of
// dim (A_S+A_x)/A_x. Filled by DFS with incremental intersections so each
// A_S costs one intersect.
void sweep_dfs(const std::vector<Subspace>& xs, size_t start, uint32_t mask,
               const Subspace* prefix, std::vector<uint8_t>& class_of) {
    for (size_t i = start; i < xs.size(); ++i) {
        Subspace a_s = prefix == nullptr ? xs[i] : intersect(*prefix, xs[i]);
        uint32_t m2 = mask | (uint32_t(1) << i);
        class_of[m2] = uint8_t(std::min<size_t>(class_value(a_s, xs), 255));
        sweep_dfs(xs, i + 1, m2, &a_s, class_of);
    }
}

std::vector<uint8_t> sweep(const std::vector<Subspace>& xs) {
    std::vector<uint8_t> class_of(size_t(1) << xs.size(), 255);
    sweep_dfs(xs, 0, 0, nullptr, class_of);
    return class_of;
}

std::vector<size_t> mask_to_indices(uint32_t mask) {
    std::vector<size_t> idx;
    for (size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1) idx.push_back(i);
    return idx;
}

HResult h_from_sweep(const std::vector<uint8_t>& class_of, size_t k, size_t m) {
    for (size_t size = 1; size <= k; ++size) {
        HResult res{size, {}};
        for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
            if (size_t(__builtin_popcount(mask)) != size) continue;
            if (class_of[mask] <= m) res.witnesses.push_back(mask_to_indices(mask));
        }
        if (!res.witnesses.empty()) return res;
    }
    fail(Errc::internal_check_failed, "h(m) not found; S = X must lie in S_0"); // unreachable
}

Subspace intersect_indices(const std::vector<Subspace>& xs, const std::vector<size_t>& idx) {
    if (idx.empty()) fail(Errc::empty_subset, "empty subset has no intersection");
    Subspace a = xs[idx[0]];
    for (size_t t = 1; t < idx.size(); ++t) a = intersect(a, xs[idx[t]]);
    return a;
}

} // namespace

bool in_class_m(const std::vector<size_t>& subset, const std::vector<Subspace>& xs, size_t m) {
    if (subset.empty()) fail(Errc::empty_subset, "class membership of the empty subset");
    require_collection(xs, SIZE_MAX);
    for (size_t i : subset)
        if (i >= xs.size()) fail(Errc::invalid_argument, "subset index out of range");
    Subspace a_s = intersect_indices(xs, subset);
    return class_value(a_s, xs) <= m;
}

HResult compute_h(const std::vector<Subspace>& xs, size_t m, size_t collection_cap) {
    require_collection(xs, collection_cap);
    return h_from_sweep(sweep(xs), xs.size(), m);
}

WagnerCertificate wagner_approximate(const std::vector<Subspace>& xs_in,
                                     std::optional<size_t> r_in, size_t collection_cap) {
    require_collection(xs_in, collection_cap);
    std::vector<Subspace> xs = canonical_collection(xs_in);

    // Hypothesis: every ordered pair within r.
    CollectionR observed = compute_r(xs);
    size_t r;
    if (r_in.has_value()) {
        r = *r_in;
        if (r < 1) fail(Errc::invalid_argument, "r must be >= 1");
        if (observed.raw > r)
            fail(Errc::hypothesis_violated, "a pair has quotient dimension " +
                                                std::to_string(observed.raw) +
                                                " exceeding r = " + std::to_string(r));
    } else {
        r = observed.reported;
    }

    std::vector<uint8_t> class_of = sweep(xs);

    WagnerCertificate cert{.r = r,
                           .h_table = {},
                           .case_id = 2,
                           .chosen_m = std::nullopt,
                           .witness_subsets = {},
                           .W = Subspace::zero(xs.front().field(), xs.front().ambient_dim()),
                           .per_x_bounds = {},
                           .bound_codim = r,
                           .bound_dim = theorem_dim_bound(r)};

    std::vector<HResult> h_results;
    for (size_t m = 0; m <= r; ++m) {
        h_results.push_back(h_from_sweep(class_of, xs.size(), m));
        cert.h_table.push_back(h_results.back().h);
    }

    // h(m) is non-increasing and h(r) = 1 under the hypothesis.
    for (size_t m = 1; m <= r; ++m)
        check_internal(cert.h_table[m - 1] >= cert.h_table[m], "h table not non-increasing");
    check_internal(cert.h_table[r] == 1, "h(r) != 1 despite the hypothesis");

    // Case 1: some m in 1..r has h(m-1) > (r+1)h(m)+1; take the maximal one.
    for (size_t m = r; m >= 1; --m) {
        if (cert.h_table[m - 1] > (r + 1) * cert.h_table[m] + 1) {
            cert.case_id = 1;
            cert.chosen_m = m;
            break;
        }
    }

    if (cert.case_id == 1) {
        size_t m = *cert.chosen_m;
        cert.witness_subsets = h_results[m].witnesses;
        check_internal(uint64_t(cert.h_table[m]) <= pow_sat(r + 1, r),
                       "case 1 h(m) exceeds (r+1)^r");
        Subspace w = Subspace::zero(xs.front().field(), xs.front().ambient_dim());
        for (const auto& s : cert.witness_subsets) w = sum(w, intersect_indices(xs, s));
        cert.W = w;
    } else {
        check_internal(uint64_t(cert.h_table[0]) <= pow_sat(r + 1, r + 1),
                       "case 2 h(0) exceeds (r+1)^(r+1)");
        std::vector<size_t> all(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) all[i] = i;
        cert.witness_subsets = {all};
        cert.W = intersect_indices(xs, all);
    }

    for (const auto& x : xs) {
        size_t w_over = quotient_dim(cert.W, x);
        size_t x_over = quotient_dim(x, cert.W);
        check_internal(w_over <= cert.bound_codim, "codimension bound violated");
        check_internal(uint64_t(x_over) <= cert.bound_dim, "dimension bound violated");
        cert.per_x_bounds.emplace_back(w_over, x_over);
    }
    return cert;
}

bool certify_invariance(const MatrixGroup& g, const Subspace& w) {
    if (w.ambient_dim() != g.dim()) fail(Errc::ambient_mismatch, "invariance ambient mismatch");
    if (w.field() != g.field()) fail(Errc::field_mismatch, "invariance field mismatch");
    for (const auto& e : g.elements())
        if (act(e, w) != w) return false;
    return true;
}

Subspace rebuild_w(const std::vector<Subspace>& sorted_xs,
                   const std::vector<std::vector<size_t>>& witness_subsets) {
    if (sorted_xs.empty()) fail(Errc::empty_collection, "empty collection");
    Subspace w = Subspace::zero(sorted_xs.front().field(), sorted_xs.front().ambient_dim());
    for (const auto& s : witness_subsets) {
        for (size_t i : s)
            if (i >= sorted_xs.size()) fail(Errc::invalid_argument, "witness index out of range");
        w = sum(w, intersect_indices(sorted_xs, s));
    }
    return w;
}

} // namespace alinv
