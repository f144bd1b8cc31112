#include "alinv/set_majority.hpp"

#include <algorithm>

namespace alinv {

namespace {

std::vector<bool> membership(size_t x_size, const std::vector<uint32_t>& a) {
    std::vector<bool> in(x_size, false);
    for (uint32_t v : a) in[v] = true;
    return in;
}

// count[x] = |{g in G : g(x) in A}|
std::vector<size_t> majority_counts(const SetInstance& inst) {
    std::vector<bool> in_a = membership(inst.x_size, inst.a);
    std::vector<size_t> count(inst.x_size, 0);
    for (const auto& g : inst.group.elements())
        for (size_t x = 0; x < inst.x_size; ++x)
            if (in_a[g[x]]) ++count[x];
    return count;
}

size_t compute_set_r(const SetInstance& inst) {
    std::vector<bool> in_a = membership(inst.x_size, inst.a);
    size_t r = 0;
    for (const auto& g : inst.group.elements()) {
        // |A \ gA| = #{a in A : g^-1(a) not in A} = #{x not in A : g(x) in A}
        size_t miss = 0;
        for (size_t x = 0; x < inst.x_size; ++x)
            if (!in_a[x] && in_a[g[x]]) ++miss;
        r = std::max(r, miss);
    }
    return r;
}

size_t symmetric_difference(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> d;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(d));
    return d.size();
}

bool is_invariant(const SetInstance& inst, const std::vector<uint32_t>& subset) {
    std::vector<bool> in = membership(inst.x_size, subset);
    for (const auto& g : inst.group.elements())
        for (uint32_t v : subset)
            if (!in[g[v]]) return false;
    return true;
}

} // namespace

SetInstance make_set_instance(size_t x_size, PermGroup group, std::vector<uint32_t> a) {
    if (group.degree() != x_size) fail(Errc::dimension_mismatch, "group degree != x_size");
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (uint32_t v : a)
        if (v >= x_size) fail(Errc::invalid_argument, "marked element out of range");
    return SetInstance{x_size, std::move(group), std::move(a)};
}

SetCertificate majority_set(const SetInstance& inst) {
    size_t order = inst.group.order();
    std::vector<size_t> count = majority_counts(inst);
    SetCertificate cert;
    cert.r = compute_set_r(inst);
    for (size_t x = 0; x < inst.x_size; ++x)
        if (2 * count[x] > order) cert.a0.push_back(uint32_t(x));
    cert.symdiff = symmetric_difference(inst.a, cert.a0);
    cert.strict = cert.symdiff < 2 * cert.r;
    check_internal(is_invariant(inst, cert.a0), "A0 is not G-invariant");
    check_internal(cert.symdiff <= 2 * cert.r, "majority bound |A Δ A0| <= 2r violated");
    return cert;
}

SetCertificate refined_majority(const SetInstance& inst) {
    size_t order = inst.group.order();
    std::vector<size_t> count = majority_counts(inst);
    SetCertificate plain = majority_set(inst);
    if (plain.r == 0) fail(Errc::not_applicable, "A is already invariant");
    // Degenerate case of the Remark: A0 equals the intersection of all
    // translates, i.e. the full-count set.
    std::vector<uint32_t> full_count;
    for (size_t x = 0; x < inst.x_size; ++x)
        if (count[x] == order) full_count.push_back(uint32_t(x));
    if (plain.a0 != full_count)
        fail(Errc::not_applicable, "A0 is larger than the intersection of all translates");

    SetCertificate cert;
    cert.r = plain.r;
    cert.refined = true;
    for (size_t x = 0; x < inst.x_size; ++x)
        if (2 * count[x] >= order) cert.a0.push_back(uint32_t(x));
    cert.symdiff = symmetric_difference(inst.a, cert.a0);
    cert.strict = cert.symdiff < 2 * cert.r;
    check_internal(is_invariant(inst, cert.a0), "A'0 is not G-invariant");
    check_internal(cert.strict, "the Remark's strict bound failed");
    return cert;
}

ProofAccounting verify_proof_accounting(const SetInstance& inst, const SetCertificate& cert) {
    std::vector<bool> in_a = membership(inst.x_size, inst.a);
    std::vector<bool> in_a0 = membership(inst.x_size, cert.a0);
    ProofAccounting acc;
    acc.r = cert.r;
    acc.group_order = inst.group.order();
    for (uint32_t v : inst.a)
        if (!in_a0[v]) ++acc.a_minus_a0;
    for (uint32_t v : cert.a0)
        if (!in_a[v]) ++acc.a0_minus_a;

    acc.disjoint_ok = true;
    for (const auto& g : inst.group.elements()) {
        for (uint32_t a : inst.a) {
            uint32_t image = g[a];
            if (in_a[image]) continue;
            ++acc.p_size; // (a, g) in P
            bool in_p1 = !in_a0[a];    // a in A \ A0
            bool in_p2 = in_a0[image]; // ga in A0 \ A (ga not in A here)
            if (in_p1) ++acc.p1_size;
            if (in_p2) ++acc.p2_size;
            if (in_p1 && in_p2) acc.disjoint_ok = false;
        }
    }
    acc.p_bound_ok = acc.p_size <= acc.r * acc.group_order;
    acc.p1_inequality_ok = acc.group_order * acc.a_minus_a0 <= 2 * acc.p1_size;
    acc.p2_inequality_ok = acc.group_order * acc.a0_minus_a <= 2 * acc.p2_size;
    return acc;
}

} // namespace alinv
