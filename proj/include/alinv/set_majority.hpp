#pragma once

#include "alinv/group.hpp"

namespace alinv {

/// A finite G-set {0, ..., x_size-1} with a marked subset A.
struct SetInstance {
    size_t x_size;
    PermGroup group;
    std::vector<uint32_t> a; // sorted, deduplicated, in range
};

SetInstance make_set_instance(size_t x_size, PermGroup group, std::vector<uint32_t> a);

struct SetCertificate {
    size_t r = 0;              // max over g of |A \ gA|
    std::vector<uint32_t> a0;  // G-invariant approximant, sorted
    size_t symdiff = 0;        // |A \ A0| + |A0 \ A|
    bool refined = false;      // the Remark's A'_0 was used
    bool strict = false;       // symdiff < 2r
};

/// The majority construction A0 = { x : |{g : gx in A}| > |G|/2 }, the
/// pointwise form of the union of A_S over |S| > |G|/2. Certifies
/// symdiff <= 2r. Exactly invariant A is accepted with r = 0.
SetCertificate majority_set(const SetInstance& inst);

/// The Remark's refinement A'_0 with threshold >= |G|/2, applicable only in
/// the degenerate case (A not invariant, A0 = intersection of all
/// translates); certifies the strict bound symdiff < 2r.
SetCertificate refined_majority(const SetInstance& inst); // throws NotApplicable

/// The proof's counting data, recomputed by direct enumeration.
struct ProofAccounting {
    size_t p_size = 0;       // |P|, P = {(a,g) : a in A, ga not in A}
    size_t p1_size = 0;      // pairs of P over A \ A0
    size_t p2_size = 0;      // pairs of P landing in A0 \ A
    size_t r = 0;
    size_t group_order = 0;
    size_t a_minus_a0 = 0;
    size_t a0_minus_a = 0;
    bool p_bound_ok = false;       // |P| <= r|G|
    bool p1_inequality_ok = false; // |G| * |A\A0| <= 2|P1|
    bool p2_inequality_ok = false; // |G| * |A0\A| <= 2|P2|
    bool disjoint_ok = false;      // P1 ∩ P2 = ∅
};

ProofAccounting verify_proof_accounting(const SetInstance& inst, const SetCertificate& cert);

} // namespace alinv
