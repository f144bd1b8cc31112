#include "alinv/operator_approx.hpp"

#include <algorithm>
#include <map>

namespace alinv {

Subspace graph(const Matrix& t) {
    // Basis rows (e_i, T e_i) = [I | T^t]; already in RREF.
    return Subspace::span(hstack(Matrix::identity(t.field(), t.cols()), transpose(t)));
}

Matrix conjugate_operator(const Matrix& t, const Matrix& g_v, const Matrix& g_w) {
    return g_w * t * inverse(g_v);
}

Matrix coordinate_projector(const Subspace& u) {
    const Field& f = u.field();
    size_t d = u.ambient_dim();
    Rref r = rref(u.basis());
    // Q v = B^t * (v restricted to pivot coordinates); Q|U = id, im Q = U.
    Matrix q(f, d, d);
    for (size_t t = 0; t < r.rank; ++t)
        for (size_t i = 0; i < d; ++i) q.set(i, r.pivots[t], u.basis().at(t, i));
    return q;
}

Matrix invariant_projector(const std::vector<Matrix>& group, const Subspace& u,
                           ProjectorMode mode) {
    if (group.empty()) fail(Errc::empty_collection, "projector over an empty group");
    const Field& f = u.field();
    size_t d = u.ambient_dim();
    uint64_t order = group.size();
    if (order % f.p() == 0)
        fail(Errc::char_divides_group_order,
             "characteristic " + std::to_string(f.p()) + " divides |G| = " + std::to_string(order));
    for (const auto& g : group) {
        if (g.rows() != d || g.cols() != d) fail(Errc::dimension_mismatch, "group element shape");
        if (apply_map(g, u) != u) fail(Errc::not_invariant, "U is not G-invariant");
    }
    Matrix q = coordinate_projector(u);
    Matrix acc(f, d, d);
    for (const auto& g : group) acc = acc + g * q * inverse(g);
    uint32_t inv_order = f.inv(uint32_t(order % f.p()));
    Matrix proj = scale(acc, inv_order);

    check_internal(proj * proj == proj, "averaged map is not a projector");
    check_internal(apply_map(proj, Subspace::full(f, d)) == u, "projector image is not U");
    for (const auto& g : group)
        check_internal(proj * g == g * proj, "projector does not commute with G");

    if (mode == ProjectorMode::killing) return Matrix::identity(f, d) - proj;
    return proj;
}

OperatorInstance make_operator_instance(const Field& f, size_t dim_v, size_t dim_w,
                                        std::vector<std::pair<Matrix, Matrix>> generator_pairs,
                                        Matrix t, size_t cap) {
    if (t.rows() != dim_w || t.cols() != dim_v)
        fail(Errc::dimension_mismatch, "T must be dim_w x dim_v");
    for (const auto& [gv, gw] : generator_pairs) {
        if (gv.field() != f || gw.field() != f) fail(Errc::field_mismatch, "generator field");
        if (gv.rows() != dim_v || gv.cols() != dim_v || gw.rows() != dim_w || gw.cols() != dim_w)
            fail(Errc::dimension_mismatch, "generator pair shape");
        if (rank(gv) != dim_v || rank(gw) != dim_w)
            fail(Errc::not_invertible, "generator is singular");
    }
    std::sort(generator_pairs.begin(), generator_pairs.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.first.entries(), a.second.entries()) <
                         std::tie(b.first.entries(), b.second.entries());
              });
    std::pair<Matrix, Matrix> id{Matrix::identity(f, dim_v), Matrix::identity(f, dim_w)};
    std::vector<std::pair<Matrix, Matrix>> elems{id};
    std::map<std::vector<uint32_t>, std::vector<uint32_t>> v_to_w; // pairing consistency
    auto record = [&](const std::pair<Matrix, Matrix>& e) {
        auto [it, inserted] = v_to_w.emplace(e.first.entries(), e.second.entries());
        if (!inserted && it->second != e.second.entries())
            fail(Errc::invalid_pairing,
                 "pairing does not respect composition: one V-side element has two V'-sides");
        return inserted;
    };
    record(id);
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : generator_pairs) {
            std::pair<Matrix, Matrix> next{elems[head].first * g.first,
                                           elems[head].second * g.second};
            if (!record(next)) continue;
            if (elems.size() >= cap)
                fail(Errc::closure_cap_exceeded, "paired closure exceeds cap");
            elems.push_back(std::move(next));
        }
    }
    return OperatorInstance{f, dim_v, dim_w, std::move(elems), std::move(t)};
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    const Field& f = a.field();
    Matrix m(f, a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
    return m;
}

} // namespace

Subspace extract_k(const Subspace& w, size_t dim_v, size_t dim_w) {
    const Field& f = w.field();
    Matrix tail(f, dim_w, dim_v + dim_w);
    for (size_t i = 0; i < dim_w; ++i) tail.set(i, dim_v + i, 1);
    Subspace cut = intersect(w, Subspace::span(tail));
    // The first block is zero on every basis row; keep the tail coordinates.
    Matrix rows(f, cut.dim(), dim_w);
    for (size_t i = 0; i < cut.dim(); ++i)
        for (size_t j = 0; j < dim_w; ++j) rows.set(i, j, cut.basis().at(i, dim_v + j));
    return Subspace::span(rows);
}

Subspace project_first(const Subspace& w, size_t dim_v, size_t dim_w) {
    const Field& f = w.field();
    Matrix p1(f, dim_v, dim_v + dim_w);
    for (size_t i = 0; i < dim_v; ++i) p1.set(i, i, 1);
    return apply_map(p1, w);
}

OperatorCertificate approximate_operator(const OperatorInstance& inst, size_t collection_cap) {
    const Field& f = inst.field;
    size_t dv = inst.dim_v, dw = inst.dim_w;
    if (inst.pairs.empty()) fail(Errc::empty_collection, "operator instance with no group");
    if (inst.pairs.size() % f.p() == 0)
        fail(Errc::char_divides_group_order, "characteristic divides |G|");

    // Hypothesis r = max over g of rk(g_W T g_V^-1 - T).
    size_t raw = 0;
    for (const auto& [gv, gw] : inst.pairs)
        raw = std::max(raw, rank(conjugate_operator(inst.T, gv, gw) - inst.T));

    Subspace a = graph(inst.T);
    std::vector<Subspace> orbit;
    orbit.reserve(inst.pairs.size());
    for (const auto& [gv, gw] : inst.pairs) orbit.push_back(apply_map(block_diag(gv, gw), a));
    std::vector<Subspace> xs = canonical_collection(std::move(orbit));

    WagnerCertificate inner =
        wagner_approximate(xs, std::max<size_t>(raw, 1), collection_cap);
    const Subspace& w = inner.W;

    Subspace k_sub = extract_k(w, dv, dw);
    Subspace i_sub = project_first(w, dv, dw);
    check_internal(k_sub.dim() <= inner.r, "dim K exceeds r");
    check_internal(uint64_t(dv - i_sub.dim()) <= theorem_dim_bound(inner.r),
                   "codim I exceeds r(r+1)^(r+1)");
    if (raw == 0) {
        check_internal(k_sub.dim() == 0 && i_sub.dim() == dv,
                       "equivariant T must give K = 0, I = V");
    }

    // Equivariant projectors via group averaging.
    std::vector<Matrix> side_v, side_w;
    side_v.reserve(inst.pairs.size());
    side_w.reserve(inst.pairs.size());
    for (const auto& [gv, gw] : inst.pairs) {
        side_v.push_back(gv);
        side_w.push_back(gw);
    }
    Matrix p_i = invariant_projector(side_v, i_sub, ProjectorMode::onto);
    Matrix p_c = invariant_projector(side_w, k_sub, ProjectorMode::killing);

    // Lift each basis vector b of I to some (b, w) in W; p_C kills the K
    // ambiguity of the lift.
    Matrix w1(f, w.dim(), dv), w2(f, w.dim(), dw);
    for (size_t i = 0; i < w.dim(); ++i) {
        for (size_t j = 0; j < dv; ++j) w1.set(i, j, w.basis().at(i, j));
        for (size_t j = 0; j < dw; ++j) w2.set(i, j, w.basis().at(i, dv + j));
    }
    Matrix w1t = transpose(w1);
    check_internal(w.dim() - rank(w1) == k_sub.dim(),
                   "lift ambiguity does not equal K; T-bar would be ill-defined");
    Rref i_rref = rref(i_sub.basis());
    Matrix lifted(f, dw, i_sub.dim()); // columns p_C(w_b) per basis vector of I
    for (size_t t = 0; t < i_sub.dim(); ++t) {
        auto coeffs = solve(w1t, i_sub.basis().row(t));
        check_internal(coeffs.has_value(), "basis vector of I has no lift in W");
        std::vector<uint32_t> wpart = transpose(w2) * *coeffs;
        std::vector<uint32_t> proj = p_c * wpart;
        for (size_t i = 0; i < dw; ++i) lifted.set(i, t, proj[i]);
    }
    // T0 = lifted ∘ (pivot selector) ∘ p_I; exact by construction.
    Matrix sel(f, i_sub.dim(), dv);
    for (size_t t = 0; t < i_sub.dim(); ++t) sel.set(t, i_rref.pivots[t], 1);
    Matrix t0 = lifted * (sel * p_i);

    for (const auto& [gv, gw] : inst.pairs)
        check_internal(gw * t0 == t0 * gv, "T0 is not exactly equivariant");

    size_t defect = rank(inst.T - t0);
    // Proof decomposition: rk(T-T0) <= dim K + codim I + rk(T-bar - T0-bar),
    // the last term realized as dim of the image of (T-T0)|I in V'/K.
    Subspace image_on_i = apply_map(inst.T - t0, i_sub);
    size_t rbar = sum(image_on_i, k_sub).dim() - k_sub.dim();
    check_internal(rbar <= inner.r, "quotient defect on I exceeds r");
    check_internal(defect <= k_sub.dim() + (dv - i_sub.dim()) + rbar,
                   "rank decomposition inequality violated");
    uint64_t bound = 2 * uint64_t(raw) + theorem_dim_bound(raw);
    check_internal(uint64_t(defect) <= bound, "certified rank bound violated");

    return OperatorCertificate{raw,  std::move(inner), std::move(k_sub), std::move(i_sub),
                               std::move(t0), defect, bound};
}

} // namespace alinv
