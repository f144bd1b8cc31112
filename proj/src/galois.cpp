#include "alinv/galois.hpp"

#include <algorithm>

namespace alinv {

namespace {

// Coordinatewise digit expansion of an E-vector into k^(n*d).
std::vector<uint32_t> flatten_vector(const Field& e, const std::vector<uint32_t>& v) {
    uint32_t n = e.n();
    uint64_t p = e.p();
    std::vector<uint32_t> flat;
    flat.reserve(v.size() * n);
    for (uint32_t coord : v) {
        uint64_t t = coord;
        for (uint32_t i = 0; i < n; ++i) {
            flat.push_back(uint32_t(t % p));
            t /= p;
        }
    }
    return flat;
}

std::vector<uint32_t> scale_vector(const Field& e, const std::vector<uint32_t>& v, uint32_t c) {
    std::vector<uint32_t> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = e.mul(v[i], c);
    return r;
}

} // namespace

MatrixGroup frobenius_group(const GaloisContext& ctx, size_t ambient) {
    if (ctx.E.n() == 1)
        return MatrixGroup::close(ctx.E, ambient, {});
    return MatrixGroup::close(ctx.E, ambient,
                              {SemilinearElement{1, Matrix::identity(ctx.E, ambient)}});
}

Subspace conjugate_subspace(const GaloisContext& ctx, const Subspace& a, uint32_t j) {
    if (a.field() != ctx.E) fail(Errc::field_mismatch, "subspace not over E");
    return frobenius_image(a, j % ctx.E.n());
}

Matrix lift_to_extension(const Field& e, const Matrix& m) {
    Matrix r(e, m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            uint32_t v = m.at(i, j);
            if (v >= e.p()) fail(Errc::invalid_argument, "entry is not prime-field rational");
            r.set(i, j, v);
        }
    return r;
}

Matrix fixed_space(const GaloisContext& ctx, const Subspace& w) {
    const Field& e = ctx.E;
    if (w.field() != e) fail(Errc::field_mismatch, "subspace not over E");
    uint32_t n = e.n();
    for (uint32_t j = 1; j < n; ++j)
        if (frobenius_image(w, j) != w)
            fail(Errc::not_stable, "subspace moves under sigma^" + std::to_string(j));

    Field kp = ctx.prime_field();
    size_t d = w.ambient_dim();
    size_t ke = w.dim();
    if (n == 1) {
        Matrix rows(kp, ke, d);
        for (size_t i = 0; i < ke; ++i)
            for (size_t j = 0; j < d; ++j) rows.set(i, j, w.basis().at(i, j));
        return rref(rows).reduced;
    }
    if (ke == 0) return Matrix(kp, 0, d);

    // k-basis of W as a GF(p)-space: the rows omega^t * b_i, flattened.
    uint32_t omega = e.x_element();
    std::vector<std::vector<uint32_t>> rows_e;
    rows_e.reserve(size_t(n) * ke);
    for (size_t i = 0; i < ke; ++i) {
        std::vector<uint32_t> b = w.basis().row(i);
        uint32_t pw = 1;
        for (uint32_t t = 0; t < n; ++t) {
            rows_e.push_back(scale_vector(e, b, pw));
            pw = e.mul(pw, omega);
        }
    }
    Matrix m(kp, rows_e.size(), size_t(n) * d);
    Matrix m_sigma(kp, rows_e.size(), size_t(n) * d);
    for (size_t i = 0; i < rows_e.size(); ++i) {
        std::vector<uint32_t> flat = flatten_vector(e, rows_e[i]);
        std::vector<uint32_t> sig(rows_e[i].size());
        for (size_t j = 0; j < sig.size(); ++j) sig[j] = e.frobenius(rows_e[i][j], 1);
        std::vector<uint32_t> flat_sig = flatten_vector(e, sig);
        for (size_t j = 0; j < flat.size(); ++j) {
            m.set(i, j, flat[j]);
            m_sigma.set(i, j, flat_sig[j]);
        }
    }
    // Solve c (M_sigma - M) = 0 over k; each solution is a fixed vector.
    Matrix coeffs = kernel(transpose(m_sigma - m));
    if (coeffs.rows() != ke)
        fail(Errc::descent_failed, "fixed space has k-dimension " +
                                       std::to_string(coeffs.rows()) + ", expected " +
                                       std::to_string(ke));
    Matrix fixed(kp, coeffs.rows(), d);
    for (size_t s = 0; s < coeffs.rows(); ++s) {
        std::vector<uint32_t> acc(d, 0);
        for (size_t idx = 0; idx < rows_e.size(); ++idx) {
            uint32_t c = coeffs.at(s, idx);
            if (c == 0) continue;
            for (size_t j = 0; j < d; ++j) acc[j] = e.add(acc[j], e.mul(rows_e[idx][j], c));
        }
        for (size_t j = 0; j < d; ++j) {
            if (acc[j] >= e.p())
                fail(Errc::descent_failed, "fixed vector has a non-rational coordinate");
            fixed.set(s, j, acc[j]);
        }
    }
    return rref(fixed).reduced;
}

DescentCertificate descend_subspace(const GaloisContext& ctx, const Subspace& a,
                                    size_t collection_cap) {
    const Field& e = ctx.E;
    if (a.field() != e) fail(Errc::field_mismatch, "subspace not over E");
    uint32_t n = e.n();

    size_t raw = 0;
    std::vector<Subspace> orbit{a};
    for (uint32_t j = 1; j < n; ++j) {
        Subspace conj = conjugate_subspace(ctx, a, j);
        raw = std::max(raw, quotient_dim(a, conj));
        orbit.push_back(std::move(conj));
    }
    std::vector<Subspace> xs = canonical_collection(std::move(orbit));

    WagnerCertificate inner = wagner_approximate(xs, std::max<size_t>(raw, 1), collection_cap);
    Subspace w = inner.W;
    check_internal(certify_invariance(frobenius_group(ctx, a.ambient_dim()), w),
                   "engine output is not Frobenius-stable");

    Matrix w0 = fixed_space(ctx, w);
    check_internal(Subspace::span(lift_to_extension(e, w0)) == w, "E-span of W0 is not W");
    check_internal(w0.rows() == w.dim(), "dim_k W0 != dim_E W");

    size_t dim_w_over = quotient_dim(w, a);
    size_t dim_a_over = quotient_dim(a, w);
    check_internal(dim_w_over <= raw, "descent codimension bound violated");
    check_internal(uint64_t(dim_a_over) <= theorem_dim_bound(raw),
                   "descent dimension bound violated");

    return DescentCertificate{raw,       std::move(inner), std::move(w), std::move(w0),
                              dim_w_over, dim_a_over,      theorem_dim_bound(raw)};
}

OperatorDescentCertificate descend_operator(const GaloisContext& ctx, const Matrix& t,
                                            size_t collection_cap) {
    const Field& e = ctx.E;
    if (t.field() != e) fail(Errc::field_mismatch, "operator not over E");
    size_t dv = ctx.dim_v, dw = ctx.dim_w;
    if (t.rows() != dw || t.cols() != dv) fail(Errc::dimension_mismatch, "T must be d' x d");
    uint32_t n = e.n();

    size_t raw = 0;
    for (uint32_t j = 1; j < n; ++j) raw = std::max(raw, rank(frobenius(t, j) - t));

    Subspace a = graph(t);
    std::vector<Subspace> orbit;
    for (uint32_t j = 0; j < n; ++j) orbit.push_back(frobenius_image(a, j));
    std::vector<Subspace> xs = canonical_collection(std::move(orbit));

    WagnerCertificate inner = wagner_approximate(xs, std::max<size_t>(raw, 1), collection_cap);
    const Subspace& w = inner.W;
    check_internal(certify_invariance(frobenius_group(ctx, dv + dw), w),
                   "graph approximant is not Frobenius-stable");

    GaloisContext graph_ctx{e, dv + dw, 0};
    Matrix w0 = fixed_space(graph_ctx, w);
    check_internal(Subspace::span(lift_to_extension(e, w0)) == w, "E-span of W0 is not W");
    check_internal(w0.rows() == w.dim(), "dim_k W0 != dim_E W");

    // E-side data for the certificate and the proof bounds.
    Subspace k_e = extract_k(w, dv, dw);
    Subspace i_e = project_first(w, dv, dw);
    check_internal(k_e.dim() <= inner.r, "dim K exceeds r");
    check_internal(uint64_t(dv - i_e.dim()) <= theorem_dim_bound(inner.r),
                   "codim I exceeds r(r+1)^(r+1)");

    // The whole construction now happens over k: projectors from W0's
    // pivot-column complements, no averaging needed.
    Field kp = ctx.prime_field();
    Subspace w0_span = Subspace::span(w0);
    Subspace k0 = extract_k(w0_span, dv, dw);
    Subspace i0 = project_first(w0_span, dv, dw);
    check_internal(k0.dim() == k_e.dim(), "k-form of K has the wrong dimension");
    check_internal(i0.dim() == i_e.dim(), "k-form of I has the wrong dimension");

    Matrix p_i = coordinate_projector(i0);
    Matrix p_c = Matrix::identity(kp, dw) - coordinate_projector(k0);

    Matrix w01(kp, w0.rows(), dv), w02(kp, w0.rows(), dw);
    for (size_t i = 0; i < w0.rows(); ++i) {
        for (size_t j = 0; j < dv; ++j) w01.set(i, j, w0.at(i, j));
        for (size_t j = 0; j < dw; ++j) w02.set(i, j, w0.at(i, dv + j));
    }
    Matrix w01t = transpose(w01);
    check_internal(w0.rows() - rank(w01) == k0.dim(), "lift ambiguity does not equal K");
    Rref i_rref = rref(i0.basis());
    Matrix lifted(kp, dw, i0.dim());
    for (size_t col = 0; col < i0.dim(); ++col) {
        auto coeffs = solve(w01t, i0.basis().row(col));
        check_internal(coeffs.has_value(), "basis vector of I has no lift in W0");
        std::vector<uint32_t> wpart = transpose(w02) * *coeffs;
        std::vector<uint32_t> proj = p_c * wpart;
        for (size_t i = 0; i < dw; ++i) lifted.set(i, col, proj[i]);
    }
    Matrix sel(kp, i0.dim(), dv);
    for (size_t col = 0; col < i0.dim(); ++col) sel.set(col, i_rref.pivots[col], 1);
    Matrix t0 = lifted * (sel * p_i);

    Matrix t0_e = lift_to_extension(e, t0);
    check_internal(frobenius(t0_e, 1) == t0_e, "T0 is not Galois-fixed");

    size_t defect = rank(t - t0_e);
    Subspace image_on_i = apply_map(t - t0_e, i_e);
    size_t rbar = sum(image_on_i, k_e).dim() - k_e.dim();
    check_internal(rbar <= inner.r, "quotient defect on I exceeds r");
    check_internal(defect <= k_e.dim() + (dv - i_e.dim()) + rbar,
                   "rank decomposition inequality violated");
    uint64_t bound = 2 * uint64_t(raw) + theorem_dim_bound(raw);
    check_internal(uint64_t(defect) <= bound, "certified rank bound violated");

    return OperatorDescentCertificate{raw,           std::move(inner), std::move(k_e),
                                      std::move(i_e), std::move(w0),    std::move(t0),
                                      defect,        bound};
}

Subspace flatten_to_prime(const GaloisContext& ctx, const Subspace& a) {
    const Field& e = ctx.E;
    Field kp = ctx.prime_field();
    uint32_t n = e.n();
    size_t d = a.ambient_dim();
    uint32_t omega = n == 1 ? 1 : e.x_element();
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < a.dim(); ++i) {
        std::vector<uint32_t> b = a.basis().row(i);
        uint32_t pw = 1;
        for (uint32_t t = 0; t < n; ++t) {
            rows.push_back(flatten_vector(e, scale_vector(e, b, pw)));
            pw = e.mul(pw, omega);
        }
    }
    return Subspace::span(Matrix::from_rows(kp, size_t(n) * d, rows));
}

} // namespace alinv
