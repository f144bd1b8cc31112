#include "alinv/group.hpp"

#include <algorithm>
#include <map>

namespace alinv {

SemilinearElement compose(const SemilinearElement& a, const SemilinearElement& b) {
    uint32_t n = a.matrix.field().n();
    return SemilinearElement{(a.frobenius_power + b.frobenius_power) % n,
                             a.matrix * frobenius(b.matrix, a.frobenius_power)};
}

std::vector<uint32_t> act(const SemilinearElement& g, const std::vector<uint32_t>& v) {
    const Field& f = g.matrix.field();
    std::vector<uint32_t> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = f.frobenius(v[i], g.frobenius_power);
    return g.matrix * w;
}

Subspace act(const SemilinearElement& g, const Subspace& a) {
    return apply_map(g.matrix, frobenius_image(a, g.frobenius_power));
}

namespace {

std::vector<uint32_t> element_key(const SemilinearElement& e) {
    std::vector<uint32_t> k;
    k.reserve(e.matrix.entries().size() + 1);
    k.push_back(e.frobenius_power);
    k.insert(k.end(), e.matrix.entries().begin(), e.matrix.entries().end());
    return k;
}

} // namespace

MatrixGroup MatrixGroup::close(const Field& f, size_t dim,
                               std::vector<SemilinearElement> generators, size_t cap) {
    for (const auto& g : generators) {
        if (g.matrix.field() != f) fail(Errc::field_mismatch, "generator over a different field");
        if (g.matrix.rows() != dim || g.matrix.cols() != dim)
            fail(Errc::dimension_mismatch, "generator is not dim x dim");
        if (g.frobenius_power >= f.n()) fail(Errc::invalid_argument, "frobenius power out of range");
        if (rank(g.matrix) != dim) fail(Errc::not_invertible, "generator is singular");
    }
    std::sort(generators.begin(), generators.end(),
              [](const SemilinearElement& a, const SemilinearElement& b) {
                  return element_key(a) < element_key(b);
              });
    SemilinearElement id{0, Matrix::identity(f, dim)};
    std::vector<SemilinearElement> elements{id};
    std::map<std::vector<uint32_t>, size_t> seen;
    seen[element_key(id)] = 0;
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            SemilinearElement next = compose(elements[head], g);
            auto key = element_key(next);
            if (seen.count(key)) continue;
            if (elements.size() >= cap)
                fail(Errc::closure_cap_exceeded,
                     "group closure exceeds cap " + std::to_string(cap));
            seen[key] = elements.size();
            elements.push_back(std::move(next));
        }
    }
    return MatrixGroup(f, dim, std::move(elements));
}

MatrixGroup MatrixGroup::close_linear(const Field& f, size_t dim, std::vector<Matrix> generators,
                                      size_t cap) {
    std::vector<SemilinearElement> gens;
    gens.reserve(generators.size());
    for (auto& m : generators) gens.push_back(SemilinearElement{0, std::move(m)});
    return close(f, dim, std::move(gens), cap);
}

bool MatrixGroup::is_linear() const {
    for (const auto& e : elements_)
        if (e.frobenius_power != 0) return false;
    return true;
}

std::vector<Matrix> MatrixGroup::linear_elements() const {
    std::vector<Matrix> ms;
    ms.reserve(elements_.size());
    for (const auto& e : elements_) {
        if (e.frobenius_power != 0)
            fail(Errc::invalid_argument, "semilinear element in a linear-only context");
        ms.push_back(e.matrix);
    }
    return ms;
}

std::vector<Subspace> orbit_subspace(const MatrixGroup& g, const Subspace& a) {
    if (a.ambient_dim() != g.dim()) fail(Errc::ambient_mismatch, "orbit ambient mismatch");
    if (a.field() != g.field()) fail(Errc::field_mismatch, "orbit field mismatch");
    std::vector<Subspace> orbit;
    for (const auto& e : g.elements()) orbit.push_back(act(e, a));
    return canonical_collection(std::move(orbit));
}

CollectionR compute_r(const std::vector<Subspace>& xs) {
    if (xs.empty()) fail(Errc::empty_collection, "compute_r on an empty collection");
    size_t raw = 0;
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            raw = std::max(raw, quotient_dim(xs[i], xs[j]));
        }
    return CollectionR{raw, std::max<size_t>(raw, 1)};
}

namespace {

std::vector<uint32_t> perm_compose(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    // (a ∘ b)(x) = a(b(x))
    std::vector<uint32_t> r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

} // namespace

PermGroup PermGroup::close(size_t degree, std::vector<std::vector<uint32_t>> generators,
                           size_t cap) {
    for (const auto& g : generators) {
        if (g.size() != degree) fail(Errc::dimension_mismatch, "permutation degree mismatch");
        std::vector<bool> hit(degree, false);
        for (uint32_t v : g) {
            if (v >= degree || hit[v]) fail(Errc::not_invertible, "not a permutation");
            hit[v] = true;
        }
    }
    std::sort(generators.begin(), generators.end());
    std::vector<uint32_t> id(degree);
    for (size_t i = 0; i < degree; ++i) id[i] = uint32_t(i);
    std::vector<std::vector<uint32_t>> elements{id};
    std::map<std::vector<uint32_t>, size_t> seen;
    seen[id] = 0;
    for (size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            auto next = perm_compose(elements[head], g);
            if (seen.count(next)) continue;
            if (elements.size() >= cap)
                fail(Errc::closure_cap_exceeded,
                     "group closure exceeds cap " + std::to_string(cap));
            seen[next] = elements.size();
            elements.push_back(std::move(next));
        }
    }
    return PermGroup(degree, std::move(elements));
}

} // namespace alinv
