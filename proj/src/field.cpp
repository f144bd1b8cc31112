#include "alinv/field.hpp"

#include <algorithm>
#include <array>

namespace alinv {

namespace {

constexpr uint64_t kEncodingBound = uint64_t(1) << 32;
constexpr uint64_t kLutMaxOrder = 65536;
constexpr uint32_t kMaxDegree = 32; // p^n <= 2^32 forces n <= 32

void decompose(uint64_t value, uint64_t p, uint32_t n, uint32_t* digits) {
    for (uint32_t i = 0; i < n; ++i) {
        digits[i] = uint32_t(value % p);
        value /= p;
    }
}

uint64_t compose(const uint32_t* digits, uint64_t p, uint32_t n) {
    uint64_t v = 0;
    for (uint32_t i = n; i-- > 0;) v = v * p + digits[i];
    return v;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

} // namespace

bool is_prime_u64(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace poly {

std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint64_t p) {
    // b monic
    size_t db = b.size() - 1;
    while (a.size() > db) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (size_t i = 0; i <= db; ++i) {
                uint64_t t = a[shift + i] + (p - b[i] % p) * lead % p;
                a[shift + i] = uint32_t(t % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool is_irreducible(const std::vector<uint32_t>& f, uint64_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    if (f[0] == 0) return false; // divisible by x
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (size_t e = 1; 2 * e <= deg; ++e) {
        uint64_t count = 1;
        for (size_t i = 0; i < e; ++i) count *= p;
        std::vector<uint32_t> cand(e + 1);
        cand[e] = 1;
        for (uint64_t v = 0; v < count; ++v) {
            uint64_t t = v;
            for (size_t i = 0; i < e; ++i) {
                cand[i] = uint32_t(t % p);
                t /= p;
            }
            if (mod(f, cand, p).empty()) return false;
        }
    }
    return true;
}

} // namespace poly

Field::Field(uint64_t p, uint32_t n, std::vector<uint32_t> modulus) {
    if (!is_prime_u64(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (q > kEncodingBound / p)
            fail(Errc::degree_too_large, "p^n exceeds the encoding bound 2^32");
        q *= p;
    }
    if (q > kEncodingBound) fail(Errc::degree_too_large, "p^n exceeds the encoding bound 2^32");
    if (modulus.size() != size_t(n) + 1 || modulus.back() != 1)
        fail(Errc::invalid_argument, "modulus must be monic of degree n");
    for (uint32_t c : modulus)
        if (c >= p) fail(Errc::invalid_argument, "modulus coefficient out of range");
    if (n > 1 && !poly::is_irreducible(modulus, p))
        fail(Errc::invalid_argument, "modulus is reducible over GF(p)");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->n = n;
    impl->q = q;
    impl->modulus = std::move(modulus);
    impl->p_pows.resize(n + 1);
    impl->p_pows[0] = 1;
    for (uint32_t i = 1; i <= n; ++i) impl->p_pows[i] = impl->p_pows[i - 1] * p;
    impl_ = impl; // tables still mutable through the local handle

    if (q <= kLutMaxOrder && q > 2) {
        auto tables = std::make_unique<Tables>();
        // Smallest multiplicative generator, by encoded value.
        auto factors = prime_factors(q - 1);
        uint32_t gen = 0;
        for (uint32_t g = 1; g < q; ++g) {
            bool ok = true;
            for (uint64_t f : factors)
                if (pow_nolut(g, (q - 1) / f) == 1) { ok = false; break; }
            if (ok) { gen = g; break; }
        }
        check_internal(gen != 0, "no multiplicative generator found");
        tables->generator = gen;
        tables->exp.resize(q - 1);
        tables->log.assign(q, 0);
        uint32_t acc = 1;
        for (uint64_t i = 0; i < q - 1; ++i) {
            tables->exp[i] = acc;
            tables->log[acc] = uint32_t(i);
            acc = mul_nolut(acc, gen);
        }
        tables->frob.resize(q);
        for (uint64_t a = 0; a < q; ++a) tables->frob[a] = pow_nolut(uint32_t(a), p);
        impl->tables = std::move(tables);
    }
}

Field Field::gf(uint64_t p, uint32_t n) {
    if (!is_prime_u64(p)) fail(Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (n < 1) fail(Errc::invalid_argument, "extension degree must be >= 1");
    if (n == 1) return Field(p, 1, {0, 1});
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (q > kEncodingBound / p)
            fail(Errc::degree_too_large, "p^n exceeds the encoding bound 2^32");
        q *= p;
    }
    // Enumerate monic candidates in low-degree-first lexicographic order:
    // the constant coefficient is the most significant digit of the counter.
    std::vector<uint32_t> coeffs(n + 1);
    coeffs[n] = 1;
    for (uint64_t v = 0; v < q; ++v) {
        uint64_t t = v;
        for (uint32_t i = n; i-- > 0;) {
            coeffs[i] = uint32_t(t % p);
            t /= p;
        }
        if (poly::is_irreducible(coeffs, p)) return Field(p, n, coeffs);
    }
    fail(Errc::internal_check_failed, "no irreducible polynomial found"); // unreachable
}

bool Field::operator==(const Field& o) const {
    if (impl_ == o.impl_) return true;
    return impl_->p == o.impl_->p && impl_->n == o.impl_->n && impl_->modulus == o.impl_->modulus;
}

void Field::check_element(uint32_t a) const {
    if (a >= impl_->q) fail(Errc::invalid_argument, "element encoding out of range");
}

uint32_t Field::x_element() const { return uint32_t(impl_->p); }

uint32_t Field::add(uint32_t a, uint32_t b) const {
    const Impl& im = *impl_;
    if (im.p == 2) return a ^ b;
    if (im.n == 1) {
        uint64_t s = uint64_t(a) + b;
        if (s >= im.p) s -= im.p;
        return uint32_t(s);
    }
    uint32_t da[kMaxDegree], db[kMaxDegree];
    decompose(a, im.p, im.n, da);
    decompose(b, im.p, im.n, db);
    for (uint32_t i = 0; i < im.n; ++i) {
        uint64_t s = uint64_t(da[i]) + db[i];
        if (s >= im.p) s -= im.p;
        da[i] = uint32_t(s);
    }
    return uint32_t(compose(da, im.p, im.n));
}

uint32_t Field::neg(uint32_t a) const {
    const Impl& im = *impl_;
    if (im.p == 2) return a;
    if (im.n == 1) return a == 0 ? 0 : uint32_t(im.p - a);
    uint32_t d[kMaxDegree];
    decompose(a, im.p, im.n, d);
    for (uint32_t i = 0; i < im.n; ++i)
        if (d[i] != 0) d[i] = uint32_t(im.p - d[i]);
    return uint32_t(compose(d, im.p, im.n));
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul_nolut(uint32_t a, uint32_t b) const {
    const Impl& im = *impl_;
    if (a == 0 || b == 0) return 0;
    if (im.n == 1) return uint32_t(uint64_t(a) * b % im.p);
    uint32_t da[kMaxDegree], db[kMaxDegree];
    decompose(a, im.p, im.n, da);
    decompose(b, im.p, im.n, db);
    // Schoolbook product; term count * (p-1)^2 fits in 64 bits since
    // n >= 2 forces p <= 2^16.
    uint64_t buf[2 * kMaxDegree] = {0};
    for (uint32_t i = 0; i < im.n; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < im.n; ++j) buf[i + j] += uint64_t(da[i]) * db[j];
    }
    for (uint32_t i = 0; i < 2 * im.n - 1; ++i) buf[i] %= im.p;
    // Reduce modulo the monic modulus: x^n = -sum m_t x^t.
    for (uint32_t i = 2 * im.n - 2; i >= im.n; --i) {
        uint64_t c = buf[i];
        if (c != 0) {
            buf[i] = 0;
            for (uint32_t t = 0; t < im.n; ++t) {
                uint64_t m = im.modulus[t];
                if (m != 0) buf[i - im.n + t] = (buf[i - im.n + t] + c * (im.p - m)) % im.p;
            }
        }
    }
    uint32_t dr[kMaxDegree];
    for (uint32_t i = 0; i < im.n; ++i) dr[i] = uint32_t(buf[i]);
    return uint32_t(compose(dr, im.p, im.n));
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    const Impl& im = *impl_;
    if (im.tables) {
        if (a == 0 || b == 0) return 0;
        const Tables& t = *im.tables;
        uint64_t s = uint64_t(t.log[a]) + t.log[b];
        if (s >= im.q - 1) s -= im.q - 1;
        return t.exp[s];
    }
    return mul_nolut(a, b);
}

uint32_t Field::pow_nolut(uint32_t a, uint64_t e) const {
    uint32_t result = 1;
    uint32_t base = a;
    while (e > 0) {
        if (e & 1) result = mul_nolut(result, base);
        base = mul_nolut(base, base);
        e >>= 1;
    }
    return result;
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    const Impl& im = *impl_;
    if (im.tables) {
        if (a == 0) return e == 0 ? 1 : 0;
        const Tables& t = *im.tables;
        uint64_t l = uint64_t(t.log[a]) * (e % (im.q - 1)) % (im.q - 1);
        return t.exp[l];
    }
    uint32_t result = 1;
    uint32_t base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero");
    const Impl& im = *impl_;
    if (im.tables) {
        const Tables& t = *im.tables;
        uint32_t l = t.log[a];
        return l == 0 ? a : t.exp[im.q - 1 - l];
    }
    return pow(a, im.q - 2);
}

uint32_t Field::frobenius(uint32_t a, uint32_t j) const {
    const Impl& im = *impl_;
    j %= im.n;
    if (j == 0 || a < im.p) return a;
    if (im.tables) {
        uint32_t r = a;
        for (uint32_t t = 0; t < j; ++t) r = im.tables->frob[r];
        return r;
    }
    return pow(a, im.p_pows[j]);
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_prime: return "NotPrime";
        case Errc::degree_too_large: return "DegreeTooLarge";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::not_invertible: return "NotInvertible";
        case Errc::closure_cap_exceeded: return "ClosureCapExceeded";
        case Errc::empty_collection: return "EmptyCollection";
        case Errc::empty_subset: return "EmptySubset";
        case Errc::collection_too_large: return "CollectionTooLarge";
        case Errc::group_too_large: return "GroupTooLarge";
        case Errc::hypothesis_violated: return "HypothesisViolated";
        case Errc::char_divides_group_order: return "CharDividesGroupOrder";
        case Errc::not_invariant: return "NotInvariant";
        case Errc::not_stable: return "NotStable";
        case Errc::descent_failed: return "DescentFailed";
        case Errc::not_applicable: return "NotApplicable";
        case Errc::invalid_pairing: return "InvalidPairing";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::schema_error: return "SchemaError";
        case Errc::internal_check_failed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

} // namespace alinv
