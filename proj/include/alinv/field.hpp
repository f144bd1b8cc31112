#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "alinv/errors.hpp"

namespace alinv {

/// A concrete finite field GF(p^n). Elements are encoded as integers in
/// [0, p^n) whose base-p digits are the coefficients of the residue
/// polynomial, low degree first. The encoding is bijective, so two encoded
/// values are equal as field elements iff they are equal as integers.
///
/// Immutable and cheaply copyable; safe to share between threads.
class Field {
public:
    /// The field with the lexicographically smallest monic irreducible
    /// modulus of degree n over GF(p), coefficients compared low-degree
    /// first. Deterministic.
    static Field gf(uint64_t p, uint32_t n);

    /// Builds GF(p^n) with an explicit modulus (monic, irreducible,
    /// coefficient list low-to-high of length n+1). Validated.
    Field(uint64_t p, uint32_t n, std::vector<uint32_t> modulus);

    uint64_t p() const { return impl_->p; }
    uint32_t n() const { return impl_->n; }
    uint64_t order() const { return impl_->q; }
    const std::vector<uint32_t>& modulus() const { return impl_->modulus; }

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// True when every element encoding is a value below p (prime field),
    /// i.e. n == 1.
    bool is_prime_field() const { return impl_->n == 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// frobenius(a, j) = a^(p^j); a field automorphism of order n fixing
    /// exactly the prime-field encodings {0, ..., p-1}.
    uint32_t frobenius(uint32_t a, uint32_t j) const;

    /// Encoding of the residue class of x (the canonical generator of the
    /// extension); equals p for n >= 2 and has no meaning for n == 1.
    uint32_t x_element() const;

    void check_element(uint32_t a) const;

private:
    struct Tables {
        std::vector<uint32_t> log;  // log[a] for a in [1, q)
        std::vector<uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
        std::vector<uint32_t> frob; // frob[a] = a^p
        uint32_t generator = 0;
    };

    struct Impl {
        uint64_t p;
        uint32_t n;
        uint64_t q;
        std::vector<uint32_t> modulus;
        std::vector<uint64_t> p_pows; // p^0 .. p^n
        std::unique_ptr<const Tables> tables;
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    uint32_t mul_nolut(uint32_t a, uint32_t b) const;
    uint32_t pow_nolut(uint32_t a, uint64_t e) const;

    std::shared_ptr<const Impl> impl_;
};

bool is_prime_u64(uint64_t v);

// Dense polynomial helpers over GF(p), coefficients low-to-high. Used for
// modulus validation and the irreducible search; desk-scale brute force.
namespace poly {
std::vector<uint32_t> mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint64_t p);
bool is_irreducible(const std::vector<uint32_t>& f, uint64_t p);
} // namespace poly

} // namespace alinv
