#pragma once

#include <cstdint>
#include <vector>

namespace lrc {

// Element of GF(p^e): little-endian coefficient vector over GF(p),
// always exactly e entries (trailing zeros kept).
using Elem = std::vector<std::uint64_t>;

// GF(p) or GF(p^e) with a fixed monic irreducible modulus of degree e.
// Two Field values are interchangeable iff (p, e, modulus) coincide.
// All operations are pure; Field is safe to share across threads.
class Field {
public:
    // Deterministic construction: picks the smallest monic irreducible
    // modulus of degree e over GF(p) in the base-p ordered search
    // (constant term = least significant digit). For e = 1 the modulus
    // is the placeholder x, and arithmetic is plain mod p.
    Field(std::uint64_t p, unsigned e);

    // Explicit modulus (length e+1, monic, irreducible). Used when
    // deserializing; validates everything the other constructor guarantees.
    Field(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    std::uint64_t order() const { return order_; }  // p^e

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && mod_ == o.mod_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Elem zero() const;
    Elem one() const;
    // Bijection [0, p^e) -> field via base-p digits, little-endian.
    // Integer order on v agrees with element_order_key order.
    Elem from_int(std::uint64_t v) const;
    // Pads with zeros to length e; every coefficient must be < p.
    Elem from_coeffs(const std::vector<std::uint64_t>& coeffs) const;

    bool is_zero(const Elem& x) const;

    Elem add(const Elem& x, const Elem& y) const;
    Elem sub(const Elem& x, const Elem& y) const;
    Elem neg(const Elem& x) const;
    Elem mul(const Elem& x, const Elem& y) const;
    Elem inv(const Elem& x) const;              // throws on zero
    Elem pow(const Elem& x, std::uint64_t k) const;

    // x^q where q = p^s for some s >= 1 dividing e.
    Elem frobenius(const Elem& x, std::uint64_t q) const;

    // Coordinate vector of x over the prime subfield GF(q); requires q = p.
    std::vector<std::uint64_t> as_subfield_vector(const Elem& x,
                                                  std::uint64_t q) const;

    // Throws unless x is a canonical element of this field.
    void validate(const Elem& x) const;

private:
    std::uint64_t p_;
    unsigned e_;
    std::vector<std::uint64_t> mod_;  // length e+1, mod_[e] == 1
    std::uint64_t order_;

    void check_params() const;
};

// Big-endian view of the coefficients; lexicographic comparison of keys
// is the canonical total order on field elements.
std::vector<std::uint64_t> element_order_key(const Elem& x);

// Comparator equivalent to comparing element_order_key values, without
// allocating. Both elements must have the same length.
bool element_order_less(const Elem& a, const Elem& b);

// Deterministic primality test, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace lrc
