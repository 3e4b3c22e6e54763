#include "lrc/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lrc {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // little-endian coefficients over GF(p)

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128)a * b % m);
}

u64 powmod_u64(u64 a, u64 k, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (k) {
        if (k & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        k >>= 1;
    }
    return r;
}

// Extended Euclid inverse of a mod p, a != 0.
u64 inv_mod(u64 a, u64 p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("element has no inverse");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<u64>(t);
}

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// Remainder of a modulo b (b != 0); b need not be monic.
Poly poly_rem(Poly a, const Poly& b, u64 p) {
    int db = poly_deg(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    u64 lead_inv = inv_mod(b[static_cast<size_t>(db)], p);
    int da = poly_deg(a);
    while (da >= db) {
        u64 factor = (a[static_cast<size_t>(da)] * lead_inv) % p;
        if (factor != 0) {
            int shift = da - db;
            for (int i = 0; i <= db; ++i) {
                u64 sub = (b[static_cast<size_t>(i)] * factor) % p;
                u64& tgt = a[static_cast<size_t>(i + shift)];
                tgt = (tgt + p - sub) % p;
            }
        }
        --da;
        while (da >= 0 && a[static_cast<size_t>(da)] == 0) --da;
    }
    poly_trim(a);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    return poly_rem(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, u64 k, const Poly& f, u64 p) {
    Poly r = {1};
    base = poly_rem(std::move(base), f, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    poly_trim(a);
    return a;
}

// Rabin irreducibility test for monic f of degree >= 1 over GF(p).
bool poly_irreducible(const Poly& f, u64 p) {
    int e = poly_deg(f);
    if (e < 1) return false;
    if (e == 1) return true;
    const Poly x = {0, 1};
    // Prime divisors of e; e <= ~40 so trial division is plenty.
    std::vector<int> prime_divs;
    int m = e;
    for (int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_divs.push_back(m);

    Poly t = x;  // after s iterations below, t = x^(p^s) mod f
    for (int s = 1; s <= e; ++s) {
        t = poly_powmod(t, p, f, p);
        for (int r : prime_divs) {
            if (s == e / r) {
                Poly g = poly_gcd(poly_sub(t, x, p), f, p);
                if (poly_deg(g) != 0) return false;
            }
        }
    }
    Poly diff = poly_sub(t, x, p);
    return diff.empty();
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                  23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a deterministic witness set for all 64-bit inputs.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                  23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void Field::check_params() const {
    if (!is_prime_u64(p_)) throw std::invalid_argument("p must be prime");
    if (e_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (p_ >= (1ull << 31))
        throw std::invalid_argument("characteristic too large (p < 2^31)");
    u64 order = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (order > (1ull << 62) / p_)
            throw std::invalid_argument("field order exceeds 2^62");
        order *= p_;
    }
}

Field::Field(u64 p, unsigned e) : p_(p), e_(e) {
    check_params();
    order_ = 1;
    for (unsigned i = 0; i < e_; ++i) order_ *= p_;
    if (e_ == 1) {
        mod_ = {0, 1};  // placeholder x; arithmetic is plain mod p
        return;
    }
    // Ordered search over constant-first base-p digit strings; the first
    // irreducible hit makes the choice deterministic across runs.
    for (u64 n = 0; n < order_; ++n) {
        Poly f(e_ + 1, 0);
        u64 v = n;
        for (unsigned i = 0; i < e_; ++i) {
            f[i] = v % p_;
            v /= p_;
        }
        f[e_] = 1;
        if (poly_irreducible(f, p_)) {
            mod_ = std::move(f);
            return;
        }
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

Field::Field(u64 p, unsigned e, std::vector<u64> modulus)
    : p_(p), e_(e), mod_(std::move(modulus)) {
    check_params();
    order_ = 1;
    for (unsigned i = 0; i < e_; ++i) order_ *= p_;
    if (mod_.size() != static_cast<size_t>(e_) + 1)
        throw std::invalid_argument("modulus must have degree e");
    for (u64 c : mod_)
        if (c >= p_)
            throw std::invalid_argument("modulus coefficient out of range");
    if (mod_[e_] != 1) throw std::invalid_argument("modulus must be monic");
    if (e_ >= 2 && !poly_irreducible(mod_, p_))
        throw std::invalid_argument("modulus is reducible");
}

Elem Field::zero() const { return Elem(e_, 0); }

Elem Field::one() const {
    Elem x(e_, 0);
    x[0] = 1;
    return x;
}

Elem Field::from_int(u64 v) const {
    if (v >= order_) throw std::invalid_argument("value exceeds field order");
    Elem x(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
        x[i] = v % p_;
        v /= p_;
    }
    return x;
}

Elem Field::from_coeffs(const std::vector<u64>& coeffs) const {
    if (coeffs.size() > e_)
        throw std::invalid_argument("too many coefficients for this field");
    Elem x(e_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_)
            throw std::invalid_argument("coefficient out of range");
        x[i] = coeffs[i];
    }
    return x;
}

void Field::validate(const Elem& x) const {
    if (x.size() != e_)
        throw std::invalid_argument("element does not belong to this field");
    for (u64 c : x)
        if (c >= p_)
            throw std::invalid_argument("element coefficient out of range");
}

bool Field::is_zero(const Elem& x) const {
    validate(x);
    return std::all_of(x.begin(), x.end(), [](u64 c) { return c == 0; });
}

Elem Field::add(const Elem& x, const Elem& y) const {
    validate(x);
    validate(y);
    Elem z(e_);
    for (unsigned i = 0; i < e_; ++i) z[i] = (x[i] + y[i]) % p_;
    return z;
}

Elem Field::sub(const Elem& x, const Elem& y) const {
    validate(x);
    validate(y);
    Elem z(e_);
    for (unsigned i = 0; i < e_; ++i) z[i] = (x[i] + p_ - y[i]) % p_;
    return z;
}

Elem Field::neg(const Elem& x) const {
    validate(x);
    Elem z(e_);
    for (unsigned i = 0; i < e_; ++i) z[i] = (p_ - x[i]) % p_;
    return z;
}

Elem Field::mul(const Elem& x, const Elem& y) const {
    validate(x);
    validate(y);
    if (e_ == 1) return Elem{(x[0] * y[0]) % p_};
    std::vector<u64> t(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            t[i + j] = (t[i + j] + x[i] * y[j]) % p_;
    }
    // Reduce by the monic modulus: x^e == -(mod_[e-1] x^{e-1} + ... + mod_[0]).
    for (unsigned i = 2 * e_ - 2; i >= e_; --i) {
        u64 c = t[i];
        if (c != 0) {
            for (unsigned j = 0; j < e_; ++j) {
                u64 sub = (mod_[j] * c) % p_;
                t[i - e_ + j] = (t[i - e_ + j] + p_ - sub) % p_;
            }
            t[i] = 0;
        }
    }
    t.resize(e_);
    return t;
}

Elem Field::inv(const Elem& x) const {
    validate(x);
    if (is_zero(x)) throw std::domain_error("inversion of zero");
    if (e_ == 1) return Elem{inv_mod(x[0], p_)};
    // Extended Euclid over GF(p)[x] against the modulus.
    Poly r0 = mod_, r1 = x;
    poly_trim(r1);
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // Compute quotient q = r0 / r1 and advance both sequences.
        int d0 = poly_deg(r0), d1 = poly_deg(r1);
        Poly q;
        Poly rem = r0;
        u64 lead_inv = inv_mod(r1[static_cast<size_t>(d1)], p_);
        q.assign(static_cast<size_t>(std::max(d0 - d1 + 1, 1)), 0);
        int da = d0;
        while (da >= d1) {
            u64 factor = (rem[static_cast<size_t>(da)] * lead_inv) % p_;
            q[static_cast<size_t>(da - d1)] = factor;
            if (factor != 0) {
                for (int i = 0; i <= d1; ++i) {
                    u64 sub = (r1[static_cast<size_t>(i)] * factor) % p_;
                    u64& tgt = rem[static_cast<size_t>(da - d1 + i)];
                    tgt = (tgt + p_ - sub) % p_;
                }
            }
            --da;
            while (da >= 0 && rem[static_cast<size_t>(da)] == 0) --da;
        }
        poly_trim(rem);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly tn = poly_sub(t0, poly_mul(q, t1, p_), p_);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r0 = gcd is a nonzero constant because the modulus is irreducible.
    u64 scale = inv_mod(r0[0], p_);
    Elem out(e_, 0);
    for (size_t i = 0; i < t0.size(); ++i) out[i] = (t0[i] * scale) % p_;
    return out;
}

Elem Field::pow(const Elem& x, u64 k) const {
    validate(x);
    Elem r = one();
    Elem base = x;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

Elem Field::frobenius(const Elem& x, u64 q) const {
    u64 v = q;
    unsigned s = 0;
    while (v > 1 && v % p_ == 0) {
        v /= p_;
        ++s;
    }
    if (v != 1 || s == 0)
        throw std::invalid_argument("frobenius exponent must be a power of p");
    if (e_ % s != 0)
        throw std::invalid_argument(
            "frobenius exponent p^s requires s dividing e");
    return pow(x, q);
}

std::vector<u64> Field::as_subfield_vector(const Elem& x, u64 q) const {
    validate(x);
    if (q != p_)
        throw std::invalid_argument(
            "subfield coordinates only supported over the prime subfield");
    return x;
}

std::vector<u64> element_order_key(const Elem& x) {
    return std::vector<u64>(x.rbegin(), x.rend());
}

bool element_order_less(const Elem& a, const Elem& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("order comparison across fields");
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
}

}  // namespace lrc
