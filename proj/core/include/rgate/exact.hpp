#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rgate {

// Exact arithmetic backing: GMP. Everything homology-sized goes through these
// aliases so the choice stays in one place.
using Int = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor on LP64; funnel through long.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor of sqrt(a); a must be >= 0.
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

// Quotient rounded toward -infinity, so that a - q*b lies in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Quotient rounded to nearest, so the remainder satisfies |r| <= |b|/2; used
// to shrink entries symmetrically during row reduction.
inline Int round_div(const Int& a, const Int& b) {
    if (b < 0) return round_div(Int(-a), Int(-b));
    return floor_div(2 * a + b, 2 * b);
}

// Reduced fraction mod 1, normalized into [0, 1).
inline Rational mod1(const Rational& q) {
    Rational r = q - Rational(floor_div(q.get_num(), q.get_den()));
    r.canonicalize();
    return r;
}

// value^-1 mod modulus for coprime inputs.
inline std::optional<Int> mod_inverse(const Int& value, const Int& modulus) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace rgate
