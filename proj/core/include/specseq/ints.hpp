#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace specseq {

// All arithmetic in the library is exact. Int is the only integer type used
// in mathematical data; fixed-width ints appear only as indices and counts.
using Int = mpz_class;

using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = gcd(a,b) together with p,q such that p*a + q*b = g.
inline Int gcdext(const Int& a, const Int& b, Int& p, Int& q) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& a, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Euclidean remainder in [0, |d|).
inline Int mod_euclid(const Int& a, const Int& d) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace specseq
