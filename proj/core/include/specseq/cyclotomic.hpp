#pragma once

#include <vector>

#include "specseq/ints.hpp"

namespace specseq {

// Euler phi and the cyclotomic polynomial Phi_n (coefficient vector, monic).
unsigned long euler_phi(unsigned long n);
IntVec cyclotomic_polynomial(unsigned long n);

// Element of Z[zeta_n] in the power basis {zeta^i : 0 <= i < phi(n)}.
// Reduction modulo Phi_n is canonical: equal elements have equal coefficients.
class CycInt {
  public:
    CycInt() : n_(1), c_(1, Int(0)) {}
    explicit CycInt(unsigned long conductor) : n_(conductor), c_(euler_phi(conductor), Int(0)) {}
    CycInt(unsigned long conductor, const Int& integer);

    static CycInt zeta_power(unsigned long conductor, unsigned long k);  // zeta_n^k reduced

    unsigned long conductor() const { return n_; }
    const IntVec& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_integer() const;               // lies in Z (all non-constant coeffs vanish)
    const Int& integer_part() const { return c_[0]; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(const Int& k) const;
    bool operator==(const CycInt& o) const;

    // Galois twist zeta -> zeta^k, gcd(k, n) = 1. k = n-1 is complex conjugation.
    CycInt galois(unsigned long k) const;
    CycInt conjugate() const;

    // Embed into Z[zeta_m] for n | m via zeta_n -> zeta_m^(m/n).
    CycInt promote(unsigned long m) const;

    std::string str() const;

  private:
    unsigned long n_;
    IntVec c_;
};

}  // namespace specseq
