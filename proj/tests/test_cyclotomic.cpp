#include "doctest.h"
#include "specseq/cyclotomic.hpp"

using namespace specseq;

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(24) == 8);

    CHECK(cyclotomic_polynomial(1) == IntVec{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntVec{1, 1});
    CHECK(cyclotomic_polynomial(3) == IntVec{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == IntVec{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == IntVec{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == IntVec{1, 0, -1, 0, 1});
}

TEST_CASE("zeta_n^n = 1 and the minimal polynomial vanishes, n <= 24") {
    for (unsigned long n = 1; n <= 24; ++n) {
        CycInt z = CycInt::zeta_power(n, 1);
        CycInt pow(n, Int(1));
        for (unsigned long k = 0; k < n; ++k) pow = pow * z;
        CHECK(pow == CycInt(n, Int(1)));

        // Phi_n(zeta_n) = 0
        IntVec phi = cyclotomic_polynomial(n);
        CycInt acc(n);
        CycInt zk(n, Int(1));
        for (std::size_t i = 0; i < phi.size(); ++i) {
            acc = acc + zk.scaled(phi[i]);
            zk = zk * z;
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("arithmetic is canonical") {
    // zeta_3^2 = -1 - zeta_3 in the power basis
    CycInt z3 = CycInt::zeta_power(3, 1);
    CycInt sq = z3 * z3;
    CHECK(sq.coeffs() == IntVec{-1, -1});

    // (1 + zeta_5)(1 + zeta_5^4): product of conjugate-ish units
    CycInt a = CycInt(5, Int(1)) + CycInt::zeta_power(5, 1);
    CycInt b = CycInt(5, Int(1)) + CycInt::zeta_power(5, 4);
    CycInt ab = a * b;
    CHECK(ab == b * a);
}

TEST_CASE("galois twist and conjugation") {
    CycInt z8 = CycInt::zeta_power(8, 1);
    CycInt conj = z8.conjugate();
    CHECK(conj == CycInt::zeta_power(8, 7));
    CHECK((z8 * conj) == CycInt(8, Int(1)));
    // twisting by k is multiplicative on powers
    CHECK(CycInt::zeta_power(8, 3) == z8.galois(3));
}

TEST_CASE("conductor promotion is a ring embedding") {
    CycInt z3 = CycInt::zeta_power(3, 1);
    CycInt in12 = z3.promote(12);
    CHECK(in12 == CycInt::zeta_power(12, 4));
    CycInt z3sq = (z3 * z3).promote(12);
    CHECK(z3sq == in12 * in12);
    // integers stay integers
    CHECK(CycInt(3, Int(7)).promote(12) == CycInt(12, Int(7)));
}
