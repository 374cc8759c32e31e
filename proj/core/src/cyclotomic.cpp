#include "specseq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace specseq {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of polynomials with integer coefficients (remainder known zero).
IntVec poly_divexact(const IntVec& num, const IntVec& den) {
    IntVec rem = num;
    std::size_t dn = den.size() - 1;
    if (rem.size() < den.size()) return {Int(0)};
    IntVec quo(rem.size() - den.size() + 1, Int(0));
    for (std::size_t i = rem.size(); i-- >= den.size();) {
        Int q = divexact(rem[i], den[dn]);
        quo[i - dn] = q;
        if (q != 0)
            for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= q * den[j];
        if (i == 0) break;
    }
    return quo;
}

std::map<unsigned long, IntVec> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

IntVec cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n = 0");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without re-locking (the recursion bottoms out at n = 1).
    std::vector<unsigned long> stack{n};
    while (!stack.empty()) {
        unsigned long m = stack.back();
        if (g_phi_cache.count(m)) {
            stack.pop_back();
            continue;
        }
        if (m == 1) {
            g_phi_cache[1] = IntVec{Int(-1), Int(1)};
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0 && !g_phi_cache.count(d)) {
                stack.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        IntVec num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        for (unsigned long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divexact(num, g_phi_cache[d]);
        g_phi_cache[m] = num;
        stack.pop_back();
    }
    return g_phi_cache[n];
}

CycInt::CycInt(unsigned long conductor, const Int& integer) : n_(conductor), c_(euler_phi(conductor), Int(0)) {
    c_[0] = integer;
}

CycInt CycInt::zeta_power(unsigned long conductor, unsigned long k) {
    k %= conductor;
    unsigned long deg = euler_phi(conductor);
    // Build x^k, reduce mod Phi.
    IntVec poly(k + 1, Int(0));
    poly[k] = 1;
    IntVec phi = cyclotomic_polynomial(conductor);
    for (std::size_t i = poly.size(); i-- > deg;) {
        Int q = poly[i];
        if (q != 0)
            for (std::size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= q * phi[j];
        if (i == 0) break;
    }
    CycInt z(conductor);
    for (std::size_t i = 0; i < deg && i < poly.size(); ++i) z.c_[i] = poly[i];
    return z;
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt: conductor mismatch");
    CycInt r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt: conductor mismatch");
    CycInt r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("CycInt: conductor mismatch");
    std::size_t deg = c_.size();
    IntVec prod(2 * deg, Int(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    IntVec phi = cyclotomic_polynomial(n_);
    for (std::size_t i = prod.size(); i-- > deg;) {
        Int q = prod[i];
        if (q != 0)
            for (std::size_t j = 0; j < phi.size(); ++j) prod[i - deg + j] -= q * phi[j];
        if (i == 0) break;
    }
    CycInt r(n_);
    for (std::size_t i = 0; i < deg; ++i) r.c_[i] = prod[i];
    return r;
}

CycInt CycInt::scaled(const Int& k) const {
    CycInt r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = k * c_[i];
    return r;
}

bool CycInt::operator==(const CycInt& o) const { return n_ == o.n_ && c_ == o.c_; }

CycInt CycInt::galois(unsigned long k) const {
    CycInt r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        r = r + zeta_power(n_, (i * k) % n_).scaled(c_[i]);
    }
    return r;
}

CycInt CycInt::conjugate() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

CycInt CycInt::promote(unsigned long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("CycInt::promote: conductor not a multiple");
    unsigned long step = m / n_;
    CycInt r(m);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        r = r + zeta_power(m, (i * step) % m).scaled(c_[i]);
    }
    return r;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = abs(c_[i]);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << n_;
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

}  // namespace specseq
