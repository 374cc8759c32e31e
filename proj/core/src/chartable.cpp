#include "specseq/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specseq {

namespace {

using i64 = std::int64_t;

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 powmod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(((a % p) + p) % p, p - 2, p); }

// Dense linear algebra over F_p, sized for class-algebra matrices (r <= ~30).
using FpMat = std::vector<std::vector<i64>>;

FpMat fp_mul(const FpMat& a, const FpMat& b, i64 p) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    FpMat c(n, std::vector<i64>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (!a[i][t]) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
        }
    return c;
}

// Basis of the kernel, as columns.
FpMat fp_kernel(FpMat m, i64 p) {
    if (m.empty()) return {};
    std::size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_col_of_row(rows, -1), pivot_row_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        i64 inv = invmod(m[rank][c], p);
        for (std::size_t j = 0; j < cols; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            i64 f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        pivot_col_of_row[rank] = static_cast<int>(c);
        pivot_row_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    FpMat ker;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<i64> v(cols, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            int pc = pivot_col_of_row[r];
            v[pc] = (p - m[r][c] % p) % p;
        }
        ker.push_back(std::move(v));
    }
    // transpose to columns
    FpMat out(cols, std::vector<i64>(ker.size(), 0));
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t i = 0; i < cols; ++i) out[i][j] = ker[j][i];
    return out;
}

// Solve a x = b for single solution (a has full column rank).
std::vector<i64> fp_solve(FpMat a, std::vector<i64> b, i64 p) {
    std::size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_row_of_col(cols, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pr = rank;
        while (pr < rows && a[pr][c] == 0) ++pr;
        if (pr == rows) throw std::runtime_error("fp_solve: rank deficient");
        std::swap(a[pr], a[rank]);
        std::swap(b[pr], b[rank]);
        i64 inv = invmod(a[rank][c], p);
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        b[rank] = b[rank] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            i64 f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
            b[i] = ((b[i] - f * b[rank]) % p + p) % p;
        }
        pivot_row_of_col[c] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<i64> x(cols);
    for (std::size_t c = 0; c < cols; ++c) x[c] = b[pivot_row_of_col[c]];
    return x;
}

}  // namespace

CharacterTable::CharacterTable(const FiniteGroup& g) : g_(&g), conductor_(g.exponent()) {
    init_classes();
    compute();
    sort_canonically();
    verify_orthogonality();
}

CharacterTable::CharacterTable(const FiniteGroup& g, unsigned long conductor, std::vector<std::vector<CycInt>> values)
    : g_(&g), conductor_(conductor), values_(std::move(values)) {
    init_classes();
    if (values_.size() != class_reps_.size()) throw std::invalid_argument("character table: wrong row count");
    for (const auto& row : values_)
        if (row.size() != class_reps_.size()) throw std::invalid_argument("character table: ragged rows");
    sort_canonically();
    verify_orthogonality();
}

void CharacterTable::init_classes() {
    const auto& classes = g_->elem_classes();
    for (const auto& c : classes) {
        class_reps_.push_back(c.rep);
        class_sizes_.push_back(static_cast<int>(c.members.size()));
        inverse_class_.push_back(static_cast<std::size_t>(c.inverse_class));
    }
}

std::size_t CharacterTable::class_of_element(int g) const { return static_cast<std::size_t>(g_->elem_class_of(g)); }

void CharacterTable::compute() {
    const int n = g_->order();
    const std::size_t r = class_reps_.size();
    const unsigned long e = conductor_;

    i64 p = 0;
    for (i64 k = 1;; ++k) {
        i64 cand = 1 + k * static_cast<i64>(e);
        if (cand * cand > 4 * static_cast<i64>(n) && is_prime(cand)) {
            p = cand;
            break;
        }
    }

    // class-algebra structure constants a[i][j][k]
    std::vector<FpMat> m(r, FpMat(r, std::vector<i64>(r, 0)));
    for (std::size_t k = 0; k < r; ++k) {
        int z = class_reps_[k];
        for (int u = 0; u < n; ++u) {
            int i = g_->elem_class_of(u);
            int j = g_->elem_class_of(g_->mul(g_->inv(u), z));
            m[i][j][k] += 1;
        }
    }

    // split the common eigenspaces of the commuting class matrices
    std::vector<FpMat> spaces;
    {
        FpMat full(r, std::vector<i64>(r, 0));
        for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (std::size_t i = 1; i < r; ++i) {
        std::vector<FpMat> next;
        for (auto& basis : spaces) {
            std::size_t d = basis[0].size();
            if (d == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            FpMat mb = fp_mul(m[i], basis, p);
            // action of m[i] on the subspace: basis * s = mb
            FpMat s(d, std::vector<i64>(d, 0));
            for (std::size_t c = 0; c < d; ++c) {
                std::vector<i64> col(r);
                for (std::size_t row = 0; row < r; ++row) col[row] = mb[row][c];
                auto x = fp_solve(basis, col, p);
                for (std::size_t row = 0; row < d; ++row) s[row][c] = x[row];
            }
            std::size_t found = 0;
            for (i64 lam = 0; lam < p && found < d; ++lam) {
                FpMat shifted = s;
                for (std::size_t t = 0; t < d; ++t) shifted[t][t] = ((shifted[t][t] - lam) % p + p) % p;
                FpMat ker = fp_kernel(shifted, p);
                if (ker.empty() || ker[0].empty()) continue;
                found += ker[0].size();
                next.push_back(fp_mul(basis, ker, p));
            }
            if (found != d) throw std::runtime_error("character table: eigenspace split failed");
        }
        spaces = std::move(next);
    }
    for (const auto& s : spaces)
        if (s[0].size() != 1) throw std::runtime_error("character table: class algebra not split");

    // central characters, degrees, character values mod p
    std::vector<std::vector<i64>> chi_p;
    i64 root = std::max<i64>(1, static_cast<i64>(std::sqrt(static_cast<double>(n))) + 2);
    for (const auto& s : spaces) {
        std::vector<i64> w(r);
        i64 w0inv = invmod(s[0][0], p);
        for (std::size_t j = 0; j < r; ++j) w[j] = s[j][0] * w0inv % p;
        i64 t = 0;
        for (std::size_t j = 0; j < r; ++j)
            t = (t + w[j] * w[inverse_class_[j]] % p * invmod(class_sizes_[j], p)) % p;
        i64 d2 = static_cast<i64>(n) % p * invmod(t, p) % p;
        i64 deg = 0;
        for (i64 d = 1; d <= root; ++d)
            if (d * d % p == d2) {
                deg = d;
                break;
            }
        if (deg == 0 || n % deg != 0) throw std::runtime_error("character table: degree lift failed");
        std::vector<i64> chi(r);
        for (std::size_t j = 0; j < r; ++j) chi[j] = deg % p * w[j] % p * invmod(class_sizes_[j], p) % p;
        chi_p.push_back(std::move(chi));
    }

    // primitive e-th root of unity mod p
    std::vector<i64> prime_factors;
    {
        i64 q = p - 1;
        for (i64 d = 2; d * d <= q; ++d)
            if (q % d == 0) {
                prime_factors.push_back(d);
                while (q % d == 0) q /= d;
            }
        if (q > 1) prime_factors.push_back(q);
    }
    i64 gen = 0;
    for (i64 c = 2; c < p; ++c) {
        bool ok = true;
        for (i64 q : prime_factors)
            if (powmod(c, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = c;
            break;
        }
    }
    i64 zeta_e = powmod(gen, (p - 1) / static_cast<i64>(e), p);

    // lift each value via root-of-unity multiplicities
    values_.assign(chi_p.size(), std::vector<CycInt>(r, CycInt(e)));
    for (std::size_t cidx = 0; cidx < chi_p.size(); ++cidx) {
        for (std::size_t j = 0; j < r; ++j) {
            int rep = class_reps_[j];
            i64 o = g_->element_order(rep);
            i64 eta = powmod(zeta_e, static_cast<i64>(e) / o, p);
            i64 oinv = invmod(o, p);
            CycInt val(e);
            int power = 0;
            for (i64 l = 0; l < o; ++l) {
                i64 s = 0;
                int x = rep;
                // t = 0 term uses the identity element
                s = chi_p[cidx][0];
                for (i64 t = 1; t < o; ++t) {
                    std::size_t cls = static_cast<std::size_t>(g_->elem_class_of(x));
                    s = (s + chi_p[cidx][cls] * powmod(eta, ((o - l) * t) % o, p)) % p;
                    x = g_->mul(x, rep);
                }
                i64 mult = s * oinv % p;
                if (mult) val = val + CycInt::zeta_power(e, (static_cast<unsigned long>(l) * e / o) % e).scaled(Int(static_cast<long>(mult)));
                (void)power;
            }
            values_[cidx][j] = val;
        }
    }
}

void CharacterTable::sort_canonically() {
    std::sort(values_.begin(), values_.end(), [&](const std::vector<CycInt>& a, const std::vector<CycInt>& b) {
        const Int da = a[0].integer_part(), db = b[0].integer_part();
        if (da != db) return da < db;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (a[j].coeffs() != b[j].coeffs()) return a[j].coeffs() < b[j].coeffs();
        }
        return false;
    });
}

Int CharacterTable::inner(const std::vector<CycInt>& a, const std::vector<CycInt>& b) const {
    unsigned long cond = std::lcm(a[0].conductor(), b[0].conductor());
    CycInt sum(cond);
    for (std::size_t j = 0; j < a.size(); ++j)
        sum = sum + a[j].promote(cond) * b[inverse_class_[j]].promote(cond).scaled(class_sizes_[j]);
    Int n(g_->order());
    for (std::size_t i = 1; i < sum.coeffs().size(); ++i)
        if (sum.coeffs()[i] != 0) throw std::runtime_error("inner product is not rational");
    if (!divides(n, sum.integer_part())) throw std::runtime_error("inner product is not integral");
    return divexact(sum.integer_part(), n);
}

std::vector<CycInt> CharacterTable::class_function(const IntVec& coords) const {
    if (coords.size() != nchars()) throw std::invalid_argument("class_function: wrong length");
    std::vector<CycInt> f(nclasses(), CycInt(conductor_));
    for (std::size_t i = 0; i < nchars(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < nclasses(); ++j) f[j] = f[j] + values_[i][j].scaled(coords[i]);
    }
    return f;
}

IntVec CharacterTable::decompose(const std::vector<CycInt>& classfun) const {
    IntVec coords(nchars());
    for (std::size_t i = 0; i < nchars(); ++i) coords[i] = inner(classfun, values_[i]);
    // exactness check: the decomposition must reproduce the function
    unsigned long cond = std::lcm(classfun[0].conductor(), conductor_);
    auto back = class_function(coords);
    for (std::size_t j = 0; j < nclasses(); ++j)
        if (!(back[j].promote(cond) == classfun[j].promote(cond)))
            throw std::runtime_error("decompose: input is not a virtual character");
    return coords;
}

void CharacterTable::verify_orthogonality() const {
    const std::size_t r = nclasses();
    Int order(g_->order());
    Int sum_sq(0);
    for (std::size_t i = 0; i < nchars(); ++i) {
        if (degree(i) <= 0 || !divides(degree(i), order)) throw std::runtime_error("character degrees must divide |G|");
        sum_sq += degree(i) * degree(i);
        for (std::size_t j = 0; j < nchars(); ++j) {
            Int ip = inner(values_[i], values_[j]);
            if (ip != (i == j ? 1 : 0)) throw std::runtime_error("row orthogonality violated");
        }
    }
    if (sum_sq != order) throw std::runtime_error("sum of squared degrees != |G|");
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) {
            CycInt s(conductor_);
            for (std::size_t i = 0; i < nchars(); ++i) s = s + values_[i][j] * values_[i][inverse_class_[k]];
            CycInt expected(conductor_);
            if (j == k) expected = CycInt(conductor_, divexact(order, Int(class_sizes_[j])));
            if (!(s == expected)) throw std::runtime_error("column orthogonality violated");
        }
}

const CharacterTable& CharacterTable::of(const FiniteGroup& g) {
    auto cached = std::static_pointer_cast<const CharacterTable>(g.plugin_get("chartable"));
    if (cached) return *cached;
    auto fresh = std::shared_ptr<const CharacterTable>(new CharacterTable(g));
    auto stored = std::static_pointer_cast<const CharacterTable>(
        g.plugin_put("chartable", std::static_pointer_cast<void>(std::const_pointer_cast<CharacterTable>(fresh))));
    return *stored;
}

namespace {

int local_index(const FiniteGroup& mat, int parent_elem) {
    const auto& pm = mat.parent_elements();
    auto it = std::lower_bound(pm.begin(), pm.end(), parent_elem);
    if (it == pm.end() || *it != parent_elem) throw std::logic_error("element not in subgroup");
    return static_cast<int>(it - pm.begin());
}

}  // namespace

IntVec rep_ring_mult(const FiniteGroup& h, const IntVec& a, const IntVec& b) {
    const CharacterTable& t = CharacterTable::of(h);
    auto fa = t.class_function(a);
    auto fb = t.class_function(b);
    std::vector<CycInt> prod(t.nclasses(), CycInt(t.conductor()));
    for (std::size_t j = 0; j < t.nclasses(); ++j) prod[j] = fa[j] * fb[j];
    return t.decompose(prod);
}

IntVec rep_ring_unit(const FiniteGroup& h) {
    const CharacterTable& t = CharacterTable::of(h);
    std::vector<CycInt> one(t.nclasses(), CycInt(t.conductor(), Int(1)));
    return t.decompose(one);
}

IntMatrix rep_res_matrix(const FiniteGroup& g, const Subgroup& h, const Subgroup& l) {
    if (!h.contains_subgroup(l)) throw std::invalid_argument("rep_res_matrix: L not contained in H");
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& ml = g.materialize(l);
    const CharacterTable& th = CharacterTable::of(mh);
    const CharacterTable& tl = CharacterTable::of(ml);
    IntMatrix out(tl.nchars(), th.nchars());
    for (std::size_t chi = 0; chi < th.nchars(); ++chi) {
        std::vector<CycInt> f(tl.nclasses(), CycInt(th.conductor()));
        for (std::size_t c = 0; c < tl.nclasses(); ++c) {
            int parent = ml.parent_elements()[tl.class_rep(c)];
            f[c] = th.value(chi, th.class_of_element(local_index(mh, parent)));
        }
        out.set_column(chi, tl.decompose(f));
    }
    return out;
}

IntMatrix rep_ind_matrix(const FiniteGroup& g, const Subgroup& l, const Subgroup& h) {
    if (!h.contains_subgroup(l)) throw std::invalid_argument("rep_ind_matrix: L not contained in H");
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& ml = g.materialize(l);
    const CharacterTable& th = CharacterTable::of(mh);
    const CharacterTable& tl = CharacterTable::of(ml);
    unsigned long cond = std::lcm(th.conductor(), tl.conductor());
    IntMatrix out(th.nchars(), tl.nchars());
    for (std::size_t chi = 0; chi < tl.nchars(); ++chi) {
        // ind f(x) = |L|^-1 sum_{y in H, y^-1 x y in L} f(y^-1 x y)
        std::vector<CycInt> f(th.nclasses(), CycInt(cond));
        for (std::size_t c = 0; c < th.nclasses(); ++c) {
            int xl = th.class_rep(c);
            CycInt sum(cond);
            for (int y = 0; y < mh.order(); ++y) {
                int zz = mh.mul(mh.mul(mh.inv(y), xl), y);
                int parent = mh.parent_elements()[zz];
                if (!l.contains(parent)) continue;
                sum = sum + tl.value(chi, tl.class_of_element(local_index(ml, parent))).promote(cond);
            }
            // divide by |L| exactly
            IntVec coeffs = sum.coeffs();
            CycInt scaled(cond);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (!divides(Int(static_cast<long>(l.order())), coeffs[i]))
                    throw std::runtime_error("induced character not integral");
            }
            {
                CycInt acc(cond);
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    if (coeffs[i] != 0)
                        acc = acc + CycInt::zeta_power(cond, i).scaled(divexact(coeffs[i], Int(static_cast<long>(l.order()))));
                scaled = acc;
            }
            f[c] = scaled;
        }
        out.set_column(chi, th.decompose(f));
    }
    return out;
}

IntMatrix rep_conj_matrix(const FiniteGroup& g, const Subgroup& h, int conj_by) {
    Subgroup hc = g.conjugate_subgroup(h, conj_by);
    const FiniteGroup& mh = g.materialize(h);
    const FiniteGroup& mc = g.materialize(hc);
    const CharacterTable& th = CharacterTable::of(mh);
    const CharacterTable& tc = CharacterTable::of(mc);
    IntMatrix out(tc.nchars(), th.nchars());
    int ginv = g.inv(conj_by);
    for (std::size_t chi = 0; chi < th.nchars(); ++chi) {
        std::vector<CycInt> f(tc.nclasses(), CycInt(th.conductor()));
        for (std::size_t c = 0; c < tc.nclasses(); ++c) {
            int parent = mc.parent_elements()[tc.class_rep(c)];
            int pulled = g.mul(g.mul(ginv, parent), conj_by);  // g^-1 k g in H
            f[c] = th.value(chi, th.class_of_element(local_index(mh, pulled)));
        }
        out.set_column(chi, tc.decompose(f));
    }
    return out;
}

}  // namespace specseq
