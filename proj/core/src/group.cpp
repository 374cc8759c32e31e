#include "specseq/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace specseq {

std::size_t ChoicePolicy::pick(const std::string& context, std::size_t count) const {
    if (count <= 1 || !randomized) return 0;
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : context) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::mt19937_64 rng(h);
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

bool Subgroup::contains(int g) const { return std::binary_search(elems.begin(), elems.end(), g); }

bool Subgroup::contains_subgroup(const Subgroup& o) const {
    return std::includes(elems.begin(), elems.end(), o.elems.begin(), o.elems.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    return elems < o.elems;
}

std::string Subgroup::key() const {
    std::string s;
    for (int e : elems) {
        s += std::to_string(e);
        s += ',';
    }
    return s;
}

namespace {

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
    std::vector<char> in(g.order(), 0);
    std::vector<int> work;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    push(0);
    for (int x : seed) push(x);
    for (std::size_t i = 0; i < work.size(); ++i) {
        push(g.inv(work[i]));
        for (std::size_t j = 0; j < work.size(); ++j) {
            push(g.mul(work[i], work[j]));
            push(g.mul(work[j], work[i]));
        }
    }
    std::sort(work.begin(), work.end());
    return work;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name) {
    FiniteGroup g;
    g.order_ = static_cast<int>(table.size());
    g.mul_ = std::move(table);
    g.name_ = std::move(name);
    g.finish_construction();
    return g;
}

void FiniteGroup::finish_construction() {
    int n = order_;
    if (n <= 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : mul_)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group: ragged table");
    for (int a = 0; a < n; ++a)
        if (mul_[0][a] != a || mul_[a][0] != a) throw std::invalid_argument("group: element 0 is not the identity");
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul_[a][b] == 0) {
                if (mul_[b][a] != 0) throw std::invalid_argument("group: one-sided inverse");
                inv_[a] = b;
            }
        if (inv_[a] < 0) throw std::invalid_argument("group: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                    throw std::invalid_argument("group: multiplication not associative");
    elem_order_.assign(n, 0);
    exponent_ = 1;
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = mul_[x][a];
            ++k;
        }
        elem_order_[a] = k;
        exponent_ = std::lcm<unsigned long>(exponent_, k);
    }
}

FiniteGroup FiniteGroup::from_permutations(int npoints, const std::vector<std::vector<int>>& gens, std::string name) {
    for (const auto& p : gens) {
        if (static_cast<int>(p.size()) != npoints) throw std::invalid_argument("permutation degree mismatch");
        std::vector<char> seen(npoints, 0);
        for (int im : p) {
            if (im < 0 || im >= npoints || seen[im]) throw std::invalid_argument("not a permutation");
            seen[im] = 1;
        }
    }
    std::vector<int> id(npoints);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> elems{id};
    std::vector<std::vector<int>> work{id};
    auto compose = [npoints](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(npoints);
        for (int i = 0; i < npoints; ++i) c[i] = a[b[i]];
        return c;
    };
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const auto& gperm : gens) {
            auto c = compose(gperm, work[i]);
            if (elems.insert(c).second) work.push_back(c);
        }
    std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(sorted.size(), std::vector<int>(sorted.size()));
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = 0; b < sorted.size(); ++b) table[a][b] = index[compose(sorted[a], sorted[b])];
    FiniteGroup g = from_table(std::move(table), std::move(name));
    g.perm_gens_ = gens;
    g.perm_degree_ = npoints;
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, "1"); }

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: n < 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(std::move(t), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral: n < 1");
    int m = 2 * n;
    // indices: i < n is r^i, n + i is s r^i
    auto idx = [n](int flip, int rot) { return flip ? n + ((rot % n + n) % n) : ((rot % n + n) % n); };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int fa = a >= n, ra = a % n;
            int fb = b >= n, rb = b % n;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(rb + (fb ? -ra : ra))
            t[a][b] = idx((fa + fb) % 2, rb + (fb ? -ra : ra));
        }
    return from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric: need 1 <= n <= 4");
    if (n == 1) return trivial();
    std::vector<int> transposition(n), cycle(n);
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return from_permutations(n, {transposition, cycle}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating4() {
    return from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}

FiniteGroup FiniteGroup::quaternion8() {
    // elements 1, -1, i, -i, j, -j, k, -k
    auto code = [](int sign, int sym) { return (sym == 0 ? 0 : 2 * sym) + (sign < 0 ? 1 : 0); };
    auto symmul = [](int a, int b, int& sign) {
        // symbols: 0=1, 1=i, 2=j, 3=k
        static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return tbl[a][b];
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int sa = a % 2 ? -1 : 1, ya = a / 2;
            int sb = b % 2 ? -1 : 1, yb = b / 2;
            int s;
            int y = symmul(ya, yb, s);
            t[a][b] = code(sa * sb * s, y);
        }
    return from_table(std::move(t), "Q8");
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
    if (p < 2 || k < 1) throw std::invalid_argument("elementary_abelian: bad parameters");
    int n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a, y = b, s = 0, powp = 1;
            for (int i = 0; i < k; ++i) {
                s += ((x % p + y % p) % p) * powp;
                x /= p;
                y /= p;
                powp *= p;
            }
            t[a][b] = s;
        }
    return from_table(std::move(t), "E" + std::to_string(p) + "^" + std::to_string(k));
}

namespace {

std::vector<std::vector<int>> parse_perm_gens(const std::string& body, int npoints) {
    std::vector<std::vector<int>> gens;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t end = body.find(';', pos);
        std::string one = body.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        std::vector<int> perm(npoints);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t i = 0;
        while (i < one.size()) {
            if (one[i] != '(') {
                ++i;
                continue;
            }
            std::size_t close = one.find(')', i);
            if (close == std::string::npos) throw std::invalid_argument("perm: unbalanced cycle");
            std::string cyc = one.substr(i + 1, close - i - 1);
            std::vector<int> pts;
            std::stringstream ss(cyc);
            std::string tok;
            while (std::getline(ss, tok, ',')) pts.push_back(std::stoi(tok));
            for (std::size_t j = 0; j < pts.size(); ++j) {
                int from = pts[j], to = pts[(j + 1) % pts.size()];
                if (from < 0 || from >= npoints) throw std::invalid_argument("perm: point out of range");
                perm[from] = to;
            }
            i = close + 1;
        }
        gens.push_back(perm);
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return gens;
}

}  // namespace

FiniteGroup FiniteGroup::preset(const std::string& spec) {
    std::string s = spec;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
    if (s == "1") return trivial();
    if (s == "A4") return alternating4();
    if (s == "Q8") return quaternion8();
    if (s == "V4" || s == "Z2xZ2") return elementary_abelian(2, 2);
    if (s.rfind("perm:", 0) == 0) {
        std::size_t colon = s.find(':', 5);
        if (colon == std::string::npos) throw std::invalid_argument("perm spec: expected perm:<n>:<gens>");
        int npoints = std::stoi(s.substr(5, colon - 5));
        auto gens = parse_perm_gens(s.substr(colon + 1), npoints);
        return from_permutations(npoints, gens, spec);
    }
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if ((s[0] == 'Z' || s[0] == 'C') && all_digits(s.substr(1))) return cyclic(std::stoi(s.substr(1)));
    if (s[0] == 'D' && all_digits(s.substr(1))) return dihedral(std::stoi(s.substr(1)));
    if (s[0] == 'S' && all_digits(s.substr(1))) return symmetric(std::stoi(s.substr(1)));
    if (s[0] == 'E') {
        auto caret = s.find('^');
        if (caret != std::string::npos) return elementary_abelian(std::stoi(s.substr(1, caret - 1)), std::stoi(s.substr(caret + 1)));
    }
    throw std::invalid_argument("unknown group preset: " + spec);
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mul_[a][b] != mul_[b][a]) return false;
    return true;
}

void FiniteGroup::set_policy(const ChoicePolicy& p) {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    policy_ = p;
    caches_->elem_classes.reset();
    caches_->elem_class_of.clear();
    caches_->subgroups.reset();
    caches_->classes.reset();
    caches_->class_flags_done = false;
    caches_->class_index.clear();
    caches_->conjugator.clear();
    caches_->materialized.clear();
    caches_->weyl.clear();
    caches_->plugins.clear();
}

void FiniteGroup::build_elem_classes_locked() const {
    if (caches_->elem_classes) return;
    std::vector<char> marked(order_, 0);
    std::vector<ElemClass> classes;
    for (int x = 0; x < order_; ++x) {
        if (marked[x]) continue;
        ElemClass c;
        c.rep = x;
        c.order = elem_order_[x];
        for (int g = 0; g < order_; ++g) {
            int y = conj_elem(g, x);
            if (!marked[y]) {
                marked[y] = 1;
                c.members.push_back(y);
            }
        }
        std::sort(c.members.begin(), c.members.end());
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const ElemClass& a, const ElemClass& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members[0] < b.members[0];
    });
    std::vector<int> of(order_);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        classes[i].rep = classes[i].members[0];
        for (int m : classes[i].members) of[m] = static_cast<int>(i);
    }
    for (auto& c : classes) c.inverse_class = of[inv_[c.rep]];
    caches_->elem_classes = std::move(classes);
    caches_->elem_class_of = std::move(of);
}

const std::vector<FiniteGroup::ElemClass>& FiniteGroup::elem_classes() const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    build_elem_classes_locked();
    return *caches_->elem_classes;
}

int FiniteGroup::elem_class_of(int g) const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    build_elem_classes_locked();
    return caches_->elem_class_of[g];
}

void FiniteGroup::build_subgroups_locked() const {
    if (caches_->subgroups) return;
    if (order_ > order_cap_)
        throw std::runtime_error("group order " + std::to_string(order_) + " exceeds subgroup-enumeration cap " +
                                 std::to_string(order_cap_));
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> cyclics;
    for (int g = 0; g < order_; ++g) {
        std::vector<int> c;
        int x = 0;
        do {
            c.push_back(x);
            x = mul_[x][g];
        } while (x != 0);
        std::sort(c.begin(), c.end());
        if (seen.insert(c).second) cyclics.push_back(c);
    }
    std::vector<std::vector<int>> work(seen.begin(), seen.end());
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const auto& c : cyclics) {
            if (std::includes(work[i].begin(), work[i].end(), c.begin(), c.end())) continue;
            std::vector<int> gens = work[i];
            gens.insert(gens.end(), c.begin(), c.end());
            auto t = closure(*this, gens);
            if (seen.insert(t).second) work.push_back(t);
        }
    std::vector<Subgroup> subs;
    for (auto& e : seen) subs.push_back(Subgroup{this, e});
    std::sort(subs.begin(), subs.end());
    caches_->subgroups = std::move(subs);
}

const std::vector<Subgroup>& FiniteGroup::all_subgroups() const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    build_subgroups_locked();
    return *caches_->subgroups;
}

void FiniteGroup::build_classes_locked() const {
    if (caches_->classes) return;
    build_subgroups_locked();
    std::map<std::string, int> assigned;
    std::vector<SubgroupClass> classes;
    for (const auto& s : *caches_->subgroups) {
        if (assigned.count(s.key())) continue;
        SubgroupClass c;
        std::set<std::vector<int>> members;
        for (int g = 0; g < order_; ++g) {
            std::vector<int> im;
            im.reserve(s.elems.size());
            for (int e : s.elems) im.push_back(conj_elem(g, e));
            std::sort(im.begin(), im.end());
            members.insert(std::move(im));
        }
        for (const auto& m : members) {
            Subgroup sub{this, m};
            assigned[sub.key()] = static_cast<int>(classes.size());
            c.members.push_back(std::move(sub));
        }
        c.canonical = c.members[0];  // members set is lex-sorted
        std::size_t pick = policy_.pick("subgroup-class:" + name_ + ":" + c.canonical.key(), c.members.size());
        c.rep = c.members[pick];
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.canonical.order() != b.canonical.order()) return a.canonical.order() < b.canonical.order();
        return a.canonical.elems < b.canonical.elems;
    });
    caches_->class_index.clear();
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const auto& m : classes[i].members) caches_->class_index[m.key()] = static_cast<int>(i);
    caches_->classes = std::move(classes);
}

const std::vector<SubgroupClass>& FiniteGroup::subgroup_classes() const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    build_classes_locked();
    if (!caches_->class_flags_done) {
        for (auto& c : *caches_->classes) {
            c.is_cyclic = is_cyclic_subgroup(c.rep);
            c.is_elementary = is_elementary_subgroup(c.rep);
        }
        caches_->class_flags_done = true;
    }
    return *caches_->classes;
}

int FiniteGroup::class_of_subgroup(const Subgroup& s) const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    build_classes_locked();
    auto it = caches_->class_index.find(s.key());
    if (it == caches_->class_index.end()) throw std::invalid_argument("class_of_subgroup: not a subgroup of this group");
    return it->second;
}

int FiniteGroup::conjugator_from_rep(const Subgroup& k) const {
    int cls = class_of_subgroup(k);
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    auto it = caches_->conjugator.find(k.key());
    if (it != caches_->conjugator.end()) return it->second;
    const Subgroup& rep = (*caches_->classes)[cls].rep;
    if (k == rep) {
        // the representative transports to itself by the identity; anything
        // else would twist the stored coordinate system against itself
        caches_->conjugator[k.key()] = 0;
        return 0;
    }
    std::vector<int> candidates;
    for (int u = 0; u < order_; ++u) {
        bool ok = true;
        for (int e : rep.elems)
            if (!k.contains(conj_elem(u, e))) {
                ok = false;
                break;
            }
        if (ok) candidates.push_back(u);
    }
    std::size_t pick = policy_.pick("conjugator:" + name_ + ":" + k.key(), candidates.size());
    caches_->conjugator[k.key()] = candidates[pick];
    return candidates[pick];
}

std::vector<int> FiniteGroup::elementary_class_indices() const {
    const auto& cls = subgroup_classes();
    std::vector<int> out;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls[i].is_elementary) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> FiniteGroup::cyclic_class_indices() const {
    const auto& cls = subgroup_classes();
    std::vector<int> out;
    for (std::size_t i = 0; i < cls.size(); ++i)
        if (cls[i].is_cyclic) out.push_back(static_cast<int>(i));
    return out;
}

Subgroup FiniteGroup::trivial_subgroup() const { return Subgroup{this, {0}}; }

Subgroup FiniteGroup::full_subgroup() const {
    std::vector<int> all(order_);
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{this, std::move(all)};
}

Subgroup FiniteGroup::subgroup_generated(const std::vector<int>& gens) const {
    return Subgroup{this, closure(*this, gens)};
}

Subgroup FiniteGroup::conjugate_subgroup(const Subgroup& s, int g) const {
    std::vector<int> im;
    im.reserve(s.elems.size());
    for (int e : s.elems) im.push_back(conj_elem(g, e));
    std::sort(im.begin(), im.end());
    return Subgroup{this, std::move(im)};
}

bool FiniteGroup::is_cyclic_subgroup(const Subgroup& s) const {
    for (int e : s.elems)
        if (elem_order_[e] == static_cast<int>(s.order())) return true;
    return false;
}

bool FiniteGroup::is_elementary_subgroup(const Subgroup& s) const {
    const FiniteGroup& h = materialize(s);
    int n = h.order();
    if (n == 1) return true;
    // factor the order; find one Sylow subgroup per prime among the subgroups
    std::vector<std::pair<int, int>> primes;  // (p, p^a)
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int q = 1;
            while (m % p == 0) m /= p, q *= p;
            primes.emplace_back(p, q);
        }
    if (m > 1) primes.emplace_back(m, m);

    std::vector<Subgroup> sylows;
    for (auto [p, q] : primes) {
        const Subgroup* found = nullptr;
        for (const auto& t : h.all_subgroups())
            if (static_cast<int>(t.order()) == q) {
                found = &t;
                break;
            }
        // Sylow subgroups exist; normality must hold for nilpotency.
        for (int g = 0; g < n; ++g)
            if (!(h.conjugate_subgroup(*found, g) == *found)) return false;
        sylows.push_back(*found);
    }
    int noncyclic = 0;
    for (const auto& p : sylows)
        if (!h.is_cyclic_subgroup(p)) ++noncyclic;
    if (noncyclic > 1) return false;
    // direct-product verification: distinct Sylow pieces commute elementwise
    for (std::size_t i = 0; i < sylows.size(); ++i)
        for (std::size_t j = i + 1; j < sylows.size(); ++j)
            for (int a : sylows[i].elems)
                for (int b : sylows[j].elems)
                    if (h.mul(a, b) != h.mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::left_coset_reps(const Subgroup& h) const {
    std::vector<char> seen(order_, 0);
    std::vector<int> reps;
    for (int g = 0; g < order_; ++g) {
        if (seen[g]) continue;
        reps.push_back(g);
        for (int e : h.elems) seen[mul_[g][e]] = 1;
    }
    return reps;
}

std::vector<int> FiniteGroup::double_coset_reps(const Subgroup& h, const Subgroup& l) const {
    std::vector<char> seen(order_, 0);
    std::vector<int> reps;
    for (int g = 0; g < order_; ++g) {
        if (seen[g]) continue;
        std::vector<int> members;
        for (int a : h.elems)
            for (int b : l.elems) {
                int x = mul_[mul_[a][g]][b];
                if (!seen[x]) {
                    seen[x] = 1;
                    members.push_back(x);
                }
            }
        std::sort(members.begin(), members.end());
        std::size_t pick =
            policy_.pick("double-coset:" + name_ + ":" + h.key() + "/" + l.key() + ":" + std::to_string(g), members.size());
        reps.push_back(members[pick]);
    }
    return reps;
}

Subgroup FiniteGroup::normalizer(const Subgroup& h) const {
    std::vector<int> n;
    for (int g = 0; g < order_; ++g)
        if (conjugate_subgroup(h, g) == h) n.push_back(g);
    return Subgroup{this, std::move(n)};
}

const WeylData& FiniteGroup::weyl(const Subgroup& h) const {
    {
        std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
        auto it = caches_->weyl.find(h.key());
        if (it != caches_->weyl.end()) return it->second;
    }
    WeylData w;
    Subgroup n = normalizer(h);
    w.coset_of.assign(order_, -1);
    for (int g : n.elems) {
        if (w.coset_of[g] >= 0) continue;
        int c = static_cast<int>(w.coset_reps.size());
        w.coset_reps.push_back(g);
        for (int e : h.elems) w.coset_of[mul_[g][e]] = c;
    }
    // greedy generating subset of the Weyl group
    std::set<int> reached{0};
    for (std::size_t i = 1; i < w.coset_reps.size(); ++i) {
        if (reached.count(static_cast<int>(i))) continue;
        w.generators.push_back(w.coset_reps[i]);
        // close the reached set under existing generators
        std::vector<int> work(reached.begin(), reached.end());
        work.push_back(static_cast<int>(i));
        reached.insert(static_cast<int>(i));
        for (std::size_t a = 0; a < work.size(); ++a)
            for (int ggen : w.generators) {
                int prod = w.coset_of[mul_[ggen][w.coset_reps[work[a]]]];
                if (reached.insert(prod).second) work.push_back(prod);
                int prod2 = w.coset_of[mul_[w.coset_reps[work[a]]][ggen]];
                if (reached.insert(prod2).second) work.push_back(prod2);
            }
    }
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    return caches_->weyl.emplace(h.key(), std::move(w)).first->second;
}

const FiniteGroup& FiniteGroup::materialize(const Subgroup& s) const {
    {
        std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
        auto it = caches_->materialized.find(s.key());
        if (it != caches_->materialized.end()) return *it->second;
    }
    int n = static_cast<int>(s.order());
    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[s.elems[i]] = i;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(mul_[s.elems[a]][s.elems[b]]);
    auto sub = std::make_unique<FiniteGroup>(from_table(std::move(table), name_ + "|" + s.key()));
    sub->parent_map_ = s.elems;
    sub->policy_ = policy_;
    sub->order_cap_ = order_cap_;
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    auto [it, inserted] = caches_->materialized.emplace(s.key(), std::move(sub));
    return *it->second;
}

Subgroup FiniteGroup::intersect(const Subgroup& a, const Subgroup& b) const {
    std::vector<int> out;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out));
    return Subgroup{this, std::move(out)};
}

std::shared_ptr<void> FiniteGroup::plugin_get(const std::string& name) const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    auto it = caches_->plugins.find(name);
    return it == caches_->plugins.end() ? nullptr : it->second;
}

std::shared_ptr<void> FiniteGroup::plugin_put(const std::string& name, std::shared_ptr<void> value) const {
    std::lock_guard<std::recursive_mutex> lock(caches_->mutex);
    auto [it, inserted] = caches_->plugins.emplace(name, std::move(value));
    return it->second;
}

std::string FiniteGroup::describe() const {
    std::ostringstream os;
    os << name_ << ": order " << order_ << ", exponent " << exponent_ << (is_abelian() ? ", abelian" : "");
    return os.str();
}

}  // namespace specseq
