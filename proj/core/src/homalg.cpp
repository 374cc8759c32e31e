#include "specseq/homalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace specseq {

GradedMackeyModule GradedMackeyModule::concentrated(const MackeyModule& m, int degree) {
    MackeyModule z = zero_module(m.functor());
    GradedMackeyModule g{{z, z}};
    g.part[degree & 1] = m;
    return g;
}

AxiomReport GradedMackeyModule::check_axioms() const {
    AxiomReport r0 = part[0].check_axioms();
    AxiomReport r1 = part[1].check_axioms();
    for (auto& f : r1.failures) r0.failures.push_back({f.identity + " (degree 1)", f.instance});
    return r0;
}

namespace {

// Is the submodule spanned by the given lattices all of m?
bool lattices_cover(const MackeyModule& m, const std::vector<IntMatrix>& lattices) {
    for (std::size_t i = 0; i < m.nclasses(); ++i)
        if (!PresentedAbGroup(m.level(i).ngens(), lattices[i]).is_trivial()) return false;
    return true;
}

std::vector<IntMatrix> generated_lattices(const MackeyModule& m, const std::vector<std::vector<IntVec>>& gens) {
    auto sub = submodule_generated(m, gens);
    std::vector<IntMatrix> lat;
    for (std::size_t i = 0; i < m.nclasses(); ++i) lat.push_back(sub.map.comps[i]);
    return lat;
}

struct GeneratorPick {
    std::size_t cls;
    IntVec elem;
};

// Generator selection: single-generator covers are preferred (they realize
// projectives as length-0 resolutions); otherwise a greedy cover over classes
// in descending subgroup order, one canonical generator of the remaining
// quotient at a time.
std::vector<GeneratorPick> select_generators(const MackeyModule& m, unsigned perm_seed) {
    const FiniteGroup& g = m.group();
    const auto& classes = g.subgroup_classes();
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (classes[a].rep.order() != classes[b].rep.order()) return classes[a].rep.order() > classes[b].rep.order();
        return a < b;
    });
    std::mt19937 rng(perm_seed);
    if (perm_seed) std::shuffle(order.begin(), order.end(), rng);

    auto level_gens = [&](std::size_t cls) {
        IntMatrix cg = m.level(cls).canonical_generators();
        std::vector<IntVec> out;
        for (std::size_t c = 0; c < cg.cols(); ++c) out.push_back(cg.column_vec(c));
        if (perm_seed) std::shuffle(out.begin(), out.end(), rng);
        return out;
    };

    // single-generator scan; a quotient of R_{G/H_i} needs no more invariant
    // factors per level than the representable has rank, which rules most
    // candidate classes out before any closure runs
    std::vector<std::size_t> invcount(m.nclasses());
    for (std::size_t j = 0; j < m.nclasses(); ++j) invcount[j] = m.level(j).canonical_generators().cols();
    for (std::size_t cls : order) {
        bool feasible = true;
        GSet xi = GSet::orbit(g, classes[cls].rep);
        for (std::size_t j = 0; j < m.nclasses() && feasible; ++j)
            if (invcount[j] > green_rank(m.functor(), bouc_product(GSet::orbit(g, classes[j].rep), xi)))
                feasible = false;
        if (!feasible) continue;
        for (const auto& cand : level_gens(cls)) {
            std::vector<std::vector<IntVec>> gens(m.nclasses());
            gens[cls].push_back(cand);
            if (lattices_cover(m, generated_lattices(m, gens))) return {{cls, cand}};
        }
    }

    // greedy cover
    std::vector<GeneratorPick> picks;
    std::vector<std::vector<IntVec>> gens(m.nclasses());
    std::vector<IntMatrix> covered;
    for (std::size_t i = 0; i < m.nclasses(); ++i) covered.push_back(m.level(i).relations());
    for (std::size_t cls : order) {
        for (;;) {
            PresentedAbGroup quotient(m.level(cls).ngens(), covered[cls]);
            if (quotient.is_trivial()) break;
            IntMatrix qg = quotient.canonical_generators();
            IntVec pick = qg.column_vec(0);
            picks.push_back({cls, pick});
            gens[cls].push_back(pick);
            covered = generated_lattices(m, gens);
        }
    }
    return picks;
}

IntVec slice(const IntVec& v, std::size_t off, std::size_t len) {
    return IntVec(v.begin() + off, v.begin() + off + len);
}

}  // namespace

Resolution resolve(const MackeyModule& m, int max_len, unsigned perm_seed) {
    Resolution res;
    res.target = m;
    const GreenFunctor& r = m.functor();
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();

    if (m.is_zero()) {
        res.complete = true;
        res.projective_dimension = -1;
        return res;
    }

    MackeyModule current = m;
    ModuleHom incl = ModuleHom::identity(m);
    for (int k = 0; k <= max_len; ++k) {
        auto picks = select_generators(current, perm_seed ? perm_seed + static_cast<unsigned>(k) : 0);
        ResolutionStep step;
        std::vector<MackeyModule> reps;
        std::vector<ModuleHom> eps_parts;
        for (const auto& p : picks) {
            step.summand_cls.push_back(p.cls);
            GSet orbit = GSet::orbit(g, classes[p.cls].rep);
            MackeyModule rep = representable(r, orbit);
            eps_parts.push_back(yoneda_hom(rep, current, orbit, p.elem));
            reps.push_back(std::move(rep));
        }
        step.module = reps.empty() ? zero_module(r) : direct_sum_modules(reps);
        ModuleHom eps = reps.empty() ? ModuleHom::zero(step.module, current)
                                     : hom_from_summands(step.module, current, eps_parts);
        step.d = incl.compose_after(eps);

        if (k >= 1) {
            const ResolutionStep& prev = res.steps.back();
            // classifying Bouc elements: evaluate d at each summand's orbit and
            // read off the image of the summand identity
            step.bouc_entries.assign(prev.summand_cls.size(), std::vector<IntVec>(step.summand_cls.size()));
            for (std::size_t b = 0; b < step.summand_cls.size(); ++b) {
                GSet xb = GSet::orbit(g, classes[step.summand_cls[b]].rep);
                IntVec id_b = yoneda_element(r, xb);
                // embed into evaluate(P_k, xb): offset of summand b inside the level
                std::size_t cls_b = step.summand_cls[b];
                std::size_t off = 0;
                for (std::size_t b2 = 0; b2 < b; ++b2) off += reps[b2].level(cls_b).ngens();
                IntVec embedded(step.module.level(cls_b).ngens(), Int(0));
                for (std::size_t t = 0; t < id_b.size(); ++t) embedded[off + t] = id_b[t];
                IntVec w = evaluate_hom(step.d, xb).apply(embedded);
                std::size_t aoff = 0;
                for (std::size_t a = 0; a < prev.summand_cls.size(); ++a) {
                    std::size_t len = green_rank(r, bouc_product(xb, GSet::orbit(g, classes[prev.summand_cls[a]].rep)));
                    step.bouc_entries[a][b] = slice(w, aoff, len);
                    aoff += len;
                }
            }
        }

        auto ker = kernel_module(eps);
        res.steps.push_back(std::move(step));
        if (ker.module.is_zero()) {
            res.complete = true;
            res.projective_dimension = k;
            break;
        }
        current = ker.module;
        incl = ker.map;
    }
    return res;
}

ExactnessReport certify_resolution(const Resolution& res) {
    ExactnessReport rep;
    rep.dd_zero = true;
    rep.exact = true;
    if (res.steps.empty()) return rep;
    const MackeyModule& m = res.target;
    const FiniteGroup& g = m.group();
    const auto& classes = g.subgroup_classes();

    for (std::size_t k = 1; k < res.steps.size(); ++k) {
        ModuleHom dd = res.steps[k - 1].d.compose_after(res.steps[k].d);
        if (!dd.is_zero()) {
            rep.dd_zero = false;
            rep.issues.push_back("d∘d != 0 at step " + std::to_string(k));
        }
    }

    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        GSet x = GSet::orbit(g, classes[ci].rep);
        // surjectivity of P_0(x) -> M(x)
        IntMatrix a0 = evaluate_hom(res.steps[0].d, x);
        ModuleValue mv = evaluate(m, x);
        if (!mv.group.quotient(a0).is_trivial()) {
            rep.exact = false;
            rep.issues.push_back("augmentation not surjective at class " + std::to_string(ci));
        }
        // exactness at P_k(x): ker(d_k) = im(d_{k+1})
        for (std::size_t k = 0; k < res.steps.size(); ++k) {
            bool have_next = k + 1 < res.steps.size();
            if (!have_next && !res.complete) break;  // truncated: cannot certify the last step
            IntMatrix ak = evaluate_hom(res.steps[k].d, x);
            IntMatrix kernel =
                k == 0 ? preimage_lattice(ak, m.level(ci).relations()) : kernel_lattice(ak);
            IntMatrix next = have_next ? evaluate_hom(res.steps[k + 1].d, x)
                                       : IntMatrix(res.steps[k].module.level(ci).ngens(), 0);
            for (std::size_t c = 0; c < kernel.cols(); ++c)
                if (!lattice_contains(next, kernel.column_vec(c))) {
                    rep.exact = false;
                    rep.issues.push_back("homology at step " + std::to_string(k) + ", class " + std::to_string(ci));
                    break;
                }
        }
    }
    return rep;
}

IntMatrix presheaf_action(const MackeyModule& n, const BoucMorphism& a) {
    GSet p = bouc_product(a.x, a.y);
    IntMatrix up = evaluate_covariant(n, GMap::proj1(a.x, a.y));
    IntMatrix down = evaluate_contravariant(n, GMap::proj2(a.x, a.y));
    return up * value_action(n, p, a.elem) * down;
}

ModuleHom shift_hom(const MackeyModule& n, const MackeyModule& n_x, const MackeyModule& n_y, const BoucMorphism& a) {
    const FiniteGroup& g = n.group();
    const GreenFunctor& r = n.functor();
    const auto& classes = g.subgroup_classes();
    GSet xy = bouc_product(a.x, a.y);
    std::vector<IntMatrix> comps;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        GSet s = GSet::orbit(g, classes[c].rep);
        GSet px = bouc_product(s, a.x);
        GSet py = bouc_product(s, a.y);
        GSet t = bouc_product(s, xy);  // S x (X x Y)
        int nx = a.x.npoints(), ny = a.y.npoints(), nxy = xy.npoints();
        std::vector<int> to_px(t.npoints()), to_py(t.npoints()), to_xy(t.npoints());
        for (int is = 0; is < s.npoints(); ++is)
            for (int ix = 0; ix < nx; ++ix)
                for (int iy = 0; iy < ny; ++iy) {
                    int pt = is * nxy + ix * ny + iy;
                    to_px[pt] = is * nx + ix;
                    to_py[pt] = is * ny + iy;
                    to_xy[pt] = ix * ny + iy;
                }
        GMap pkx(t, px, std::move(to_px));
        GMap pky(t, py, std::move(to_py));
        GMap pxy(t, xy, std::move(to_xy));
        GreenValue pulled = GreenValue::from_flat(r, t, green_contravariant(r, pxy).apply(a.flat()));
        comps.push_back(evaluate_covariant(n, pky) * value_action(n, t, pulled) * evaluate_contravariant(n, pkx));
    }
    return ModuleHom{n_x, n_y, std::move(comps)};
}

IntVec bouc_to_evaluate_coords(const GreenFunctor& r, const BoucMorphism& a) {
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    IntVec out;
    for (const auto& o : a.x.orbits()) {
        GSet s = GSet::orbit(g, classes[o.cls].rep);
        // inclusion of the orbit followed by the product with Y
        GSet sy = bouc_product(s, a.y);
        GSet xy = bouc_product(a.x, a.y);
        GMap incl = GMap::from_base_images(s, a.x, {o.base});
        std::vector<int> img(sy.npoints());
        for (int ps = 0; ps < s.npoints(); ++ps)
            for (int py = 0; py < a.y.npoints(); ++py) img[ps * a.y.npoints() + py] = incl(ps) * a.y.npoints() + py;
        GMap incl_y(sy, xy, std::move(img));
        IntVec comp = green_contravariant(r, incl_y).apply(a.flat());
        out.insert(out.end(), comp.begin(), comp.end());
    }
    return out;
}

ModuleHom bouc_transport(const MackeyModule& rep_x, const MackeyModule& rep_y, const BoucMorphism& a) {
    IntVec elem = bouc_to_evaluate_coords(rep_y.functor(), a);
    return yoneda_hom(rep_x, rep_y, a.x, elem);
}

namespace {

// Homology at c of the three-term complex with incoming map f (image) and
// outgoing map g into the presented group d (kernel condition).
AbInvariants homology_at(const PresentedAbGroup& c, const IntMatrix& f, const PresentedAbGroup& d,
                         const IntMatrix& g) {
    IntMatrix kernel = preimage_lattice(g, d.relations());
    IntMatrix image = f.hcat(c.relations());
    return subquotient(c.ngens(), kernel, image).group.invariants();
}

}  // namespace

UngradedExt ext_with_resolution(const Resolution& res, const MackeyModule& n, int max_n) {
    UngradedExt out;
    out.complete = res.complete;
    out.projective_dimension = res.projective_dimension;
    const FiniteGroup& g = n.group();
    const GreenFunctor& r = n.functor();
    const auto& classes = g.subgroup_classes();

    // cochain groups C^k = sum over summands of N(X_a), plus the differentials
    std::vector<PresentedAbGroup> cochain;
    std::vector<std::vector<std::size_t>> offs;
    for (const auto& step : res.steps) {
        PresentedAbGroup ck;
        std::vector<std::size_t> off;
        for (std::size_t a = 0; a < step.summand_cls.size(); ++a) {
            off.push_back(ck.ngens());
            ck = ck.direct_sum(n.level(step.summand_cls[a]));
        }
        offs.push_back(std::move(off));
        cochain.push_back(std::move(ck));
    }
    std::vector<IntMatrix> delta;  // delta[k]: C^k -> C^{k+1}
    for (std::size_t k = 0; k + 1 < res.steps.size(); ++k) {
        const auto& cur = res.steps[k];
        const auto& nxt = res.steps[k + 1];
        IntMatrix d(cochain[k + 1].ngens(), cochain[k].ngens());
        for (std::size_t a = 0; a < cur.summand_cls.size(); ++a)
            for (std::size_t b = 0; b < nxt.summand_cls.size(); ++b) {
                GSet xa = GSet::orbit(g, classes[cur.summand_cls[a]].rep);
                GSet xb = GSet::orbit(g, classes[nxt.summand_cls[b]].rep);
                BoucMorphism e = bouc_from_flat(r, xb, xa, nxt.bouc_entries[a][b]);
                IntMatrix blk = presheaf_action(n, e);  // N(X_a) -> N(X_b)
                for (std::size_t i = 0; i < blk.rows(); ++i)
                    for (std::size_t j = 0; j < blk.cols(); ++j)
                        d.at(offs[k + 1][b] + i, offs[k][a] + j) += blk.at(i, j);
            }
        delta.push_back(std::move(d));
    }

    for (int nn = 0; nn <= max_n; ++nn) {
        if (res.complete && nn > res.projective_dimension) {
            out.groups.push_back(AbInvariants{});
            continue;
        }
        if (static_cast<std::size_t>(nn) >= res.steps.size()) break;  // truncated resolution: stop
        const PresentedAbGroup& cn = cochain[nn];
        IntMatrix fin = nn == 0 ? IntMatrix(cn.ngens(), 0) : delta[nn - 1];
        bool have_out = static_cast<std::size_t>(nn) < delta.size();
        // completed resolutions end in zero; truncated ones cannot compute the last cell
        if (!have_out && !res.complete) break;
        IntMatrix fout = have_out ? delta[nn] : IntMatrix(0, cn.ngens());
        PresentedAbGroup tgt = have_out ? cochain[nn + 1] : PresentedAbGroup(0, IntMatrix(0, 0));
        out.groups.push_back(homology_at(cn, fin, tgt, fout));
    }
    return out;
}

UngradedTor tor_with_resolution(const Resolution& res, const MackeyModule& n, int max_n) {
    UngradedTor out;
    out.complete = res.complete;
    out.projective_dimension = res.projective_dimension;
    const FiniteGroup& g = n.group();
    const GreenFunctor& r = n.functor();
    const auto& classes = g.subgroup_classes();
    std::size_t ncls = classes.size();

    // shift modules per class used
    std::map<std::size_t, MackeyModule> shifts;
    auto shift_of = [&](std::size_t cls) -> const MackeyModule& {
        auto it = shifts.find(cls);
        if (it == shifts.end()) it = shifts.emplace(cls, shift_module(n, GSet::orbit(g, classes[cls].rep))).first;
        return it->second;
    };

    // chain groups per class and differentials per class
    std::vector<std::vector<PresentedAbGroup>> chain;   // [k][cls]
    std::vector<std::vector<std::vector<std::size_t>>> offs;  // [k][cls][summand]
    for (const auto& step : res.steps) {
        std::vector<PresentedAbGroup> ck(ncls);
        std::vector<std::vector<std::size_t>> off(ncls);
        for (std::size_t c = 0; c < ncls; ++c) ck[c] = PresentedAbGroup(0, IntMatrix(0, 0));
        for (std::size_t a = 0; a < step.summand_cls.size(); ++a) {
            const MackeyModule& sh = shift_of(step.summand_cls[a]);
            for (std::size_t c = 0; c < ncls; ++c) {
                off[c].push_back(ck[c].ngens());
                ck[c] = ck[c].direct_sum(sh.level(c));
            }
        }
        chain.push_back(std::move(ck));
        offs.push_back(std::move(off));
    }
    std::vector<std::vector<IntMatrix>> dmat;  // [k][cls]: D_k -> D_{k-1}
    for (std::size_t k = 1; k < res.steps.size(); ++k) {
        const auto& prev = res.steps[k - 1];
        const auto& cur = res.steps[k];
        std::vector<IntMatrix> per_class;
        for (std::size_t c = 0; c < ncls; ++c) per_class.emplace_back(chain[k - 1][c].ngens(), chain[k][c].ngens());
        for (std::size_t a = 0; a < prev.summand_cls.size(); ++a)
            for (std::size_t b = 0; b < cur.summand_cls.size(); ++b) {
                GSet xa = GSet::orbit(g, classes[prev.summand_cls[a]].rep);
                GSet xb = GSet::orbit(g, classes[cur.summand_cls[b]].rep);
                BoucMorphism e = bouc_from_flat(r, xb, xa, cur.bouc_entries[a][b]);
                ModuleHom blk = shift_hom(n, shift_of(cur.summand_cls[b]), shift_of(prev.summand_cls[a]), e);
                for (std::size_t c = 0; c < ncls; ++c)
                    for (std::size_t i = 0; i < blk.comps[c].rows(); ++i)
                        for (std::size_t j = 0; j < blk.comps[c].cols(); ++j)
                            per_class[c].at(offs[k - 1][c][a] + i, offs[k][c][b] + j) += blk.comps[c].at(i, j);
            }
        dmat.push_back(std::move(per_class));
    }

    for (int nn = 0; nn <= max_n; ++nn) {
        if (res.complete && nn > res.projective_dimension) {
            out.levels.emplace_back(ncls);
            continue;
        }
        if (static_cast<std::size_t>(nn) >= res.steps.size()) break;
        bool have_in = static_cast<std::size_t>(nn) < dmat.size();  // d_{nn+1} exists
        if (!have_in && !res.complete) break;
        std::vector<AbInvariants> per_class;
        for (std::size_t c = 0; c < ncls; ++c) {
            const PresentedAbGroup& cn = chain[nn][c];
            IntMatrix fin = have_in ? dmat[nn][c] : IntMatrix(cn.ngens(), 0);
            IntMatrix fout = nn == 0 ? IntMatrix(0, cn.ngens()) : dmat[nn - 1][c];
            PresentedAbGroup tgt = nn == 0 ? PresentedAbGroup(0, IntMatrix(0, 0)) : chain[nn - 1][c];
            per_class.push_back(homology_at(cn, fin, tgt, fout));
        }
        out.levels.push_back(std::move(per_class));
    }
    return out;
}

GradedExtTable ext_modules(const GradedMackeyModule& m, const GradedMackeyModule& n, int max_n, unsigned perm_seed) {
    GradedExtTable t;
    t.max_n = max_n;
    std::array<Resolution, 2> res{resolve(m.part[0], max_n + 1, perm_seed), resolve(m.part[1], max_n + 1, perm_seed)};
    t.complete = res[0].complete && res[1].complete;
    t.projective_dimension = std::max(res[0].projective_dimension, res[1].projective_dimension);
    std::array<std::array<UngradedExt, 2>, 2> e;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e[i][j] = ext_with_resolution(res[i], n.part[j], max_n);
    for (int nn = 0; nn <= max_n; ++nn) {
        std::array<AbInvariants, 2> cell;
        for (int l = 0; l < 2; ++l) {
            AbInvariants acc;
            for (int i = 0; i < 2; ++i) {
                int j = (l - i + 2) % 2;
                if (static_cast<std::size_t>(nn) < e[i][j].groups.size()) acc = direct_sum(acc, e[i][j].groups[nn]);
            }
            cell[l] = acc;
        }
        t.cells.push_back(cell);
    }
    return t;
}

GradedTorTable tor_modules(const GradedMackeyModule& m, const GradedMackeyModule& n, int max_n, unsigned perm_seed) {
    GradedTorTable t;
    t.max_n = max_n;
    std::array<Resolution, 2> res{resolve(m.part[0], max_n + 1, perm_seed), resolve(m.part[1], max_n + 1, perm_seed)};
    t.complete = res[0].complete && res[1].complete;
    t.projective_dimension = std::max(res[0].projective_dimension, res[1].projective_dimension);
    std::size_t ncls = m.group().subgroup_classes().size();
    std::array<std::array<UngradedTor, 2>, 2> e;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e[i][j] = tor_with_resolution(res[i], n.part[j], max_n);
    for (int nn = 0; nn <= max_n; ++nn) {
        std::array<std::vector<AbInvariants>, 2> cell;
        for (int l = 0; l < 2; ++l) {
            std::vector<AbInvariants> acc(ncls);
            for (int i = 0; i < 2; ++i) {
                int j = (l - i + 2) % 2;
                if (static_cast<std::size_t>(nn) < e[i][j].levels.size())
                    for (std::size_t c = 0; c < ncls; ++c) acc[c] = direct_sum(acc[c], e[i][j].levels[nn][c]);
            }
            cell[l] = acc;
        }
        t.cells.push_back(cell);
    }
    return t;
}

MackeyModule box_product(const MackeyModule& m, const MackeyModule& n) {
    const GreenFunctor& r = m.functor();
    const FiniteGroup& g = r.group();
    const auto& classes = g.subgroup_classes();
    Resolution res = resolve(m, 1);
    if (res.steps.empty()) return zero_module(r);  // m = 0

    std::map<std::size_t, MackeyModule> early_cache;
    auto shift_of_early = [&](std::size_t cls) -> const MackeyModule& {
        auto it = early_cache.find(cls);
        if (it == early_cache.end())
            it = early_cache.emplace(cls, shift_module(n, GSet::orbit(g, classes[cls].rep))).first;
        return it->second;
    };
    auto sum_of_shifts = [&](const ResolutionStep& step) {
        std::vector<MackeyModule> shifts;
        for (std::size_t cls : step.summand_cls) shifts.push_back(shift_of_early(cls));
        return shifts.empty() ? zero_module(r) : direct_sum_modules(shifts);
    };
    MackeyModule d0 = sum_of_shifts(res.steps[0]);
    if (res.steps.size() == 1) {
        // kernel of the augmentation was zero: M is the image of P_0
        return d0;
    }
    MackeyModule d1 = sum_of_shifts(res.steps[1]);
    // assemble the differential D_1 -> D_0 from block shift homs
    std::vector<IntMatrix> comps;
    for (std::size_t c = 0; c < classes.size(); ++c) comps.emplace_back(d0.level(c).ngens(), d1.level(c).ngens());
    auto offsets_of = [&](const ResolutionStep& step) {
        std::vector<std::vector<std::size_t>> off(classes.size());
        std::vector<std::size_t> acc(classes.size(), 0);
        for (std::size_t a = 0; a < step.summand_cls.size(); ++a) {
            MackeyModule sh = shift_module(n, GSet::orbit(g, classes[step.summand_cls[a]].rep));
            for (std::size_t c = 0; c < classes.size(); ++c) {
                off[c].push_back(acc[c]);
                acc[c] += sh.level(c).ngens();
            }
        }
        return off;
    };
    auto offs0 = offsets_of(res.steps[0]);
    auto offs1 = offsets_of(res.steps[1]);
    auto& shift_of = shift_of_early;
    for (std::size_t a = 0; a < res.steps[0].summand_cls.size(); ++a)
        for (std::size_t b = 0; b < res.steps[1].summand_cls.size(); ++b) {
            GSet xa = GSet::orbit(g, classes[res.steps[0].summand_cls[a]].rep);
            GSet xb = GSet::orbit(g, classes[res.steps[1].summand_cls[b]].rep);
            BoucMorphism e = bouc_from_flat(r, xb, xa, res.steps[1].bouc_entries[a][b]);
            ModuleHom blk = shift_hom(n, shift_of(res.steps[1].summand_cls[b]), shift_of(res.steps[0].summand_cls[a]), e);
            for (std::size_t c = 0; c < classes.size(); ++c)
                for (std::size_t i = 0; i < blk.comps[c].rows(); ++i)
                    for (std::size_t j = 0; j < blk.comps[c].cols(); ++j)
                        comps[c].at(offs0[c][a] + i, offs1[c][b] + j) += blk.comps[c].at(i, j);
        }
    ModuleHom d{d1, d0, std::move(comps)};
    return cokernel_module(d).module;
}

GradedMackeyModule box_graded(const GradedMackeyModule& m, const GradedMackeyModule& n) {
    GradedMackeyModule out;
    for (int l = 0; l < 2; ++l) {
        std::vector<MackeyModule> parts;
        for (int i = 0; i < 2; ++i) parts.push_back(box_product(m.part[i], n.part[(l - i + 2) % 2]));
        out.part[l] = direct_sum_modules(parts);
    }
    return out;
}

PresentedAbGroup box_direct_oracle(const MackeyModule& m, const MackeyModule& n, const GSet& x) {
    const FiniteGroup& g = m.group();
    const GreenFunctor& r = m.functor();
    const auto& classes = g.subgroup_classes();

    // blocks: (class K, alpha: G/K -> X); generators m_a (x) n_b
    struct Block {
        std::size_t cls;
        GMap alpha;
        std::size_t offset;
        std::size_t mgens, ngens;
    };
    std::vector<Block> blocks;
    std::size_t total = 0;
    std::vector<GSet> orbit_sets;
    for (std::size_t c = 0; c < classes.size(); ++c) orbit_sets.push_back(GSet::orbit(g, classes[c].rep));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (auto& alpha : maps_between(orbit_sets[c], x)) {
            Block b{c, alpha, total, m.level(c).ngens(), n.level(c).ngens()};
            total += b.mgens * b.ngens;
            blocks.push_back(std::move(b));
        }
    }

    std::vector<IntVec> rels;
    auto tensor_index = [&](const Block& b, std::size_t i, std::size_t j) { return b.offset + i * b.ngens + j; };

    for (const auto& b : blocks) {
        // presentation relations of the tensor square
        const IntMatrix& rm = m.level(b.cls).relations();
        const IntMatrix& rn = n.level(b.cls).relations();
        for (std::size_t cr = 0; cr < rm.cols(); ++cr)
            for (std::size_t j = 0; j < b.ngens; ++j) {
                IntVec v(total, Int(0));
                for (std::size_t i = 0; i < b.mgens; ++i) v[tensor_index(b, i, j)] = rm.at(i, cr);
                rels.push_back(std::move(v));
            }
        for (std::size_t cr = 0; cr < rn.cols(); ++cr)
            for (std::size_t i = 0; i < b.mgens; ++i) {
                IntVec v(total, Int(0));
                for (std::size_t j = 0; j < b.ngens; ++j) v[tensor_index(b, i, j)] = rn.at(j, cr);
                rels.push_back(std::move(v));
            }
        // balancing m·r (x) n = m (x) r·n over the R(K) basis
        std::size_t rk = r.rank(classes[b.cls].rep);
        for (std::size_t bb = 0; bb < rk; ++bb) {
            IntVec eb(rk, Int(0));
            eb[bb] = 1;
            IntMatrix am = m.action_map(classes[b.cls].rep, eb);
            IntMatrix an = n.action_map(classes[b.cls].rep, eb);
            for (std::size_t i = 0; i < b.mgens; ++i)
                for (std::size_t j = 0; j < b.ngens; ++j) {
                    IntVec v(total, Int(0));
                    for (std::size_t i2 = 0; i2 < b.mgens; ++i2) v[tensor_index(b, i2, j)] += am.at(i2, i);
                    for (std::size_t j2 = 0; j2 < b.ngens; ++j2) v[tensor_index(b, i, j2)] -= an.at(j2, j);
                    rels.push_back(std::move(v));
                }
        }
    }

    // slice-category relations: f: (G/K, alpha) -> (G/K', alpha') with alpha' f = alpha
    for (const auto& src : blocks)
        for (const auto& tgt : blocks) {
            for (auto& f : maps_between(orbit_sets[src.cls], orbit_sets[tgt.cls])) {
                bool commutes = true;
                for (int p = 0; p < orbit_sets[src.cls].npoints(); ++p)
                    if (tgt.alpha(f(p)) != src.alpha(p)) {
                        commutes = false;
                        break;
                    }
                if (!commutes) continue;
                IntMatrix mstar = evaluate_covariant(m, f);        // M[K] -> M[K']
                IntMatrix nstar = evaluate_contravariant(n, f);    // N[K'] -> N[K]
                // M_*(f)(mm) (x) nn' - mm (x) N^*(f)(nn')
                for (std::size_t i = 0; i < src.mgens; ++i)
                    for (std::size_t j = 0; j < tgt.ngens; ++j) {
                        IntVec v(total, Int(0));
                        for (std::size_t i2 = 0; i2 < tgt.mgens; ++i2) v[tensor_index(tgt, i2, j)] += mstar.at(i2, i);
                        for (std::size_t j2 = 0; j2 < src.ngens; ++j2) v[tensor_index(src, i, j2)] -= nstar.at(j2, j);
                        rels.push_back(std::move(v));
                    }
                IntMatrix mpull = evaluate_contravariant(m, f);    // M[K'] -> M[K]
                IntMatrix npush = evaluate_covariant(n, f);        // N[K] -> N[K']
                // M^*(f)(mm') (x) nn - mm' (x) N_*(f)(nn)
                for (std::size_t i = 0; i < tgt.mgens; ++i)
                    for (std::size_t j = 0; j < src.ngens; ++j) {
                        IntVec v(total, Int(0));
                        for (std::size_t i2 = 0; i2 < src.mgens; ++i2) v[tensor_index(src, i2, j)] += mpull.at(i2, i);
                        for (std::size_t j2 = 0; j2 < tgt.ngens; ++j2) v[tensor_index(tgt, i, j2)] -= npush.at(j2, j);
                        rels.push_back(std::move(v));
                    }
            }
        }
    return PresentedAbGroup(total, IntMatrix::from_columns(total, rels));
}

MackeyModule internal_hom(const MackeyModule& m, const MackeyModule& n) {
    const FiniteGroup& g = m.group();
    const GreenFunctor& r = m.functor();
    const auto& classes = g.subgroup_classes();
    std::size_t ncls = classes.size();

    std::vector<GSet> orbit_sets;
    std::vector<MackeyModule> shifts;
    std::vector<ModuleHomGroup> homs;
    for (std::size_t i = 0; i < ncls; ++i) {
        orbit_sets.push_back(GSet::orbit(g, classes[i].rep));
        shifts.push_back(shift_module(n, orbit_sets[i]));
        homs.push_back(hom_modules(m, shifts[i]));
    }

    // a module endomap of N_{G/H_i} -> N_{G/H_j} from a right-factor G-map
    // c: G/H_j -> G/H_i, via the requested variance
    auto connecting = [&](std::size_t i, std::size_t j, const GMap& c, bool contystyle) {
        std::vector<IntMatrix> comps;
        for (std::size_t k = 0; k < ncls; ++k) {
            GSet pk_i = bouc_product(orbit_sets[k], orbit_sets[i]);
            GSet pk_j = bouc_product(orbit_sets[k], orbit_sets[j]);
            int ni = orbit_sets[i].npoints(), nj = orbit_sets[j].npoints();
            std::vector<int> img(pk_j.npoints());
            for (int pk = 0; pk < orbit_sets[k].npoints(); ++pk)
                for (int q = 0; q < nj; ++q) img[pk * nj + q] = pk * ni + c(q);
            GMap rightmap(pk_j, pk_i, std::move(img));
            comps.push_back(contystyle ? evaluate_contravariant(n, rightmap) : evaluate_covariant(n, rightmap));
        }
        if (contystyle) return ModuleHom{shifts[i], shifts[j], std::move(comps)};
        // covariant along rightmap goes N(..j) -> N(..i)
        return ModuleHom{shifts[j], shifts[i], std::move(comps)};
    };

    std::vector<MackeyModule::ClassData> data(ncls);
    for (std::size_t i = 0; i < ncls; ++i) {
        data[i].level = homs[i].group;
        const WeylData& w = g.weyl(classes[i].rep);
        for (int nw : w.coset_reps) {
            GMap cmap = coset_mul_map(orbit_sets[i], orbit_sets[i], nw);
            ModuleHom nu = connecting(i, i, cmap, true);
            IntMatrix mat(homs[i].group.ngens(), homs[i].group.ngens());
            for (std::size_t gi = 0; gi < homs[i].generators.size(); ++gi)
                mat.set_column(gi, homs[i].coordinates(nu.compose_after(homs[i].generators[gi])));
            data[i].conj.push_back(std::move(mat));
        }
        const SuborbitTable& tbl = suborbit_table(g, static_cast<int>(i));
        for (const auto& key : tbl.slot_keys) {
            std::size_t j = tbl.by_subgroup.at(key).cls;
            int us = g.conjugator_from_rep(tbl.slot_sub.at(key));
            GMap cmap = coset_mul_map(orbit_sets[j], orbit_sets[i], g.inv(us));
            ModuleHom nu_res = connecting(i, j, cmap, true);   // N_{G/Hi} -> N_{G/Hj}
            ModuleHom nu_ind = connecting(i, j, cmap, false);  // N_{G/Hj} -> N_{G/Hi}
            IntMatrix mres(homs[j].group.ngens(), homs[i].group.ngens());
            for (std::size_t gi = 0; gi < homs[i].generators.size(); ++gi)
                mres.set_column(gi, homs[j].coordinates(nu_res.compose_after(homs[i].generators[gi])));
            data[i].res.emplace(key, std::move(mres));
            IntMatrix mind(homs[i].group.ngens(), homs[j].group.ngens());
            for (std::size_t gj = 0; gj < homs[j].generators.size(); ++gj)
                mind.set_column(gj, homs[i].coordinates(nu_ind.compose_after(homs[j].generators[gj])));
            data[i].ind.emplace(key, std::move(mind));
        }
        std::size_t rk = r.rank(classes[i].rep);
        for (std::size_t b = 0; b < rk; ++b) {
            // action on Hom(M, N_{G/H_i}): postcompose with multiplication by the
            // pulled-back basis element on every level
            IntVec eb(rk, Int(0));
            eb[b] = 1;
            IntMatrix mat(homs[i].group.ngens(), homs[i].group.ngens());
            for (std::size_t gi = 0; gi < homs[i].generators.size(); ++gi) {
                ModuleHom composed = homs[i].generators[gi];
                std::vector<IntMatrix> comps;
                for (std::size_t k = 0; k < ncls; ++k) {
                    GSet pk = bouc_product(orbit_sets[k], orbit_sets[i]);
                    IntMatrix pullk = green_contravariant(r, GMap::proj2(orbit_sets[k], orbit_sets[i]));
                    GreenValue val = GreenValue::from_flat(r, pk, pullk.apply(eb));
                    comps.push_back(value_action(n, pk, val) * composed.comps[k]);
                }
                ModuleHom acted{m, shifts[i], std::move(comps)};
                mat.set_column(gi, homs[i].coordinates(acted));
            }
            data[i].action.push_back(std::move(mat));
        }
    }
    return MackeyModule(r, std::move(data));
}

bool frobenius_check(const MackeyModule& m_sub, const FiniteGroup& g, const Subgroup& sub, const MackeyModule& n) {
    MackeyModule lhs = box_product(induce_module(m_sub, g, sub), n);
    MackeyModule rhs = induce_module(box_product(m_sub, restrict_module(n, sub)), g, sub);
    for (std::size_t i = 0; i < lhs.nclasses(); ++i)
        if (!(lhs.level(i).invariants() == rhs.level(i).invariants())) return false;
    return true;
}

}  // namespace specseq
