#include "specseq/bouc.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace specseq {

namespace {

std::shared_mutex g_product_mutex;
std::map<std::string, GSet> g_product_cache;

std::string product_key(const GSet& x, const GSet& y) {
    std::ostringstream os;
    os << static_cast<const void*>(&x.group()) << "|" << x.key() << "|" << y.key();
    return os.str();
}

}  // namespace

GSet bouc_product(const GSet& x, const GSet& y) {
    std::string key = product_key(x, y);
    {
        std::shared_lock lock(g_product_mutex);
        auto it = g_product_cache.find(key);
        if (it != g_product_cache.end()) return it->second;
    }
    GSet p = GSet::product(x, y);
    std::unique_lock lock(g_product_mutex);
    return g_product_cache.emplace(key, std::move(p)).first->second;
}

std::size_t bouc_rank(const GreenFunctor& r, const GSet& x, const GSet& y) {
    return green_rank(r, bouc_product(x, y));
}

BoucMorphism bouc_from_flat(const GreenFunctor& r, const GSet& x, const GSet& y, const IntVec& v) {
    GSet p = bouc_product(x, y);
    return BoucMorphism{x, y, GreenValue::from_flat(r, p, v)};
}

BoucMorphism bouc_zero(const GreenFunctor& r, const GSet& x, const GSet& y) {
    return BoucMorphism{x, y, green_zero(r, bouc_product(x, y))};
}

BoucMorphism bouc_identity(const GreenFunctor& r, const GSet& x) {
    GSet p = bouc_product(x, x);
    GMap diag(x, p, [&] {
        std::vector<int> img(x.npoints());
        for (int i = 0; i < x.npoints(); ++i) img[i] = i * x.npoints() + i;
        return img;
    }());
    IntVec v = green_covariant(r, diag).apply(green_unit(r, x).flat());
    return BoucMorphism{x, x, GreenValue::from_flat(r, p, v)};
}

BoucMorphism bouc_compose(const GreenFunctor& r, const BoucMorphism& b, const BoucMorphism& a) {
    if (!a.y.same_set(b.x)) throw std::invalid_argument("bouc_compose: middle objects differ");
    const GSet& x = a.x;
    const GSet& y = a.y;
    const GSet& z = b.y;
    GSet yz = bouc_product(y, z);
    GSet t = bouc_product(x, yz);  // X x (Y x Z)
    int ny = y.npoints(), nz = z.npoints(), nyz = yz.npoints();

    GSet xy = bouc_product(x, y);
    GSet xz = bouc_product(x, z);
    std::vector<int> to_xy(t.npoints()), to_yz(t.npoints()), to_xz(t.npoints());
    for (int ix = 0; ix < x.npoints(); ++ix)
        for (int iy = 0; iy < ny; ++iy)
            for (int iz = 0; iz < nz; ++iz) {
                int pt = ix * nyz + iy * nz + iz;
                to_xy[pt] = ix * ny + iy;
                to_yz[pt] = iy * nz + iz;
                to_xz[pt] = ix * nz + iz;
            }
    GMap pxy(t, xy, std::move(to_xy));
    GMap pyz(t, yz, std::move(to_yz));
    GMap pxz(t, xz, std::move(to_xz));

    GreenValue lifted_a = GreenValue::from_flat(r, t, green_contravariant(r, pxy).apply(a.flat()));
    GreenValue lifted_b = GreenValue::from_flat(r, t, green_contravariant(r, pyz).apply(b.flat()));
    IntVec prod = green_multiply(r, lifted_a, lifted_b).flat();
    return BoucMorphism{x, z, GreenValue::from_flat(r, xz, green_covariant(r, pxz).apply(prod))};
}

std::vector<std::string> bouc_basis_labels(const GreenFunctor& r, const GSet& x, const GSet& y) {
    GSet p = bouc_product(x, y);
    const auto& classes = r.group().subgroup_classes();
    std::vector<std::string> out;
    for (std::size_t oi = 0; oi < p.orbits().size(); ++oi) {
        const auto& o = p.orbits()[oi];
        const Subgroup& stab = classes[o.cls].rep;
        for (std::size_t b = 0; b < r.rank(stab); ++b) {
            std::ostringstream os;
            os << "orbit" << oi << "[stab order " << stab.order() << ", coset rep of base " << o.base << "] * "
               << r.basis_label(stab, b);
            out.push_back(os.str());
        }
    }
    return out;
}

}  // namespace specseq
