#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ctforge/certificate.hpp"
#include "ctforge/ct_search.hpp"
#include "ctforge/derived_category.hpp"

namespace ctforge {

/// An object of D^b(kQ)/(nu o [1]): the orbit of tau^twist_mod(P_vertex),
/// with 0 <= twist_mod <= h - 2.
struct OrbitObject {
    int vertex = 1;
    Int twist_mod = 0;
    friend auto operator<=>(const OrbitObject&, const OrbitObject&) = default;
};

inline std::string to_string(const OrbitObject& x) {
    return "[" + std::to_string(x.vertex) + "," + std::to_string(x.twist_mod) + "]";
}

/// The rank * (h - 1) representatives (i, l), 0 <= l <= h - 2, ordered by (i, l).
inline std::vector<OrbitObject> fundamental_domain(const QuiverOrientation& q) {
    const int h = coxeter_number(q.diagram());
    std::vector<OrbitObject> out;
    for (int v = 1; v <= q.rank(); ++v)
        for (Int l = 0; l <= h - 2; ++l) out.push_back({v, l});
    return out;
}

/// Stable category of T(kQ), modelled as the orbit category of D^b(kQ) under
/// g = nu o [1] = tau^{1-h}.
class OrbitCategory {
public:
    explicit OrbitCategory(QuiverOrientation q) : dc_(std::move(q)), domain_(fundamental_domain(dc_.quiver())) {}

    const DerivedCategory& derived() const { return dc_; }
    const QuiverOrientation& quiver() const { return dc_.quiver(); }
    int coxeter() const { return dc_.coxeter(); }
    std::size_t size() const { return domain_.size(); }
    const std::vector<OrbitObject>& objects() const { return domain_; }

    std::size_t index_of(OrbitObject x) const {
        const Int period = coxeter() - 1;
        if (x.vertex < 1 || x.vertex > dc_.rank() || x.twist_mod < 0 || x.twist_mod >= period)
            throw ValidationError("orbit object " + to_string(x) + " outside the fundamental domain");
        return static_cast<std::size_t>(x.vertex - 1) * static_cast<std::size_t>(period) +
               static_cast<std::size_t>(x.twist_mod);
    }

    OrbitObject reduce(DerivedObject x) const { return {x.vertex, checked::mod(x.twist, coxeter() - 1)}; }
    DerivedObject lift(OrbitObject x) const { return {x.vertex, x.twist_mod}; }

    OrbitObject shift(OrbitObject x, Int r) const { return reduce(dc_.shift(lift(x), r)); }
    OrbitObject nu_d(OrbitObject x, int d) const { return reduce(dc_.nu_d(lift(x), d)); }

    /// sum over k of dim Hom(X, g^k(Y)[i]) for lifts X, Y.
    std::size_t orbit_hom_dim(OrbitObject x, OrbitObject y, Int i) const {
        const DerivedObject xl = lift(x);
        const DerivedObject yl = dc_.shift(lift(y), i);
        const Int period = coxeter() - 1;
        const Int w = dc_.window();
        // Bring the target's twist to within one period above the source.
        Int k0 = (yl.twist - xl.twist) / period;
        Int c = yl.twist - k0 * period;
        while (c > xl.twist + period) c -= period;
        while (c <= xl.twist) c += period;
        std::size_t total = 0;
        for (Int t = c; xl.twist - t <= w; t -= period) {
            std::size_t v = dc_.hom_dim(xl, {yl.vertex, t});
            if (v != 0 && xl.twist - t > w - coxeter())
                throw WindowExceeded("orbit Hom support reaches the window edge at " + to_string(x));
            total += v;
        }
        // Targets on the tau side of the source: zero in the mesh category.
        for (Int t = c; t - xl.twist <= w; t += period)
            if (dc_.hom_dim(xl, {yl.vertex, t}) != 0)
                throw WindowExceeded("unexpected Hom towards the tau side at " + to_string(x));
        return total;
    }

private:
    DerivedCategory dc_;
    std::vector<OrbitObject> domain_;
};

/// dim Ext^i(X, Y) = orbit Hom(X, Y[i]) for every pair of the fundamental
/// domain and 0 <= i <= max_degree.
class ExtTable {
public:
    ExtTable(const OrbitCategory& cat, int max_degree) : n_(cat.size()), max_degree_(max_degree) {
        if (max_degree < 0) throw ValidationError("negative degree");
        dims_.assign(static_cast<std::size_t>(max_degree + 1) * n_ * n_, 0);
        const auto& objs = cat.objects();
        for (int i = 0; i <= max_degree; ++i)
            for (std::size_t x = 0; x < n_; ++x)
                for (std::size_t y = 0; y < n_; ++y)
                    dims_[(static_cast<std::size_t>(i) * n_ + x) * n_ + y] =
                        static_cast<unsigned>(cat.orbit_hom_dim(objs[x], objs[y], i));
    }

    std::size_t size() const { return n_; }
    int max_degree() const { return max_degree_; }
    unsigned at(std::size_t x, std::size_t y, int i) const {
        if (i < 0 || i > max_degree_) throw ValidationError("degree outside ext table");
        return dims_[(static_cast<std::size_t>(i) * n_ + x) * n_ + y];
    }
    bool vanishes(std::size_t x, std::size_t y, int d) const {
        for (int i = 1; i <= d - 1; ++i)
            if (at(x, y, i) != 0) return false;
        return true;
    }

private:
    std::size_t n_;
    int max_degree_;
    std::vector<unsigned> dims_;
};

/// (d + 1) | 2(h - 1).
inline bool periodicity_check(int h, int d) {
    if (h < 2 || d < 2) throw ValidationError("periodicity_check needs h >= 2 and d >= 2");
    return (2 * (h - 1)) % (d + 1) == 0;
}

namespace detail {

inline Coordinate coord(const OrbitObject& x) { return {x.vertex, x.twist_mod}; }

inline CTCertificate certificate_header(const OrbitCategory& cat, int d) {
    CTCertificate c;
    c.algebra = "T(k" + cat.quiver().diagram().name() + ")";
    c.diagram = cat.quiver().diagram().name();
    c.orientation = cat.quiver().arrows();
    c.coordinates = "vertex,twist_mod";
    c.d = d;
    return c;
}

} // namespace detail

/// Checks that `subset` is a d-cluster-tilting subcategory of the orbit
/// category and records every Hom value consulted.
inline CTCertificate verify_cluster_tilting(const OrbitCategory& cat, const ExtTable& ext,
                                            std::vector<OrbitObject> subset, int d) {
    if (subset.empty()) throw ValidationError("cluster-tilting candidate must be nonempty");
    if (d < 1) throw ValidationError("d must be positive");
    if (ext.max_degree() < d - 1) throw ValidationError("ext table too shallow for d");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());

    CTCertificate cert = detail::certificate_header(cat, d);
    std::vector<std::size_t> idx;
    std::vector<bool> member(cat.size(), false);
    for (const auto& x : subset) {
        idx.push_back(cat.index_of(x));
        member[idx.back()] = true;
        cert.objects.push_back(detail::coord(x));
    }

    bool ok = true;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            for (int i = 1; i <= d - 1; ++i) {
                Int v = ext.at(idx[a], idx[b], i);
                cert.checks.push_back({"rigidity", {cert.objects[a], cert.objects[b]}, i, v});
                if (v != 0) ok = false;
            }

    const auto& objs = cat.objects();
    for (std::size_t z = 0; z < cat.size(); ++z) {
        if (member[z]) continue;
        const Coordinate cz = detail::coord(objs[z]);
        bool left = false;
        for (std::size_t a = 0; a < idx.size() && !left; ++a)
            for (int i = 1; i <= d - 1 && !left; ++i)
                if (Int v = ext.at(z, idx[a], i); v != 0) {
                    cert.checks.push_back({"left-witness", {cz, cert.objects[a]}, i, v});
                    left = true;
                }
        if (!left) cert.checks.push_back({"left-missing", {cz}, 0, 0});
        bool right = false;
        for (std::size_t a = 0; a < idx.size() && !right; ++a)
            for (int i = 1; i <= d - 1 && !right; ++i)
                if (Int v = ext.at(idx[a], z, i); v != 0) {
                    cert.checks.push_back({"right-witness", {cert.objects[a], cz}, i, v});
                    right = true;
                }
        if (!right) cert.checks.push_back({"right-missing", {cz}, 0, 0});
        ok = ok && left && right;
    }

    bool closed = true;
    for (const auto& x : subset) {
        auto y = cat.nu_d(x, d);
        if (!std::binary_search(subset.begin(), subset.end(), y)) closed = false;
    }
    cert.checks.push_back({"serre-closure", {}, d, closed ? 1 : 0});
    if (d >= 2) cert.checks.push_back({"periodicity", {}, d, periodicity_check(cat.coxeter(), d) ? 1 : 0});
    cert.verdict = ok;
    return cert;
}

inline CTCertificate verify_cluster_tilting(const OrbitCategory& cat, const std::vector<OrbitObject>& subset, int d) {
    return verify_cluster_tilting(cat, ExtTable(cat, std::max(d - 1, 0)), subset, d);
}

inline bool is_d_cluster_tilting(const OrbitCategory& cat, const std::vector<OrbitObject>& subset, int d) {
    return verify_cluster_tilting(cat, subset, d).verdict;
}

inline RigidityData rigidity_data(const OrbitCategory& cat, const ExtTable& ext, int d) {
    std::vector<std::size_t> serre(cat.size());
    for (std::size_t x = 0; x < cat.size(); ++x) serre[x] = cat.index_of(cat.nu_d(cat.objects()[x], d));
    return make_rigidity_data(
        cat.size(), [&](std::size_t x, std::size_t y) { return !ext.vanishes(x, y, d); }, std::move(serre));
}

/// Every (nu o [1])-equivariant d-cluster-tilting subcategory, as verified
/// certificates in lexicographic order of their sorted object lists.
inline std::vector<CTCertificate> enumerate_d_ct(const OrbitCategory& cat, const ExtTable& ext, int d,
                                                 SearchStats* stats = nullptr) {
    if (d < 2) throw ValidationError("enumeration needs d >= 2");
    auto rd = rigidity_data(cat, ext, d);
    auto sets = enumerate_cluster_tilting(rd, stats);
    std::vector<CTCertificate> out;
    for (const auto& s : sets) {
        std::vector<OrbitObject> subset;
        for (auto i : s) subset.push_back(cat.objects()[i]);
        auto cert = verify_cluster_tilting(cat, ext, subset, d);
        if (!cert.verdict) throw InternalError("search produced a set that fails verification: " + first_failure(cert));
        out.push_back(std::move(cert));
    }
    return out;
}

inline std::vector<CTCertificate> enumerate_d_ct(const OrbitCategory& cat, int d, SearchStats* stats = nullptr) {
    return enumerate_d_ct(cat, ExtTable(cat, d - 1), d, stats);
}

/// Every object lies on the orbits of 1, n-1 or n, and not all on the orbit of 1.
inline bool ontherim_check(const CTCertificate& cert) {
    if (cert.diagram.empty() || cert.diagram[0] != 'D')
        throw ValidationError("ontherim_check applies to type D certificates only");
    if (cert.objects.empty()) throw ValidationError("ontherim_check on an empty certificate");
    if (cert.d < 4) throw ValidationError("ontherim_check needs d >= 4");
    const int n = std::stoi(cert.diagram.substr(1));
    bool all_first = true;
    for (const auto& [v, t] : cert.objects) {
        if (v != 1 && v != n - 1 && v != n) return false;
        if (v != 1) all_first = false;
    }
    return !all_first;
}

} // namespace ctforge
