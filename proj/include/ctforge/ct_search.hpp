#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ctforge/errors.hpp"

namespace ctforge {

/// Fixed-size bitset with runtime width; set operations are word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }

    bool any() const {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
        return r;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// d-rigidity data over a finite list of indecomposables 0..size-1.
///
/// left_blockers[z]  = { u : Ext^i(z, u) != 0 for some 1 <= i <= d-1 }
/// right_blockers[z] = { u : Ext^i(u, z) != 0 for some 1 <= i <= d-1 }
/// serre permutes the objects by the induced action of S o [-d].
struct RigidityData {
    std::size_t size = 0;
    std::vector<Bitset> left_blockers;
    std::vector<Bitset> right_blockers;
    std::vector<std::size_t> serre;

    bool self_rigid(std::size_t x) const { return !left_blockers[x].test(x); }
    bool compatible(std::size_t x, std::size_t y) const {
        return !left_blockers[x].test(y) && !left_blockers[y].test(x);
    }
};

/// Builds RigidityData from a predicate ext_nonzero(x, y) meaning
/// "Ext^i(x, y) != 0 for some degree in [1, d-1]".
template <class ExtNonzero>
RigidityData make_rigidity_data(std::size_t n, ExtNonzero&& ext_nonzero, std::vector<std::size_t> serre) {
    if (serre.size() != n) throw ValidationError("serre permutation has wrong length");
    RigidityData rd;
    rd.size = n;
    rd.left_blockers.assign(n, Bitset(n));
    rd.right_blockers.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (ext_nonzero(x, y)) {
                rd.left_blockers[x].set(y);
                rd.right_blockers[y].set(x);
            }
    rd.serre = std::move(serre);
    return rd;
}

/// The defining test: U is rigid, and every object outside U has a nonzero
/// Ext into U and a nonzero Ext out of U.
inline bool is_cluster_tilting(const RigidityData& rd, const Bitset& u) {
    bool ok = true;
    for (std::size_t z = 0; z < rd.size && ok; ++z) {
        if (u.test(z))
            ok = !rd.left_blockers[z].intersects(u);
        else
            ok = rd.left_blockers[z].intersects(u) && rd.right_blockers[z].intersects(u);
    }
    return ok;
}

struct SearchStats {
    std::size_t orbits = 0;
    std::size_t usable_orbits = 0;
    std::size_t nodes = 0;
    std::size_t maximal_cliques = 0;
};

/// All d-cluster-tilting subsets, each sorted by index, the list sorted
/// lexicographically.
///
/// Candidates are unions of Serre-orbits (every d-cluster-tilting subcategory
/// is stable under S o [-d]); they are the maximal cliques of the orbit
/// compatibility graph, enumerated by Bron-Kerbosch with pivoting. A branch is
/// cut as soon as some object outside R u P can no longer be blocked from
/// both sides.
inline std::vector<std::vector<std::size_t>> enumerate_cluster_tilting(const RigidityData& rd,
                                                                     SearchStats* stats = nullptr) {
    const std::size_t n = rd.size;
    SearchStats local;
    SearchStats& st = stats ? *stats : local;

    // Serre orbits.
    std::vector<Bitset> orbit_members;
    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        Bitset orb(n);
        std::size_t y = x;
        while (!seen[y]) {
            seen[y] = true;
            orb.set(y);
            y = rd.serre[y];
            if (y >= n) throw InternalError("serre permutation out of range");
        }
        if (y != x) throw InternalError("serre map is not a permutation");
        orbit_members.push_back(orb);
    }
    st.orbits = orbit_members.size();

    auto orbit_compatible = [&](const Bitset& a, const Bitset& b) {
        bool ok = true;
        a.for_each([&](std::size_t x) {
            if (ok && rd.left_blockers[x].intersects(b)) ok = false;
        });
        b.for_each([&](std::size_t y) {
            if (ok && rd.left_blockers[y].intersects(a)) ok = false;
        });
        return ok;
    };

    std::vector<Bitset> nodes;
    for (const auto& orb : orbit_members)
        if (orbit_compatible(orb, orb)) nodes.push_back(orb);
    const std::size_t m = nodes.size();
    st.usable_orbits = m;

    std::vector<Bitset> adj(m, Bitset(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (orbit_compatible(nodes[a], nodes[b])) {
                adj[a].set(b);
                adj[b].set(a);
            }

    auto objects_of = [&](const Bitset& orbit_set) {
        Bitset objs(n);
        orbit_set.for_each([&](std::size_t a) { objs |= nodes[a]; });
        return objs;
    };

    std::vector<std::vector<std::size_t>> found;

    std::function<void(const Bitset&, Bitset, Bitset)> expand = [&](const Bitset& r, Bitset p, Bitset x) {
        ++st.nodes;
        const Bitset reachable = objects_of(r | p);
        for (std::size_t z = 0; z < n; ++z) {
            if (reachable.test(z)) continue;
            if (!rd.left_blockers[z].intersects(reachable) || !rd.right_blockers[z].intersects(reachable)) return;
        }
        if (!p.any()) {
            if (x.any()) return;
            ++st.maximal_cliques;
            Bitset u = objects_of(r);
            if (is_cluster_tilting(rd, u)) found.push_back(u.elements());
            return;
        }
        // Pivot: the vertex of P u X with most neighbours in P.
        std::size_t pivot = 0, best = 0;
        bool have = false;
        (p | x).for_each([&](std::size_t v) {
            std::size_t c = (adj[v] & p).count();
            if (!have || c > best) {
                pivot = v;
                best = c;
                have = true;
            }
        });
        const Bitset branch = p.minus(adj[pivot]);
        branch.for_each([&](std::size_t v) {
            Bitset r2 = r;
            r2.set(v);
            expand(r2, p & adj[v], x & adj[v]);
            p.reset(v);
            x.set(v);
        });
    };

    Bitset all(m);
    for (std::size_t a = 0; a < m; ++a) all.set(a);
    if (n > 0) expand(Bitset(m), all, Bitset(m));

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace ctforge
