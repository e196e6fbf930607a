#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ctforge/errors.hpp"
#include "ctforge/linear_algebra.hpp"

namespace ctforge {

enum class Family { A, D, E };

inline char family_letter(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
    }
    return '?';
}

inline Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "D" || s == "d") return Family::D;
    if (s == "E" || s == "e") return Family::E;
    throw ValidationError("unknown Dynkin family '" + s + "' (expected A, D or E)");
}

/// Vertex labels are 1-based and follow the usual pictures:
///   A_n: 1 - 2 - ... - n
///   D_n: 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2
///   E_m: 1 - 2 - 3 - 5 - ... - m, with 4 attached to 3
class DynkinDiagram {
public:
    DynkinDiagram(Family family, int rank) : family_(family), rank_(rank) {
        switch (family) {
        case Family::A:
            if (rank < 1) throw ValidationError("type A requires rank >= 1");
            break;
        case Family::D:
            if (rank < 4) throw ValidationError("type D requires rank >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw ValidationError("type E requires rank in {6, 7, 8}");
            break;
        }
    }

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

    /// Undirected edges as (smaller, larger) label pairs, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        switch (family_) {
        case Family::A:
            for (int i = 1; i < rank_; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 1; i < rank_ - 2; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(rank_ - 2, rank_ - 1);
            e.emplace_back(rank_ - 2, rank_);
            break;
        case Family::E:
            e.emplace_back(1, 2);
            e.emplace_back(2, 3);
            e.emplace_back(3, 4);
            e.emplace_back(3, 5);
            for (int i = 5; i < rank_; ++i) e.emplace_back(i, i + 1);
            break;
        }
        std::sort(e.begin(), e.end());
        return e;
    }

    friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

private:
    Family family_;
    int rank_;
};

inline DynkinDiagram dynkin_diagram(Family family, int rank) { return DynkinDiagram(family, rank); }

inline int coxeter_number(const DynkinDiagram& g) {
    switch (g.family()) {
    case Family::A: return g.rank() + 1;
    case Family::D: return 2 * (g.rank() - 1);
    case Family::E:
        switch (g.rank()) {
        case 6: return 12;
        case 7: return 18;
        default: return 30;
        }
    }
    return 0;
}

struct Arrow {
    int source;
    int target;
    friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// An orientation of a Dynkin diagram. Modules are covariant representations,
/// so P_i is spanned by the paths starting at i.
class QuiverOrientation {
public:
    QuiverOrientation(DynkinDiagram diagram, std::vector<Arrow> arrows)
        : diagram_(diagram), arrows_(std::move(arrows)) {
        std::vector<std::pair<int, int>> undirected;
        for (const auto& a : arrows_) {
            if (a.source < 1 || a.source > rank() || a.target < 1 || a.target > rank())
                throw ValidationError("arrow endpoint outside vertex range");
            undirected.emplace_back(std::min(a.source, a.target), std::max(a.source, a.target));
        }
        std::sort(undirected.begin(), undirected.end());
        if (undirected != diagram_.edges())
            throw ValidationError("arrows do not match the edges of " + diagram_.name());
        compute_paths();
    }

    const DynkinDiagram& diagram() const { return diagram_; }
    int rank() const { return diagram_.rank(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Number of paths from vertex i to vertex j (0 or 1 on a tree).
    Int path_count(int i, int j) const { return paths_[idx(i) * n() + idx(j)]; }

    IntVector projective_dim(int i) const {
        IntVector v(n());
        for (int j = 1; j <= rank(); ++j) v[idx(j)] = path_count(i, j);
        return v;
    }

    IntVector injective_dim(int i) const {
        IntVector v(n());
        for (int j = 1; j <= rank(); ++j) v[idx(j)] = path_count(j, i);
        return v;
    }

    IntVector simple_dim(int i) const {
        IntVector v(n(), 0);
        v[idx(i)] = 1;
        return v;
    }

    /// Vertices ordered so that every arrow points from an earlier to a later entry.
    const std::vector<int>& topological_order() const { return topo_; }

private:
    std::size_t n() const { return static_cast<std::size_t>(rank()); }
    static std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }

    void compute_paths() {
        const std::size_t r = n();
        std::vector<int> indeg(r, 0);
        for (const auto& a : arrows_) ++indeg[idx(a.target)];
        std::vector<int> queue;
        for (int v = 1; v <= rank(); ++v)
            if (indeg[idx(v)] == 0) queue.push_back(v);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            topo_.push_back(v);
            for (const auto& a : arrows_)
                if (a.source == v && --indeg[idx(a.target)] == 0) queue.push_back(a.target);
        }
        if (topo_.size() != r) throw ValidationError("quiver has an oriented cycle");

        paths_.assign(r * r, 0);
        for (int v = 1; v <= rank(); ++v) paths_[idx(v) * r + idx(v)] = 1;
        // Accumulate in reverse topological order: paths(i, j) = [i = j] + sum over i -> k.
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
            int i = *it;
            for (const auto& a : arrows_) {
                if (a.source != i) continue;
                for (int j = 1; j <= rank(); ++j)
                    paths_[idx(i) * r + idx(j)] =
                        checked::add(paths_[idx(i) * r + idx(j)], paths_[idx(a.target) * r + idx(j)]);
            }
        }
    }

    DynkinDiagram diagram_;
    std::vector<Arrow> arrows_;
    std::vector<Int> paths_;
    std::vector<int> topo_;
};

/// Every edge points from the smaller to the larger label. For A_n this is the
/// linear quiver 1 -> 2 -> ... -> n, for D_4 it is 1 -> 2, 2 -> 3, 2 -> 4, and for
/// the remaining D_n and E_m it sends the branch arrows out of the branch vertex.
inline QuiverOrientation default_orientation(const DynkinDiagram& g) {
    std::vector<Arrow> arrows;
    for (auto [lo, hi] : g.edges()) arrows.push_back({lo, hi});
    return QuiverOrientation(g, std::move(arrows));
}

/// <x, y> = sum_i x_i y_i - sum_{i -> j} x_i y_j.
inline Int euler_form(const QuiverOrientation& q, std::span<const Int> x, std::span<const Int> y) {
    const auto r = static_cast<std::size_t>(q.rank());
    if (x.size() != r || y.size() != r) throw ValidationError("dimension vector length does not match rank");
    Int s = 0;
    for (std::size_t i = 0; i < r; ++i) s = checked::add(s, checked::mul(x[i], y[i]));
    for (const auto& a : q.arrows())
        s = checked::sub(s, checked::mul(x[static_cast<std::size_t>(a.source - 1)], y[static_cast<std::size_t>(a.target - 1)]));
    return s;
}

/// Gram matrix E of the Euler form: <x, y> = x^T E y.
inline IntMatrix euler_matrix(const QuiverOrientation& q) {
    const auto r = static_cast<std::size_t>(q.rank());
    IntMatrix e = IntMatrix::identity(r);
    for (const auto& a : q.arrows())
        e(static_cast<std::size_t>(a.source - 1), static_cast<std::size_t>(a.target - 1)) -= 1;
    return e;
}

/// Coxeter transformation Phi = -C^T C^{-1}, where the columns of C are the
/// projective dimension vectors. dim(tau M) = Phi dim(M) for indecomposable
/// non-projective M.
inline IntMatrix coxeter_matrix(const QuiverOrientation& q) {
    const auto r = static_cast<std::size_t>(q.rank());
    IntMatrix c(r);
    for (int i = 1; i <= q.rank(); ++i) {
        auto p = q.projective_dim(i);
        for (std::size_t j = 0; j < r; ++j) c(j, static_cast<std::size_t>(i - 1)) = p[j];
    }
    return -(c.transposed() * c.inverse());
}

} // namespace ctforge
