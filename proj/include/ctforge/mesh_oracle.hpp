#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctforge/derived_category.hpp"

namespace ctforge {

/// dim Hom(source, -) on the mesh category of ZQ, computed by knitting.
///
/// ZQ has, for every arrow i -> j of Q, the arrows (j, l) -> (i, l) and
/// (i, l) -> (j, l - 1); the mesh ending at (v, l) starts at (v, l + 1). The
/// function is 1 at the source, zero on everything not reachable from it, and
/// otherwise h(Y) = max(0, sum_{Z -> Y} h(Z) - h(tau Y)).
///
/// Built only from the quiver; it never consults Euler forms, Coxeter
/// matrices or normal forms.
class Hammock {
public:
    Hammock(const QuiverOrientation& q, DerivedObject source, Int window)
        : q_(&q), source_(source), window_(window) {
        const auto r = static_cast<std::size_t>(q.rank());
        values_.assign(static_cast<std::size_t>(window + 1), std::vector<Int>(r, 0));
        // Within one twist an arrow (j, l) -> (i, l) needs i -> j, so targets of
        // Q-arrows are knitted first.
        const auto& topo = q.topological_order();
        for (Int step = 0; step <= window; ++step) {
            auto& cur = values_[static_cast<std::size_t>(step)];
            bool seen_source = step > 0;
            for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
                const int v = *it;
                if (step == 0) {
                    if (v == source.vertex) {
                        cur[idx(v)] = 1;
                        seen_source = true;
                        continue;
                    }
                    if (!seen_source) continue;
                }
                Int sum = 0;
                for (const auto& a : q.arrows()) {
                    if (a.source == v) sum += cur[idx(a.target)];           // (j, l) -> (v, l)
                    if (a.target == v && step > 0)
                        sum += values_[static_cast<std::size_t>(step - 1)][idx(a.source)];  // (k, l+1) -> (v, l)
                }
                if (step > 0) sum -= values_[static_cast<std::size_t>(step - 1)][idx(v)];
                cur[idx(v)] = sum > 0 ? sum : 0;
            }
        }
    }

    DerivedObject source() const { return source_; }
    Int window() const { return window_; }

    std::size_t at(DerivedObject y) const {
        const Int step = source_.twist - y.twist;
        if (step < 0) {
            if (-step > window_) throw WindowExceeded("target " + to_string(y) + " outside oracle window");
            return 0;  // arrows never increase the twist
        }
        if (step > window_) throw WindowExceeded("target " + to_string(y) + " outside oracle window");
        return static_cast<std::size_t>(values_[static_cast<std::size_t>(step)][idx(y.vertex)]);
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v - 1); }

    const QuiverOrientation* q_;
    DerivedObject source_;
    Int window_;
    std::vector<std::vector<Int>> values_;
};

inline Int default_oracle_window(const QuiverOrientation& q) { return 4 * static_cast<Int>(coxeter_number(q.diagram())); }

inline std::size_t hom_dim_oracle(const QuiverOrientation& q, DerivedObject x, DerivedObject y, Int window) {
    return Hammock(q, x, window).at(y);
}

inline std::size_t hom_dim_oracle(const QuiverOrientation& q, DerivedObject x, DerivedObject y) {
    return hom_dim_oracle(q, x, y, default_oracle_window(q));
}

} // namespace ctforge
