#pragma once

#include <cstddef>
#include <vector>

#include "ctforge/linear_algebra.hpp"
#include "ctforge/nakayama.hpp"

namespace ctforge {

// Independent linear-algebra route: modules as explicit representations of
// the cyclic quiver, homomorphisms as solutions of the intertwining system.
//
// M(i, l) has basis b_0..b_{l-1}, b_k at vertex i + k; the arrow leaving
// vertex i + k sends b_k to b_{k+1} (and b_{l-1} to 0). A map f: M -> N is
// the matrix of coefficients f[k][m] of b'_m in f(b_k), allowed only where
// the vertices of b_k and b'_m agree.

namespace detail {

struct HomSystem {
    std::vector<std::pair<int, int>> unknowns;  // (k, m)
    std::vector<std::vector<int>> slot;         // slot[k][m] or -1
    RationalRows equations;
};

inline HomSystem hom_system(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    validate(b, m);
    validate(b, n);
    HomSystem s;
    s.slot.assign(static_cast<std::size_t>(m.length), std::vector<int>(static_cast<std::size_t>(n.length), -1));
    for (int k = 0; k < m.length; ++k)
        for (int q = 0; q < n.length; ++q)
            if (checked::mod(m.top + k - n.top - q, b.n()) == 0) {
                s.slot[k][q] = static_cast<int>(s.unknowns.size());
                s.unknowns.emplace_back(k, q);
            }
    const std::size_t u = s.unknowns.size();
    // f(alpha b_k) = alpha f(b_k), compared on the coefficient of b'_q.
    for (int k = 0; k < m.length; ++k)
        for (int q = 0; q < n.length; ++q) {
            if (checked::mod(m.top + k + 1 - n.top - q, b.n()) != 0) continue;
            std::vector<Rational> row(u, Rational(0));
            bool nonzero = false;
            if (k + 1 < m.length && s.slot[k + 1][q] >= 0) {
                row[static_cast<std::size_t>(s.slot[k + 1][q])] = row[static_cast<std::size_t>(s.slot[k + 1][q])] + Rational(1);
                nonzero = true;
            }
            if (q >= 1 && s.slot[k][q - 1] >= 0) {
                row[static_cast<std::size_t>(s.slot[k][q - 1])] = row[static_cast<std::size_t>(s.slot[k][q - 1])] - Rational(1);
                nonzero = true;
            }
            if (nonzero) s.equations.push_back(std::move(row));
        }
    return s;
}

} // namespace detail

/// Basis of Hom(M, N) as coefficient vectors indexed by the system unknowns.
inline RationalRows hom_basis_matrix_oracle(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    auto s = detail::hom_system(b, m, n);
    return nullspace(std::move(s.equations), s.unknowns.size());
}

inline std::size_t hom_dim_matrix_oracle(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    return hom_basis_matrix_oracle(b, m, n).size();
}

struct StableHomOracleResult {
    std::size_t hom = 0;           // dim Hom(M, N)
    std::size_t hom_to_cover = 0;  // dim Hom(M, P(N))
    std::size_t image_rank = 0;    // rank of pi o - : Hom(M, P(N)) -> Hom(M, N)
    std::size_t kernel_dim = 0;    // dim Hom(M, Omega N), computed separately
    std::size_t value = 0;         // hom - image_rank
};

/// Stable Hom via the composition map with the projective cover pi: P(N) -> N.
/// The rank is obtained twice, as the rank of the composed basis and as
/// dim Hom(M, P(N)) - dim Hom(M, ker pi); disagreement is an internal error.
inline StableHomOracleResult stable_hom_matrix_oracle(const NakayamaAlgebra& b, const SerialModule& m,
                                                      const SerialModule& n) {
    StableHomOracleResult r;
    r.hom = hom_dim_matrix_oracle(b, m, n);
    if (is_projective(b, n)) {
        // pi is the identity: everything factors.
        r.hom_to_cover = r.hom;
        r.image_rank = r.hom;
        r.value = 0;
        return r;
    }
    const SerialModule p = projective_cover(b, n);
    auto sp = detail::hom_system(b, m, p);
    auto basis = nullspace(std::move(sp.equations), sp.unknowns.size());
    r.hom_to_cover = basis.size();

    // pi(b_q) = b_q for q < len N, so pi o f keeps the coefficients with q < len N.
    auto sn = detail::hom_system(b, m, n);
    RationalRows composed;
    for (const auto& f : basis) {
        std::vector<Rational> g(sn.unknowns.size(), Rational(0));
        for (std::size_t j = 0; j < sp.unknowns.size(); ++j) {
            auto [k, q] = sp.unknowns[j];
            if (q < n.length) g[static_cast<std::size_t>(sn.slot[k][q])] = f[j];
        }
        composed.push_back(std::move(g));
    }
    r.image_rank = rank(std::move(composed), sn.unknowns.size());
    r.kernel_dim = hom_dim_matrix_oracle(b, m, syzygy(b, n));
    if (r.image_rank + r.kernel_dim != r.hom_to_cover)
        throw InternalError("stable Hom rank mismatch for " + to_string(m) + ", " + to_string(n));
    if (r.image_rank > r.hom) throw InternalError("factoring maps exceed Hom for " + to_string(m) + ", " + to_string(n));
    r.value = r.hom - r.image_rank;
    return r;
}

inline std::size_t stable_hom_dim_matrix_oracle(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    return stable_hom_matrix_oracle(b, m, n).value;
}

} // namespace ctforge
