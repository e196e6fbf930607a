#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ctforge/certificate.hpp"
#include "ctforge/checked.hpp"
#include "ctforge/ct_search.hpp"
#include "ctforge/errors.hpp"

namespace ctforge {

/// Symmetric Nakayama algebra with n simples and Loewy length a*n + 1, on the
/// cyclic quiver 0 -> 1 -> ... -> n-1 -> 0.
class NakayamaAlgebra {
public:
    NakayamaAlgebra(int a, int n) : a_(a), n_(n) {
        if (a < 1 || n < 1) throw ValidationError("Nakayama algebra needs a >= 1 and n >= 1");
        if (static_cast<Int>(a) * n > 1000) throw ValidationError("Loewy length too large");
    }
    int a() const { return a_; }
    int n() const { return n_; }
    int loewy_length() const { return a_ * n_ + 1; }
    std::size_t nonprojective_count() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(a_ * n_); }
    std::string name() const { return "B(a=" + std::to_string(a_) + ",n=" + std::to_string(n_) + ")"; }

private:
    int a_;
    int n_;
};

/// Uniserial module with top `top` (mod n) and composition length `length`;
/// its radical layer t sits at vertex top + t.
struct SerialModule {
    int top = 0;
    int length = 1;
    friend auto operator<=>(const SerialModule&, const SerialModule&) = default;
};

inline std::string to_string(const SerialModule& m) {
    return "M(" + std::to_string(m.top) + "," + std::to_string(m.length) + ")";
}

inline SerialModule serial_module(const NakayamaAlgebra& b, Int top, int length) {
    if (length < 1 || length > b.loewy_length())
        throw ValidationError("length " + std::to_string(length) + " outside [1, " + std::to_string(b.loewy_length()) + "]");
    return {static_cast<int>(checked::mod(top, b.n())), length};
}

inline void validate(const NakayamaAlgebra& b, const SerialModule& m) {
    if (m.top < 0 || m.top >= b.n() || m.length < 1 || m.length > b.loewy_length())
        throw ValidationError("module " + to_string(m) + " not over " + b.name());
}

inline bool is_projective(const NakayamaAlgebra& b, const SerialModule& m) { return m.length == b.loewy_length(); }

inline SerialModule projective_cover(const NakayamaAlgebra& b, const SerialModule& m) {
    return {m.top, b.loewy_length()};
}

inline SerialModule projective(const NakayamaAlgebra& b, int top) { return serial_module(b, top, b.loewy_length()); }
inline SerialModule simple(const NakayamaAlgebra& b, int top) { return serial_module(b, top, 1); }

/// All n * L indecomposables, ordered by (top, length).
inline std::vector<SerialModule> all_modules(const NakayamaAlgebra& b) {
    std::vector<SerialModule> out;
    for (int i = 0; i < b.n(); ++i)
        for (int l = 1; l <= b.loewy_length(); ++l) out.push_back({i, l});
    return out;
}

inline std::vector<SerialModule> nonprojective_modules(const NakayamaAlgebra& b) {
    std::vector<SerialModule> out;
    for (int i = 0; i < b.n(); ++i)
        for (int l = 1; l < b.loewy_length(); ++l) out.push_back({i, l});
    return out;
}

/// Omega M(i, l) = M(i + l, L - l), the kernel of P_i -> M(i, l).
inline SerialModule syzygy(const NakayamaAlgebra& b, const SerialModule& m) {
    validate(b, m);
    if (is_projective(b, m)) throw ValidationError("syzygy of projective " + to_string(m));
    return serial_module(b, m.top + m.length, b.loewy_length() - m.length);
}

inline SerialModule cosyzygy(const NakayamaAlgebra& b, const SerialModule& m) {
    validate(b, m);
    if (is_projective(b, m)) throw ValidationError("cosyzygy of projective " + to_string(m));
    const int l = b.loewy_length() - m.length;
    return serial_module(b, m.top - l, l);
}

inline SerialModule syzygy_power(const NakayamaAlgebra& b, SerialModule m, Int r) {
    // Omega^{2n} = id on non-projectives.
    r = checked::mod(r, 2 * b.n());
    for (Int k = 0; k < r; ++k) m = syzygy(b, m);
    return m;
}

/// dim Hom(M, N): the radical layers t of N, t >= len N - len M, at vertex top M.
inline std::size_t hom_dim(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    validate(b, m);
    validate(b, n);
    const int lo = std::max(0, n.length - m.length);
    std::size_t c = 0;
    for (int t = lo; t < n.length; ++t)
        if (checked::mod(m.top - n.top - t, b.n()) == 0) ++c;
    return c;
}

/// dim of Hom(M, N) modulo maps factoring through projectives. Every such map
/// factors through the cover pi: P(N) -> N, and ker(pi o -) = Hom(M, Omega N).
inline std::size_t stable_hom_dim(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n) {
    validate(b, m);
    validate(b, n);
    if (is_projective(b, m) || is_projective(b, n)) return 0;
    const std::size_t through = hom_dim(b, m, projective_cover(b, n)) - hom_dim(b, m, syzygy(b, n));
    return hom_dim(b, m, n) - through;
}

/// dim Ext^i(M, N) = dim stable Hom(Omega^i M, N).
inline std::size_t ext_dim(const NakayamaAlgebra& b, const SerialModule& m, const SerialModule& n, int i) {
    if (i < 1) throw ValidationError("ext_dim needs i >= 1");
    validate(b, m);
    validate(b, n);
    if (is_projective(b, m) || is_projective(b, n)) return 0;
    return stable_hom_dim(b, syzygy_power(b, m, i), n);
}

// ---------------------------------------------------------------------------
// Arithmetic side.

inline void validate_triple(int a, int n, int d) {
    if (a < 1 || n < 1 || d < 2) throw ValidationError("need a >= 1, n >= 1, d >= 2");
}

inline Int siny_lhs(int a, int n, int d) {
    return checked::add(checked::mul(checked::add(checked::mul(a, n), 1), d - 1), 2);
}

/// ((an+1)(d-1) + 2) | 2n
inline bool condition_a(int a, int n, int d) {
    validate_triple(a, n, d);
    return checked::mul(2, n) % siny_lhs(a, n, d) == 0;
}

/// ((an+1)(d-1) + 2) | t n with t = gcd(d+1, 2an)
inline bool condition_b(int a, int n, int d) {
    validate_triple(a, n, d);
    const Int t = std::gcd(Int{d} + 1, checked::mul(2, checked::mul(a, n)));
    return checked::mul(t, n) % siny_lhs(a, n, d) == 0;
}

inline bool classify_numeric(int a, int n, int d) { return condition_a(a, n, d) || condition_b(a, n, d); }

/// (a, n, d) in {(1, t, 2t-1) : t >= 2} u {(1,3,2), (1,6,2), (2,3,2)}.
inline bool theorem2_predicate(int a, int n, int d) {
    validate_triple(a, n, d);
    if (a == 1 && n >= 2 && d == 2 * n - 1) return true;
    return (a == 1 && n == 3 && d == 2) || (a == 1 && n == 6 && d == 2) || (a == 2 && n == 3 && d == 2);
}

/// (d + 1) | 2n
inline bool divides2n(int n, int d) { return (2 * Int{n}) % (Int{d} + 1) == 0; }

/// ((n+1)(d-1) + 2) | (d+1) n, condition (b) at a = 1 once (d+1) | 2n.
inline bool newconditionb(int n, int d) {
    validate_triple(1, n, d);
    return checked::mul(Int{d} + 1, n) % siny_lhs(1, n, d) == 0;
}

/// (b(d-1) + 2) | b(d+1)
inline bool divides_condition(int b, int d) {
    if (b < 1 || d < 2) throw ValidationError("need b >= 1, d >= 2");
    return checked::mul(b, Int{d} + 1) % checked::add(checked::mul(b, d - 1), 2) == 0;
}

// ---------------------------------------------------------------------------
// Cluster tilting over the serial-module category.

inline Coordinate coord(const SerialModule& m) { return {m.top, m.length}; }

/// Verifies that `summands` is a d-cluster-tilting module: all projectives,
/// Ext^{1..d-1} vanishes on add M, and every other indecomposable X has
/// Ext(X, M) != 0 and Ext(M, X) != 0 in some degree in [1, d-1].
inline CTCertificate verify_d_ct_module(const NakayamaAlgebra& b, std::vector<SerialModule> summands, int d) {
    if (d < 2) throw ValidationError("d must be at least 2");
    for (const auto& m : summands) validate(b, m);
    std::sort(summands.begin(), summands.end());
    summands.erase(std::unique(summands.begin(), summands.end()), summands.end());

    CTCertificate cert;
    cert.algebra = b.name();
    cert.coordinates = "top,length";
    cert.d = d;
    for (const auto& m : summands) cert.objects.push_back(coord(m));

    bool ok = true;
    Int projectives = 0;
    std::vector<SerialModule> np;
    for (const auto& m : summands) {
        if (is_projective(b, m))
            ++projectives;
        else
            np.push_back(m);
    }
    cert.checks.push_back({"projectives", {}, 0, projectives == b.n() ? 1 : 0});
    ok = ok && projectives == b.n();

    for (const auto& x : np)
        for (const auto& y : np)
            for (int i = 1; i <= d - 1; ++i) {
                Int v = ext_dim(b, x, y, i);
                cert.checks.push_back({"rigidity", {coord(x), coord(y)}, i, v});
                if (v != 0) ok = false;
            }

    for (const auto& z : nonprojective_modules(b)) {
        if (std::binary_search(summands.begin(), summands.end(), z)) continue;
        bool left = false;
        for (std::size_t k = 0; k < np.size() && !left; ++k)
            for (int i = 1; i <= d - 1 && !left; ++i)
                if (Int v = ext_dim(b, z, np[k], i); v != 0) {
                    cert.checks.push_back({"left-witness", {coord(z), coord(np[k])}, i, v});
                    left = true;
                }
        if (!left) cert.checks.push_back({"left-missing", {coord(z)}, 0, 0});
        bool right = false;
        for (std::size_t k = 0; k < np.size() && !right; ++k)
            for (int i = 1; i <= d - 1 && !right; ++i)
                if (Int v = ext_dim(b, np[k], z, i); v != 0) {
                    cert.checks.push_back({"right-witness", {coord(np[k]), coord(z)}, i, v});
                    right = true;
                }
        if (!right) cert.checks.push_back({"right-missing", {coord(z)}, 0, 0});
        ok = ok && left && right;
    }
    cert.checks.push_back({"divides2n", {}, d, divides2n(b.n(), d) ? 1 : 0});
    cert.verdict = ok;
    return cert;
}

inline bool is_d_ct_module(const NakayamaAlgebra& b, const std::vector<SerialModule>& summands, int d) {
    return verify_d_ct_module(b, summands, d).verdict;
}

inline constexpr std::size_t kDefaultNakayamaBudget = 60;

struct NakayamaEnumeration {
    bool attempted = false;
    std::size_t nonprojective_count = 0;
    std::size_t budget = 0;
    std::vector<std::vector<SerialModule>> sets;  // each includes the projectives
    SearchStats stats;
};

/// Every basic d-cluster-tilting module, by clique search over the
/// Omega^{d+1}-orbits of non-projectives. Not attempted when the number of
/// non-projective indecomposables exceeds `budget`.
inline NakayamaEnumeration enumerate_d_ct(const NakayamaAlgebra& b, int d, std::size_t budget = kDefaultNakayamaBudget) {
    if (d < 2) throw ValidationError("enumeration needs d >= 2");
    NakayamaEnumeration out;
    out.nonprojective_count = b.nonprojective_count();
    out.budget = budget;
    if (out.nonprojective_count > budget) return out;
    out.attempted = true;

    const auto mods = nonprojective_modules(b);
    const std::size_t n = mods.size();
    auto index = [&](const SerialModule& m) {
        return static_cast<std::size_t>(m.top) * static_cast<std::size_t>(b.loewy_length() - 1) +
               static_cast<std::size_t>(m.length - 1);
    };
    std::vector<std::size_t> serre(n);
    for (std::size_t x = 0; x < n; ++x) serre[x] = index(syzygy_power(b, mods[x], d + 1));
    auto rd = make_rigidity_data(
        n,
        [&](std::size_t x, std::size_t y) {
            for (int i = 1; i <= d - 1; ++i)
                if (ext_dim(b, mods[x], mods[y], i) != 0) return true;
            return false;
        },
        std::move(serre));

    for (const auto& s : enumerate_cluster_tilting(rd, &out.stats)) {
        std::vector<SerialModule> set;
        for (int i = 0; i < b.n(); ++i) set.push_back(projective(b, i));
        for (auto k : s) set.push_back(mods[k]);
        std::sort(set.begin(), set.end());
        out.sets.push_back(std::move(set));
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

/// Lemma check on an enumeration: a nonempty result forces (d + 1) | 2n.
inline bool divides2n_check(const NakayamaEnumeration& found, int n, int d) {
    if (!found.attempted) throw ValidationError("divides2n_check on an enumeration that was not attempted");
    return found.sets.empty() || divides2n(n, d);
}

struct NakayamaRow {
    int d = 0;
    bool condition_a = false;
    bool condition_b = false;
    bool numeric = false;
    bool predicate = false;
    bool bruteforce_attempted = false;
    std::optional<bool> bruteforce;
    std::size_t set_count = 0;
    std::vector<CTCertificate> certificates;
};

struct NakayamaClassification {
    int a = 0;
    int n = 0;
    std::size_t budget = 0;
    std::vector<NakayamaRow> rows;
};

/// Per-d verdicts for B(a, n), d = 2..d_max. The brute-force route runs only
/// when requested; its certificates are re-verified independently.
inline NakayamaClassification classify_nakayama(int a, int n, int d_max, bool numeric, bool bruteforce,
                                                std::size_t budget = kDefaultNakayamaBudget) {
    if (d_max < 2) throw ValidationError("d_max must be at least 2");
    NakayamaAlgebra b(a, n);
    NakayamaClassification out{a, n, budget, {}};
    for (int d = 2; d <= d_max; ++d) {
        NakayamaRow row;
        row.d = d;
        if (numeric) {
            row.condition_a = condition_a(a, n, d);
            row.condition_b = condition_b(a, n, d);
            row.numeric = row.condition_a || row.condition_b;
            row.predicate = theorem2_predicate(a, n, d);
        }
        if (bruteforce) {
            auto e = enumerate_d_ct(b, d, budget);
            row.bruteforce_attempted = e.attempted;
            if (e.attempted) {
                row.bruteforce = !e.sets.empty();
                row.set_count = e.sets.size();
                for (const auto& s : e.sets) {
                    auto cert = verify_d_ct_module(b, s, d);
                    if (!cert.verdict) throw InternalError("search produced a set that fails verification: " + first_failure(cert));
                    row.certificates.push_back(std::move(cert));
                }
            }
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace ctforge
