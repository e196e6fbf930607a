#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctforge/orbit_category.hpp"

namespace ctforge {

/// Largest fundamental domain searched exhaustively (E_6 has 6 * 11 = 66).
inline constexpr std::size_t kDefaultTrivextBudget = 66;

/// Hom-nonvanishing obstructions on ZE_m: for X on the orbit of vertex v,
/// Hom(X, tau^{-s}X) != 0 where s = 2 (v = 4), 3 (v = 1), m - 3 (v = m),
/// 1 otherwise. Via [2] = (nu o [1]) o tau^{-1} this is
/// Hom(g^s X, X[2s]) != 0, so no object of orbit v is d-rigid once d > 2s.
struct TypeEObstruction {
    std::string diagram;
    int coxeter = 0;
    std::vector<int> tau_steps;      // s_v per vertex
    std::vector<int> degree;         // 2 s_v per vertex
    bool table_holds = false;        // every object satisfies both Hom statements
    bool prime_period = false;       // h - 1 is prime
    int max_degree = 0;              // max_v 2 s_v = 2(m - 3)
    bool degree_below_period = false;  // max_degree < h - 2
    std::vector<Check> checks;

    bool settles_all_degrees() const { return table_holds && prime_period && degree_below_period; }

    /// Why no d-cluster-tilting subcategory exists, or empty if this route
    /// does not settle d.
    std::string refutation(int d) const {
        if (!table_holds) return {};
        if (d > max_degree) return "obstruction";
        if (!periodicity_check(coxeter, d)) return "periodicity";
        return {};
    }
};

inline TypeEObstruction type_e_obstruction(const DynkinDiagram& g) {
    if (g.family() != Family::E) throw ValidationError("type-E obstruction applies to E_6, E_7, E_8 only");
    const int m = g.rank();
    DerivedCategory dc(default_orientation(g));
    TypeEObstruction ob;
    ob.diagram = g.name();
    ob.coxeter = dc.coxeter();
    ob.table_holds = true;
    for (int v = 1; v <= m; ++v) {
        int s = 1;
        if (v == 4) s = 2;
        else if (v == 1) s = 3;
        else if (v == m) s = m - 3;
        ob.tau_steps.push_back(s);
        ob.degree.push_back(2 * s);
        ob.max_degree = std::max(ob.max_degree, 2 * s);
        for (Int l = 0; l <= dc.coxeter() - 2; ++l) {
            DerivedObject x{v, l};
            auto direct = static_cast<Int>(dc.hom_dim(x, tau(x, -s)));
            auto via_g = static_cast<Int>(dc.hom_dim(dc.g_power(x, s), dc.shift(x, 2 * s)));
            ob.checks.push_back({"hom-tau", {{v, l}}, s, direct});
            ob.checks.push_back({"hom-g-shift", {{v, l}}, 2 * s, via_g});
            if (direct == 0 || via_g != direct) ob.table_holds = false;
        }
    }
    const int p = ob.coxeter - 1;
    ob.prime_period = p >= 2;
    for (int k = 2; k * k <= p; ++k)
        if (p % k == 0) ob.prime_period = false;
    ob.degree_below_period = ob.max_degree < ob.coxeter - 2;
    return ob;
}

struct TrivextRow {
    int d = 0;
    bool periodicity = false;
    std::string method;                 // enumeration | obstruction | periodicity | not-attempted
    std::optional<bool> representation_finite;
    std::size_t certificate_count = 0;
    std::vector<CTCertificate> certificates;
};

struct TrivextClassification {
    std::string diagram;
    int coxeter = 0;
    std::size_t domain_size = 0;
    std::size_t budget = 0;
    std::vector<TrivextRow> rows;

    std::vector<int> positive_degrees() const {
        std::vector<int> out;
        for (const auto& r : rows)
            if (r.representation_finite.value_or(false)) out.push_back(r.d);
        return out;
    }
};

/// For which d in [d_min, d_max] T(kQ) is d-representation-finite, using the
/// default orientation of the diagram.
///
/// Within the budget every d is settled by exhaustive search, and any search
/// hit is re-checked against the periodicity lemma. Beyond it the periodicity
/// lemma and, for type E, the obstruction table decide; anything left is
/// reported as not attempted.
inline TrivextClassification classify_trivial_extension(const DynkinDiagram& g, int d_min, int d_max,
                                                        std::size_t budget = kDefaultTrivextBudget) {
    if (d_min < 2 || d_max < d_min) throw ValidationError("degree range must satisfy 2 <= d_min <= d_max");
    OrbitCategory cat(default_orientation(g));
    TrivextClassification out;
    out.diagram = g.name();
    out.coxeter = cat.coxeter();
    out.domain_size = cat.size();
    out.budget = budget;

    std::optional<TypeEObstruction> ob;
    if (g.family() == Family::E) ob = type_e_obstruction(g);

    const bool exhaustive = cat.size() <= budget;
    std::optional<ExtTable> ext;
    if (exhaustive) ext.emplace(cat, d_max - 1);

    for (int d = d_min; d <= d_max; ++d) {
        TrivextRow row;
        row.d = d;
        row.periodicity = periodicity_check(cat.coxeter(), d);
        if (exhaustive) {
            row.method = "enumeration";
            row.certificates = enumerate_d_ct(cat, *ext, d);
            row.certificate_count = row.certificates.size();
            row.representation_finite = !row.certificates.empty();
            if (!row.certificates.empty() && !row.periodicity)
                throw VerificationFailure("cluster-tilting subcategory violates (d+1) | 2(h-1) for " + g.name() +
                                          " d=" + std::to_string(d));
            if (ob && !ob->refutation(d).empty() && !row.certificates.empty())
                throw VerificationFailure("search contradicts the type-E obstruction at d=" + std::to_string(d));
        } else if (!row.periodicity) {
            row.method = "periodicity";
            row.representation_finite = false;
        } else if (ob && !ob->refutation(d).empty()) {
            row.method = ob->refutation(d);
            row.representation_finite = false;
        } else {
            row.method = "not-attempted";
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// Named cluster-tilting modules of trivial extensions, as orbit-object sets.
struct NamedExample {
    std::string name;
    DynkinDiagram diagram;
    int d;
    std::vector<OrbitObject> objects;
    std::string description;
};

inline NamedExample named_example(const std::string& name) {
    auto orbit_cat = [](Family f, int n) { return OrbitCategory(default_orientation(dynkin_diagram(f, n))); };
    if (name.rfind("cta1:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(5));
        } catch (const std::exception&) {
            throw ValidationError("cta1 needs an integer n >= 2, got '" + name.substr(5) + "'");
        }
        if (n < 2) throw ValidationError("cta1 needs n >= 2");
        auto cat = orbit_cat(Family::A, n);
        return {name, cat.quiver().diagram(), 2 * n - 1, {cat.reduce({n, 0})},
                "P_n + T(kQ_n), n = " + std::to_string(n)};
    }
    if (name == "cta2") {
        auto cat = orbit_cat(Family::A, 3);
        const auto& q = cat.quiver();
        auto s2 = cat.reduce(cat.derived().from_module_form({q.simple_dim(2), 0}));
        return {name, q.diagram(), 2, {cat.reduce({1, 0}), cat.reduce({2, 0}), s2}, "P_1 + P_2 + S_2 + T(kQ_3)"};
    }
    if (name == "cta3") {
        auto cat = orbit_cat(Family::A, 6);
        std::vector<OrbitObject> objs;
        for (Int i = 0; i <= 3; ++i)
            for (int v : {5, 6}) objs.push_back(cat.reduce(cat.derived().shift({v, 0}, -3 * i)));  // Omega = [-1]
        return {name, cat.quiver().diagram(), 2, objs, "T(kQ_6) + sum_{i=0..3} Omega^{3i}(P_5 + P_6)"};
    }
    if (name == "ctd") {
        auto cat = orbit_cat(Family::D, 4);
        return {name, cat.quiver().diagram(), 4, {cat.reduce({1, 0}), cat.reduce({3, 0})}, "P_1 + P_3 + T(kQ), Q of type D_4"};
    }
    if (name == "d4-derived") {
        auto cat = orbit_cat(Family::D, 4);
        std::vector<OrbitObject> objs;
        for (Int l = -2; l <= 2; ++l)
            for (int v : {1, 4}) objs.push_back(cat.reduce({v, 5 * l}));
        return {name, cat.quiver().diagram(), 4, objs, "add{tau^{5l}(P_1 + P_4) | l in Z} in D^b(kD_4)"};
    }
    throw ValidationError("unknown example '" + name + "' (expected cta1:<n>, cta2, cta3, ctd, d4-derived)");
}

inline CTCertificate verify_named_example(const NamedExample& ex) {
    OrbitCategory cat(default_orientation(ex.diagram));
    auto cert = verify_cluster_tilting(cat, ex.objects, ex.d);
    cert.notes.push_back(ex.name + ": " + ex.description);
    return cert;
}

/// Verified certificates for P_n + T(kQ_n) (n = 2..6), the A_3 and A_6 2-cluster
/// tilting modules, and P_1 + P_3 + T(kQ) over D_4. Throws VerificationFailure
/// with the failing Hom witness if any of them does not verify.
inline std::vector<CTCertificate> section5_certificates() {
    std::vector<std::string> names;
    for (int n = 2; n <= 6; ++n) names.push_back("cta1:" + std::to_string(n));
    names.insert(names.end(), {"cta2", "cta3", "ctd"});
    std::vector<CTCertificate> out;
    for (const auto& name : names) {
        auto cert = verify_named_example(named_example(name));
        if (!cert.verdict) throw VerificationFailure(name + " failed: " + first_failure(cert));
        out.push_back(std::move(cert));
    }
    return out;
}

} // namespace ctforge
