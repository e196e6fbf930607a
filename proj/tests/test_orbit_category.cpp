#include <gtest/gtest.h>

#include <set>

#include "ctforge/mesh_oracle.hpp"
#include "ctforge/orbit_category.hpp"
#include "test_support.hpp"

using namespace ctforge;
using ctforge::testing::all_diagrams;

namespace {

OrbitCategory orbit(Family f, int n) { return OrbitCategory(default_orientation(dynkin_diagram(f, n))); }

// Orbit Hom summed from the knitting oracle over every lift in the window.
std::size_t orbit_hom_by_knitting(const OrbitCategory& cat, OrbitObject x, OrbitObject y, Int i) {
    const auto& q = cat.quiver();
    const Int w = default_oracle_window(q);
    Hammock hm(q, cat.lift(x), w);
    DerivedObject yl = cat.derived().shift(cat.lift(y), i);
    const Int period = cat.coxeter() - 1;
    std::size_t total = 0;
    for (Int k = -(w / period) - 2; k <= w / period + 2; ++k) {
        DerivedObject t{yl.vertex, yl.twist + k * period};
        if (x.twist_mod - t.twist > w || t.twist - x.twist_mod > w) continue;
        total += hm.at(t);
    }
    return total;
}

} // namespace

TEST(OrbitCategory, FundamentalDomainSizes) {
    EXPECT_EQ(orbit(Family::A, 3).size(), 9u);
    EXPECT_EQ(orbit(Family::D, 4).size(), 20u);
    EXPECT_EQ(orbit(Family::A, 1).size(), 1u);
    EXPECT_EQ(orbit(Family::E, 6).size(), 66u);
    for (const auto& g : all_diagrams(6)) {
        auto cat = OrbitCategory(default_orientation(g));
        EXPECT_EQ(cat.size(), static_cast<std::size_t>(g.rank() * (coxeter_number(g) - 1)));
        for (std::size_t k = 0; k < cat.size(); ++k) EXPECT_EQ(cat.index_of(cat.objects()[k]), k);
    }
}

TEST(OrbitCategory, ReduceAndIndexValidation) {
    auto cat = orbit(Family::A, 3);
    EXPECT_EQ(cat.reduce({2, 7}), (OrbitObject{2, 1}));
    EXPECT_EQ(cat.reduce({2, -1}), (OrbitObject{2, 2}));
    EXPECT_THROW(cat.index_of({4, 0}), ValidationError);
    EXPECT_THROW(cat.index_of({1, 3}), ValidationError);
    EXPECT_THROW(cat.index_of({1, -1}), ValidationError);
}

TEST(OrbitCategory, GActsTrivially) {
    for (const auto& g : all_diagrams(6)) {
        auto cat = OrbitCategory(default_orientation(g));
        for (const auto& x : cat.objects()) EXPECT_EQ(cat.reduce(cat.derived().g(cat.lift(x))), x);
    }
}

TEST(OrbitCategory, HomExamples) {
    auto a1 = orbit(Family::A, 1);
    // T(k) = k[x]/x^2: the simple is periodic, every Ext is one dimensional.
    for (Int i = 0; i <= 4; ++i) EXPECT_EQ(a1.orbit_hom_dim({1, 0}, {1, 0}, i), 1u);

    auto d4 = orbit(Family::D, 4);
    EXPECT_EQ(d4.orbit_hom_dim({1, 0}, {1, 0}, 0), 1u);
    for (Int i = 1; i <= 3; ++i) EXPECT_EQ(d4.orbit_hom_dim({1, 0}, {1, 0}, i), 0u) << i;
    EXPECT_NE(d4.orbit_hom_dim({1, 0}, {1, 0}, 4), 0u);
}

TEST(OrbitCategory, HomMatchesKnitting) {
    for (const auto& g : all_diagrams(5)) {
        auto cat = OrbitCategory(default_orientation(g));
        for (const auto& x : cat.objects())
            for (const auto& y : cat.objects())
                for (Int i = 0; i <= 3; ++i)
                    ASSERT_EQ(cat.orbit_hom_dim(x, y, i), orbit_hom_by_knitting(cat, x, y, i))
                        << g.name() << " " << to_string(x) << " " << to_string(y) << " " << i;
    }
}

TEST(OrbitCategory, SerreDualityInOrbitCategory) {
    // Ext^i(X, Y) = D Ext^{-i}(Y, nu X), and nu = [-1] there.
    for (const auto& g : all_diagrams(5)) {
        auto cat = OrbitCategory(default_orientation(g));
        for (const auto& x : cat.objects())
            for (const auto& y : cat.objects())
                for (Int i = 0; i <= 3; ++i)
                    EXPECT_EQ(cat.orbit_hom_dim(x, y, i), cat.orbit_hom_dim(y, x, -i - 1)) << g.name();
    }
}

TEST(ExtTable, AgreesWithOrbitHom) {
    auto cat = orbit(Family::D, 5);
    ExtTable ext(cat, 3);
    for (std::size_t x = 0; x < cat.size(); ++x)
        for (std::size_t y = 0; y < cat.size(); ++y)
            for (int i = 0; i <= 3; ++i)
                EXPECT_EQ(ext.at(x, y, i), cat.orbit_hom_dim(cat.objects()[x], cat.objects()[y], i));
    EXPECT_THROW(ext.at(0, 0, 4), ValidationError);
}

TEST(Periodicity, Examples) {
    EXPECT_TRUE(periodicity_check(6, 4));
    EXPECT_FALSE(periodicity_check(6, 2));
    EXPECT_TRUE(periodicity_check(7, 2));
    EXPECT_TRUE(periodicity_check(7, 11));
    EXPECT_FALSE(periodicity_check(12, 2));
    EXPECT_THROW(periodicity_check(1, 2), ValidationError);
    EXPECT_THROW(periodicity_check(4, 1), ValidationError);
}

TEST(Verify, WholeDomainIsOneClusterTilting) {
    for (const auto& g : all_diagrams(4)) {
        auto cat = OrbitCategory(default_orientation(g));
        EXPECT_TRUE(is_d_cluster_tilting(cat, cat.objects(), 1)) << g.name();
    }
}

TEST(Verify, RejectsKnownNonExamples) {
    auto d4 = orbit(Family::D, 4);
    EXPECT_FALSE(is_d_cluster_tilting(d4, {{1, 0}, {3, 0}}, 2));
    EXPECT_FALSE(is_d_cluster_tilting(d4, {{1, 0}}, 4));
    EXPECT_FALSE(is_d_cluster_tilting(d4, d4.objects(), 4));
    EXPECT_THROW(verify_cluster_tilting(d4, {}, 4), ValidationError);
    EXPECT_THROW(verify_cluster_tilting(d4, {{5, 0}}, 4), ValidationError);
    auto cert = verify_cluster_tilting(d4, {{1, 0}}, 4);
    EXPECT_NE(first_failure(cert), "none");
}

TEST(Verify, TranscriptIsReproducible) {
    auto d4 = orbit(Family::D, 4);
    auto a = verify_cluster_tilting(d4, {{3, 0}, {1, 0}}, 4);
    auto b = verify_cluster_tilting(d4, {{1, 0}, {3, 0}, {1, 0}}, 4);
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_TRUE(a.verdict);
}

TEST(Verify, CertificateJsonRoundTrip) {
    auto d4 = orbit(Family::D, 4);
    auto c = verify_cluster_tilting(d4, {{1, 0}, {3, 0}}, 4);
    c.notes.push_back("round trip");
    auto j = to_json(c);
    auto back = certificate_from_json(nlohmann::ordered_json::parse(j.dump()));
    EXPECT_EQ(back, c);
    EXPECT_EQ(to_json(back).dump(), j.dump());
    j["schema"] = "other/1";
    EXPECT_THROW(certificate_from_json(j), ValidationError);
}

TEST(Enumerate, SmallTypeA) {
    EXPECT_FALSE(enumerate_d_ct(orbit(Family::A, 3), 2).empty());
    EXPECT_TRUE(enumerate_d_ct(orbit(Family::A, 4), 2).empty());
    EXPECT_TRUE(enumerate_d_ct(orbit(Family::A, 5), 2).empty());
    EXPECT_EQ(enumerate_d_ct(orbit(Family::A, 3), 2).size(), 6u);
    EXPECT_EQ(enumerate_d_ct(orbit(Family::A, 3), 5).size(), 6u);
    EXPECT_EQ(enumerate_d_ct(orbit(Family::A, 2), 3).size(), 4u);
    EXPECT_EQ(enumerate_d_ct(orbit(Family::A, 6), 2).size(), 6u);
    EXPECT_THROW(enumerate_d_ct(orbit(Family::A, 3), 1), ValidationError);
}

TEST(Enumerate, TypeAHereditaryOrbitIsOneObject) {
    // For d = 2n - 1 each cluster-tilting set is a single orbit object.
    for (int n = 2; n <= 6; ++n) {
        auto certs = enumerate_d_ct(orbit(Family::A, n), 2 * n - 1);
        EXPECT_EQ(certs.size(), static_cast<std::size_t>(2 * n));
        for (const auto& c : certs) EXPECT_EQ(c.objects.size(), 1u);
    }
}

TEST(Enumerate, D4DegreeFour) {
    auto d4 = orbit(Family::D, 4);
    SearchStats st;
    auto certs = enumerate_d_ct(d4, ExtTable(d4, 3), 4, &st);
    EXPECT_EQ(certs.size(), 30u);
    EXPECT_GT(st.nodes, 0u);
    std::set<std::vector<Coordinate>> sets;
    for (const auto& c : certs) sets.insert(c.objects);
    EXPECT_TRUE(sets.count({{1, 0}, {3, 0}}));
    EXPECT_TRUE(sets.count({{1, 0}, {4, 0}}));
}

TEST(Enumerate, TypeDDegreeTwoIsEmpty) {
    for (int n = 4; n <= 6; ++n) EXPECT_TRUE(enumerate_d_ct(orbit(Family::D, n), 2).empty()) << n;
}

TEST(Enumerate, InvariantUnderBranchSwap) {
    // Swapping the two short branches of D_n is a quiver automorphism.
    for (int n = 4; n <= 5; ++n) {
        auto cat = orbit(Family::D, n);
        ExtTable ext(cat, 3);
        auto certs = enumerate_d_ct(cat, ext, 4);
        std::set<std::vector<Coordinate>> sets;
        for (const auto& c : certs) sets.insert(c.objects);
        for (const auto& s : sets) {
            std::vector<Coordinate> t;
            for (auto [v, l] : s) t.push_back({v == n ? n - 1 : (v == n - 1 ? n : v), l});
            std::sort(t.begin(), t.end());
            EXPECT_TRUE(sets.count(t));
        }
    }
}

TEST(Enumerate, HitsSatisfyPeriodicityAndSerreClosure) {
    for (const auto& g : all_diagrams(5)) {
        auto cat = OrbitCategory(default_orientation(g));
        const int h = cat.coxeter();
        for (int d = 2; d <= 2 * (h - 1); ++d)
            for (const auto& c : enumerate_d_ct(cat, d)) {
                EXPECT_TRUE(periodicity_check(h, d)) << g.name() << " d=" << d;
                for (const auto& ch : c.checks) {
                    if (ch.kind == "serre-closure") {
                        EXPECT_EQ(ch.value, 1);
                    }
                }
            }
    }
}

TEST(OnTheRim, TypeDCertificates) {
    auto d4 = orbit(Family::D, 4);
    for (const auto& c : enumerate_d_ct(d4, 4)) EXPECT_TRUE(ontherim_check(c));
    auto d5 = orbit(Family::D, 5);
    auto bad = verify_cluster_tilting(d5, {{2, 0}, {4, 0}}, 4);
    EXPECT_FALSE(ontherim_check(bad));
    auto first_only = verify_cluster_tilting(d5, {{1, 0}, {1, 3}}, 4);
    EXPECT_FALSE(ontherim_check(first_only));
    auto rim = verify_cluster_tilting(d5, {{1, 0}, {5, 2}}, 4);
    EXPECT_TRUE(ontherim_check(rim));
    EXPECT_THROW(ontherim_check(verify_cluster_tilting(orbit(Family::A, 3), {{1, 0}}, 4)), ValidationError);
    EXPECT_THROW(ontherim_check(verify_cluster_tilting(d4, {{1, 0}}, 3)), ValidationError);
}
