#include <cstdlib>
#include <set>

#include "doctest.h"
#include "util.hpp"

using namespace tilesub;
using namespace tilesub::test;

namespace {

// Every perfect matching of the sides of F k-gons, each edge in both
// polarities, kept when connected with all degrees >= 3.
std::set<GMap> naive_tilings(int k, int faces) {
    std::set<GMap> out;
    int sides = k * faces;
    std::vector<int> partner(sides, -1);
    std::vector<char> rev(sides, 0);
    std::function<void()> rec = [&] {
        int s = 0;
        while (s < sides && partner[s] >= 0) ++s;
        if (s == sides) {
            PolygonBuilder b;
            for (int f = 0; f < faces; ++f) b.add_face(k);
            for (int x = 0; x < sides; ++x)
                if (partner[x] > x) b.glue(x / k, x % k, partner[x] / k, partner[x] % k, rev[x]);
            GMap g;
            try {
                g = b.build();
            } catch (const GMapError&) {
                return;
            }
            if (!is_connected(g) || validate_tiling(g).min_vertex_degree < 3) return;
            out.insert(canonical_form(g));
            return;
        }
        for (int t = s + 1; t < sides; ++t) {
            if (partner[t] >= 0) continue;
            partner[s] = t;
            partner[t] = s;
            for (int r = 0; r < 2; ++r) {
                rev[s] = static_cast<char>(r);
                rec();
            }
            partner[s] = partner[t] = -1;
        }
    };
    rec();
    return out;
}

}  // namespace

TEST_CASE("enumeration equals naive matching search") {
    for (auto [k, f] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 2}, {4, 3}}) {
        auto e = enumerate_tilings({k, f, std::nullopt, 3});
        std::set<GMap> naive = naive_tilings(k, f);
        CHECK(std::set<GMap>(e.begin(), e.end()) == naive);
        CHECK(std::is_sorted(e.begin(), e.end()));
        CHECK(std::set<GMap>(e.begin(), e.end()).size() == e.size());
    }
}

TEST_CASE("surface filter equals post-filtering") {
    for (int f = 1; f <= 4; ++f) {
        auto all = enumerate_tilings({4, f, std::nullopt, 3});
        std::map<std::string, int> by;
        for (auto& g : all) by[classify_surface(g).word()]++;
        for (auto& [w, n] : by) CHECK(static_cast<int>(enumerate_tilings({4, f, w, 3}).size()) == n);
    }
}

TEST_CASE("enumeration examples") {
    auto one = enumerate_tilings({4, 1, std::nullopt, 3});
    CHECK(std::find(one.begin(), one.end(), cat("klein_K")) != one.end());
    for (auto& g : one) CHECK(validate_tiling(g, 4).min_vertex_degree >= 3);
    auto t = enumerate_tilings({4, 2, "T2^1", 3});
    CHECK(std::find(t.begin(), t.end(), cat("torus_qq")) != t.end());
    auto s = enumerate_tilings({4, 6, "S2", 3}, 2);
    CHECK(std::find(s.begin(), s.end(), cat("cube")) != s.end());
}

TEST_CASE("quadrilateral sphere tilings") {
    int n = 0;
    for (int f = 1; f <= 6; ++f)
        for (const GMap& g : enumerate_tilings({4, f, "S2", 3}, 4)) {
            ++n;
            for (const Cell& c : cells(g, 2)) {
                TileTag t = classify_quad_tile(g, c.id).tag;
                CHECK((t == TileTag::Q || t == TileTag::Q13));
            }
            CHECK(is_subdivisible(g));
            CHECK(brute_force_subdivisible(g).size() == 2);
        }
    CHECK(n == 1);  // the cube
}

TEST_CASE("threads give the same result") {
    auto a = enumerate_tilings({4, 4, std::nullopt, 3}, 1);
    auto b = enumerate_tilings({4, 4, std::nullopt, 3}, 4);
    CHECK(a == b);
}

TEST_CASE("enumeration arguments and cap") {
    CHECK_THROWS_AS(enumerate_tilings({5, 3, std::nullopt, 3}), EnumError);
    CHECK_THROWS_AS(enumerate_tilings({4, 1, "X", 3}), EnumError);
    try {
        enumerate_tilings({4, 9, std::nullopt, 3});
        FAIL("cap not enforced");
    } catch (const EnumError& e) {
        CHECK(e.kind == EnumError::Kind::CapExceeded);
    }
    setenv("TILESUB_CAP", "2", 1);
    CHECK(enumeration_cap() == 2);
    CHECK_THROWS_AS(enumerate_tilings({4, 3, std::nullopt, 3}), EnumError);
    unsetenv("TILESUB_CAP");
    CHECK(enumeration_cap() == 8);
}

TEST_CASE("brute force subdivisibility") {
    CHECK(brute_force_subdivisible(cat("cube")).size() == 2);
    CHECK(brute_force_subdivisible(cat("torus_3x3")).empty());
    CHECK(brute_force_subdivisible(cat("klein_K")).size() == 2);
    try {
        brute_force_subdivisible(refine3(cat("torus_3x3")));
        FAIL("size limit not enforced");
    } catch (const EnumError& e) {
        CHECK(e.kind == EnumError::Kind::TooLarge);
    }
    for (auto& a : brute_force_subdivisible(cat("cube"))) CHECK(assignment_valid(cat("cube"), a));
}

TEST_CASE("census") {
    auto maps = enumerate_tilings({4, 2, std::nullopt, 3});
    auto c = census(maps);
    int total = 0;
    for (auto& [k, n] : c) {
        total += n;
        CHECK(k.tiles.size() == 2);
        CHECK(std::is_sorted(k.tiles.begin(), k.tiles.end()));
    }
    CHECK(total == static_cast<int>(maps.size()));
}

TEST_CASE("streaming visitor") {
    std::set<GMap> seen;
    long raw = 0;
    visit_tilings({4, 3, std::nullopt, 3}, [&](const GMap& g) {
        ++raw;
        seen.insert(canonical_form(g));
        return true;
    });
    auto e = enumerate_tilings({4, 3, std::nullopt, 3});
    CHECK(seen == std::set<GMap>(e.begin(), e.end()));
    CHECK(raw >= static_cast<long>(e.size()));
    int calls = 0;
    visit_tilings({4, 3, std::nullopt, 3}, [&](const GMap&) { return ++calls < 5; });
    CHECK(calls == 5);
    CHECK_THROWS_AS(visit_tilings({4, 20, std::nullopt, 3}, [](const GMap&) { return true; }), EnumError);
}
