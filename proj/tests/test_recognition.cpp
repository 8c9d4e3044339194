#include <set>

#include "doctest.h"
#include "tilesub/json_io.hpp"
#include "tilesub/recognition.hpp"
#include "util.hpp"

using namespace tilesub;
using namespace tilesub::test;

namespace {

bool base_or_dual(const GMap& b, const GMap& t) { return iso(b, t) || iso(b, dual_map(t)); }

Subdivided sps(const GMap& g) { return simple_pentagonal_subdivision(g, std::get<SubdivisionAssignment>(check_subdivisible(g))); }

Subdivided t5(const GMap& g) { return pentagonal_subdivision(g, orientation(g).color); }

// all two-tile pentagonal maps plus the orientable four-tile ones of genus 1 and 2
std::vector<GMap> small_pents(int max_faces) {
    std::vector<GMap> out = enumerate_tilings({5, 2, std::nullopt, 3});
    if (max_faces >= 4)
        for (const char* w : {"T2^1", "T2^2"}) {
            auto e = enumerate_tilings({5, 4, w, 3});
            out.insert(out.end(), e.begin(), e.end());
        }
    return out;
}

bool non_degenerate(const GMap& g) {
    auto vidx = cell_index(g, 0), eidx = cell_index(g, 1);
    for (const Cell& f : cells(g, 2)) {
        std::set<Dart> vs, es;
        for (Dart d : f.darts) {
            vs.insert(vidx[d]);
            es.insert(eidx[d]);
        }
        if (vs.size() * 2 != f.darts.size() || es.size() * 2 != f.darts.size()) return false;
    }
    return true;
}

void check_sound(const GMap& g, const RecognitionResult& r, const std::function<GMap(const GMap&)>& forward) {
    REQUIRE(r.ok);
    CHECK(r.verified);
    CHECK(canonical_form(r.base) == r.base);
    CHECK(iso(forward(r.base), g));
}

}  // namespace

TEST_CASE("simple pentagonal subdivisions are recognised") {
    RecognitionResult c = recognize_sps(sps(cat("cube")).map);
    REQUIRE(c.ok);
    CHECK(iso(c.base, cat("cube")));
    CHECK(c.solution_count >= 1);
    CHECK(c.pairing.size() == 6);

    Subdivided k = sps(cat("klein_K"));
    RecognitionResult rk = recognize_sps(k.map);
    REQUIRE(rk.ok);
    CHECK(iso(rk.base, cat("klein_K")));
    for (const Cell& f : cells(k.map, 2)) CHECK(classify_pent_tile(k.map, f.id, rk.labeling).type == PentType::P3);

    CHECK(recognize_sps(cat("cube")).error == "NotPentTiling");
}

TEST_CASE("sps round trip over subdivisible tilings") {
    std::vector<GMap> all = quad_catalogue();
    for (auto& g : small_quads(4)) all.push_back(g);
    int n = 0;
    for (const GMap& g : all) {
        if (!is_subdivisible(g)) continue;
        ++n;
        GMap p = sps(g).map;
        RecognitionResult r = recognize_sps(p);
        REQUIRE(r.ok);
        CHECK(iso(r.base, g));
        CHECK(r.verified);
        for (const Cell& f : cells(p, 2)) CHECK(classify_pent_tile(p, f.id, r.labeling).type != PentType::Mismatch);
    }
    CHECK(n > 10);
}

// Six-pentagon torus tiling, the second gluing streamed by
// visit_tilings({5, 6, "T2^1", 3}); the full search takes minutes.
constexpr const char* kPentTorus =
    R"({"format":"gmap2-v1","darts":60,)"
    R"("alpha0":[1,0,6,5,8,3,2,11,4,13,14,7,17,9,10,20,21,12,23,24,15,16,27,18,19,29,30,22,33,25,26,37,38,28,41,42,40,31,32,47,36,34,35,51,48,53,50,39,44,57,46,43,59,45,58,56,55,49,54,52],)"
    R"("alpha1":[2,4,0,7,1,9,10,3,12,5,6,16,8,19,17,18,11,14,15,13,26,24,25,28,21,22,20,32,23,35,36,34,27,40,31,29,30,45,46,43,33,49,50,39,52,37,38,55,56,41,42,59,44,58,57,47,48,54,53,51],)"
    R"("alpha2":[3,5,4,0,2,1,8,9,6,7,15,13,18,11,20,10,22,23,12,25,14,27,16,17,29,19,31,21,34,24,37,26,39,41,28,43,44,30,47,32,48,33,51,35,36,52,54,38,40,56,58,42,45,59,46,57,49,55,50,53]})";

TEST_CASE("pentagonal torus with a face lacking a dottable edge") {
    GMap g = from_gmap_json(kPentTorus).map;
    CHECK(classify_surface(g).word() == "T2^1");
    CHECK(validate_tiling(g, 5).ok);
    int lacking = -1;
    for (const Cell& c : cells(g, 2)) {
        bool any = false;
        for (Dart d : c.darts) any |= vertex_degree(g, d) == 3 && vertex_degree(g, g.alpha(0, d)) == 3;
        if (!any && lacking < 0) lacking = c.id;
    }
    REQUIRE(lacking >= 0);
    RecognitionResult r = recognize_sps(g);
    CHECK_FALSE(r.ok);
    CHECK(r.error == "NoLabeling");
    CHECK(r.failing_face == lacking);
    CHECK(brute_force_labelings(g, "sps") == 0);

    // no smaller instance exists
    for (int f = 2; f <= 4; f += 2)
        for (const GMap& h : enumerate_tilings({5, f, "T2^1", 3}))
            for (const Cell& c : cells(h, 2)) {
                bool any = false;
                for (Dart d : c.darts) any |= vertex_degree(h, d) == 3 && vertex_degree(h, h.alpha(0, d)) == 3;
                CHECK(any);
            }
}

TEST_CASE("pentagonal subdivisions are recognised") {
    RecognitionResult c = recognize_ps(t5(cat("cube")).map);
    REQUIRE(c.ok);
    CHECK(base_or_dual(c.base, cat("cube")));
    RecognitionResult t = recognize_ps(t5(cat("tetrahedron")).map);
    REQUIRE(t.ok);
    CHECK(iso(t.base, cat("tetrahedron")));
    // the simple subdivision of the 2x2 grid is also T(5) of the two-tile torus
    GMap grid = sps(cat("torus_2x2")).map;
    RecognitionResult rg = recognize_ps(grid);
    CHECK(brute_force_labelings(grid, "ps") == 1);
    check_sound(grid, rg, [](const GMap& b) { return t5(b).map; });
    CHECK(cell_count(rg.base, 2) == 2);
    CHECK(classify_surface(rg.base).word() == "T2^1");
    CHECK(recognize_ps(sps(cat("klein_K")).map).error == "NotOrientable");
    CHECK(recognize_ps(cat("cube")).error == "NotPentTiling");
    int degenerate = 0;
    for (const GMap& g : small_pents(2))
        if (is_orientable(g) && !non_degenerate(g)) {
            ++degenerate;
            CHECK(recognize_ps(g).error == "DegenerateTile");
        }
    CHECK(degenerate > 0);

    for (const GMap& g : catalogue_maps()) {
        if (!is_orientable(g)) continue;
        GMap p = t5(g).map;
        RecognitionResult r = recognize_ps(p);
        check_sound(p, r, [](const GMap& b) { return t5(b).map; });
        CHECK(base_or_dual(r.base, g));
    }
}

TEST_CASE("one hollow vertex per tile") {
    GMap ico = cat("icosahedron");
    GMap p = t5(ico).map;
    RecognitionResult r = recognize_one_circ(p);
    REQUIRE(r.ok);
    CHECK(r.orientable);
    CHECK(is_orientable(p));
    CHECK(base_or_dual(r.base, ico));
    auto vidx = cell_index(p, 0);
    for (const Cell& f : cells(p, 2)) {
        int hollow = 0;
        for (Dart d : face_walk(p, f.id)) {
            auto it = r.labeling.find(vidx[d]);
            hollow += it != r.labeling.end() && it->second == Mark::Hollow;
        }
        CHECK(hollow == 2);  // each corner appears twice in the dart walk
    }

    // cube vertices have degree 3; the centers are the hollow vertices
    Subdivided pc = t5(cat("cube"));
    RecognitionResult rc = recognize_one_circ(pc.map);
    REQUIRE(rc.ok);
    for (auto [v, m] : rc.labeling)
        if (m == Mark::Hollow) CHECK(pc.provenance.at(v) == Provenance::FaceCenter);

    // simple subdivision of the 2x2 grid: each tile has two degree-4 corners
    GMap g = sps(cat("torus_2x2")).map;
    RecognitionResult bad = recognize_one_circ(g);
    CHECK_FALSE(bad.ok);
    CHECK(bad.error == "NoLabeling");
    REQUIRE(bad.failing_face >= 0);
    int deg4 = 0;
    auto gv = cell_index(g, 0);
    std::set<Dart> corners;
    for (Dart d : face_walk(g, bad.failing_face)) corners.insert(gv[d]);
    for (Dart v : corners) deg4 += vertex_degree(g, v) == 4;
    CHECK(deg4 == 2);
}

TEST_CASE("quadrilateral subdivisions are recognised") {
    RecognitionResult t = recognize_qs(quadrilateral_subdivision(cat("tetrahedron")).map);
    REQUIRE(t.ok);
    CHECK(base_or_dual(t.base, cat("tetrahedron")));
    GMap qk = quadrilateral_subdivision(cat("klein_K")).map;
    RecognitionResult k = recognize_qs(qk);
    REQUIRE(k.ok);
    CHECK(iso(k.base, cat("klein_K")));
    RecognitionResult cube = recognize_qs(cat("cube"));
    CHECK_FALSE(cube.ok);
    CHECK(cube.error == "NoLabeling");
    CHECK(recognize_qs(t5(cat("cube")).map).error == "NotQuadTiling");

    for (const GMap& g : catalogue_maps()) {
        GMap q = quadrilateral_subdivision(g).map;
        RecognitionResult r = recognize_qs(q);
        check_sound(q, r, [](const GMap& b) { return quadrilateral_subdivision(b).map; });
        CHECK(base_or_dual(r.base, g));
    }
}

TEST_CASE("search agrees with labeling enumeration") {
    int sps_yes = 0, ps_checked = 0, qs_checked = 0;
    for (const GMap& g : small_pents(4)) {
        if (cell_count(g, 0) > 14) continue;
        long long brute = brute_force_labelings(g, "sps");
        RecognitionResult r = recognize_sps(g);
        CHECK(r.ok == (brute > 0));
        if (r.ok) {
            ++sps_yes;
            CHECK(r.solution_count == brute);
            check_sound(g, r, [&](const GMap& b) {
                auto a = std::get<SubdivisionAssignment>(check_subdivisible(b));
                GMap x = simple_pentagonal_subdivision(b, a).map;
                return iso(x, g) ? x : simple_pentagonal_subdivision(b, dual_assignment(a)).map;
            });
        }
        if (is_orientable(g) && non_degenerate(g)) {
            ++ps_checked;
            long long bp = brute_force_labelings(g, "ps");
            RecognitionResult p = recognize_ps(g);
            CHECK(p.ok == (bp > 0));
            if (p.ok) CHECK(p.solution_count == bp);
        }
    }
    std::vector<GMap> quads = small_quads(4);
    for (const char* n : {"klein_K", "torus_qq", "hemicube", "tetrahedron"})
        quads.push_back(quadrilateral_subdivision(cat(n)).map);
    for (const GMap& g : quads) {
        if (cell_count(g, 0) > 12) continue;
        ++qs_checked;
        long long bq = brute_force_labelings(g, "qs");
        RecognitionResult q = recognize_qs(g);
        CHECK(q.ok == (bq > 0));
        if (q.ok) CHECK(q.solution_count == bq);
    }
    CHECK(sps_yes > 0);
    CHECK(ps_checked > 0);
    CHECK(qs_checked > 0);
    CHECK_THROWS(brute_force_labelings(t5(cat("cube")).map, "sps"));
    CHECK_THROWS(brute_force_labelings(cat("cube"), "pq"));
}
