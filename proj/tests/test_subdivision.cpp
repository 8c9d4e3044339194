#include <set>

#include "doctest.h"
#include "util.hpp"

using namespace tilesub;
using namespace tilesub::test;

namespace {

std::optional<SubdivisionAssignment> solve(const GMap& g) {
    auto r = check_subdivisible(g);
    if (auto* a = std::get_if<SubdivisionAssignment>(&r)) return *a;
    return std::nullopt;
}

std::vector<GMap> instances() {
    std::vector<GMap> all = quad_catalogue();
    for (auto& g : small_quads(4)) all.push_back(g);
    return all;
}

bool corners_distinct(const GMap& g, Dart face) {
    auto vidx = cell_index(g, 0);
    auto w = face_walk(g, face);
    std::set<Dart> vs;
    for (size_t i = 0; i < w.size(); i += 2) vs.insert(vidx[w[i]]);
    return vs.size() * 2 == w.size();
}

}  // namespace

TEST_CASE("subdivisibility examples") {
    CHECK(solve(cat("cube")).has_value());
    CHECK(solve(cat("torus_2x2")).has_value());
    auto r = check_subdivisible(cat("torus_3x3"));
    REQUIRE(std::holds_alternative<ParityWitness>(r));
    const ParityWitness& w = std::get<ParityWitness>(r);
    CHECK(verify_witness(cat("torus_3x3"), w));
    CHECK(w.faces.front() == w.faces.back());
    CHECK(w.faces.size() == w.edges.size() + 1);
    CHECK(brute_force_subdivisible(cat("torus_3x3")).empty());
    CHECK_THROWS_AS(check_subdivisible(cat("tetrahedron")), SubdivisionError);
}

TEST_CASE("witness verification rejects tampering") {
    ParityWitness w = std::get<ParityWitness>(check_subdivisible(cat("torus_3x3")));
    ParityWitness cut = w;
    cut.faces.pop_back();
    CHECK_FALSE(verify_witness(cat("torus_3x3"), cut));
    ParityWitness swapped = w;
    if (swapped.edges.size() >= 2) std::swap(swapped.edges[0], swapped.edges[1]);
    CHECK_FALSE(verify_witness(cat("torus_3x3"), swapped));
}

TEST_CASE("CSP agrees with brute force and has exactly two solutions") {
    int yes = 0, no = 0;
    for (const GMap& g : instances()) {
        auto brute = brute_force_subdivisible(g);
        auto r = check_subdivisible(g);
        if (auto* a = std::get_if<SubdivisionAssignment>(&r)) {
            ++yes;
            CHECK(assignment_valid(g, *a));
            std::set<SubdivisionAssignment> got(brute.begin(), brute.end());
            CHECK(got == std::set<SubdivisionAssignment>{*a, dual_assignment(*a)});
            CHECK(brute.size() == 2);
        } else {
            ++no;
            CHECK(brute.empty());
            CHECK(verify_witness(g, std::get<ParityWitness>(r)));
        }
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("skeleton bipartiteness") {
    CHECK(is_bipartite_skeleton(cat("cube")));
    CHECK_FALSE(is_bipartite_skeleton(cat("torus_3x3")));
    CHECK_FALSE(is_bipartite_skeleton(cat("klein_K")));
    for (const GMap& g : instances()) {
        bool sub = is_subdivisible(g), bip = is_bipartite_skeleton(g);
        if (is_orientable(g)) CHECK(sub == bip);
        else CHECK_FALSE((sub && bip));
    }
}

TEST_CASE("homology character") {
    CHECK(homology_character(cat("cube")).basis.empty());
    HomologyCharacterReport t = homology_character(cat("torus_qq"));
    CHECK(t.basis.size() == 2);
    CHECK(t.lambda_zero());
    HomologyCharacterReport h = homology_character(cat("hemicube"));
    REQUIRE(h.basis.size() == 1);
    CHECK(h.basis[0].w1 == 1);
    CHECK(h.lambda_zero() == is_subdivisible(cat("hemicube")));
    for (const GMap& g : instances()) {
        HomologyCharacterReport r = homology_character(g);
        CHECK(static_cast<int>(r.basis.size()) == 2 - euler_characteristic(g));
        CHECK(r.w1_zero() == is_orientable(g));
        CHECK(r.lambda_zero() == is_subdivisible(g));
        for (auto& c : r.basis) CHECK(c.lambda == (c.length_parity ^ c.w1));
    }
}

TEST_CASE("simple pentagonal subdivision counts") {
    for (const GMap& g : instances()) {
        auto a = solve(g);
        if (!a) {
            SubdivisionAssignment zero;
            for (const Cell& f : cells(g, 2)) zero[f.id] = 0;
            CHECK_THROWS_AS(simple_pentagonal_subdivision(g, zero), SubdivisionError);
            continue;
        }
        int V = cell_count(g, 0), E = cell_count(g, 1), F = cell_count(g, 2);
        for (const SubdivisionAssignment& x : {*a, dual_assignment(*a)}) {
            Subdivided s = simple_pentagonal_subdivision(g, x);
            CHECK(cell_count(s.map, 0) == V + E);
            CHECK(cell_count(s.map, 1) == 2 * E + F);
            CHECK(cell_count(s.map, 2) == 2 * F);
            CHECK(all_gon(s.map, 5));
            CHECK(euler_characteristic(s.map) == euler_characteristic(g));
            CHECK(is_orientable(s.map) == is_orientable(g));
            CHECK(canonical_form(s.map) == s.map);
            int mids = 0;
            for (auto [v, p] : s.provenance)
                if (p == Provenance::EdgeMidpoint) {
                    ++mids;
                    CHECK(vertex_degree(s.map, v) == 3);
                }
            CHECK(mids == E);
        }
    }
    GMap k = cat("klein_K");
    Subdivided sk = simple_pentagonal_subdivision(k, *solve(k));
    CHECK(cell_count(sk.map, 2) == 2);
    CHECK(degree_multiset(sk.map) == std::vector<int>{3, 3, 4});
    Subdivided st = simple_pentagonal_subdivision(cat("torus_2x2"), *solve(cat("torus_2x2")));
    CHECK(cell_count(st.map, 2) == 8);
    CHECK(euler_characteristic(st.map) == 0);
    CHECK(is_orientable(st.map));
}

TEST_CASE("dual assignment") {
    GMap cube = cat("cube");
    auto a = *solve(cube);
    SubdivisionAssignment d = dual_assignment(a);
    CHECK(dual_assignment(d) == a);
    CHECK(d != a);
    CHECK(assignment_valid(cube, d));
    CHECK(iso(simple_pentagonal_subdivision(cube, a).map, simple_pentagonal_subdivision(cube, d).map));
}

TEST_CASE("3x3 refinement") {
    for (const GMap& g : quad_catalogue()) {
        GMap r = refine3(g);
        int V = cell_count(g, 0), E = cell_count(g, 1), F = cell_count(g, 2);
        CHECK(cell_count(r, 2) == 9 * F);
        CHECK(cell_count(r, 1) == 3 * E + 12 * F);
        CHECK(cell_count(r, 0) == V + 2 * E + 4 * F);
        CHECK(euler_characteristic(r) == euler_characteristic(g));
        CHECK(is_orientable(r) == is_orientable(g));
        if (is_subdivisible(g)) CHECK(is_subdivisible(r));
    }
    CHECK(cell_count(refine3(cat("cube")), 2) == 54);
    GMap rk = refine3(cat("klein_K"));
    for (const Cell& f : cells(rk, 2)) {
        CHECK(corners_distinct(rk, f.id));
        CHECK(classify_quad_tile(rk, f.id).tag == TileTag::Q);
    }
    CHECK_THROWS_AS(refine3(cat("tetrahedron")), SubdivisionError);
}

TEST_CASE("connected sum") {
    GMap cube = cat("cube"), t = cat("torus_2x2");
    GMap cc = connected_sum(cube, 0, cube, 0, {});
    CHECK(cell_count(cc, 2) == 10);
    CHECK(euler_characteristic(cc) == 2);
    CHECK(validate_tiling(cc, 4).ok);
    int good = 0;
    for (Alignment al : Alignment::all()) {
        GMap s = connected_sum(cube, 0, t, 0, al);
        CHECK(euler_characteristic(s) == 0);
        CHECK(is_orientable(s));
        good += is_subdivisible(s);
    }
    CHECK(good >= 1);
    auto r = connected_sum_subdivisible(cube, 0, t, 0);
    REQUIRE(r.has_value());
    CHECK(is_subdivisible(r->second));
    CHECK(Alignment::all().size() == 8);
    for (int k = 0; k < 8; ++k) CHECK(Alignment::from_index(k).index() == k);

    GMap s = cat("sphere_q13");
    Dart q13 = -1;
    for (const Cell& f : cells(s, 2))
        if (classify_quad_tile(s, f.id).tag == TileTag::Q13) q13 = f.id;
    try {
        connected_sum(cube, 0, s, q13, {});
        FAIL("degenerate face accepted");
    } catch (const SubdivisionError& e) {
        CHECK(e.kind == SubdivisionError::Kind::TileNotNonDegenerate);
    }
    // non-orientable summand
    GMap ch = connected_sum(cube, 0, cat("hemicube"), 0, {});
    CHECK(classify_surface(ch).word() == "P2^1");
}

TEST_CASE("quadrilateral subdivision") {
    Subdivided t = quadrilateral_subdivision(cat("tetrahedron"));
    CHECK(cell_count(t.map, 2) == 12);
    CHECK(cell_count(t.map, 0) == 14);
    CHECK(euler_characteristic(t.map) == 2);
    Subdivided k = quadrilateral_subdivision(cat("klein_K"));
    CHECK(cell_count(k.map, 2) == 4);
    CHECK(classify_surface(k.map).word() == "P2^2");
    bool has_q_prime = false;
    for (const Cell& f : cells(k.map, 2)) has_q_prime |= is_q_prime(classify_quad_tile(k.map, f.id));
    CHECK(has_q_prime);
    Subdivided c = quadrilateral_subdivision(cat("cube"));
    CHECK(cell_count(c.map, 2) == 24);
    CHECK(is_bipartite_skeleton(c.map));

    for (const GMap& g : catalogue_maps()) {
        Subdivided q = quadrilateral_subdivision(g);
        int V = cell_count(g, 0), E = cell_count(g, 1), F = cell_count(g, 2);
        CHECK(cell_count(q.map, 0) == V + E + F);
        CHECK(cell_count(q.map, 2) == 2 * E);
        CHECK(euler_characteristic(q.map) == euler_characteristic(g));
        CHECK(is_orientable(q.map) == is_orientable(g));
        for (const Cell& f : cells(q.map, 2)) {
            TileClass tc = classify_quad_tile(q.map, f.id);
            CHECK((tc.tag == TileTag::Q || is_q_prime(tc)));
        }
        int filled = 0, hollow = 0;
        for (auto [v, m] : q.labeling) (m == Mark::Filled ? filled : hollow)++;
        CHECK(filled == V);
        CHECK(hollow == F);
    }
}

TEST_CASE("pentagonal subdivision") {
    GMap cube = cat("cube");
    Subdivided p = pentagonal_subdivision(cube, orientation(cube).color);
    CHECK(cell_count(p.map, 2) == 24);
    Subdivided t = pentagonal_subdivision(cat("tetrahedron"), orientation(cat("tetrahedron")).color);
    CHECK(cell_count(t.map, 2) == 12);
    CHECK(euler_characteristic(t.map) == 2);
    CHECK_THROWS_AS(pentagonal_subdivision(cat("klein_K"), std::vector<int>(8, 0)), SubdivisionError);

    for (const GMap& g : catalogue_maps()) {
        Orientation o = orientation(g);
        if (!o.orientable) continue;
        Subdivided s = pentagonal_subdivision(g, o.color);
        int V = cell_count(g, 0), E = cell_count(g, 1), F = cell_count(g, 2);
        CHECK(cell_count(s.map, 2) == 2 * E);
        CHECK(cell_count(s.map, 0) == V + 2 * E + F);
        CHECK(euler_characteristic(s.map) == euler_characteristic(g));
        CHECK(all_gon(s.map, 5));
        // with centers read as filled, every tile is the non-degenerate P1
        VertexLabeling both;
        for (auto [v, m] : s.labeling) both[v] = Mark::Filled;
        for (const Cell& f : cells(s.map, 2)) CHECK(classify_pent_tile(s.map, f.id, both).type == PentType::P1);
    }
}

TEST_CASE("pentagonal subdivision of a tiling and its dual coincide") {
    // all isomorphisms a -> b of connected maps, one per image of dart 0
    auto all_isos = [](const GMap& a, const GMap& b) {
        std::vector<std::vector<Dart>> out;
        if (a.size() != b.size()) return out;
        for (Dart anchor = 0; anchor < b.size(); ++anchor) {
            std::vector<Dart> phi(a.size(), -1);
            std::vector<Dart> stack{0};
            phi[0] = anchor;
            bool ok = true;
            while (ok && !stack.empty()) {
                Dart d = stack.back();
                stack.pop_back();
                for (int i = 0; i < 3 && ok; ++i) {
                    Dart x = a.alpha(i, d), y = b.alpha(i, phi[d]);
                    if (phi[x] < 0) {
                        phi[x] = y;
                        stack.push_back(x);
                    } else {
                        ok = phi[x] == y;
                    }
                }
            }
            if (ok) out.push_back(phi);
        }
        return out;
    };
    for (const char* n : {"tetrahedron", "cube", "icosahedron"}) {
        GMap t = cat(n), d = dual_map(t);
        Subdivided a = pentagonal_subdivision(t, orientation(t).color);
        bool matched = false;
        for (int flip = 0; flip < 2 && !matched; ++flip) {
            std::vector<int> col = orientation(d).color;
            for (int& c : col) c ^= flip;
            Subdivided b = pentagonal_subdivision(d, col);
            auto bv = cell_index(b.map, 0);
            for (const auto& phi : all_isos(a.map, b.map)) {
                bool exchanged = true;
                for (auto [v, m] : a.labeling) {
                    auto it = b.labeling.find(bv[phi[v]]);
                    exchanged &= it != b.labeling.end() && it->second != m;
                }
                if (exchanged) {
                    matched = true;
                    break;
                }
            }
        }
        CHECK_MESSAGE(matched, std::string(n));
    }
}

TEST_CASE("double pentagonal subdivision") {
    DoubleResult t = double_pentagonal_subdivision(cat("tetrahedron"));
    REQUIRE(t.result.has_value());
    CHECK(cell_count(t.result->map, 2) == 24);
    DoubleResult c = double_pentagonal_subdivision(cat("cube"));
    REQUIRE(c.result.has_value());
    CHECK(cell_count(c.result->map, 2) == 48);
    DoubleResult h = double_pentagonal_subdivision(cat("hemicube"));
    CHECK_FALSE(h.result.has_value());
    REQUIRE(h.witness.has_value());
    CHECK(verify_witness(quadrilateral_subdivision(cat("hemicube")).map, *h.witness));
    for (const GMap& g : catalogue_maps()) CHECK(double_pentagonal_subdivision(g).result.has_value() == is_orientable(g));
}

TEST_CASE("surgery removes and smooths") {
    GMap cube = cat("cube");
    Subdivided q = quadrilateral_subdivision(cube);
    // deleting the spokes at every center and smoothing midpoints restores the cube
    auto vidx = cell_index(q.map, 0);
    std::vector<char> dead(q.map.size(), 0);
    for (Dart d = 0; d < q.map.size(); ++d) {
        auto a = q.provenance.at(vidx[d]), b = q.provenance.at(vidx[q.map.alpha(0, d)]);
        if (a == Provenance::FaceCenter || b == Provenance::FaceCenter) dead[d] = 1;
    }
    std::vector<Dart> m;
    GMap h = delete_edges(q.map, dead, &m);
    std::vector<char> w(h.size(), 0);
    for (Dart d = 0; d < q.map.size(); ++d)
        if (m[d] >= 0 && q.provenance.at(vidx[d]) == Provenance::EdgeMidpoint) w[m[d]] = 1;
    CHECK(iso(smooth_vertices(h, w), cube));
}
