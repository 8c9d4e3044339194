// Constructions that regenerate the catalogue tables from scratch.
#pragma once
#include <string>
#include <vector>

#include "tilesub/enumerator.hpp"
#include "tilesub/gmap.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub::gen {

using Faces = std::vector<std::vector<std::string>>;

inline GMap cube() {
    return build_from_faces({{"0", "1", "2", "3"},
                             {"4", "7", "6", "5"},
                             {"0", "4", "5", "1"},
                             {"1", "5", "6", "2"},
                             {"2", "6", "7", "3"},
                             {"3", "7", "4", "0"}});
}

inline GMap tetrahedron() { return build_from_faces({{"0", "1", "2"}, {"0", "3", "1"}, {"1", "3", "2"}, {"2", "3", "0"}}); }

inline GMap icosahedron() {
    Faces f;
    auto u = [](int i) { return "u" + std::to_string((i + 5) % 5); };
    auto l = [](int i) { return "l" + std::to_string((i + 5) % 5); };
    for (int i = 0; i < 5; ++i) {
        f.push_back({"top", u(i), u(i + 1)});
        f.push_back({u(i), l(i), u(i + 1)});
        f.push_back({u(i + 1), l(i), l(i + 1)});
        f.push_back({"bot", l(i + 1), l(i)});
    }
    return build_from_faces(f);
}

// n x n square grid with opposite boundary sides identified.
inline GMap torus_grid(int n) {
    PolygonBuilder b;
    for (int i = 0; i < n * n; ++i) b.add_face(4);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = i * n + j;
            b.glue(c, 1, i * n + (j + 1) % n, 3, true);
            b.glue(c, 2, ((i + 1) % n) * n + j, 0, true);
        }
    return b.build();
}

// Unit squares of Z^2 modulo the lattice spanned by (1,1), (1,-1).
inline GMap torus_qq() {
    PolygonBuilder b;
    b.add_face(4);
    b.add_face(4);
    b.glue(0, 1, 1, 3, true);
    b.glue(0, 2, 1, 0, true);
    b.glue(1, 1, 0, 3, true);
    b.glue(1, 2, 0, 0, true);
    return b.build();
}

inline GMap klein_K() {
    PolygonBuilder b;
    b.add_face(4);
    b.glue(0, 0, 0, 1, false);
    b.glue(0, 2, 0, 3, false);
    return b.build();
}

inline GMap hemicube() { return build_from_faces({{"A", "B", "C", "D"}, {"A", "D", "B", "C"}, {"A", "C", "D", "B"}}); }

// Six quadrilaterals tiling a 2-gon with corners T, B. The side T->B of the
// first face is the right arc, the side B->T of the second the left arc.
struct Patch {
    Faces faces;
    Faces edges;
};

inline Patch two_gon_patch(const std::string& p, const std::string& T, const std::string& B, const std::string& right,
                           const std::string& left) {
    auto v = [&](const char* s) { return p + s; };
    Patch out;
    out.faces = {{B, v("a"), v("b"), T}, {T, v("d"), v("c"), B}, {B, v("a"), v("e"), v("c")},
                 {T, v("b"), v("f"), v("d")}, {v("a"), v("b"), v("f"), v("e")}, {v("c"), v("d"), v("f"), v("e")}};
    out.edges = {{"", "", "", right}, {"", "", "", left}, {}, {}, {}, {}};
    return out;
}

// Antipodal quotient of the 2-gon patch: right arc glued to left arc
// with a half turn, identifying T with B.
inline GMap p2_from_2gon() {
    Patch pt = two_gon_patch("", "T", "T", "arc", "arc");
    return build_from_faces(pt.faces, pt.edges);
}

// One Q13 tile (v,p,v,q) whose two 2-gon holes are filled by patches.
inline GMap sphere_q13() {
    Faces f = {{"v", "p", "v", "q"}};
    Faces e = {{"s0", "s1", "s2", "s3"}};
    for (auto [pre, B, r, l] : {std::tuple{"A", "p", "s1", "s0"}, std::tuple{"B", "q", "s3", "s2"}}) {
        Patch pt = two_gon_patch(pre, "v", B, r, l);
        f.insert(f.end(), pt.faces.begin(), pt.faces.end());
        e.insert(e.end(), pt.edges.begin(), pt.edges.end());
    }
    return build_from_faces(f, e);
}

inline bool has_tag(const GMap& g, TileTag t) {
    for (const Cell& f : cells(g, 2))
        if (f.darts.size() == 8 && classify_quad_tile(g, f.id).tag == t) return true;
    return false;
}

// Smallest enumerated quadrilateral tiling with an R1 tile, preferring
// the surface P2^2.
inline GMap r1_pair() {
    for (int faces = 1; faces <= 4; ++faces) {
        for (const char* w : {"P2^2", static_cast<const char*>(nullptr)}) {
            EnumSpec spec{4, faces, w ? std::optional<std::string>(w) : std::nullopt, 3};
            for (const GMap& g : enumerate_tilings(spec))
                if (has_tag(g, TileTag::R1)) return g;
        }
    }
    return {};
}

}  // namespace tilesub::gen
