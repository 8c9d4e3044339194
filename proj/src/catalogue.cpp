#include "tilesub/catalogue.hpp"

#include <algorithm>

namespace tilesub {

namespace {

struct Raw {
    const char* name;
    std::vector<Dart> a0, a1, a2;
    Expected expected;
};

// Canonical dart tables; regenerate with the gen_catalogue test tool.
const std::vector<Raw>& raw() {
    static const std::vector<Raw> entries = {
        {"cube",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 17, 19, 16, 7, 22, 8, 12, 10, 26, 11, 24, 29, 14, 27, 20, 33,
          18, 23, 36, 21, 37, 35, 39, 25, 40, 31, 28, 30, 43, 32, 34, 45, 44, 38, 42, 41, 47, 46},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 16, 18, 5, 6, 21, 7, 23, 9, 25, 10, 27, 28, 13, 30, 15, 32, 17,
          34, 19, 20, 37, 22, 38, 24, 40, 26, 41, 42, 29, 31, 44, 33, 35, 36, 46, 39, 47, 43, 45},
         {3, 5, 7, 0, 10, 1, 13, 2, 14, 17, 4, 18, 20, 6, 8, 22, 24, 9, 11, 26, 12, 28, 15, 31, 16, 32,
          19, 35, 21, 36, 38, 23, 25, 39, 41, 27, 29, 43, 30, 33, 45, 34, 46, 37, 47, 40, 42, 44},
         {"S2", {"Q", "Q", "Q", "Q", "Q", "Q"}, true, "six Q tiles on the sphere"}},
        {"torus_2x2",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 18, 20, 17, 7, 19, 8, 25, 12, 10, 14, 11, 29, 26, 27, 28, 16,
          22, 23, 24, 21, 31, 30},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 17, 19, 5, 6, 23, 7, 22, 24, 9, 27, 10, 26, 28, 15, 13, 16, 30,
          20, 18, 21, 31, 25, 29},
         {3, 5, 7, 0, 10, 1, 13, 2, 16, 18, 4, 21, 22, 6, 24, 25, 8, 26, 9, 28, 29, 11, 12, 30, 14, 15,
          17, 31, 19, 20, 23, 27},
         {"T2^1", {"Q", "Q", "Q", "Q"}, true, "2x2 grid on the torus"}},
        {"sphere_q13",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 17, 19, 16, 7, 22, 8, 12, 10, 26, 11, 24, 29, 14, 27, 20, 33,
          18, 23, 36, 21, 37, 35, 39, 25, 40, 31, 28, 30, 43, 32, 34, 45, 44, 38, 42, 41, 48, 49, 46, 47,
          52, 53, 50, 51, 57, 56, 55, 54, 62, 60, 59, 66, 58, 69, 71, 72, 61, 75, 74, 63, 78, 64, 65, 81,
          68, 67, 82, 85, 70, 80, 79, 73, 76, 91, 92, 77, 93, 88, 87, 96, 97, 83, 84, 86, 99, 100, 89, 90,
          101, 94, 95, 98, 103, 102},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 16, 18, 5, 6, 21, 7, 23, 9, 25, 10, 27, 28, 13, 30, 15, 32, 17,
          34, 19, 20, 37, 22, 38, 24, 40, 26, 41, 42, 29, 31, 44, 33, 35, 36, 47, 39, 49, 50, 43, 51, 45,
          46, 48, 55, 56, 58, 52, 53, 61, 54, 64, 65, 57, 68, 70, 59, 60, 74, 73, 62, 77, 63, 79, 80, 67,
          66, 83, 84, 69, 86, 71, 72, 89, 90, 75, 76, 93, 78, 94, 95, 81, 82, 96, 98, 85, 87, 88, 91, 101,
          92, 102, 103, 97, 99, 100},
         {3, 5, 7, 0, 10, 1, 13, 2, 14, 17, 4, 18, 20, 6, 8, 22, 24, 9, 11, 26, 12, 28, 15, 31, 16, 32,
          19, 35, 21, 36, 38, 23, 25, 39, 41, 27, 29, 43, 30, 33, 45, 34, 46, 37, 48, 40, 42, 50, 44, 52,
          47, 54, 49, 57, 51, 59, 60, 53, 63, 55, 56, 67, 69, 58, 70, 73, 75, 61, 76, 62, 64, 78, 81, 65,
          82, 66, 68, 84, 71, 87, 88, 72, 74, 90, 77, 92, 94, 79, 80, 95, 83, 97, 85, 99, 86, 89, 100, 91,
          102, 93, 96, 103, 98, 101},
         {"S2", {"Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q13"}, true, "one Q13 with both 2-gon holes filled by the six-tile patch"}},
        {"torus_qq",
         {1, 0, 6, 5, 9, 3, 2, 11, 10, 4, 8, 7, 14, 15, 12, 13},
         {2, 4, 0, 8, 1, 11, 12, 13, 3, 14, 15, 5, 6, 7, 9, 10},
         {3, 5, 7, 0, 10, 1, 11, 2, 9, 8, 4, 6, 15, 14, 13, 12},
         {"T2^1", {"Q13_24", "Q13_24"}, true, "two Q13_24 tiles, two vertices of degree 4"}},
        {"klein_K",
         {1, 0, 3, 2, 6, 7, 4, 5},
         {2, 4, 0, 5, 1, 3, 7, 6},
         {3, 2, 1, 0, 7, 6, 5, 4},
         {"P2^2", {"K"}, true, "single K tile on the Klein bottle"}},
        {"p2_from_2gon",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 17, 19, 16, 7, 22, 8, 12, 10, 26, 11, 24, 29, 14, 27, 20, 33,
          18, 23, 36, 21, 37, 35, 39, 25, 40, 31, 28, 30, 43, 32, 34, 45, 44, 38, 42, 41, 47, 46},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 16, 18, 5, 6, 21, 7, 23, 9, 25, 10, 27, 28, 13, 30, 15, 32, 17,
          34, 19, 20, 37, 22, 38, 24, 40, 26, 41, 42, 29, 31, 44, 33, 35, 36, 47, 39, 46, 45, 43},
         {3, 5, 7, 0, 10, 1, 13, 2, 14, 17, 4, 18, 20, 6, 8, 22, 24, 9, 11, 26, 12, 28, 15, 31, 16, 32,
          19, 35, 21, 36, 38, 23, 25, 39, 41, 27, 29, 43, 30, 33, 45, 34, 46, 37, 47, 40, 42, 44},
         {"P2^1", {"Q", "Q", "Q", "Q", "Q12", "Q12"}, true, "antipodal quotient of the 2-gon patch; the two degenerate tiles are computed as Q12"}},
        {"r1_pair",
         {1, 0, 3, 2, 6, 8, 4, 10, 5, 12, 7, 13, 9, 11, 15, 14},
         {2, 4, 0, 5, 1, 3, 8, 11, 6, 13, 14, 7, 15, 9, 10, 12},
         {3, 2, 1, 0, 7, 9, 10, 4, 12, 5, 6, 14, 8, 15, 11, 13},
         {"P2^3", {"Forbidden(opposite)", "R1"}, false, "smallest enumerated tiling with an R1 tile; no two-tile map has two R1 tiles"}},
        {"hemicube",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 17, 19, 16, 7, 22, 8, 12, 10, 21, 11, 23, 18, 14, 20},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 16, 18, 5, 6, 21, 7, 23, 9, 22, 10, 20, 19, 13, 17, 15},
         {3, 5, 7, 0, 10, 1, 13, 2, 14, 17, 4, 18, 20, 6, 8, 22, 23, 9, 11, 21, 12, 19, 15, 16},
         {"P2^1", {"Q", "Q", "Q"}, true, "antipodal quotient of the cube; T(4) of it has no subdivision"}},
        {"torus_3x3",
         {1, 0, 6, 5, 9, 3, 2, 13, 15, 4, 18, 20, 17, 7, 24, 8, 27, 12, 10, 30, 11, 33, 28, 35, 14, 38,
          32, 16, 22, 42, 19, 45, 26, 21, 48, 23, 51, 50, 25, 46, 53, 55, 29, 58, 57, 31, 39, 60, 34, 62,
          37, 36, 64, 40, 65, 41, 66, 44, 43, 68, 47, 69, 49, 70, 52, 54, 56, 71, 59, 61, 63, 67},
         {2, 4, 0, 8, 1, 11, 12, 14, 3, 17, 19, 5, 6, 23, 7, 26, 25, 9, 29, 10, 32, 31, 34, 13, 37, 16,
          15, 40, 41, 18, 44, 21, 20, 47, 22, 50, 49, 24, 52, 48, 27, 28, 57, 56, 30, 59, 55, 33, 39, 36,
          35, 63, 38, 64, 62, 46, 43, 42, 67, 45, 68, 66, 54, 51, 53, 70, 61, 58, 60, 71, 65, 69},
         {3, 5, 7, 0, 10, 1, 13, 2, 16, 18, 4, 21, 22, 6, 25, 27, 8, 28, 9, 31, 33, 11, 12, 36, 38, 14,
          39, 15, 17, 43, 45, 19, 46, 20, 49, 51, 23, 44, 24, 26, 54, 56, 58, 29, 37, 30, 32, 61, 62, 34,
          57, 35, 59, 65, 40, 66, 41, 50, 42, 52, 69, 47, 48, 67, 68, 53, 55, 63, 64, 60, 71, 70},
         {"T2^1", {"Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q", "Q"}, false, "3x3 grid on the torus; odd cycles in the skeleton"}},
        {"tetrahedron",
         {1, 0, 6, 5, 9, 3, 2, 12, 14, 4, 15, 17, 7, 19, 8, 10, 21, 11, 22, 13, 23, 16, 18, 20},
         {2, 4, 0, 8, 1, 11, 9, 13, 3, 6, 16, 5, 18, 7, 17, 20, 10, 14, 12, 22, 15, 23, 19, 21},
         {3, 5, 7, 0, 10, 1, 12, 2, 13, 15, 4, 16, 6, 8, 19, 9, 11, 21, 20, 14, 18, 17, 23, 22},
         {"S2", {}, false, "triangular base"}},
        {"icosahedron",
         {1, 0, 6, 5, 9, 3, 2, 12, 14, 4, 16, 18, 7, 21, 8, 23, 10, 26, 11, 28, 30, 13, 32, 15, 35, 36,
          17, 38, 19, 41, 20, 42, 22, 45, 46, 24, 25, 48, 27, 51, 52, 29, 31, 55, 56, 33, 34, 58, 37, 61,
          62, 39, 40, 64, 66, 43, 44, 68, 47, 71, 72, 49, 50, 74, 53, 77, 54, 78, 57, 81, 82, 59, 60, 84,
          63, 87, 88, 65, 67, 91, 92, 69, 70, 94, 73, 96, 97, 75, 76, 99, 100, 79, 80, 102, 83, 104, 85,
          86, 106, 89, 90, 108, 93, 109, 95, 111, 98, 112, 101, 103, 115, 105, 107, 117, 116, 110, 114,
          113, 119, 118},
         {2, 4, 0, 8, 1, 11, 9, 13, 3, 6, 17, 5, 20, 7, 18, 24, 25, 10, 14, 29, 12, 30, 33, 34, 15, 16,
          36, 39, 40, 19, 21, 43, 44, 22, 23, 46, 26, 49, 50, 27, 28, 52, 54, 31, 32, 56, 35, 59, 60, 37,
          38, 62, 41, 65, 42, 66, 45, 69, 70, 47, 48, 72, 51, 75, 76, 53, 55, 79, 80, 57, 58, 82, 61, 85,
          86, 63, 64, 88, 90, 67, 68, 92, 71, 93, 95, 73, 74, 97, 77, 98, 78, 100, 81, 83, 103, 84, 104,
          87, 89, 107, 91, 105, 109, 94, 96, 101, 112, 99, 114, 102, 113, 116, 106, 110, 108, 118, 111,
          119, 115, 117},
         {3, 5, 7, 0, 10, 1, 12, 2, 15, 16, 4, 19, 6, 22, 23, 8, 9, 27, 28, 11, 31, 32, 13, 14, 33, 37,
          38, 17, 18, 39, 42, 20, 21, 24, 47, 45, 48, 25, 26, 29, 53, 51, 30, 49, 57, 35, 58, 34, 36, 43,
          63, 41, 64, 40, 67, 61, 68, 44, 46, 65, 73, 55, 74, 50, 52, 59, 78, 54, 56, 79, 83, 77, 84, 60,
          62, 85, 89, 71, 66, 69, 93, 91, 94, 70, 72, 75, 98, 96, 99, 76, 101, 81, 102, 80, 82, 105, 87,
          106, 86, 88, 108, 90, 92, 110, 111, 95, 97, 113, 100, 115, 103, 104, 117, 107, 118, 109, 119,
          112, 114, 116},
         {"S2", {}, false, "triangular base with degree-5 vertices"}},
    };
    return entries;
}

}  // namespace

std::vector<std::string> catalogue_list() {
    std::vector<std::string> out;
    for (const Raw& r : raw()) out.emplace_back(r.name);
    return out;
}

CatalogueEntry catalogue_get(const std::string& name) {
    for (const Raw& r : raw())
        if (name == r.name) return {r.name, GMap::build(r.a0, r.a1, r.a2), r.expected};
    throw UnknownName(name);
}

}  // namespace tilesub
