#pragma once
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tilesub/catalogue.hpp"
#include "tilesub/enumerator.hpp"
#include "tilesub/gmap.hpp"
#include "tilesub/subdivision.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub::test {

inline GMap cat(const char* n) { return catalogue_get(n).map; }

inline bool iso(const GMap& a, const GMap& b) { return are_isomorphic(a, b).has_value(); }

inline bool all_gon(const GMap& g, int k) {
    for (const Cell& f : cells(g, 2))
        if (static_cast<int>(f.darts.size()) != 2 * k) return false;
    return true;
}

// Conjugate by a random dart permutation.
inline GMap shuffled(const GMap& g, unsigned seed) {
    std::vector<Dart> p(g.size());
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return relabel(g, p);
}

inline std::vector<GMap> catalogue_maps() {
    std::vector<GMap> out;
    for (auto& n : catalogue_list()) out.push_back(catalogue_get(n).map);
    return out;
}

inline std::vector<GMap> quad_catalogue() {
    std::vector<GMap> out;
    for (auto& g : catalogue_maps())
        if (all_gon(g, 4)) out.push_back(g);
    return out;
}

// Quadrilateral tilings with up to max_faces faces on any surface.
inline const std::vector<GMap>& small_quads(int max_faces = 4) {
    static std::vector<GMap> cache[9];
    auto& v = cache[max_faces];
    if (v.empty())
        for (int f = 1; f <= max_faces; ++f) {
            auto e = enumerate_tilings({4, f, std::nullopt, 3}, 4);
            v.insert(v.end(), e.begin(), e.end());
        }
    return v;
}

inline std::vector<int> degree_multiset(const GMap& g) {
    std::vector<int> d;
    for (const Cell& v : cells(g, 0)) d.push_back(static_cast<int>(v.darts.size() / 2));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace tilesub::test
