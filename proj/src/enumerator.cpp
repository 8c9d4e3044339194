#include "tilesub/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "tilesub/tiling.hpp"

namespace tilesub {

int enumeration_cap() {
    if (const char* s = std::getenv("TILESUB_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 8;
}

namespace {

struct Target {
    bool orientable_only = false;
    std::optional<SurfaceSignature> sig;
    int vertices = -1;  // required vertex count, when a surface is given
};

// Partial gluing of F gon-gons. Dart (f,s,e) = f*2k + 2s + e.
struct State {
    int k, nfaces, md;
    const Target* target;
    int created = 1;
    std::vector<Dart> a2;
    std::set<GMap>* out = nullptr;
    const std::function<bool(const GMap&)>* visit = nullptr;
    bool stopped = false;

    int n() const { return 2 * k * nfaces; }
    Dart a0(Dart d) const { return d ^ 1; }
    Dart a1(Dart d) const {
        int f = d / (2 * k), r = d % (2 * k);
        if (r % 2 == 1) return f * 2 * k + (r + 1) % (2 * k);
        return f * 2 * k + (r + 2 * k - 1) % (2 * k);
    }

    // Degree of d's vertex if closed, else -1.
    int closed_degree(Dart d) const {
        Dart x = d;
        int deg = 0;
        do {
            x = a1(x);
            if (a2[x] < 0) return -1;
            x = a2[x];
            ++deg;
        } while (x != d);
        return deg;
    }

    void glue(int s, int t, bool rev, bool undo) {
        Dart d0 = 2 * s, d1 = 2 * s + 1, e0 = 2 * t + (rev ? 1 : 0), e1 = 2 * t + (rev ? 0 : 1);
        if (undo) {
            a2[d0] = a2[d1] = a2[e0] = a2[e1] = -1;
        } else {
            a2[d0] = e0;
            a2[e0] = d0;
            a2[d1] = e1;
            a2[e1] = d1;
        }
    }

    bool locally_ok(int s, int t) const {
        for (Dart d : {2 * s, 2 * s + 1, 2 * t, 2 * t + 1}) {
            int deg = closed_degree(d);
            if (deg >= 0 && deg < md) return false;
        }
        return true;
    }

    bool vertex_bound_ok() const {
        if (target->vertices < 0) return true;
        int used = 2 * k * created;
        std::vector<char> seen(used, 0);
        int closed = 0, closed_darts = 0;
        for (Dart d = 0; d < used; ++d) {
            if (seen[d]) continue;
            if (closed_degree(d) < 0) continue;
            Dart x = d;
            do {
                seen[x] = 1;
                x = a1(x);
                seen[x] = 1;
                x = a2[x];
            } while (x != d);
            ++closed;
        }
        for (Dart d = 0; d < used; ++d) closed_darts += seen[d];
        int open = n() - closed_darts;
        if (closed > target->vertices) return false;
        return closed + open / (2 * md) >= target->vertices;
    }

    void finish() {
        std::vector<Dart> v0(n()), v1(n());
        for (Dart d = 0; d < n(); ++d) {
            v0[d] = a0(d);
            v1[d] = a1(d);
        }
        GMap g;
        try {
            g = GMap::build(v0, v1, a2);
        } catch (const GMapError&) {
            return;
        }
        if (target->sig) {
            SurfaceSignature s = classify_surface(g);
            if (s.orientable != target->sig->orientable || s.euler != target->sig->euler) return;
        }
        if (visit) stopped = !(*visit)(g);
        else out->insert(canonical_form(g));
    }

    int first_free() const {
        for (int s = 0; s < k * created; ++s)
            if (a2[2 * s] < 0) return s;
        return -1;
    }

    // Moves from the current state: (partner side, rev, opens a new face).
    std::vector<std::tuple<int, bool, bool>> moves(int s) const {
        std::vector<std::tuple<int, bool, bool>> m;
        for (int t = s + 1; t < k * created; ++t) {
            if (a2[2 * t] >= 0) continue;
            m.emplace_back(t, true, false);
            if (!target->orientable_only) m.emplace_back(t, false, false);
        }
        if (created < nfaces) m.emplace_back(k * created, true, true);
        return m;
    }

    void apply(const std::tuple<int, bool, bool>& mv, int s) {
        auto [t, rev, opens] = mv;
        if (opens) ++created;
        glue(s, t, rev, false);
    }
    void revert(const std::tuple<int, bool, bool>& mv, int s) {
        auto [t, rev, opens] = mv;
        glue(s, t, rev, true);
        if (opens) --created;
    }

    void dfs() {
        int s = first_free();
        if (s < 0) {
            if (created == nfaces) finish();
            return;
        }
        for (const auto& mv : moves(s)) {
            if (stopped) return;
            auto [t, rev, opens] = mv;
            apply(mv, s);
            if (locally_ok(s, t) && vertex_bound_ok()) dfs();
            revert(mv, s);
        }
    }
};

}  // namespace

namespace {

Target make_target(const EnumSpec& spec) {
    if (spec.gon < 3 || spec.faces < 1 || (spec.gon * spec.faces) % 2 != 0 || spec.min_degree < 1)
        throw EnumError(EnumError::Kind::InvalidSpec, "faces * gon must be even and all values positive");
    if (spec.faces > enumeration_cap())
        throw EnumError(EnumError::Kind::CapExceeded,
                        "faces " + std::to_string(spec.faces) + " exceeds cap " + std::to_string(enumeration_cap()));
    Target target;
    if (spec.surface) {
        target.sig = parse_surface_word(*spec.surface);
        if (!target.sig) throw EnumError(EnumError::Kind::InvalidSpec, "bad surface word " + *spec.surface);
        target.orientable_only = target.sig->orientable;
        int edges = spec.gon * spec.faces / 2;
        target.vertices = target.sig->euler + edges - spec.faces;
    }
    return target;
}

State root_state(const EnumSpec& spec, const Target& target) {
    return State{spec.gon, spec.faces, spec.min_degree, &target, 1, std::vector<Dart>(2 * spec.gon * spec.faces, -1)};
}

}  // namespace

void visit_tilings(const EnumSpec& spec, const std::function<bool(const GMap&)>& visit) {
    Target target = make_target(spec);
    if (target.sig && target.vertices < 1) return;
    State st = root_state(spec, target);
    st.visit = &visit;
    st.dfs();
}

std::vector<GMap> enumerate_tilings(const EnumSpec& spec, int jobs) {
    Target target = make_target(spec);
    if (target.sig && target.vertices < 1) return {};
    State root = root_state(spec, target);
    auto first = root.moves(0);
    std::set<GMap> all;
    std::mutex mu;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        std::set<GMap> local;
        for (size_t i = next++; i < first.size(); i = next++) {
            State st = root;
            st.out = &local;
            st.apply(first[i], 0);
            if (st.locally_ok(0, std::get<0>(first[i])) && st.vertex_bound_ok()) st.dfs();
        }
        std::lock_guard<std::mutex> lock(mu);
        all.insert(local.begin(), local.end());
    };
    int nt = std::max(1, std::min<int>(jobs, static_cast<int>(first.size())));
    std::vector<std::thread> threads;
    for (int i = 1; i < nt; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return {all.begin(), all.end()};
}

std::vector<SubdivisionAssignment> brute_force_subdivisible(const GMap& g) {
    auto fs = cells(g, 2);
    if (fs.size() > 20) throw EnumError(EnumError::Kind::TooLarge, "brute force limited to 20 faces");
    for (const Cell& f : fs)
        if (f.darts.size() != 8) throw EnumError(EnumError::Kind::InvalidSpec, "not a quadrilateral tiling");
    auto eidx = cell_index(g, 1);
    std::vector<std::vector<Dart>> walks;
    for (const Cell& f : fs) walks.push_back(face_walk(g, f.id));
    std::vector<SubdivisionAssignment> out;
    for (unsigned long mask = 0; mask < (1ul << fs.size()); ++mask) {
        std::map<Dart, int> uses;
        for (const Cell& e : cells(g, 1)) uses[e.id] = 0;
        for (size_t i = 0; i < fs.size(); ++i) {
            int b = (mask >> i) & 1;
            for (int p = b; p < 4; p += 2) uses[eidx[walks[i][2 * p]]]++;
        }
        bool ok = std::all_of(uses.begin(), uses.end(), [](auto& kv) { return kv.second == 1; });
        if (!ok) continue;
        SubdivisionAssignment a;
        for (size_t i = 0; i < fs.size(); ++i) a[fs[i].id] = (mask >> i) & 1;
        out.push_back(a);
    }
    return out;
}

std::map<CensusKey, int> census(const std::vector<GMap>& maps) {
    std::map<CensusKey, int> out;
    for (const GMap& g : maps) {
        CensusKey key{classify_surface(g).word(), {}};
        for (const Cell& f : cells(g, 2)) {
            if (f.darts.size() == 8) {
                TileClass c = classify_quad_tile(g, f.id);
                key.tiles.push_back(c.tag == TileTag::Forbidden ? "Forbidden(" + c.shape + ")" : tag_name(c.tag));
            } else {
                key.tiles.push_back(std::to_string(f.darts.size() / 2) + "-gon");
            }
        }
        std::sort(key.tiles.begin(), key.tiles.end());
        out[key]++;
    }
    return out;
}

}  // namespace tilesub
