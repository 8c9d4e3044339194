#include "tilesub/tiling.hpp"

#include <algorithm>
#include <set>

namespace tilesub {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Position of every dart in the vertex cycle starting at the vertex id.
std::vector<int> vertex_positions(const GMap& g, const std::vector<Dart>& vidx) {
    std::vector<int> pos(g.size(), -1);
    for (Dart d = 0; d < g.size(); ++d) {
        if (vidx[d] != d) continue;
        auto cyc = vertex_cycle(g, d);
        for (size_t j = 0; j < cyc.size(); ++j) pos[cyc[j]] = static_cast<int>(j);
    }
    return pos;
}

}  // namespace

FaceData face_data(const GMap& g, Dart face, const std::vector<Dart>& vidx) {
    FaceData fd;
    Dart m = face;
    for (Dart x : orbit(g, face, 3)) m = std::min(m, x);
    fd.walk = face_walk(g, m);
    const int n = static_cast<int>(fd.walk.size());
    const int k = n / 2;
    std::vector<int> where(g.size(), -1);
    for (int j = 0; j < n; ++j) where[fd.walk[j]] = j;
    fd.corner_vertex.resize(k);
    fd.corner_in.resize(k);
    fd.corner_dir.resize(k);
    fd.glue.assign(k, {-1, -1});
    for (int i = 0; i < k; ++i) {
        fd.corner_vertex[i] = vidx[fd.walk[2 * i]];
        fd.corner_in[i] = fd.walk[mod(2 * i - 1, n)];
        Dart y = g.alpha(2, fd.walk[2 * i]);
        if (where[y] >= 0) fd.glue[i] = {where[y] / 2, where[y] % 2};
    }
    std::map<Dart, std::vector<Dart>> cyc;
    for (int i = 0; i < k; ++i) {
        Dart v = fd.corner_vertex[i];
        if (!cyc.count(v)) cyc[v] = vertex_cycle(g, v);
        const auto& c = cyc[v];
        int p = static_cast<int>(std::find(c.begin(), c.end(), fd.corner_in[i]) - c.begin());
        fd.corner_dir[i] = p % 2;
    }
    return fd;
}

TilingReport validate_tiling(const GMap& g, std::optional<int> required_gon) {
    TilingReport r;
    r.min_vertex_degree = g.empty() ? 0 : 1 << 30;
    for (const Cell& v : cells(g, 0)) {
        int deg = static_cast<int>(v.darts.size()) / 2;
        r.min_vertex_degree = std::min(r.min_vertex_degree, deg);
        if (deg < 3) r.violations.push_back({"vertex_degree", v.id, deg});
    }
    for (const Cell& f : cells(g, 2)) {
        int k = static_cast<int>(f.darts.size()) / 2;
        r.face_size_histogram[k]++;
        if (k < 3 || (required_gon && k != *required_gon)) r.violations.push_back({"face_size", f.id, k});
    }
    r.ok = r.violations.empty();
    return r;
}

BoundaryWalk face_boundary_word(const GMap& g, Dart face) {
    Dart m = face;
    for (Dart x : orbit(g, face, 3)) m = std::min(m, x);
    int first = g.alpha(0, m) < g.alpha(1, m) ? 0 : 1;
    BoundaryWalk bw;
    Dart x = m;
    int i = first;
    do {
        bw.darts.push_back(x);
        x = g.alpha(i, x);
        i ^= 1;
    } while (x != m);
    auto vidx = cell_index(g, 0), eidx = cell_index(g, 1);
    const int n = static_cast<int>(bw.darts.size());
    for (int c = 0; c < n / 2; ++c) {
        Dart at = bw.darts[2 * c];
        // the dart of this corner that lies on the side leaving it
        Dart side_dart = first == 0 ? at : bw.darts[2 * c + 1];
        Dart e = eidx[side_dart];
        bool min_side = side_dart == e || g.alpha(0, side_dart) == e;
        bw.corners.push_back({vidx[at], e, min_side ? 0 : 1});
    }
    return bw;
}

std::string tag_name(TileTag t) {
    switch (t) {
        case TileTag::Q: return "Q";
        case TileTag::Q12: return "Q12";
        case TileTag::Q13: return "Q13";
        case TileTag::Q123: return "Q123";
        case TileTag::Q132: return "Q132";
        case TileTag::Q1234: return "Q1234";
        case TileTag::Q1243: return "Q1243";
        case TileTag::Q12_34: return "Q12_34";
        case TileTag::Q13_24: return "Q13_24";
        case TileTag::R: return "R";
        case TileTag::R1: return "R1";
        case TileTag::R2: return "R2";
        case TileTag::K: return "K";
        case TileTag::Forbidden: return "Forbidden";
    }
    return "?";
}

std::vector<TileTag> admissible_tags() {
    return {TileTag::Q,      TileTag::Q12,    TileTag::Q13, TileTag::Q123, TileTag::Q132,
            TileTag::Q1234,  TileTag::Q1243,  TileTag::Q12_34, TileTag::Q13_24, TileTag::R,
            TileTag::R1,     TileTag::R2,     TileTag::K};
}

std::optional<TileTag> tag_from_name(const std::string& s) {
    for (TileTag t : admissible_tags())
        if (tag_name(t) == s) return t;
    if (s == "Forbidden") return TileTag::Forbidden;
    return std::nullopt;
}

std::string reason_name(ForbiddenReason r) {
    switch (r) {
        case ForbiddenReason::None: return "";
        case ForbiddenReason::AdjacentOpposing: return "AdjacentOpposing";
        case ForbiddenReason::OppositeEdgeIdentification: return "OppositeEdgeIdentification";
        case ForbiddenReason::IncompatibleVertexIdentification: return "IncompatibleVertexIdentification";
        case ForbiddenReason::NotQuadrilateral: return "NotQuadrilateral";
    }
    return "?";
}

bool is_q_prime(const TileClass& c) {
    return c.tag == TileTag::Forbidden && c.reason == ForbiddenReason::IncompatibleVertexIdentification &&
           c.shape == "Q13";
}

TileClass classify_quad_tile(const GMap& g, Dart face) {
    auto vidx = cell_index(g, 0);
    FaceData fd = face_data(g, face, vidx);
    TileClass tc;
    if (fd.corner_vertex.size() != 4) {
        tc.tag = TileTag::Forbidden;
        tc.reason = ForbiddenReason::NotQuadrilateral;
        return tc;
    }
    const auto& cv = fd.corner_vertex;
    const auto& dir = fd.corner_dir;

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cv[i] == cv[j] && ((dir[i] == dir[j]) != ((j - i) % 2 == 0))) tc.compatible = false;

    auto forbid = [&](ForbiddenReason r, std::string shape) {
        tc.tag = TileTag::Forbidden;
        tc.reason = r;
        tc.shape = std::move(shape);
        return tc;
    };

    std::vector<int> twisted;  // s where sides s, s+1 are glued twisted
    for (int s = 0; s < 4; ++s) {
        auto [t, e] = fd.glue[s];
        if (t < 0) continue;
        if (mod(t - s, 4) == 2) return forbid(ForbiddenReason::OppositeEdgeIdentification, "opposite");
        if (t == mod(s + 1, 4)) {
            if (e == 1) return forbid(ForbiddenReason::AdjacentOpposing, "fold");
            twisted.push_back(s);
        }
    }

    auto finish = [&](TileTag t, const std::string& shape) {
        tc.shape = shape;
        if (!tc.compatible && t != TileTag::R1) return forbid(ForbiddenReason::IncompatibleVertexIdentification, shape);
        tc.tag = t;
        return tc;
    };

    if (twisted.size() == 2) return finish(TileTag::K, "K");
    if (twisted.size() == 1) {
        int s = twisted[0];
        if (cv[mod(s + 3, 4)] != cv[s]) return finish(TileTag::R, "R");
        tc.shape = "R+";
        return finish(dir[mod(s + 3, 4)] == dir[s] ? TileTag::R1 : TileTag::R2, "R+");
    }

    // No edge identifications: vertex partition of the four corners.
    std::map<Dart, std::vector<int>> groups;
    for (int i = 0; i < 4; ++i) groups[cv[i]].push_back(i);
    std::vector<std::vector<int>> multi;
    for (auto& [v, c] : groups)
        if (c.size() > 1) multi.push_back(c);

    if (multi.empty()) return finish(TileTag::Q, "Q");
    if (multi.size() == 2) {
        bool opposite = multi[0][1] - multi[0][0] == 2;
        return opposite ? finish(TileTag::Q13_24, "Q13_24") : finish(TileTag::Q12_34, "Q12_34");
    }
    const auto& c = multi[0];
    if (c.size() == 2) {
        bool opposite = c[1] - c[0] == 2;
        return opposite ? finish(TileTag::Q13, "Q13") : finish(TileTag::Q12, "Q12");
    }

    // Rotational order of the tile's fans around the identified vertex.
    auto cyc = vertex_cycle(g, cv[c[0]]);
    const int L = static_cast<int>(cyc.size());
    auto pos = [&](int corner) {
        return static_cast<int>(std::find(cyc.begin(), cyc.end(), fd.corner_in[corner]) - cyc.begin());
    };

    if (c.size() == 3) {
        if (!tc.compatible) return finish(TileTag::Q123, "Q123");
        int m = -1;
        for (int x : c) {
            int adj = 0;
            for (int y : c) adj += mod(x - y, 4) == 1 || mod(y - x, 4) == 1;
            if (adj == 2) m = x;
        }
        int pre = mod(m - 1, 4), post = mod(m + 1, 4);
        int step = dir[pre] == 0 ? 1 : -1;
        int p0 = pos(pre);
        int dm = mod((pos(m) - p0) * step, L), dp = mod((pos(post) - p0) * step, L);
        return dm < dp ? finish(TileTag::Q123, "Q123") : finish(TileTag::Q132, "Q132");
    }

    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < 4; ++i) order.push_back({pos(i), i});
    std::sort(order.begin(), order.end());
    bool square = true;
    for (int j = 0; j < 4; ++j) {
        int a = order[j].second, b = order[(j + 1) % 4].second;
        if (mod(a - b, 4) == 2) square = false;
    }
    return square ? finish(TileTag::Q1234, "Q1234") : finish(TileTag::Q1243, "Q1243");
}

NbhdSignature tile_neighborhood_signature(const GMap& g, Dart face) {
    auto vidx = cell_index(g, 0), eidx = cell_index(g, 1);
    FaceData fd = face_data(g, face, vidx);
    const auto& w = fd.walk;
    const int n = static_cast<int>(w.size());
    std::vector<int> where(g.size(), -1);
    for (int j = 0; j < n; ++j) where[w[j]] = j;

    std::map<Dart, int> count;
    for (Dart v : fd.corner_vertex) count[v]++;
    auto identified = [&](Dart v) { return count[v] > 1; };

    NbhdSignature sig;
    std::vector<char> used(n / 2, 0);
    for (int s0 = 0; s0 < n / 2; ++s0) {
        if (fd.glue[s0].first >= 0 || used[s0]) continue;
        BoundaryCircle c;
        Dart start = w[2 * s0], x = start;
        do {
            used[where[x] / 2] = 1;
            c.edges++;
            Dart y = g.alpha(0, x);
            Dart t = g.alpha(2, y);
            int guard = 0;
            do {
                t = g.alpha(2, g.alpha(1, t));
            } while (where[t] < 0 && ++guard < g.size());
            if (identified(vidx[y])) c.passes++;
            x = t;
        } while (x != start && c.edges <= n);
        sig.circles.push_back(c);
    }
    std::sort(sig.circles.begin(), sig.circles.end());

    std::set<Dart> vs(fd.corner_vertex.begin(), fd.corner_vertex.end()), es;
    for (Dart d : w) es.insert(eidx[d]);
    sig.euler = static_cast<int>(vs.size()) - static_cast<int>(es.size()) + 1;

    // 2-colour the face darts; disks at identified vertices carry the
    // alternating colouring of their vertex cycle.
    auto pos = vertex_positions(g, vidx);
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int j = 0; j < n; ++j) {
        adj[j].push_back({where[g.alpha(0, w[j])], 1});
        adj[j].push_back({where[g.alpha(1, w[j])], 1});
        int o = where[g.alpha(2, w[j])];
        if (o >= 0) adj[j].push_back({o, 1});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && vidx[w[a]] == vidx[w[b]] && identified(vidx[w[a]]))
                adj[a].push_back({b, mod(pos[w[a]] - pos[w[b]], 2)});
    std::vector<int> col(n, -1);
    col[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (auto [b, p] : adj[a]) {
            int want = col[a] ^ p;
            if (col[b] < 0) {
                col[b] = want;
                stack.push_back(b);
            } else if (col[b] != want) {
                sig.orientable = false;
            }
        }
    }
    return sig;
}

NbhdSignature table_signature(TileTag t) {
    using C = BoundaryCircle;
    auto row = [](std::vector<C> c, int chi, bool ori) {
        std::sort(c.begin(), c.end());
        return NbhdSignature{c, chi, ori};
    };
    switch (t) {
        case TileTag::Q: return row({{4, 0}}, 1, true);
        case TileTag::Q12: return row({{4, 2}}, 0, false);
        case TileTag::Q13: return row({{2, 1}, {2, 1}}, 0, true);
        case TileTag::Q123: return row({{2, 1}, {2, 2}}, -1, false);
        case TileTag::Q132: return row({{4, 3}}, -1, false);
        case TileTag::Q1234: return row({{2, 2}, {2, 2}}, -2, false);
        case TileTag::Q1243: return row({{4, 4}}, -2, false);
        case TileTag::Q12_34: return row({{4, 4}}, -1, false);
        case TileTag::Q13_24: return row({{4, 4}}, -1, true);
        case TileTag::R: return row({{2, 1}}, 0, false);
        case TileTag::R1: return row({{1, 1}, {1, 1}}, -1, false);
        case TileTag::R2: return row({{2, 2}}, -1, false);
        case TileTag::K: return row({}, 0, false);
        case TileTag::Forbidden: break;
    }
    throw std::invalid_argument("no table row for Forbidden");
}

MinSurface min_surface(TileTag t) {
    switch (t) {
        case TileTag::Q:
        case TileTag::Q13: return {"S2", "S2 # S for any S", true};
        case TileTag::Q12:
        case TileTag::Q123:
        case TileTag::R: return {"P2^1", "P2 # S for any S", true};
        case TileTag::Q132:
        case TileTag::Q1234:
        case TileTag::Q12_34:
        case TileTag::R2: return {"P2^2", "P2^2 # S for any S", true};
        case TileTag::Q1243: return {"P2^3", "P2^3 # S for any S", true};
        case TileTag::Q13_24: return {"T2^1", "T2^k (k>=1) and P2^k (k>=3)", true};
        case TileTag::R1: return {"P2^2", "P2^k (k>=2)", false};
        case TileTag::K: return {"P2^2", "P2^2 only", false};
        case TileTag::Forbidden: break;
    }
    throw std::invalid_argument("no minimal surface for Forbidden");
}

std::string pent_name(PentType t) {
    switch (t) {
        case PentType::P1: return "P1";
        case PentType::P2: return "P2";
        case PentType::P3: return "P3";
        case PentType::Mismatch: return "Mismatch";
    }
    return "?";
}

PentClass classify_pent_tile(const GMap& g, Dart face, const VertexLabeling& labeling) {
    auto vidx = cell_index(g, 0);
    FaceData fd = face_data(g, face, vidx);
    PentClass pc;
    auto fail = [&](std::string why) {
        pc.type = PentType::Mismatch;
        pc.reason = std::move(why);
        return pc;
    };
    if (fd.corner_vertex.size() != 5) return fail("not a pentagon");
    const auto& cv = fd.corner_vertex;
    std::vector<int> lab(5);  // 0 unlabeled, 1 filled, 2 hollow
    for (int i = 0; i < 5; ++i) {
        auto it = labeling.find(cv[i]);
        lab[i] = it == labeling.end() ? 0 : (it->second == Mark::Filled ? 1 : 2);
        if (lab[i] == 2) return fail("hollow vertex in pentagon");
    }
    int r = -1;
    for (int q = 0; q < 5; ++q) {
        static const int pat[5] = {1, 0, 1, 0, 0};
        bool ok = true;
        for (int j = 0; j < 5; ++j) ok &= lab[(q + j) % 5] == pat[j];
        if (ok) r = q;
    }
    if (r < 0) return fail("corner labels do not follow filled-u-filled-u-u");
    return classify_pent_rotation(g, face, r);
}

PentClass classify_pent_rotation(const GMap& g, Dart face, int r) {
    auto vidx = cell_index(g, 0);
    FaceData fd = face_data(g, face, vidx);
    PentClass pc;
    auto fail = [&](std::string why) {
        pc.type = PentType::Mismatch;
        pc.reason = std::move(why);
        return pc;
    };
    if (fd.corner_vertex.size() != 5) return fail("not a pentagon");
    const auto& cv = fd.corner_vertex;
    auto c = [&](int j) { return (r + j) % 5; };
    for (int j : {1, 3, 4})
        if (vertex_degree(g, cv[c(j)]) != 3) return fail("unlabeled corner without degree 3");
    for (int j = 0; j < 5; ++j) pc.corners.push_back(cv[c(j)]);
    auto eidx = cell_index(g, 1);
    pc.dotted_edge = eidx[fd.walk[2 * c(3)]];

    auto same = [&](int a, int b) { return cv[c(a)] == cv[c(b)]; };
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (same(a, b)) pairs.push_back({a, b});
    std::vector<std::tuple<int, int, int>> glued;  // relative sides, polarity
    for (int j = 0; j < 5; ++j) {
        auto [t, e] = fd.glue[c(j)];
        if (t < 0) continue;
        int tj = mod(t - r, 5);
        if (j < tj) glued.push_back({j, tj, e});
    }

    if (glued.empty() && pairs.empty()) {
        pc.type = PentType::P1;
        return pc;
    }
    using P = std::vector<std::pair<int, int>>;
    if (glued.empty()) {
        if (pairs != P{{0, 2}}) return fail("vertex identification other than the two filled corners");
        if (tile_neighborhood_signature(g, face).orientable) return fail("identified filled corners form an annulus");
        pc.type = PentType::P2;
        return pc;
    }
    if (glued.size() == 1) {
        auto [a, b, e] = glued[0];
        if (e == 0 && a == 0 && b == 2 && pairs == P{{0, 2}, {1, 3}}) {
            pc.type = PentType::P3;
            return pc;
        }
        if (e == 0 && a == 1 && b == 4 && pairs == P{{0, 2}, {1, 4}}) {
            pc.type = PentType::P3;
            return pc;
        }
    }
    return fail("edge identification is not a twisted filled-u side pair");
}

}  // namespace tilesub
