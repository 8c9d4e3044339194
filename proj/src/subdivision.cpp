#include "tilesub/subdivision.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

namespace tilesub {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

struct FaceWalks {
    std::vector<Dart> ids;                 // face index -> canonical face id
    std::vector<std::vector<Dart>> walks;  // face index -> walk
    std::vector<int> face_of;              // dart -> face index
    std::vector<int> pos;                  // dart -> position in its walk
};

// Walks alpha0-first from each face's minimum dart, or from the given
// starting darts when supplied.
FaceWalks face_walks(const GMap& g, const std::vector<Dart>* starts = nullptr) {
    FaceWalks fw;
    fw.face_of.assign(g.size(), -1);
    fw.pos.assign(g.size(), -1);
    auto fidx = cell_index(g, 2);
    for (Dart d = 0; d < g.size(); ++d) {
        if (fidx[d] != d) continue;
        int fi = static_cast<int>(fw.ids.size());
        fw.ids.push_back(d);
        Dart s = starts ? (*starts)[fi] : d;
        fw.walks.push_back(face_walk(g, s));
        const auto& w = fw.walks.back();
        for (size_t j = 0; j < w.size(); ++j) {
            fw.face_of[w[j]] = fi;
            fw.pos[w[j]] = static_cast<int>(j);
        }
    }
    return fw;
}

void require_quads(const GMap& g) {
    if (g.empty()) throw SubdivisionError(SubdivisionError::Kind::NotQuadTiling, "empty map");
    for (const Cell& f : cells(g, 2))
        if (f.darts.size() != 8)
            throw SubdivisionError(SubdivisionError::Kind::NotQuadTiling,
                                   "face " + std::to_string(f.id) + " is not a quadrilateral");
}

void require_connected(const GMap& g) {
    if (!is_connected(g)) throw SubdivisionError(SubdivisionError::Kind::Disconnected, "map is disconnected");
}

struct Seg {
    int nf, ns;
    bool fwd;
};

// segs[fi][s] lists the new sides covering old side s in walk order.
void glue_segments(PolygonBuilder& b, const GMap& g, const FaceWalks& fw,
                   const std::vector<std::vector<std::vector<Seg>>>& segs) {
    for (size_t fi = 0; fi < fw.walks.size(); ++fi) {
        const auto& w = fw.walks[fi];
        for (int s = 0; s < static_cast<int>(w.size()) / 2; ++s) {
            Dart y = g.alpha(2, w[2 * s]);
            int fj = fw.face_of[y], t = fw.pos[y] / 2, e = fw.pos[y] % 2;
            if (std::make_pair(static_cast<int>(fi), s) > std::make_pair(fj, t)) continue;
            const auto& A = segs[fi][s];
            const auto& B = segs[fj][t];
            const int n = static_cast<int>(A.size());
            for (int j = 0; j < n; ++j) {
                int j2 = e ? n - 1 - j : j;
                int start1 = A[j].fwd ? j : j + 1;
                int mapped = e ? n - start1 : start1;
                int start2 = B[j2].fwd ? j2 : j2 + 1;
                b.glue(A[j].nf, A[j].ns, B[j2].nf, B[j2].ns, mapped != start2);
            }
        }
    }
}

struct Tagged {
    PolygonBuilder b;
    std::vector<std::vector<Provenance>> corner;  // new face -> corner tags

    int add(std::vector<Provenance> tags) {
        corner.push_back(tags);
        return b.add_face(static_cast<int>(tags.size()));
    }

    Subdivided finish() {
        GMap raw = b.build();
        std::vector<Dart> perm;
        Subdivided out;
        out.map = canonical_form(raw, &perm);
        std::map<Dart, Provenance> by_dart;
        for (int f = 0; f < b.face_count(); ++f)
            for (int c = 0; c < b.sides(f); ++c) by_dart[perm[b.dart(f, c, 0)]] = corner[f][c];
        out.provenance = rekey_vertices(out.map, by_dart);
        for (auto& [v, p] : out.provenance) {
            if (p == Provenance::Original) out.labeling[v] = Mark::Filled;
            if (p == Provenance::FaceCenter) out.labeling[v] = Mark::Hollow;
        }
        return out;
    }
};

struct BitVec {
    std::vector<uint64_t> w;
    explicit BitVec(size_t n = 0) : w((n + 63) / 64, 0) {}
    void flip(size_t i) { w[i / 64] ^= uint64_t(1) << (i % 64); }
    bool get(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    void xor_with(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    int lowest() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w[k]));
        return -1;
    }
};

}  // namespace

std::vector<EdgeConstraint> parity_constraints(const GMap& g) {
    FaceWalks fw = face_walks(g);
    std::vector<EdgeConstraint> out;
    for (const Cell& e : cells(g, 1)) {
        Dart d = e.id, o = g.alpha(2, d);
        int p = fw.pos[d] / 2, q = fw.pos[o] / 2;
        out.push_back({d, fw.ids[fw.face_of[d]], fw.ids[fw.face_of[o]], 1 ^ ((p + q) % 2)});
    }
    return out;
}

bool verify_witness(const GMap& g, const ParityWitness& w) {
    if (w.faces.size() != w.edges.size() + 1 || w.edges.empty()) return false;
    if (w.faces.front() != w.faces.back()) return false;
    std::map<Dart, EdgeConstraint> by_edge;
    for (auto& c : parity_constraints(g)) by_edge.emplace(c.edge, c);
    int x = 0;
    for (size_t j = 0; j < w.edges.size(); ++j) {
        auto it = by_edge.find(w.edges[j]);
        if (it == by_edge.end()) return false;
        const auto& c = it->second;
        bool fits = (c.face_a == w.faces[j] && c.face_b == w.faces[j + 1]) ||
                    (c.face_b == w.faces[j] && c.face_a == w.faces[j + 1]);
        if (!fits) return false;
        x ^= c.offset;
    }
    return x == 1;
}

bool assignment_valid(const GMap& g, const SubdivisionAssignment& a) {
    FaceWalks fw = face_walks(g);
    for (Dart f : fw.ids)
        if (!a.count(f)) return false;
    for (const Cell& e : cells(g, 1)) {
        int used = 0;
        for (Dart d : {e.id, g.alpha(2, e.id)}) {
            int p = fw.pos[d] / 2;
            used += (p % 2) == a.at(fw.ids[fw.face_of[d]]);
        }
        if (used != 1) return false;
    }
    return true;
}

SubdivisionResult check_subdivisible(const GMap& g) {
    require_quads(g);
    require_connected(g);
    auto cons = parity_constraints(g);

    std::map<Dart, Dart> parent;
    std::map<Dart, int> par;
    for (const Cell& f : cells(g, 2)) {
        parent[f.id] = f.id;
        par[f.id] = 0;
    }
    // find with path compression; returns (root, parity to root)
    auto find = [&](Dart x) {
        std::vector<Dart> path;
        while (parent[x] != x) {
            path.push_back(x);
            x = parent[x];
        }
        Dart root = x;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            Dart p = parent[*it];
            if (p != root) par[*it] ^= par[p];
            parent[*it] = root;
        }
        return root;
    };

    std::map<Dart, std::vector<size_t>> adj;  // accepted constraints
    for (size_t k = 0; k < cons.size(); ++k) {
        const auto& c = cons[k];
        Dart ra = find(c.face_a), rb = find(c.face_b);
        int pa = c.face_a == ra ? 0 : par[c.face_a], pb = c.face_b == rb ? 0 : par[c.face_b];
        if (ra != rb) {
            parent[ra] = rb;
            par[ra] = pa ^ pb ^ c.offset;
            adj[c.face_a].push_back(k);
            adj[c.face_b].push_back(k);
            continue;
        }
        if ((pa ^ pb) == c.offset) {
            adj[c.face_a].push_back(k);
            adj[c.face_b].push_back(k);
            continue;
        }
        // Conflict: path face_b -> face_a through accepted constraints, then c.
        std::map<Dart, std::pair<Dart, size_t>> prev;
        std::deque<Dart> q{c.face_b};
        prev[c.face_b] = {c.face_b, SIZE_MAX};
        while (!q.empty() && !prev.count(c.face_a)) {
            Dart x = q.front();
            q.pop_front();
            for (size_t ci : adj[x]) {
                Dart y = cons[ci].face_a == x ? cons[ci].face_b : cons[ci].face_a;
                if (prev.count(y)) continue;
                prev[y] = {x, ci};
                q.push_back(y);
            }
        }
        ParityWitness w;
        w.faces.push_back(c.face_a);
        for (Dart x = c.face_a; x != c.face_b; x = prev[x].first) {
            w.edges.push_back(cons[prev[x].second].edge);
            w.faces.push_back(prev[x].first);
        }
        w.edges.push_back(c.edge);
        w.faces.push_back(c.face_a);
        return w;
    }
    SubdivisionAssignment a;
    for (auto& [f, p] : parent) {
        Dart r = find(f);
        a[f] = f == r ? 0 : par[f];
    }
    return a;
}

bool is_subdivisible(const GMap& g) { return std::holds_alternative<SubdivisionAssignment>(check_subdivisible(g)); }

bool is_bipartite_skeleton(const GMap& g) {
    auto vidx = cell_index(g, 0);
    std::map<Dart, std::vector<Dart>> adj;
    for (const Cell& e : cells(g, 1)) {
        Dart u = vidx[e.id], w = vidx[g.alpha(0, e.id)];
        if (u == w) return false;
        adj[u].push_back(w);
        adj[w].push_back(u);
    }
    std::map<Dart, int> col;
    for (auto& [s, _] : adj) {
        if (col.count(s)) continue;
        col[s] = 0;
        std::vector<Dart> st{s};
        while (!st.empty()) {
            Dart x = st.back();
            st.pop_back();
            for (Dart y : adj[x]) {
                if (!col.count(y)) {
                    col[y] = 1 - col[x];
                    st.push_back(y);
                } else if (col[y] == col[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::map<Dart, int> w1_cochain(const GMap& g) {
    auto vidx = cell_index(g, 0);
    std::vector<int> pos(g.size(), 0);
    for (Dart d = 0; d < g.size(); ++d) {
        if (vidx[d] != d) continue;
        auto c = vertex_cycle(g, d);
        for (size_t j = 0; j < c.size(); ++j) pos[c[j]] = static_cast<int>(j);
    }
    std::map<Dart, int> w;
    for (const Cell& e : cells(g, 1)) w[e.id] = (pos[e.id] ^ pos[g.alpha(0, e.id)] ^ 1) & 1;
    return w;
}

bool HomologyCharacterReport::lambda_zero() const {
    return std::all_of(basis.begin(), basis.end(), [](const HomologyCycle& c) { return c.lambda == 0; });
}

bool HomologyCharacterReport::w1_zero() const {
    return std::all_of(basis.begin(), basis.end(), [](const HomologyCycle& c) { return c.w1 == 0; });
}

HomologyCharacterReport homology_character(const GMap& g) {
    require_quads(g);
    require_connected(g);
    auto vidx = cell_index(g, 0), eidx = cell_index(g, 1);
    auto ecells = cells(g, 1);
    const size_t E = ecells.size();
    std::map<Dart, size_t> eix;
    for (size_t k = 0; k < E; ++k) eix[ecells[k].id] = k;

    // spanning tree of the 1-skeleton
    std::map<Dart, std::vector<std::pair<Dart, size_t>>> adj;
    for (size_t k = 0; k < E; ++k) {
        Dart u = vidx[ecells[k].id], w = vidx[g.alpha(0, ecells[k].id)];
        adj[u].push_back({w, k});
        adj[w].push_back({u, k});
    }
    Dart root = adj.begin()->first;
    std::map<Dart, std::pair<Dart, size_t>> up;
    std::map<Dart, int> depth;
    std::vector<char> tree(E, 0);
    std::deque<Dart> q{root};
    depth[root] = 0;
    while (!q.empty()) {
        Dart x = q.front();
        q.pop_front();
        for (auto [y, k] : adj[x]) {
            if (depth.count(y)) continue;
            depth[y] = depth[x] + 1;
            up[y] = {x, k};
            tree[k] = 1;
            q.push_back(y);
        }
    }

    std::vector<BitVec> pivots(E);
    std::vector<char> has(E, 0);
    auto reduce = [&](BitVec v) {
        for (int p = v.lowest(); p >= 0; p = v.lowest()) {
            if (!has[p]) return v;
            v.xor_with(pivots[p]);
        }
        return v;
    };
    auto insert = [&](const BitVec& v) {
        BitVec r = reduce(v);
        int p = r.lowest();
        if (p < 0) return false;
        pivots[p] = r;
        has[p] = 1;
        return true;
    };
    for (const Cell& f : cells(g, 2)) {
        BitVec v(E);
        auto w = face_walk(g, f.id);
        for (size_t j = 0; j < w.size(); j += 2) v.flip(eix[eidx[w[j]]]);
        insert(v);
    }

    auto w1 = w1_cochain(g);
    HomologyCharacterReport rep;
    for (size_t k = 0; k < E; ++k) {
        if (tree[k]) continue;
        BitVec z(E);
        z.flip(k);
        Dart a = vidx[ecells[k].id], b = vidx[g.alpha(0, ecells[k].id)];
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            z.flip(up[a].second);
            a = up[a].first;
        }
        if (!insert(z)) continue;
        HomologyCycle c;
        for (size_t j = 0; j < E; ++j)
            if (z.get(j)) {
                c.edges.push_back(ecells[j].id);
                c.length_parity ^= 1;
                c.w1 ^= w1[ecells[j].id];
            }
        c.lambda = c.length_parity ^ c.w1;
        rep.basis.push_back(std::move(c));
    }
    return rep;
}

Subdivided simple_pentagonal_subdivision(const GMap& g, const SubdivisionAssignment& a) {
    require_quads(g);
    if (!assignment_valid(g, a))
        throw SubdivisionError(SubdivisionError::Kind::AssignmentInvalid, "assignment breaks the once-per-edge rule");
    FaceWalks fw = face_walks(g);
    const auto O = Provenance::Original, M = Provenance::EdgeMidpoint;
    Tagged t;
    std::vector<std::vector<std::vector<Seg>>> segs(fw.ids.size(), std::vector<std::vector<Seg>>(4));
    for (size_t fi = 0; fi < fw.ids.size(); ++fi) {
        int p = a.at(fw.ids[fi]);
        int s0 = p, s1 = (p + 1) % 4, s2 = (p + 2) % 4, s3 = (p + 3) % 4;
        int X = t.add({M, O, M, O, M});
        int Y = t.add({M, O, M, O, M});
        auto& S = segs[fi];
        S[s0] = {{Y, 3, true}, {X, 0, true}};
        S[s1] = {{X, 1, true}, {X, 2, true}};
        S[s2] = {{X, 3, true}, {Y, 0, true}};
        S[s3] = {{Y, 1, true}, {Y, 2, true}};
        t.b.glue(X, 4, Y, 4, true);
    }
    glue_segments(t.b, g, fw, segs);
    return t.finish();
}

SubdivisionAssignment dual_assignment(const SubdivisionAssignment& a) {
    SubdivisionAssignment out;
    for (auto& [f, b] : a) out[f] = b ^ 1;
    return out;
}

GMap refine3(const GMap& g) {
    require_quads(g);
    FaceWalks fw = face_walks(g);
    PolygonBuilder b;
    std::vector<std::vector<std::vector<Seg>>> segs(fw.ids.size(), std::vector<std::vector<Seg>>(4));
    for (size_t fi = 0; fi < fw.ids.size(); ++fi) {
        int cell[3][3];
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) cell[i][j] = b.add_face(4);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                if (i < 2) b.glue(cell[i][j], 1, cell[i + 1][j], 3, true);
                if (j < 2) b.glue(cell[i][j], 2, cell[i][j + 1], 0, true);
            }
        auto& S = segs[fi];
        for (int j = 0; j < 3; ++j) {
            S[0].push_back({cell[j][0], 0, true});
            S[1].push_back({cell[2][j], 1, true});
            S[2].push_back({cell[2 - j][2], 2, true});
            S[3].push_back({cell[0][2 - j], 3, true});
        }
    }
    glue_segments(b, g, fw, segs);
    return canonical_form(b.build());
}

std::vector<Alignment> Alignment::all() {
    std::vector<Alignment> v;
    for (int k = 0; k < 8; ++k) v.push_back(from_index(k));
    return v;
}

GMap connected_sum(const GMap& a, Dart fa, const GMap& b, Dart fb, Alignment al) {
    if (al.offset < 0 || al.offset > 3) throw SubdivisionError(SubdivisionError::Kind::BadAlignment, "offset must be 0..3");
    require_connected(a);
    require_connected(b);
    for (auto [m, f, name] : {std::tuple{&a, fa, "a"}, std::tuple{&b, fb, "b"}}) {
        if (f < 0 || f >= m->size())
            throw SubdivisionError(SubdivisionError::Kind::TileNotNonDegenerate, std::string("face of ") + name + " out of range");
        TileClass tc = classify_quad_tile(*m, f);
        if (tc.tag != TileTag::Q)
            throw SubdivisionError(SubdivisionError::Kind::TileNotNonDegenerate,
                                   std::string("face of ") + name + " is not a non-degenerate quadrilateral");
    }
    auto walk_of = [](const GMap& m, Dart f) {
        Dart lo = f;
        for (Dart x : orbit(m, f, 3)) lo = std::min(lo, x);
        return face_walk(m, lo);
    };
    auto wa = walk_of(a, fa), wb = walk_of(b, fb);
    std::vector<char> dead_a(a.size(), 0), dead_b(b.size(), 0);
    for (Dart d : wa) dead_a[d] = 1;
    for (Dart d : wb) dead_b[d] = 1;
    std::vector<Dart> ia(a.size(), -1), ib(b.size(), -1);
    int n = 0;
    for (Dart d = 0; d < a.size(); ++d)
        if (!dead_a[d]) ia[d] = n++;
    for (Dart d = 0; d < b.size(); ++d)
        if (!dead_b[d]) ib[d] = n++;
    std::array<std::vector<Dart>, 3> al3;
    for (auto& v : al3) v.assign(n, -1);
    for (int i = 0; i < 3; ++i) {
        for (Dart d = 0; d < a.size(); ++d)
            if (!dead_a[d] && !dead_a[a.alpha(i, d)]) al3[i][ia[d]] = ia[a.alpha(i, d)];
        for (Dart d = 0; d < b.size(); ++d)
            if (!dead_b[d] && !dead_b[b.alpha(i, d)]) al3[i][ib[d]] = ib[b.alpha(i, d)];
    }
    // outer dart of b at corner c of its hole, on side s
    auto outer_b = [&](int s, int e) { return ib[b.alpha(2, wb[2 * mod(s, 4) + e])]; };
    for (int s = 0; s < 4; ++s)
        for (int e = 0; e < 2; ++e) {
            Dart x = ia[a.alpha(2, wa[2 * s + e])];
            int c = s + e;  // corner of a's hole at this dart
            Dart y;
            if (!al.flip) {
                y = outer_b(al.offset + s, e);
            } else {
                int sb = al.offset - s - 1;  // runs from pi(s+1) to pi(s)
                y = outer_b(sb, c == s ? 1 : 0);
            }
            al3[2][x] = y;
            al3[2][y] = x;
        }
    return canonical_form(GMap::build(al3[0], al3[1], al3[2]));
}

std::optional<std::pair<Alignment, GMap>> connected_sum_subdivisible(const GMap& a, Dart fa, const GMap& b, Dart fb) {
    for (Alignment al : Alignment::all()) {
        GMap s = connected_sum(a, fa, b, fb, al);
        if (is_subdivisible(s)) return std::make_pair(al, s);
    }
    return std::nullopt;
}

Subdivided quadrilateral_subdivision(const GMap& t) {
    if (t.empty()) throw SubdivisionError(SubdivisionError::Kind::InvalidTiling, "empty map");
    FaceWalks fw = face_walks(t);
    const auto O = Provenance::Original, M = Provenance::EdgeMidpoint, C = Provenance::FaceCenter;
    Tagged tg;
    std::vector<std::vector<std::vector<Seg>>> segs(fw.ids.size());
    for (size_t fi = 0; fi < fw.ids.size(); ++fi) {
        int k = static_cast<int>(fw.walks[fi].size()) / 2;
        std::vector<int> q(k);
        for (int i = 0; i < k; ++i) q[i] = tg.add({O, M, C, M});
        for (int i = 0; i < k; ++i) tg.b.glue(q[i], 1, q[(i + 1) % k], 2, true);
        segs[fi].resize(k);
        for (int i = 0; i < k; ++i) segs[fi][i] = {{q[i], 0, true}, {q[(i + 1) % k], 3, true}};
    }
    glue_segments(tg.b, t, fw, segs);
    return tg.finish();
}

Subdivided pentagonal_subdivision(const GMap& t, const std::vector<int>& color) {
    if (t.empty()) throw SubdivisionError(SubdivisionError::Kind::InvalidTiling, "empty map");
    bool ok = static_cast<int>(color.size()) == t.size();
    for (Dart d = 0; ok && d < t.size(); ++d)
        for (int i = 0; i < 3; ++i) ok &= color[d] != color[t.alpha(i, d)];
    if (!ok) throw SubdivisionError(SubdivisionError::Kind::NotOrientable, "orientation is not a proper dart 2-colouring");
    std::vector<Dart> starts;
    for (const Cell& f : cells(t, 2)) starts.push_back(color[f.id] == 0 ? f.id : t.alpha(1, f.id));
    FaceWalks fw = face_walks(t, &starts);
    const auto O = Provenance::Original, M = Provenance::EdgeMidpoint, C = Provenance::FaceCenter;
    Tagged tg;
    std::vector<std::vector<std::vector<Seg>>> segs(fw.ids.size());
    for (size_t fi = 0; fi < fw.ids.size(); ++fi) {
        int k = static_cast<int>(fw.walks[fi].size()) / 2;
        std::vector<int> p(k);
        for (int i = 0; i < k; ++i) p[i] = tg.add({C, M, M, O, M});
        for (int i = 0; i < k; ++i) tg.b.glue(p[i], 4, p[(i + 1) % k], 0, true);
        segs[fi].resize(k);
        for (int i = 0; i < k; ++i) segs[fi][i] = {{p[mod(i - 1, k)], 3, true}, {p[i], 1, true}, {p[i], 2, true}};
    }
    glue_segments(tg.b, t, fw, segs);
    return tg.finish();
}

DoubleResult double_pentagonal_subdivision(const GMap& t) {
    Subdivided q = quadrilateral_subdivision(t);
    DoubleResult r;
    auto res = check_subdivisible(q.map);
    if (auto* w = std::get_if<ParityWitness>(&res)) {
        r.witness = *w;
        return r;
    }
    r.result = simple_pentagonal_subdivision(q.map, std::get<SubdivisionAssignment>(res));
    return r;
}

GMap delete_edges(const GMap& g, const std::vector<char>& dead, std::vector<Dart>* map) {
    std::vector<Dart> idx(g.size(), -1);
    int n = 0;
    for (Dart d = 0; d < g.size(); ++d)
        if (!dead[d]) idx[d] = n++;
    std::array<std::vector<Dart>, 3> a;
    for (auto& v : a) v.assign(n, -1);
    for (Dart z = 0; z < g.size(); ++z) {
        if (dead[z]) continue;
        a[0][idx[z]] = idx[g.alpha(0, z)];
        a[2][idx[z]] = idx[g.alpha(2, z)];
        Dart t = g.alpha(1, z);
        int guard = 0;
        while (dead[t] && guard++ <= g.size()) t = g.alpha(1, g.alpha(2, t));
        a[1][idx[z]] = idx[t];
    }
    if (map) *map = idx;
    return GMap::build(a[0], a[1], a[2]);
}

GMap smooth_vertices(const GMap& g, const std::vector<char>& at_w, std::vector<Dart>* map) {
    std::vector<Dart> idx(g.size(), -1);
    int n = 0;
    for (Dart d = 0; d < g.size(); ++d)
        if (!at_w[d]) idx[d] = n++;
    std::array<std::vector<Dart>, 3> a;
    for (auto& v : a) v.assign(n, -1);
    for (Dart z = 0; z < g.size(); ++z) {
        if (at_w[z]) continue;
        a[1][idx[z]] = idx[g.alpha(1, z)];
        a[2][idx[z]] = idx[g.alpha(2, z)];
        Dart t = g.alpha(0, z);
        int guard = 0;
        while (at_w[t] && guard++ <= g.size()) t = g.alpha(0, g.alpha(1, t));
        a[0][idx[z]] = idx[t];
    }
    if (map) *map = idx;
    return GMap::build(a[0], a[1], a[2]);
}

}  // namespace tilesub
