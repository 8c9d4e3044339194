#include "tilesub/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tilesub/subdivision.hpp"

namespace tilesub {

namespace {

constexpr int kUnlabeled = 0, kFilled = 1, kHollow = 2;
constexpr long long kCountCap = 10'000'000;
constexpr size_t kKeep = 64;

// One admissible labeling of a face's vertices: (vertex index, label).
using Cand = std::vector<std::pair<int, int>>;

struct Problem {
    std::vector<Dart> vertices;  // index -> canonical vertex id
    std::map<Dart, int> vindex;
    std::vector<Dart> faces;     // face ids
    std::vector<std::vector<Cand>> cands;
};

Problem make_problem(const GMap& g) {
    Problem p;
    for (const Cell& v : cells(g, 0)) {
        p.vindex[v.id] = static_cast<int>(p.vertices.size());
        p.vertices.push_back(v.id);
    }
    for (const Cell& f : cells(g, 2)) p.faces.push_back(f.id);
    p.cands.resize(p.faces.size());
    return p;
}

// Candidate from per-corner labels; empty optional on a self-conflict.
std::optional<Cand> cand_from(const Problem& p, const std::vector<Dart>& corner_vertex, const std::vector<int>& labels) {
    std::map<int, int> m;
    for (size_t i = 0; i < corner_vertex.size(); ++i) {
        int vi = p.vindex.at(corner_vertex[i]);
        auto [it, fresh] = m.emplace(vi, labels[i]);
        if (!fresh && it->second != labels[i]) return std::nullopt;
    }
    return Cand(m.begin(), m.end());
}

void dedupe(std::vector<Cand>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct SearchOut {
    long long count = 0;
    bool capped = false;
    std::set<std::vector<int>> smallest;
};

// Backtracking over faces, most constrained face first.
SearchOut search(const Problem& p, const std::vector<int>& preset = {}) {
    SearchOut out;
    std::vector<int> lab = preset.empty() ? std::vector<int>(p.vertices.size(), -1) : preset;
    std::vector<char> done(p.faces.size(), 0);
    auto fits = [&](const Cand& c) {
        for (auto [v, l] : c)
            if (lab[v] >= 0 && lab[v] != l) return false;
        return true;
    };
    std::function<void(size_t)> rec = [&](size_t ndone) {
        if (out.capped) return;
        if (ndone == p.faces.size()) {
            out.count++;
            if (out.count >= kCountCap) out.capped = true;
            std::vector<int> full = lab;
            for (int& x : full) x = std::max(x, 0);
            out.smallest.insert(full);
            if (out.smallest.size() > kKeep) out.smallest.erase(std::prev(out.smallest.end()));
            return;
        }
        size_t best = SIZE_MAX, best_n = SIZE_MAX;
        for (size_t f = 0; f < p.faces.size(); ++f) {
            if (done[f]) continue;
            size_t n = 0;
            for (const Cand& c : p.cands[f]) n += fits(c);
            if (n < best_n) {
                best_n = n;
                best = f;
                if (n == 0) break;
            }
        }
        if (best_n == 0) return;
        done[best] = 1;
        for (const Cand& c : p.cands[best]) {
            if (!fits(c)) continue;
            std::vector<int> changed;
            for (auto [v, l] : c)
                if (lab[v] < 0) {
                    lab[v] = l;
                    changed.push_back(v);
                }
            rec(ndone + 1);
            for (int v : changed) lab[v] = -1;
            if (out.capped) break;
        }
        done[best] = 0;
    };
    rec(0);
    return out;
}

VertexLabeling to_labeling(const Problem& p, const std::vector<int>& lab) {
    VertexLabeling out;
    for (size_t i = 0; i < lab.size(); ++i) {
        if (lab[i] == kFilled) out[p.vertices[i]] = Mark::Filled;
        if (lab[i] == kHollow) out[p.vertices[i]] = Mark::Hollow;
    }
    return out;
}

// Delete the edges marked by edge_dead(edge darts), then smooth the
// vertices marked by smooth(vertex id of the input).
std::optional<GMap> reconstruct(const GMap& g, const std::vector<char>& dead,
                                const std::function<bool(Dart)>& smooth_vertex) {
    try {
        std::vector<Dart> m1;
        GMap h = delete_edges(g, dead, &m1);
        auto vidx = cell_index(g, 0);
        std::vector<char> at_w(h.size(), 0);
        for (Dart d = 0; d < g.size(); ++d)
            if (m1[d] >= 0 && smooth_vertex(vidx[d])) at_w[m1[d]] = 1;
        for (Dart d = 0; d < h.size(); ++d)
            if (at_w[d] && vertex_degree(h, d) != 2) return std::nullopt;
        GMap base = smooth_vertices(h, at_w);
        if (base.empty() || !is_connected(base)) return std::nullopt;
        return canonical_form(base);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

bool all_faces_of_size(const GMap& g, int k) {
    if (g.empty()) return false;
    for (const Cell& f : cells(g, 2))
        if (static_cast<int>(f.darts.size()) != 2 * k) return false;
    return true;
}

void sps_candidates(const GMap& g, Problem& p) {
    auto vidx = cell_index(g, 0);
    for (size_t f = 0; f < p.faces.size(); ++f) {
        FaceData fd = face_data(g, p.faces[f], vidx);
        for (int r = 0; r < 5; ++r) {
            if (classify_pent_rotation(g, p.faces[f], r).type == PentType::Mismatch) continue;
            std::vector<int> labels(5);
            static const int pat[5] = {kFilled, kUnlabeled, kFilled, kUnlabeled, kUnlabeled};
            for (int j = 0; j < 5; ++j) labels[(r + j) % 5] = pat[j];
            if (auto c = cand_from(p, fd.corner_vertex, labels)) p.cands[f].push_back(*c);
        }
        dedupe(p.cands[f]);
    }
}

struct Oriented {
    std::vector<std::vector<Dart>> corners;  // per face, corner vertices along the orientation
    int degenerate_face = -1;
};

Oriented oriented_corners(const GMap& g, const Problem& p, const std::vector<int>& color, bool flip) {
    Oriented o;
    auto vidx = cell_index(g, 0);
    for (size_t f = 0; f < p.faces.size(); ++f) {
        Dart m = p.faces[f];
        Dart s = (color[m] ^ (flip ? 1 : 0)) == 0 ? m : g.alpha(1, m);
        auto w = face_walk(g, s);
        std::vector<Dart> cv;
        std::set<Dart> in(w.begin(), w.end());
        bool glued = false;
        for (size_t j = 0; j < w.size(); j += 2) {
            cv.push_back(vidx[w[j]]);
            glued |= in.count(g.alpha(2, w[j])) > 0;
        }
        std::set<Dart> distinct(cv.begin(), cv.end());
        if ((glued || distinct.size() != cv.size()) && o.degenerate_face < 0) o.degenerate_face = static_cast<int>(f);
        o.corners.push_back(cv);
    }
    return o;
}

// hollow_set: when given, the hollow corner of every candidate must be in it
// and the other corners must not.
void ps_candidates(const GMap& g, Problem& p, const Oriented& o, const std::set<Dart>* hollow_set) {
    static const int pat[5] = {kFilled, kUnlabeled, kHollow, kUnlabeled, kUnlabeled};
    for (size_t f = 0; f < p.faces.size(); ++f) {
        p.cands[f].clear();
        const auto& cv = o.corners[f];
        if (cv.size() != 5) continue;
        for (int r = 0; r < 5; ++r) {
            std::vector<int> labels(5);
            bool ok = true;
            for (int j = 0; j < 5; ++j) {
                int i = (r + j) % 5;
                labels[i] = pat[j];
                if (pat[j] == kUnlabeled && vertex_degree(g, cv[i]) != 3) ok = false;
                if (hollow_set && (hollow_set->count(cv[i]) > 0) != (pat[j] == kHollow)) ok = false;
            }
            if (!ok) continue;
            if (auto c = cand_from(p, cv, labels)) p.cands[f].push_back(*c);
        }
        dedupe(p.cands[f]);
    }
}

std::vector<char> edges_touching(const GMap& g, const std::function<bool(Dart)>& vertex_pred,
                                 bool both_ends) {
    auto vidx = cell_index(g, 0);
    std::vector<char> dead(g.size(), 0);
    for (const Cell& e : cells(g, 1)) {
        bool a = vertex_pred(vidx[e.id]), b = vertex_pred(vidx[g.alpha(0, e.id)]);
        if (both_ends ? (a && b) : (a || b))
            for (Dart d : e.darts) dead[d] = 1;
    }
    return dead;
}

RecognitionResult fail(std::string error, std::string detail, Dart face = -1) {
    RecognitionResult r;
    r.error = std::move(error);
    r.detail = std::move(detail);
    r.failing_face = face;
    return r;
}

Dart first_empty_face(const Problem& p) {
    for (size_t f = 0; f < p.faces.size(); ++f)
        if (p.cands[f].empty()) return p.faces[f];
    return -1;
}

// Try the stored solutions in lexicographic order; the first whose base
// passes the forward check is returned.
RecognitionResult finish_search(const Problem& p, const SearchOut& s,
                                const std::function<std::optional<GMap>(const VertexLabeling&)>& base_of,
                                const std::function<bool(const GMap&)>& forward_ok) {
    if (s.count == 0) return fail("NoLabeling", "exhausted search: no consistent labeling");
    for (const auto& lab : s.smallest) {
        VertexLabeling vl = to_labeling(p, lab);
        auto base = base_of(vl);
        if (!base) continue;
        RecognitionResult r;
        r.ok = true;
        r.base = *base;
        r.labeling = vl;
        r.solution_count = s.count;
        r.count_capped = s.capped;
        r.verified = forward_ok(*base);
        if (!r.verified) continue;
        return r;
    }
    return fail("NoLabeling", "labelings exist but none reconstructs a base");
}

bool isomorphic(const GMap& a, const GMap& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

RecognitionResult recognize_sps(const GMap& g) {
    if (!all_faces_of_size(g, 5)) return fail("NotPentTiling", "every face must be a pentagon");
    Problem p = make_problem(g);
    sps_candidates(g, p);
    if (Dart f = first_empty_face(p); f >= 0) return fail("NoLabeling", "no edge of this face can be dotted", f);
    SearchOut s = search(p);
    auto base_of = [&](const VertexLabeling& vl) {
        auto unl = [&](Dart v) { return !vl.count(v); };
        return reconstruct(g, edges_touching(g, unl, true), unl);
    };
    auto forward = [&](const GMap& base) {
        if (!all_faces_of_size(base, 4)) return false;
        auto res = check_subdivisible(base);
        auto* a = std::get_if<SubdivisionAssignment>(&res);
        if (!a) return false;
        return isomorphic(simple_pentagonal_subdivision(base, *a).map, g) ||
               isomorphic(simple_pentagonal_subdivision(base, dual_assignment(*a)).map, g);
    };
    RecognitionResult r = finish_search(p, s, base_of, forward);
    if (r.ok) {
        auto vidx = cell_index(g, 0);
        for (const Cell& e : cells(g, 1))
            if (!r.labeling.count(vidx[e.id]) && !r.labeling.count(vidx[g.alpha(0, e.id)])) r.pairing.push_back(e.id);
    }
    return r;
}

namespace {

std::function<bool(const GMap&)> ps_forward(const GMap& g) {
    return [&g](const GMap& base) {
        Orientation o = orientation(base);
        if (!o.orientable) return false;
        return isomorphic(pentagonal_subdivision(base, o.color).map, g);
    };
}

std::function<std::optional<GMap>(const VertexLabeling&)> hollow_merge(const GMap& g) {
    return [&g](const VertexLabeling& vl) {
        auto hollow = [&](Dart v) {
            auto it = vl.find(v);
            return it != vl.end() && it->second == Mark::Hollow;
        };
        auto unl = [&](Dart v) { return !vl.count(v); };
        return reconstruct(g, edges_touching(g, hollow, false), unl);
    };
}

void collect_hollow(RecognitionResult& r) {
    for (auto& [v, m] : r.labeling)
        if (m == Mark::Hollow) r.pairing.push_back(v);
}

}  // namespace

RecognitionResult recognize_ps(const GMap& g) {
    if (!all_faces_of_size(g, 5)) return fail("NotPentTiling", "every face must be a pentagon");
    Orientation ori = orientation(g);
    if (!ori.orientable) return fail("NotOrientable", "pentagonal subdivision recognition needs an orientable surface");
    Problem p = make_problem(g);
    Oriented o = oriented_corners(g, p, ori.color, false);
    if (o.degenerate_face >= 0)
        return fail("DegenerateTile", "all tiles must be non-degenerate", p.faces[o.degenerate_face]);
    ps_candidates(g, p, o, nullptr);
    if (Dart f = first_empty_face(p); f >= 0) return fail("NoLabeling", "no rotation of this face fits the pattern", f);
    SearchOut s = search(p);
    RecognitionResult r = finish_search(p, s, hollow_merge(g), ps_forward(g));
    if (r.ok) collect_hollow(r);
    return r;
}

RecognitionResult recognize_one_circ(const GMap& g) {
    if (!all_faces_of_size(g, 5)) return fail("NotPentTiling", "every face must be a pentagon");
    Problem p = make_problem(g);
    auto vidx = cell_index(g, 0);
    for (size_t f = 0; f < p.faces.size(); ++f) {
        FaceData fd = face_data(g, p.faces[f], vidx);
        std::set<Dart> distinct(fd.corner_vertex.begin(), fd.corner_vertex.end());
        bool glued = std::any_of(fd.glue.begin(), fd.glue.end(), [](auto x) { return x.first >= 0; });
        if (glued || distinct.size() != 5) return fail("DegenerateTile", "all tiles must be non-degenerate", p.faces[f]);
        int forced = 0;
        for (Dart v : fd.corner_vertex) forced += vertex_degree(g, v) != 3;
        if (forced >= 2) return fail("NoLabeling", "face has two vertices of degree other than 3", p.faces[f]);
        for (int i = 0; i < 5; ++i) {
            bool ok = true;
            std::vector<int> labels(5, kUnlabeled);
            labels[i] = kHollow;
            for (int j = 0; j < 5; ++j)
                if (j != i && vertex_degree(g, fd.corner_vertex[j]) != 3) ok = false;
            if (!ok) continue;
            if (auto c = cand_from(p, fd.corner_vertex, labels)) p.cands[f].push_back(*c);
        }
        dedupe(p.cands[f]);
    }
    if (Dart f = first_empty_face(p); f >= 0) return fail("NoLabeling", "no vertex of this face can be the hollow one", f);
    SearchOut s = search(p);
    if (s.count == 0) return fail("NoLabeling", "propagation conflict: no one-hollow labeling");

    Orientation ori = orientation(g);
    for (const auto& lab : s.smallest) {
        std::set<Dart> hollow;
        for (size_t i = 0; i < lab.size(); ++i)
            if (lab[i] == kHollow) hollow.insert(p.vertices[i]);
        if (!ori.orientable) continue;
        for (bool flip : {false, true}) {
            Problem q = make_problem(g);
            Oriented o = oriented_corners(g, q, ori.color, flip);
            ps_candidates(g, q, o, &hollow);
            if (first_empty_face(q) >= 0) continue;
            SearchOut t = search(q);
            RecognitionResult r = finish_search(q, t, hollow_merge(g), ps_forward(g));
            if (!r.ok) continue;
            r.solution_count = s.count;
            r.count_capped = s.capped;
            r.orientable = true;
            collect_hollow(r);
            return r;
        }
    }
    if (!ori.orientable)
        return fail("NoLabeling", "one-hollow labeling exists on a non-orientable surface; no pentagonal subdivision");
    return fail("NoLabeling", "one-hollow labeling does not extend to a filled/hollow pattern");
}

RecognitionResult recognize_qs(const GMap& g) {
    if (!all_faces_of_size(g, 4)) return fail("NotQuadTiling", "every face must be a quadrilateral");
    Problem p = make_problem(g);
    auto vidx = cell_index(g, 0);
    static const int pat[4] = {kFilled, kUnlabeled, kHollow, kUnlabeled};
    for (size_t f = 0; f < p.faces.size(); ++f) {
        FaceData fd = face_data(g, p.faces[f], vidx);
        TileClass tc = classify_quad_tile(g, p.faces[f]);
        const auto& cv = fd.corner_vertex;
        for (int r = 0; r < 4; ++r) {
            Dart u1 = cv[(r + 1) % 4], u2 = cv[(r + 3) % 4];
            if (vertex_degree(g, u1) != 4 || vertex_degree(g, u2) != 4) continue;
            bool shape = tc.tag == TileTag::Q || (is_q_prime(tc) && u1 == u2);
            if (!shape) continue;
            std::vector<int> labels(4);
            for (int j = 0; j < 4; ++j) labels[(r + j) % 4] = pat[j];
            if (auto c = cand_from(p, cv, labels)) p.cands[f].push_back(*c);
        }
        dedupe(p.cands[f]);
    }
    if (Dart f = first_empty_face(p); f >= 0) return fail("NoLabeling", "face is neither Q nor Q' under any labeling", f);
    SearchOut s = search(p);
    auto forward = [&](const GMap& base) { return isomorphic(quadrilateral_subdivision(base).map, g); };
    RecognitionResult r = finish_search(p, s, hollow_merge(g), forward);
    if (r.ok) collect_hollow(r);
    return r;
}

long long brute_force_labelings(const GMap& g, const std::string& mode) {
    auto vs = cells(g, 0);
    if (vs.size() > 14) throw std::invalid_argument("too many vertices for the labeling oracle");
    auto fs = cells(g, 2);
    auto vidx = cell_index(g, 0);
    Orientation ori = orientation(g);
    long long total = 1, count = 0;
    for (size_t i = 0; i < vs.size(); ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        VertexLabeling vl;
        long long x = code;
        std::map<Dart, int> lab;
        for (const Cell& v : vs) {
            int l = static_cast<int>(x % 3);
            x /= 3;
            lab[v.id] = l;
            if (l == kFilled) vl[v.id] = Mark::Filled;
            if (l == kHollow) vl[v.id] = Mark::Hollow;
        }
        bool ok = true;
        for (const Cell& f : fs) {
            if (mode == "sps") {
                ok = classify_pent_tile(g, f.id, vl).type != PentType::Mismatch;
            } else if (mode == "ps") {
                if (!ori.orientable) return 0;
                Dart s = ori.color[f.id] == 0 ? f.id : g.alpha(1, f.id);
                auto w = face_walk(g, s);
                static const int pat[5] = {kFilled, kUnlabeled, kHollow, kUnlabeled, kUnlabeled};
                bool any = false;
                for (int r = 0; r < 5 && !any; ++r) {
                    bool m = w.size() == 10;
                    for (int j = 0; j < 5 && m; ++j) {
                        Dart v = vidx[w[2 * ((r + j) % 5)]];
                        m = lab[v] == pat[j] && (pat[j] != kUnlabeled || vertex_degree(g, v) == 3);
                    }
                    any = m;
                }
                ok = any;
            } else if (mode == "qs") {
                auto w = face_walk(g, f.id);
                TileClass tc = classify_quad_tile(g, f.id);
                static const int pat[4] = {kFilled, kUnlabeled, kHollow, kUnlabeled};
                bool any = false;
                for (int r = 0; r < 4 && !any; ++r) {
                    bool m = true;
                    for (int j = 0; j < 4 && m; ++j) {
                        Dart v = vidx[w[2 * ((r + j) % 4)]];
                        m = lab[v] == pat[j] && (pat[j] != kUnlabeled || vertex_degree(g, v) == 4);
                    }
                    Dart u1 = vidx[w[2 * ((r + 1) % 4)]], u2 = vidx[w[2 * ((r + 3) % 4)]];
                    any = m && (tc.tag == TileTag::Q || (is_q_prime(tc) && u1 == u2));
                }
                ok = any;
            } else {
                throw std::invalid_argument("unknown mode " + mode);
            }
            if (!ok) break;
        }
        count += ok;
    }
    return count;
}

}  // namespace tilesub
