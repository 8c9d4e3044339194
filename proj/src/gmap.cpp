#include "tilesub/gmap.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tilesub {

namespace {

std::string err_text(const char* what, int i, Dart d) {
    std::ostringstream os;
    os << what << " (alpha" << i << ", dart " << d << ")";
    return os.str();
}

std::vector<std::vector<Dart>> components(const GMap& g) {
    std::vector<int> seen(g.size(), 0);
    std::vector<std::vector<Dart>> out;
    for (Dart d = 0; d < g.size(); ++d) {
        if (seen[d]) continue;
        out.push_back(orbit(g, d, 7));
        for (Dart x : out.back()) seen[x] = 1;
    }
    return out;
}

GMap submap(const GMap& g, const std::vector<Dart>& darts) {
    std::map<Dart, Dart> idx;
    for (size_t k = 0; k < darts.size(); ++k) idx[darts[k]] = static_cast<Dart>(k);
    std::array<std::vector<Dart>, 3> a;
    for (int i = 0; i < 3; ++i) {
        a[i].resize(darts.size());
        for (size_t k = 0; k < darts.size(); ++k) a[i][k] = idx.at(g.alpha(i, darts[k]));
    }
    return GMap::build(a[0], a[1], a[2]);
}

}  // namespace

GMap GMap::build(std::vector<Dart> a0, std::vector<Dart> a1, std::vector<Dart> a2) {
    const size_t n = a0.size();
    if (a1.size() != n || a2.size() != n)
        throw GMapError(GMapError::Kind::BadLength, -1, -1, "alpha sequences differ in length");
    GMap g;
    g.a_ = {std::move(a0), std::move(a1), std::move(a2)};
    const Dart dn = static_cast<Dart>(n);
    for (int i = 0; i < 3; ++i)
        for (Dart d = 0; d < dn; ++d)
            if (g.a_[i][d] < 0 || g.a_[i][d] >= dn)
                throw GMapError(GMapError::Kind::OutOfRange, i, d, err_text("entry out of range", i, d));
    for (int i = 0; i < 3; ++i)
        for (Dart d = 0; d < dn; ++d) {
            if (g.a_[i][d] == d) throw GMapError(GMapError::Kind::FixedPoint, i, d, err_text("fixed point", i, d));
            if (g.a_[i][g.a_[i][d]] != d)
                throw GMapError(GMapError::Kind::NotInvolution, i, d, err_text("not an involution", i, d));
        }
    for (Dart d = 0; d < dn; ++d) {
        Dart x = g.a_[0][g.a_[2][d]];
        if (x == d || g.a_[2][g.a_[0][d]] != x)
            throw GMapError(GMapError::Kind::Alpha02NotFree, 2, d,
                            "alpha0 alpha2 is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    return g;
}

unsigned cell_mask(int dimension) {
    switch (dimension) {
        case 0: return 6;  // alpha1, alpha2
        case 1: return 5;  // alpha0, alpha2
        default: return 3; // alpha0, alpha1
    }
}

std::vector<Dart> orbit(const GMap& g, Dart d, unsigned mask) {
    std::vector<Dart> out{d};
    std::vector<char> seen(g.size(), 0);
    seen[d] = 1;
    for (size_t k = 0; k < out.size(); ++k)
        for (int i = 0; i < 3; ++i) {
            if (!(mask & (1u << i))) continue;
            Dart y = g.alpha(i, out[k]);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Dart> cell_index(const GMap& g, int dimension) {
    std::vector<Dart> idx(g.size(), -1);
    const unsigned mask = cell_mask(dimension);
    for (Dart d = 0; d < g.size(); ++d) {
        if (idx[d] >= 0) continue;
        for (Dart x : orbit(g, d, mask)) idx[x] = d;
    }
    return idx;
}

std::vector<Cell> cells(const GMap& g, int dimension) {
    std::vector<Cell> out;
    std::vector<char> seen(g.size(), 0);
    const unsigned mask = cell_mask(dimension);
    for (Dart d = 0; d < g.size(); ++d) {
        if (seen[d]) continue;
        Cell c{dimension, d, orbit(g, d, mask)};
        for (Dart x : c.darts) seen[x] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

int cell_count(const GMap& g, int dimension) {
    auto idx = cell_index(g, dimension);
    int n = 0;
    for (Dart d = 0; d < g.size(); ++d) n += idx[d] == d;
    return n;
}

int euler_characteristic(const GMap& g) {
    return cell_count(g, 0) - cell_count(g, 1) + cell_count(g, 2);
}

bool is_connected(const GMap& g) {
    if (g.empty()) return true;
    return static_cast<int>(orbit(g, 0, 7).size()) == g.size();
}

Orientation orientation(const GMap& g) {
    Orientation o;
    std::vector<int> col(g.size(), -1);
    std::vector<Dart> stack;
    for (Dart s = 0; s < g.size(); ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Dart x = stack.back();
            stack.pop_back();
            for (int i = 0; i < 3; ++i) {
                Dart y = g.alpha(i, x);
                if (col[y] < 0) {
                    col[y] = 1 - col[x];
                    stack.push_back(y);
                } else if (col[y] == col[x]) {
                    return o;
                }
            }
        }
    }
    o.orientable = true;
    o.color = std::move(col);
    return o;
}

bool is_orientable(const GMap& g) { return orientation(g).orientable; }

std::string SurfaceSignature::word() const {
    if (orientable && k == 0) return "S2";
    return std::string(orientable ? "T2^" : "P2^") + std::to_string(k);
}

SurfaceSignature classify_surface(const GMap& g) {
    if (g.empty() || !is_connected(g))
        throw GMapError(GMapError::Kind::Disconnected, -1, -1, "surface classification needs a connected map");
    SurfaceSignature s;
    s.orientable = is_orientable(g);
    s.euler = euler_characteristic(g);
    s.k = s.orientable ? (2 - s.euler) / 2 : 2 - s.euler;
    return s;
}

std::optional<SurfaceSignature> parse_surface_word(const std::string& w) {
    if (w == "S2") return SurfaceSignature{true, 2, 0};
    auto make = [](char kind, int k) -> std::optional<SurfaceSignature> {
        if (k < 1) return std::nullopt;
        if (kind == 'T') return SurfaceSignature{true, 2 - 2 * k, k};
        return SurfaceSignature{false, 2 - k, k};
    };
    for (char kind : {'T', 'P'}) {
        std::string base = std::string(1, kind) + "2";
        if (w == base) return make(kind, 1);
        if (w.rfind(base + "^", 0) == 0) {
            try {
                size_t used = 0;
                int k = std::stoi(w.substr(3), &used);
                if (used == w.size() - 3) return make(kind, k);
            } catch (const std::exception&) {
            }
            return std::nullopt;
        }
        if (w.size() > 2 && w.substr(w.size() - 2) == base) {
            try {
                size_t used = 0;
                int k = std::stoi(w.substr(0, w.size() - 2), &used);
                if (used == w.size() - 2) return make(kind, k);
            } catch (const std::exception&) {
            }
        }
    }
    return std::nullopt;
}

GMap relabel(const GMap& g, const std::vector<Dart>& perm) {
    std::array<std::vector<Dart>, 3> a;
    for (int i = 0; i < 3; ++i) {
        a[i].resize(g.size());
        for (Dart d = 0; d < g.size(); ++d) a[i][perm[d]] = perm[g.alpha(i, d)];
    }
    return GMap::build(a[0], a[1], a[2]);
}

GMap canonical_form(const GMap& g, std::vector<Dart>* perm) {
    const int n = g.size();
    if (n == 0) {
        if (perm) perm->clear();
        return g;
    }
    if (!is_connected(g))
        throw GMapError(GMapError::Kind::Disconnected, -1, -1, "canonical form needs a connected map");

    std::vector<Dart> lab(n), order, best_lab;
    std::array<std::vector<Dart>, 3> best, cur;
    for (auto& v : best) v.assign(n, 0);
    for (auto& v : cur) v.assign(n, 0);
    bool have = false;

    for (Dart r = 0; r < n; ++r) {
        std::fill(lab.begin(), lab.end(), -1);
        order.clear();
        lab[r] = 0;
        order.push_back(r);
        // cmp: -1 better so far, 0 tied, +1 worse (abort)
        int cmp = have ? 0 : -1;
        for (size_t k = 0; k < order.size() && cmp <= 0; ++k) {
            Dart x = order[k];
            for (int i = 0; i < 3; ++i) {
                Dart y = g.alpha(i, x);
                if (lab[y] < 0) {
                    lab[y] = static_cast<Dart>(order.size());
                    order.push_back(y);
                }
            }
            cur[0][k] = lab[g.alpha(0, x)];
            if (cmp == 0) {
                if (cur[0][k] < best[0][k]) cmp = -1;
                else if (cur[0][k] > best[0][k]) cmp = 1;
            }
        }
        if (cmp > 0) continue;
        for (int i = 1; i < 3; ++i)
            for (int k = 0; k < n; ++k) cur[i][k] = lab[g.alpha(i, order[k])];
        if (cmp == 0) {
            if (std::tie(cur[1], cur[2]) >= std::tie(best[1], best[2])) continue;
        }
        best = cur;
        best_lab = lab;
        have = true;
    }
    if (perm) *perm = best_lab;
    return GMap::build(best[0], best[1], best[2]);
}

std::optional<std::vector<Dart>> are_isomorphic(const GMap& a, const GMap& b) {
    const int n = a.size();
    if (n != b.size()) return std::nullopt;
    if (n == 0) return std::vector<Dart>{};
    if (is_connected(a)) {
        if (!is_connected(b)) return std::nullopt;
        std::vector<Dart> phi(n), inv(n);
        for (Dart t = 0; t < n; ++t) {
            std::fill(phi.begin(), phi.end(), -1);
            std::fill(inv.begin(), inv.end(), -1);
            phi[0] = t;
            inv[t] = 0;
            std::vector<Dart> stack{0};
            bool ok = true;
            while (ok && !stack.empty()) {
                Dart x = stack.back();
                stack.pop_back();
                for (int i = 0; i < 3 && ok; ++i) {
                    Dart y = a.alpha(i, x), z = b.alpha(i, phi[x]);
                    if (phi[y] < 0) {
                        if (inv[z] >= 0) {
                            ok = false;
                            break;
                        }
                        phi[y] = z;
                        inv[z] = y;
                        stack.push_back(y);
                    } else if (phi[y] != z) {
                        ok = false;
                    }
                }
            }
            if (ok) return phi;
        }
        return std::nullopt;
    }
    // Disconnected: match components by canonical form.
    auto ca = components(a), cb = components(b);
    if (ca.size() != cb.size()) return std::nullopt;
    std::vector<std::pair<GMap, std::vector<Dart>>> fb;
    for (auto& c : cb) {
        std::vector<Dart> p;
        GMap cf = canonical_form(submap(b, c), &p);
        fb.emplace_back(cf, p);
    }
    std::vector<char> used(cb.size(), 0);
    std::vector<Dart> phi(n, -1);
    for (auto& c : ca) {
        std::vector<Dart> p;
        GMap cf = canonical_form(submap(a, c), &p);
        bool found = false;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (used[j] || !(fb[j].first == cf)) continue;
            used[j] = 1;
            found = true;
            // a-local k -> canonical p[k] -> b-local q with fb perm[q] = p[k]
            std::vector<Dart> back(cb[j].size());
            for (size_t q = 0; q < cb[j].size(); ++q) back[fb[j].second[q]] = static_cast<Dart>(q);
            for (size_t k = 0; k < c.size(); ++k) phi[c[k]] = cb[j][back[p[k]]];
            break;
        }
        if (!found) return std::nullopt;
    }
    return phi;
}

std::vector<Dart> face_walk(const GMap& g, Dart d) {
    std::vector<Dart> w{d};
    Dart x = d;
    int i = 0;
    while (true) {
        x = g.alpha(i, x);
        i ^= 1;
        if (x == d) break;
        w.push_back(x);
    }
    return w;
}

std::vector<Dart> vertex_cycle(const GMap& g, Dart d) {
    std::vector<Dart> w{d};
    Dart x = d;
    int i = 1;
    while (true) {
        x = g.alpha(i, x);
        i = 3 - i;
        if (x == d) break;
        w.push_back(x);
    }
    return w;
}

int vertex_degree(const GMap& g, Dart d) { return static_cast<int>(vertex_cycle(g, d).size()) / 2; }

int PolygonBuilder::add_face(int sides) {
    int off = offset_.empty() ? 0 : offset_.back() + 2 * sizes_.back();
    sizes_.push_back(sides);
    offset_.push_back(off);
    a2_.resize(off + 2 * sides, -1);
    return static_cast<int>(sizes_.size()) - 1;
}

bool PolygonBuilder::glued(int f, int s) const { return a2_[dart(f, s, 0)] >= 0; }

void PolygonBuilder::glue(int f, int s, int g, int t, bool rev) {
    for (int e = 0; e < 2; ++e) {
        Dart x = dart(f, s, e), y = dart(g, t, e ^ (rev ? 1 : 0));
        if (a2_[x] >= 0 || a2_[y] >= 0) throw std::logic_error("side glued twice");
        a2_[x] = y;
        a2_[y] = x;
    }
}

GMap PolygonBuilder::build() const {
    const int n = static_cast<int>(a2_.size());
    std::vector<Dart> a0(n), a1(n);
    for (int f = 0; f < face_count(); ++f) {
        int k = sizes_[f];
        for (int s = 0; s < k; ++s) {
            Dart d = dart(f, s, 0);
            a0[d] = d + 1;
            a0[d + 1] = d;
            Dart nx = dart(f, (s + 1) % k, 0);
            a1[d + 1] = nx;
            a1[nx] = d + 1;
        }
    }
    for (int d = 0; d < n; ++d)
        if (a2_[d] < 0) throw std::logic_error("unglued side at dart " + std::to_string(d));
    return GMap::build(a0, a1, a2_);
}

GMap dual_map(const GMap& g) { return GMap::build(g.alpha(2), g.alpha(1), g.alpha(0)); }

GMap build_from_faces(const std::vector<std::vector<std::string>>& faces,
                      const std::vector<std::vector<std::string>>& edge_names) {
    PolygonBuilder b;
    struct Side { int f, s; std::string start; };
    std::map<std::string, std::vector<Side>> by_edge;
    for (size_t f = 0; f < faces.size(); ++f) {
        int k = static_cast<int>(faces[f].size());
        b.add_face(k);
        for (int s = 0; s < k; ++s) {
            const std::string& u = faces[f][s];
            const std::string& w = faces[f][(s + 1) % k];
            std::string name;
            if (!edge_names.empty() && !edge_names[f].empty() && !edge_names[f][s].empty())
                name = edge_names[f][s];
            else
                name = std::min(u, w) + "|" + std::max(u, w);
            by_edge[name].push_back({static_cast<int>(f), s, u});
        }
    }
    for (auto& [name, v] : by_edge) {
        if (v.size() != 2) throw std::logic_error("edge " + name + " does not have two sides");
        b.glue(v[0].f, v[0].s, v[1].f, v[1].s, v[0].start != v[1].start);
    }
    return b.build();
}

}  // namespace tilesub
