#pragma once
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilesub {

using Dart = int;

class GMapError : public std::runtime_error {
  public:
    enum class Kind { BadLength, OutOfRange, NotInvolution, FixedPoint, Alpha02NotFree, Disconnected };

    GMapError(Kind kind, int index, Dart dart, const std::string& msg)
        : std::runtime_error(msg), kind(kind), index(index), dart(dart) {}

    Kind kind;
    int index;
    Dart dart;
};

// A closed 2-dimensional generalized map. Immutable once built.
class GMap {
  public:
    GMap() = default;

    // Validates and throws GMapError on any broken invariant.
    static GMap build(std::vector<Dart> a0, std::vector<Dart> a1, std::vector<Dart> a2);

    int size() const { return static_cast<int>(a_[0].size()); }
    bool empty() const { return a_[0].empty(); }
    Dart alpha(int i, Dart d) const { return a_[i][d]; }
    const std::vector<Dart>& alpha(int i) const { return a_[i]; }

    bool operator==(const GMap& o) const { return a_ == o.a_; }
    bool operator<(const GMap& o) const { return a_ < o.a_; }

  private:
    std::array<std::vector<Dart>, 3> a_;
};

struct Cell {
    int dimension = 0;
    Dart id = 0;
    std::vector<Dart> darts;
};

// Orbit of d under the involutions selected by mask (bit i = alpha_i), sorted.
std::vector<Dart> orbit(const GMap& g, Dart d, unsigned mask);
unsigned cell_mask(int dimension);

std::vector<Cell> cells(const GMap& g, int dimension);
// dart -> canonical cell id (minimum dart of its orbit)
std::vector<Dart> cell_index(const GMap& g, int dimension);
int cell_count(const GMap& g, int dimension);

int euler_characteristic(const GMap& g);
bool is_connected(const GMap& g);

struct Orientation {
    bool orientable = false;
    std::vector<int> color;  // filled only when orientable; color of dart 0 is 0
};

Orientation orientation(const GMap& g);
bool is_orientable(const GMap& g);

struct SurfaceSignature {
    bool orientable = false;
    int euler = 0;
    int k = 0;  // number of T2 or P2 summands; 0 for the sphere

    std::string word() const;
    bool operator==(const SurfaceSignature&) const = default;
};

SurfaceSignature classify_surface(const GMap& g);
// Parses "S2", "T2^k", "P2^k" (also "T2", "P2", "kT2", "kP2").
std::optional<SurfaceSignature> parse_surface_word(const std::string& w);

// Relabel: new dart perm[d] takes the role of old dart d.
GMap relabel(const GMap& g, const std::vector<Dart>& perm);
// Poincare dual: vertices and faces swap roles.
GMap dual_map(const GMap& g);

// phi with phi(alpha_i(d)) = alpha_i(phi(d)), mapping darts of a onto b.
std::optional<std::vector<Dart>> are_isomorphic(const GMap& a, const GMap& b);

// Canonical relabeling; perm (optional) receives old dart -> new dart.
GMap canonical_form(const GMap& g, std::vector<Dart>* perm = nullptr);

// Face walk from d, alpha0 step first: d, a0 d, a1 a0 d, ...
std::vector<Dart> face_walk(const GMap& g, Dart d);
// Vertex cycle from d, alpha1 step first: d, a1 d, a2 a1 d, ...
std::vector<Dart> vertex_cycle(const GMap& g, Dart d);
int vertex_degree(const GMap& g, Dart d);

// Faces given as polygons, glued side to side. Dart (f, s, e) is end e of
// side s of face f; side s runs from corner s to corner s+1.
class PolygonBuilder {
  public:
    int add_face(int sides);
    int face_count() const { return static_cast<int>(sizes_.size()); }
    int sides(int f) const { return sizes_[f]; }
    Dart dart(int f, int s, int e) const { return offset_[f] + 2 * s + e; }
    // (f,s,e) <-> (g,t,e^rev); rev=true is the usual orientable gluing.
    void glue(int f, int s, int g, int t, bool rev);
    bool glued(int f, int s) const;
    GMap build() const;

  private:
    std::vector<int> sizes_;
    std::vector<int> offset_;
    std::vector<Dart> a2_;
};

// Builds from vertex-name cycles; sides sharing an edge name are glued,
// polarity from the start vertex. Edge names default to the unordered
// vertex pair. Not suitable for loops.
GMap build_from_faces(const std::vector<std::vector<std::string>>& faces,
                      const std::vector<std::vector<std::string>>& edge_names = {});

}  // namespace tilesub
