#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tilesub/gmap.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub {

class SubdivisionError : public std::runtime_error {
  public:
    enum class Kind { NotQuadTiling, Disconnected, AssignmentInvalid, TileNotNonDegenerate, NotOrientable, InvalidTiling, BadAlignment };
    SubdivisionError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

// canonical face id -> bit; 0 connects the midpoints of pair A (the pair
// holding the face's minimum-dart side), 1 those of pair B.
using SubdivisionAssignment = std::map<Dart, int>;

struct ParityWitness {
    // f0, e0, f1, e1, ..., f_k = f0
    std::vector<Dart> faces;
    std::vector<Dart> edges;
};

// Offset bit of the constraint b_f ^ b_f' = offset for an edge.
struct EdgeConstraint {
    Dart edge;
    Dart face_a, face_b;
    int offset;
};

std::vector<EdgeConstraint> parity_constraints(const GMap& g);
bool verify_witness(const GMap& g, const ParityWitness& w);
bool assignment_valid(const GMap& g, const SubdivisionAssignment& a);

using SubdivisionResult = std::variant<SubdivisionAssignment, ParityWitness>;
SubdivisionResult check_subdivisible(const GMap& g);
bool is_subdivisible(const GMap& g);

bool is_bipartite_skeleton(const GMap& g);

struct HomologyCycle {
    std::vector<Dart> edges;  // canonical edge ids
    int length_parity = 0;
    int w1 = 0;
    int lambda = 0;
};

struct HomologyCharacterReport {
    std::vector<HomologyCycle> basis;
    bool lambda_zero() const;
    bool w1_zero() const;
};

HomologyCharacterReport homology_character(const GMap& g);
// Orientation character cochain on canonical edge ids.
std::map<Dart, int> w1_cochain(const GMap& g);

enum class Provenance { Original, EdgeMidpoint, FaceCenter };
using ProvenanceLabels = std::map<Dart, Provenance>;

struct Subdivided {
    GMap map;  // canonical
    ProvenanceLabels provenance;
    VertexLabeling labeling;
};

Subdivided simple_pentagonal_subdivision(const GMap& g, const SubdivisionAssignment& a);
SubdivisionAssignment dual_assignment(const SubdivisionAssignment& a);
GMap refine3(const GMap& g);

struct Alignment {
    int offset = 0;  // 0..3
    bool flip = false;
    static std::vector<Alignment> all();
    int index() const { return offset + (flip ? 4 : 0); }
    static Alignment from_index(int k) { return {k % 4, k >= 4}; }
};

GMap connected_sum(const GMap& a, Dart fa, const GMap& b, Dart fb, Alignment al);
// First alignment whose result is subdivisible, if any.
std::optional<std::pair<Alignment, GMap>> connected_sum_subdivisible(const GMap& a, Dart fa, const GMap& b, Dart fb);

Subdivided quadrilateral_subdivision(const GMap& t);
Subdivided pentagonal_subdivision(const GMap& t, const std::vector<int>& orientation);

struct DoubleResult {
    std::optional<Subdivided> result;
    std::optional<ParityWitness> witness;
};
DoubleResult double_pentagonal_subdivision(const GMap& t);

// Surgery used for recognition: remove whole edges, then merge edges
// across degree-2 vertices. Input dart sets must be unions of edges /
// vertices. Result darts are compacted (in increasing old id) and map[old]
// gives the new dart or -1.
GMap delete_edges(const GMap& g, const std::vector<char>& dead, std::vector<Dart>* map = nullptr);
GMap smooth_vertices(const GMap& g, const std::vector<char>& at_w, std::vector<Dart>* map = nullptr);

// Labels carried through a relabeling: a vertex label keyed by any dart of
// the vertex is rekeyed by the new canonical vertex id.
template <class T>
std::map<Dart, T> rekey_vertices(const GMap& g, const std::map<Dart, T>& by_dart) {
    auto vidx = cell_index(g, 0);
    std::map<Dart, T> out;
    for (auto& [d, v] : by_dart) out[vidx[d]] = v;
    return out;
}

}  // namespace tilesub
