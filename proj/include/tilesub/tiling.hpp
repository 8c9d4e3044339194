#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilesub/gmap.hpp"

namespace tilesub {

enum class Mark { Filled, Hollow };
// canonical vertex id -> mark; unlisted vertices are unlabeled
using VertexLabeling = std::map<Dart, Mark>;

struct Violation {
    std::string kind;  // "vertex_degree" or "face_size"
    Dart cell;
    int value;
};

struct TilingReport {
    bool ok = true;
    int min_vertex_degree = 0;
    std::map<int, int> face_size_histogram;
    std::vector<Violation> violations;
};

TilingReport validate_tiling(const GMap& g, std::optional<int> required_gon = std::nullopt);

struct Corner {
    Dart vertex;
    Dart edge;     // edge of the side leaving this corner
    int side_bit;  // which of the edge's two sides (0 = side holding the edge's minimum dart)
};

struct BoundaryWalk {
    std::vector<Dart> darts;  // 2k darts of the walk
    std::vector<Corner> corners;
};

BoundaryWalk face_boundary_word(const GMap& g, Dart face);

enum class TileTag { Q, Q12, Q13, Q123, Q132, Q1234, Q1243, Q12_34, Q13_24, R, R1, R2, K, Forbidden };
enum class ForbiddenReason { None, AdjacentOpposing, OppositeEdgeIdentification, IncompatibleVertexIdentification, NotQuadrilateral };

struct TileClass {
    TileTag tag = TileTag::Q;
    ForbiddenReason reason = ForbiddenReason::None;
    // Identification shape ignoring fan directions (e.g. "Q13" for Q').
    std::string shape;
    // Corner fans alternate in direction as a subdivision requires.
    bool compatible = true;
};

std::string tag_name(TileTag t);
std::optional<TileTag> tag_from_name(const std::string& s);
std::string reason_name(ForbiddenReason r);
std::vector<TileTag> admissible_tags();

TileClass classify_quad_tile(const GMap& g, Dart face);
bool is_q_prime(const TileClass& c);

struct BoundaryCircle {
    int edges = 0;
    int passes = 0;  // passes through disks at identified vertices
    auto operator<=>(const BoundaryCircle&) const = default;
};

struct NbhdSignature {
    std::vector<BoundaryCircle> circles;  // sorted
    int euler = 0;
    bool orientable = true;
    bool operator==(const NbhdSignature&) const = default;
};

// Works for faces of any size.
NbhdSignature tile_neighborhood_signature(const GMap& g, Dart face);
// Reference rows for the admissible tags.
NbhdSignature table_signature(TileTag t);

struct MinSurface {
    std::string minimal;  // e.g. "S2", "P2^3"
    std::string rule;     // family of surfaces the tile can appear on
    bool composable = true;  // appears on minimal # S for every S
};

MinSurface min_surface(TileTag t);

enum class PentType { P1, P2, P3, Mismatch };

struct PentClass {
    PentType type = PentType::Mismatch;
    std::string reason;
    Dart dotted_edge = -1;
    std::vector<Dart> corners;  // vertices in the matched order c0..c4 (c0, c2 filled; c3 c4 dotted)
};

std::string pent_name(PentType t);
PentClass classify_pent_tile(const GMap& g, Dart face, const VertexLabeling& labeling);
// Shape and degree checks for the pattern placed with c0 at corner r of
// the face's walk; labels are implied by the pattern.
PentClass classify_pent_rotation(const GMap& g, Dart face, int r);

// Per-face geometry shared by classifiers and recognizers.
struct FaceData {
    std::vector<Dart> walk;           // alpha0-first walk from the minimum dart
    std::vector<Dart> corner_vertex;  // corner i = vertex of walk[2i]
    std::vector<Dart> corner_in;      // walk[2i-1]
    // glue[s] = (t, e): alpha2(walk[2s]) = walk[2t+e], or (-1,-1)
    std::vector<std::pair<int, int>> glue;
    std::vector<int> corner_dir;      // parity of walk[2i-1]'s position in its vertex cycle
};

FaceData face_data(const GMap& g, Dart face, const std::vector<Dart>& vidx);

}  // namespace tilesub
