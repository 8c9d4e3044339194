#pragma once
#include <stdexcept>
#include <string>

#include "tilesub/gmap.hpp"
#include "tilesub/subdivision.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub {

class JsonInputError : public std::runtime_error {
  public:
    JsonInputError(const std::string& msg, long long position = -1) : std::runtime_error(msg), position(position) {}
    long long position;  // byte offset for syntax errors
};

// Optional labels stored alongside a map, keyed by any dart of the cell.
struct Labels {
    VertexLabeling vertex_marks;
    ProvenanceLabels provenance;
    SubdivisionAssignment assignment;
    bool empty() const { return vertex_marks.empty() && provenance.empty() && assignment.empty(); }
};

struct MapWithLabels {
    GMap map;
    Labels labels;
};

// gmap2-v1 text: canonical form, sorted keys, no whitespace. Labels are
// rekeyed to the canonical cell ids.
std::string to_gmap_json(const GMap& g, const Labels& labels = {});
MapWithLabels from_gmap_json(const std::string& text);
MapWithLabels read_gmap_file(const std::string& path);

std::string provenance_name(Provenance p);

}  // namespace tilesub
