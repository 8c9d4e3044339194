#pragma once
#include <optional>
#include <string>
#include <vector>

#include "tilesub/gmap.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub {

struct RecognitionResult {
    bool ok = false;
    // "", "NoLabeling", "NotPentTiling", "NotQuadTiling", "NotOrientable", "DegenerateTile"
    std::string error;
    std::string detail;
    Dart failing_face = -1;

    GMap base;  // canonical
    VertexLabeling labeling;
    long long solution_count = 0;
    bool count_capped = false;
    // forward construction on base reproduced the input
    bool verified = false;
    // set by recognize_one_circ
    bool orientable = false;
    // SPS: dotted edge ids of the input; PS/QS: hollow vertex ids
    std::vector<Dart> pairing;
};

RecognitionResult recognize_sps(const GMap& g);
RecognitionResult recognize_ps(const GMap& g);
RecognitionResult recognize_one_circ(const GMap& g);
RecognitionResult recognize_qs(const GMap& g);

// Exhaustive oracle: every assignment of {unlabeled, filled, hollow} to the
// vertices (3^V, V <= 14), checked against the per-face rules of the mode
// ("sps", "ps", "qs"). Returns the number of valid labelings.
long long brute_force_labelings(const GMap& g, const std::string& mode);

}  // namespace tilesub
