#pragma once
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilesub/gmap.hpp"
#include "tilesub/subdivision.hpp"

namespace tilesub {

class EnumError : public std::runtime_error {
  public:
    enum class Kind { InvalidSpec, CapExceeded, TooLarge };
    EnumError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

struct EnumSpec {
    int gon = 4;
    int faces = 1;
    std::optional<std::string> surface;  // e.g. "S2", "T2^1", "P2^2"
    int min_degree = 3;
};

// Face cap: 8 unless TILESUB_CAP is set.
int enumeration_cap();

// All closed tilings by `faces` gon-gons with vertex degree >= min_degree,
// one canonical representative per isomorphism class, in sorted order.
std::vector<GMap> enumerate_tilings(const EnumSpec& spec, int jobs = 1);

// Streams every gluing that passes the filters, before isomorphism
// reduction and in search order. Stops when visit returns false.
void visit_tilings(const EnumSpec& spec, const std::function<bool(const GMap&)>& visit);

// Literal check of the midpoint rule over all 2^F face choices (F <= 20).
std::vector<SubdivisionAssignment> brute_force_subdivisible(const GMap& g);

struct CensusKey {
    std::string surface;
    std::vector<std::string> tiles;  // sorted class names, one per face
    auto operator<=>(const CensusKey&) const = default;
};

std::map<CensusKey, int> census(const std::vector<GMap>& maps);

}  // namespace tilesub
