#pragma once
#include <stdexcept>
#include <string>
#include <vector>

#include "tilesub/gmap.hpp"

namespace tilesub {

class UnknownName : public std::invalid_argument {
  public:
    explicit UnknownName(const std::string& n) : std::invalid_argument("unknown catalogue entry: " + n) {}
};

struct Expected {
    std::string surface;
    // sorted quad tile class names ("Forbidden(shape)" for forbidden
    // tiles); empty for non-quadrilateral tilings
    std::vector<std::string> face_classes;
    bool subdivisible = false;
    std::string notes;
};

struct CatalogueEntry {
    std::string name;
    GMap map;  // canonical
    Expected expected;
};

std::vector<std::string> catalogue_list();
CatalogueEntry catalogue_get(const std::string& name);

}  // namespace tilesub
