#include <iostream>

#include "tilesub/cli.hpp"

int main(int argc, char** argv) { return tilesub::cli_main(argc, argv, std::cout, std::cerr); }
