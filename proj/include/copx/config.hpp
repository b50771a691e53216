#pragma once

#include <cstdint>
#include <string>

namespace copx {

// Enumeration guards. full_lattice_cap bounds n for 3^n enumerations,
// cube_cap for 2^n ones.
struct LatticeCaps {
  int full_lattice_cap = 14;
  int cube_cap = 20;
};

// Ambient dimension guard for vertex/facet enumeration.
struct HullCaps {
  int hull_dim_cap = 8;
};

struct Config {
  LatticeCaps lattice;
  HullCaps hull;
  int workers = 1;
  std::uint64_t seed = 0;
  std::string results_dir = "results";
};

}  // namespace copx
