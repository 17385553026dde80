#pragma once

#include <cstddef>
#include <string>

namespace elliskit {

// Size guards. Defaults can be overridden with the ELLISKIT_CAPS environment
// variable, e.g. ELLISKIT_CAPS="max_group_order=4000,closure=100000".
struct Caps {
  std::size_t max_group_order = 2000;
  std::size_t enumeration_order = 360;
  std::size_t isomorphism_order = 2000;
  std::size_t closure = 50000;
  std::size_t product_points = 50000;
  std::size_t independence_k = 4;
  std::size_t lattice_sets = 1u << 16;
  std::size_t relation_points = 10;

  // Applies "key=value,key=value" overrides; throws Error(InvalidArgument)
  // on unknown keys or malformed values.
  void apply_overrides(std::string const& spec);
};

// Defaults with ELLISKIT_CAPS applied; read once per process.
Caps const& default_caps();

}  // namespace elliskit
