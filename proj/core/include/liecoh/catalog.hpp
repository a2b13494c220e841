#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liecoh/complex_matrix.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/pair.hpp"

namespace liecoh {

struct CatalogEntry {
  std::string name;
  std::string params;  // human readable parameter ranges, empty if none
  std::string description;
};

/// All entries, sorted by name.
std::vector<CatalogEntry> catalog_list();

/// Builds a pair from "name", "name:p" or "name:p,q"; components joined by '+'
/// form the direct sum. Throws UnknownCatalogEntry for unknown names and
/// ParseError for malformed or out-of-range parameters.
HomogeneousPair catalog_build(const std::string& entry);

/// Algebra shorthand used by input files: type is su, so, sp, u or torus.
LieAlgebra catalog_algebra(const std::string& type, std::size_t n);

/// Matrix realization of the same algebra, in the same basis order.
MatrixRealization catalog_realization(const std::string& type, std::size_t n);

}  // namespace liecoh
