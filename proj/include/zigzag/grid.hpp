#pragma once

#include "zigzag/mesh.hpp"
#include "zigzag/perm.hpp"

namespace zigzag {

/// Membership of pi in the monotone grid class of the matrix: the points of
/// pi can be separated by column and row lines so every cell is empty,
/// increasing, or decreasing as its sign demands.
bool grid_contains(const GridAtom& g, const Permutation& pi);

/// Membership in the geometric grid class: as above, with every nonzero
/// cell's points on the diagonal of matching slope. Geo(M) is a subset of
/// Grid(M).
bool geo_contains(const GridAtom& g, const Permutation& pi);

/// Dispatch on the atom's kind.
bool atom_contains(const GridAtom& g, const Permutation& pi);

}  // namespace zigzag
