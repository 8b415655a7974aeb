#pragma once

// Tilings of the plane from simple closed geodesics: the p6 symmetry pair
// (order-six witness plus an order-two point symmetry about a boundary saddle
// midpoint), its translation subgroup, lattice translates of the projected
// cylinder-boundary disk, and exact verification that they cover a window
// with disjoint interiors.

#include "necker/cylinder.hpp"

#include <stdexcept>
#include <vector>

namespace necker {

struct NonSimpleDirection : std::runtime_error {
  explicit NonSimpleDirection(const std::string& what) : std::runtime_error(what) {}
};

struct SymmetryPair {
  NeckerIsometry A;  // order six, fixes the center of the tiled disk
  NeckerIsometry B;  // order two, fixes a square center on the boundary
  Vec3r center_a, center_b;  // the fixed points (distinct)
};

// A from the sixfold witness of the core, B from the midpoint of the first
// saddle connection of the given boundary; the p6 relations are verified
// exactly
SymmetryPair symmetry_pair(const Cylinder& cyl, const BoundaryChain& boundary);

// the two translations A^3 B and A^2 B A^-1 generating ker D
std::pair<NeckerIsometry, NeckerIsometry> translation_generators(const SymmetryPair& sp);

struct Tile {
  Polygon boundary;               // lattice coordinates, positively oriented
  std::vector<Vec3r> plane;       // projected bend points as plane 3-vectors
  Vec2l deck;                     // coefficients in the translation lattice
  bool outer = true;
};

struct Tiling {
  std::vector<Tile> tiles;
  Tile base;
  SymmetryPair sym;
  Vec2l t1, t2;                   // translation vectors in lattice coordinates
  Vec2r anchor;                   // projected fixed point of A, lattice coordinates
  bool outer = true;
  Rat window_radius;
};

// All lattice translates of the base tile meeting the open window (an
// l-infinity ball of the given radius in lattice coordinates). Throws
// NonSimpleDirection when the seed geodesic is not simple.
Tiling generate_tiling(const Direction& d, bool outer, const Rat& window_radius);

struct TilingReport {
  bool covered = false;
  bool overlap = true;
  Rat tile_area2, covolume2;       // twice the base area, twice the lattice covolume
  bool area_balance = false;
  Rat window_area2, covered_area2; // twice the areas, exact
};

TilingReport verify_tiling(const Tiling& tiling);

}  // namespace necker
