#pragma once

// Saddle connections and maximal cylinders in odd/odd directions: separatrix
// tracing from cone points, cylinder construction by exact transversal
// offsets of a closed seed geodesic, boundary chains through cone points,
// inner/outer labeling by the Jordan test in projection, the simplicity test,
// and the transversal sweep across a full deck period.

#include "necker/geodesic.hpp"
#include "necker/polygon.hpp"
#include "necker/veech.hpp"  // twist_matrix lives with the word algebra

#include <vector>

namespace necker {

struct SaddleConnection {
  Vec3l start, end;                  // cone points
  GeodesicState start_state;         // corner state, direction into the square
  Rat length_sq;
  std::vector<CrossingRecord> path;  // start state, then entering states, then the hit
  Rat total_tau;
};

// unimodular integer map sending the primitive (a,b) to (1,0)
Mat2z shear_normalize(const Direction& d);

// outgoing rays at a cone point parallel to the direction class of d: one per
// incident sector (3 at small cone points, 6 at large ones for odd/odd d)
std::vector<GeodesicState> enumerate_prongs(const Vec3l& cone_point, const Direction& d);

// trace a prong to the next cone point; throws std::runtime_error when the
// crossing cap is exceeded (misconfiguration: odd/odd directions are
// completely periodic)
SaddleConnection separatrix(const GeodesicState& prong, std::int64_t max_crossings = 0);

// the point halfway along a saddle connection (a square center in odd/odd
// directions)
GeodesicState midpoint_state(const SaddleConnection& sc);

// one boundary component of a cylinder: a closed chain of saddle connections
struct BoundaryChain {
  std::vector<SaddleConnection> saddles;
  std::vector<Vec3l> singularities;  // start vertices of the saddles, in order
  Polygon projected;                 // lattice-coordinate polygon of the projection
  std::vector<Vec3r> plane_points;   // projected bend points (plane 3-vectors)
};

struct Cylinder {
  Direction dir;
  Rat circumference_sq;
  Rat area;                 // width times circumference, exact
  TraceOutcome core;        // the seed closed geodesic
  BoundaryChain boundary_out, boundary_in;
  bool labeled = false;     // out/in labels valid (projection Jordan test succeeded)
  Rat offset_plus, offset_minus;  // critical transversal offsets of the seed
};

// maximal cylinder around a periodic seed trace
Cylinder maximal_cylinder(const TraceOutcome& seed);

// exact open-segment self-intersection test on the closed geodesic
bool is_simple(const TraceOutcome& seed);

// one transversal band of the direction sweep
struct SweepBand {
  Rat lo, hi;          // offsets along the transversal
  Rat area;            // intrinsic cylinder area
  Rat circumference_sq;
  int rotation;        // chart rotation of the launched direction vs the seed chart
};

// Decomposition accounting across one deck period of the transversal: the
// vertical geodesic through the generic start is an even-class geodesic of
// H-length exactly 2; the launched parallel family partitions it into
// cylinder bands. Returns the bands in order; their widths tile [0, 2].
std::vector<SweepBand> sweep_decomposition(const Direction& d);

}  // namespace necker
