#pragma once

// Exact tracing of geodesics on N: rational slope, rational start point,
// detection of periodicity / drift-periodicity / singular hits, and the
// order-six symmetry witness for periodic trajectories.

#include "necker/surface.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace necker {

enum class ParityClass { O, E1, E2 };

// primitive integer direction (a,b), slope b/a
struct Direction {
  std::int64_t a = 1, b = 1;

  static Direction make(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw std::invalid_argument("Direction: zero vector");
    if (gcd64(a, b) != 1) throw std::invalid_argument("Direction: components not coprime");
    return Direction{a, b};
  }
  // slope p/q as a fraction (p over q) gives the vector (q, p)
  static Direction from_slope(std::int64_t p, std::int64_t q) { return make(q, p); }

  ParityClass parity() const {
    if (a % 2 == 0) return ParityClass::E1;
    if (b % 2 == 0) return ParityClass::E2;
    return ParityClass::O;
  }
  Vec2l vec() const { return Vec2l(a, b); }
};

struct GeodesicState {
  SquareId square;
  Vec2r point;  // (s,t) in [0,1]^2
  Vec2l dir;    // primitive, chart coordinates
};

inline Vec3r embed(const GeodesicState& st) {
  Vec3r x = to_rat(st.square.base);
  Vec3l ek = axis_vector(st.square.axis), el = axis_vector(st.square.axis_l());
  for (int i = 0; i < 3; ++i) x(i) += st.point(0) * Rat(ek(i)) + st.point(1) * Rat(el(i));
  return x;
}

inline Vec3l dir3(const GeodesicState& st) {
  return st.dir(0) * axis_vector(st.square.axis) + st.dir(1) * axis_vector(st.square.axis_l());
}

struct SingularHit {
  Vec3l vertex;   // the cone point reached
  Rat tau;        // line parameter spent inside the current square
  SquareId square;
  Vec2r corner;   // chart coordinates of the hit
};

struct Step {
  GeodesicState next;  // entering state, on the boundary of the entered square
  Rat tau;             // line parameter spent inside the departed square
  int exit_side;
  int entry_side;      // the edge's index on the entered square
  int rot;             // chart rotation applied to direction vectors
};

using StepResult = std::variant<Step, SingularHit>;

// advance to the next edge crossing; the state's point may lie on the chart
// boundary as long as dir points weakly inward along the exit computation
StepResult step(const GeodesicState& state);

enum class TraceKind { Periodic, DriftPeriodic, Singular, Truncated };

struct CrossingRecord {
  GeodesicState state;
  Rat tau;             // cumulative line parameter at this state
  int entry_side = -1; // side of the square the state sits on (-1 for the start)
  int acc_rot = 0;     // chart rotation from the start chart to this chart
};

struct TraceOutcome {
  TraceKind kind = TraceKind::Truncated;
  std::int64_t crossings = 0;       // edge crossings in the period (or until stop)
  Rat length_sq;                    // squared euclidean length of the period
  Vec3l displacement = Vec3l::Zero();
  Vec2l deck_displacement = Vec2l::Zero();
  std::vector<CrossingRecord> path;  // path[0] is the start; then entering states
  std::int64_t period_begin = 0, period_end = 0;  // indices into path of the recurrence pair
  std::optional<SingularHit> hit;

  Direction direction() const {
    const Vec2l& d = path.front().state.dir;
    return Direction{d(0), d(1)};
  }
};

std::int64_t default_max_crossings(const Direction& d);
GeodesicState default_start(const Direction& d);

// Start point for classification sweeps. The line from (1/u, 1/v) in direction
// (a,b) meets a lattice point iff uv divides bv - au; with (u,v) = (61,67) and
// |a|,|b| <= 30 one has 0 < |67b - 61a| < 61*67, so no direction in the sweep
// window is singular from here.
GeodesicState sweep_start(const Direction& d);

TraceOutcome trace(const GeodesicState& start, std::int64_t max_crossings);

inline TraceKind classify_direction(const Direction& d) {
  return d.parity() == ParityClass::O ? TraceKind::Periodic : TraceKind::DriftPeriodic;
}

// the state on the trajectory at cumulative parameter tau (within the traced
// range); interior points interpolate along the containing segment
GeodesicState state_at_parameter(const TraceOutcome& out, const Rat& tau);

// Order-six isometry xi with xi(gamma(t)) = gamma(t + l/6), constructed from a
// periodic trace and verified exactly on every crossing state of one period.
// Throws std::logic_error if the construction fails (would indicate a tracing
// bug; the symmetry exists for every closed geodesic).
NeckerIsometry sixfold_witness(const TraceOutcome& periodic);

}  // namespace necker
