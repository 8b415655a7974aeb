#pragma once

// Combinatorial-geometric model of the Necker cube surface N: constituent
// squares addressed by a base lattice point on the level -1 slice plus an
// ordered axis pair, exact adjacency with C4 chart transitions, cone data,
// the isometry group, deck coordinates, and the isometric projection to the
// plane orthogonal to (1,1,1).

#include "necker/exact.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace necker {

inline std::int64_t level(const Vec3l& p) { return p(0) + p(1) + p(2); }

inline bool is_surface_vertex(const Vec3l& p) {
  std::int64_t l = level(p);
  return l >= -1 && l <= 1;
}

inline Vec3l axis_vector(int k) {
  Vec3l e = Vec3l::Zero();
  e(k % 3) = 1;
  return e;
}

// A constituent square. Chart coordinates (s,t) in [0,1]^2 map to
// base + s*e_k + t*e_l with l = k+1 (mod 3); this canonical ordering makes
// every chart positively oriented in the plane orthogonal to (1,1,1).
struct SquareId {
  Vec3l base;  // level -1
  int axis;    // k in {0,1,2}

  int axis_l() const { return (axis + 1) % 3; }
  int axis_m() const { return (axis + 2) % 3; }  // the unused coordinate

  friend bool operator==(const SquareId& a, const SquareId& b) {
    return a.axis == b.axis && a.base(0) == b.base(0) && a.base(1) == b.base(1) &&
           a.base(2) == b.base(2);
  }
  friend bool operator!=(const SquareId& a, const SquareId& b) { return !(a == b); }
  friend bool operator<(const SquareId& a, const SquareId& b) {
    for (int i = 0; i < 3; ++i)
      if (a.base(i) != b.base(i)) return a.base(i) < b.base(i);
    return a.axis < b.axis;
  }
};

inline bool square_well_formed(const SquareId& s) {
  return s.axis >= 0 && s.axis < 3 && level(s.base) == -1;
}

// the favorite square S0 = [-1,0] x {0} x [0,1]: base (-1,0,0), axes (2,0)
inline SquareId favorite_square() { return SquareId{Vec3l(-1, 0, 0), 2}; }

// vertices in cyclic order: levels -1, 0, 1, 0
inline std::array<Vec3l, 4> square_vertices(const SquareId& s) {
  Vec3l ek = axis_vector(s.axis), el = axis_vector(s.axis_l());
  return {s.base, Vec3l(s.base + ek), Vec3l(s.base + ek + el), Vec3l(s.base + el)};
}

// sides index edges in the cyclic vertex order: side i joins vertex i to i+1.
// In chart coordinates side 0 is t=0, side 1 is s=1, side 2 is t=1, side 3 is s=0.

struct Transition {
  SquareId square;  // the neighbor sharing the edge
  int side;         // the edge's index on the neighbor
  int rot;          // quarter turns (CCW) applied to chart vectors on crossing
};

Transition adjacent_square(const SquareId& s, int side);

// chart point map across an edge: where a boundary point of s lands in the
// neighbor's chart
Vec2r transition_point(int side, const Vec2r& p);
Vec2l transition_dir(int rot, const Vec2l& d);
Vec2r transition_dir(int rot, const Vec2r& d);

// total cone angle at a vertex, in units of pi/2 (3 at levels +-1, 6 at level 0);
// throws std::invalid_argument off the surface
int cone_angle(const Vec3l& p);

// orthogonal projection onto the plane orthogonal to (1,1,1)
inline Vec3r project(const Vec3r& x) {
  Rat s = (x(0) + x(1) + x(2)) / Rat(3);
  return Vec3r(x(0) - s, x(1) - s, x(2) - s);
}

// coordinates of a point of 1-perp in the fixed basis w1 = e0-e1, w2 = e1-e2
inline Vec2r lattice_coords(const Vec3r& p) { return Vec2r(p(0), -p(2)); }
inline Vec3r from_lattice_coords(const Vec2r& c) {
  return Vec3r(c(0), c(1) - c(0), -c(1));
}

// x -> P x + t with P in +-S3 and t in Lambda_0
struct NeckerIsometry {
  Mat3l P;
  Vec3l t;

  static NeckerIsometry identity() {
    return NeckerIsometry{Mat3l::Identity(), Vec3l::Zero()};
  }
  // translation by w in Lambda_0
  static NeckerIsometry translation(const Vec3l& w);
  // point reflection x -> 2c - x about a square center (2c integral, level 0)
  static NeckerIsometry point_reflection_doubled(const Vec3l& two_c);

  Vec3l apply(const Vec3l& x) const { return P * x + t; }
  Vec3r apply(const Vec3r& x) const;

  NeckerIsometry compose(const NeckerIsometry& inner) const {
    return NeckerIsometry{P * inner.P, Vec3l(P * inner.t + t)};
  }
  NeckerIsometry inverse() const;

  bool is_identity() const {
    return exact_eq<Mat3l>(P, Mat3l::Identity()) && t(0) == 0 && t(1) == 0 && t(2) == 0;
  }
  // order of the isometry; 0 when infinite
  int order(int cap = 12) const;

  // unique fixed point when P - I is invertible; rational
  std::optional<Vec3r> fixed_point() const;

  friend bool operator==(const NeckerIsometry& a, const NeckerIsometry& b) {
    return exact_eq<Mat3l>(a.P, b.P) && a.t(0) == b.t(0) && a.t(1) == b.t(1) && a.t(2) == b.t(2);
  }
};

bool isometry_well_formed(const NeckerIsometry& g);
// det of the permutation part; +1 iff the isometry preserves the orientation of N
int surface_orientation_sign(const NeckerIsometry& g);

SquareId apply_isometry(const NeckerIsometry& g, const SquareId& s);

// deck position: base = (-1,0,0) + m*w1 + n*w2, plus the face index k
inline std::pair<Vec2l, int> deck_coordinate(const SquareId& s) {
  Vec3l d = s.base - Vec3l(-1, 0, 0);
  return {Vec2l(d(0), -d(2)), s.axis};
}

inline SquareId square_at_deck(const Vec2l& mn, int face) {
  Vec3l base = Vec3l(-1, 0, 0) + mn(0) * Vec3l(1, -1, 0) + mn(1) * Vec3l(0, 1, -1);
  return SquareId{base, face};
}

// squares incident to a vertex, each with the chart corner (in {0,1}^2) that
// maps to the vertex
struct IncidentSquare {
  SquareId square;
  Vec2l corner;
};
std::vector<IncidentSquare> squares_at_vertex(const Vec3l& p);

// walking around a vertex: the side of the square adjacent to the given
// corner in ccw (resp. cw) rotational order around the vertex
int corner_side_ccw(const Vec2l& corner);
int corner_side_cw(const Vec2l& corner);

}  // namespace necker
