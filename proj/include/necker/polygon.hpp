#pragma once

// Exact polygon predicates over rational plane coordinates: orientation,
// point location, segment intersection, half-plane clipping (signed-area
// exact for simple subjects), ear triangulation, and pairwise intersection
// area. Everything is over Q; no tolerances anywhere.

#include "necker/exact.hpp"

#include <array>
#include <vector>

namespace necker {

struct Polygon {
  std::vector<Vec2r> pts;  // closed; the edge pts.back() -> pts.front() is implicit
};

// sign of the cross product (b-a) x (c-a)
int orient(const Vec2r& a, const Vec2r& b, const Vec2r& c);

// p on the closed segment [a,b]
bool on_segment(const Vec2r& a, const Vec2r& b, const Vec2r& p);

// closed segments [a,b] and [c,d] share at least one point
bool segments_intersect(const Vec2r& a, const Vec2r& b, const Vec2r& c, const Vec2r& d);

// proper crossing: a single interior intersection point on both segments
bool segments_properly_cross(const Vec2r& a, const Vec2r& b, const Vec2r& c, const Vec2r& d);

// twice the signed area
Rat polygon_area2(const Polygon& p);

enum class PointLoc { Inside, Boundary, Outside };
PointLoc locate_point(const Polygon& poly, const Vec2r& p);

// keep the side n . x <= c
Polygon clip_halfplane(const Polygon& poly, const Vec2r& n, const Rat& c);

// twice the area of poly intersected with the axis box [x0,x1] x [y0,y1];
// poly must be simple and positively oriented
Rat box_clip_area2(const Polygon& poly, const Rat& x0, const Rat& x1, const Rat& y0,
                   const Rat& y1);

// ear triangulation of a simple positively oriented polygon
std::vector<std::array<Vec2r, 3>> triangulate(const Polygon& poly);

// twice the area of the intersection of two simple positively oriented
// polygons (the first is triangulated, the second clipped per triangle)
Rat intersection_area2(const std::vector<std::array<Vec2r, 3>>& tris, const Polygon& q);

// true if the polygon is simple (no edge pair shares a point except the
// common endpoints of consecutive edges)
bool polygon_simple(const Polygon& poly);

}  // namespace necker
