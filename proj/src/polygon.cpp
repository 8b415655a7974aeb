#include "necker/polygon.hpp"

#include <stdexcept>

namespace necker {

int orient(const Vec2r& a, const Vec2r& b, const Vec2r& c) {
  Rat v = (b(0) - a(0)) * (c(1) - a(1)) - (b(1) - a(1)) * (c(0) - a(0));
  return v.sign();
}

bool on_segment(const Vec2r& a, const Vec2r& b, const Vec2r& p) {
  if (orient(a, b, p) != 0) return false;
  auto between = [](const Rat& lo, const Rat& hi, const Rat& x) {
    return lo <= hi ? (lo <= x && x <= hi) : (hi <= x && x <= lo);
  };
  return between(a(0), b(0), p(0)) && between(a(1), b(1), p(1));
}

bool segments_properly_cross(const Vec2r& a, const Vec2r& b, const Vec2r& c, const Vec2r& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segments_intersect(const Vec2r& a, const Vec2r& b, const Vec2r& c, const Vec2r& d) {
  if (segments_properly_cross(a, b, c, d)) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

Rat polygon_area2(const Polygon& p) {
  Rat acc(0);
  const auto& v = p.pts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2r& a = v[i];
    const Vec2r& b = v[(i + 1) % v.size()];
    acc += a(0) * b(1) - a(1) * b(0);
  }
  return acc;
}

PointLoc locate_point(const Polygon& poly, const Vec2r& p) {
  const auto& v = poly.pts;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (on_segment(v[i], v[(i + 1) % v.size()], p)) return PointLoc::Boundary;
  // crossing parity of a leftward horizontal ray, counting edges that
  // straddle the horizontal line through p
  int crossings = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2r a = v[i], b = v[(i + 1) % v.size()];
    bool a_below = a(1) <= p(1), b_below = b(1) <= p(1);
    if (a_below == b_below) continue;
    // the edge crosses the horizontal line strictly; x-coordinate at height p.y
    // compare p.x with the crossing exactly via orientation
    int o = orient(a, b, p);
    if (o == 0) return PointLoc::Boundary;  // cannot happen after the loop above
    // edge goes upward if !a_below; p is to the right of the crossing when the
    // triangle (a,b,p) turns consistently
    bool upward = !a_below;
    if ((upward && o > 0) || (!upward && o < 0)) ++crossings;
  }
  return (crossings % 2 == 1) ? PointLoc::Inside : PointLoc::Outside;
}

Polygon clip_halfplane(const Polygon& poly, const Vec2r& n, const Rat& c) {
  Polygon out;
  const auto& v = poly.pts;
  if (v.empty()) return out;
  auto val = [&](const Vec2r& p) { return n(0) * p(0) + n(1) * p(1) - c; };
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2r& a = v[i];
    const Vec2r& b = v[(i + 1) % v.size()];
    Rat va = val(a), vb = val(b);
    bool ina = va <= Rat(0), inb = vb <= Rat(0);
    if (ina) out.pts.push_back(a);
    if (ina != inb) {
      Rat t = va / (va - vb);
      out.pts.push_back(Vec2r(a(0) + t * (b(0) - a(0)), a(1) + t * (b(1) - a(1))));
    }
  }
  return out;
}

Rat box_clip_area2(const Polygon& poly, const Rat& x0, const Rat& x1, const Rat& y0,
                   const Rat& y1) {
  Polygon p = poly;
  p = clip_halfplane(p, Vec2r(Rat(-1), Rat(0)), -x0);
  p = clip_halfplane(p, Vec2r(Rat(1), Rat(0)), x1);
  p = clip_halfplane(p, Vec2r(Rat(0), Rat(-1)), -y0);
  p = clip_halfplane(p, Vec2r(Rat(0), Rat(1)), y1);
  return p.pts.size() < 3 ? Rat(0) : polygon_area2(p);
}

std::vector<std::array<Vec2r, 3>> triangulate(const Polygon& poly) {
  std::vector<Vec2r> v = poly.pts;
  if (polygon_area2(poly) <= Rat(0))
    throw std::invalid_argument("triangulate: polygon must be positively oriented");
  std::vector<std::array<Vec2r, 3>> tris;
  while (v.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2r& prev = v[(i + v.size() - 1) % v.size()];
      const Vec2r& cur = v[i];
      const Vec2r& next = v[(i + 1) % v.size()];
      if (orient(prev, cur, next) <= 0) continue;  // reflex or flat corner
      bool ear = true;
      for (std::size_t k = 0; k < v.size() && ear; ++k) {
        if (k == i || k == (i + v.size() - 1) % v.size() || k == (i + 1) % v.size()) continue;
        // any other vertex inside the closed triangle blocks the ear
        const Vec2r& p = v[k];
        int s1 = orient(prev, cur, p), s2 = orient(cur, next, p), s3 = orient(next, prev, p);
        if (s1 >= 0 && s2 >= 0 && s3 >= 0) ear = false;
      }
      if (!ear) continue;
      tris.push_back({prev, cur, next});
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) throw std::logic_error("triangulate: no ear found (polygon not simple?)");
  }
  if (v.size() == 3) tris.push_back({v[0], v[1], v[2]});
  return tris;
}

Rat intersection_area2(const std::vector<std::array<Vec2r, 3>>& tris, const Polygon& q) {
  Rat acc(0);
  for (const auto& t : tris) {
    Polygon clipped = q;
    for (int e = 0; e < 3 && clipped.pts.size() >= 3; ++e) {
      const Vec2r& a = t[static_cast<std::size_t>(e)];
      const Vec2r& b = t[static_cast<std::size_t>((e + 1) % 3)];
      // inside of a CCW triangle is the left side of each edge: keep
      // cross(b-a, x-a) >= 0, i.e. n . x <= c with n = perp(b-a)
      Vec2r n(b(1) - a(1), a(0) - b(0));
      Rat c = n(0) * a(0) + n(1) * a(1);
      clipped = clip_halfplane(clipped, n, c);
    }
    if (clipped.pts.size() >= 3) acc += polygon_area2(clipped);
  }
  return acc;
}

bool polygon_simple(const Polygon& poly) {
  const auto& v = poly.pts;
  std::size_t n = v.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2r a = v[i], b = v[(i + 1) % n];
    if (exact_eq<Vec2r>(a, b)) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec2r c = v[j], d = v[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // consecutive edges may only share the common endpoint
        const Vec2r& shared = (j == i + 1) ? b : a;
        const Vec2r& afar = (j == i + 1) ? a : b;
        const Vec2r& cfar = (j == i + 1) ? d : c;
        if (segments_properly_cross(a, b, c, d)) return false;
        if (on_segment(c, d, afar) || on_segment(a, b, cfar)) return false;
        (void)shared;
      } else {
        if (segments_intersect(a, b, c, d)) return false;
      }
    }
  }
  return true;
}

}  // namespace necker
