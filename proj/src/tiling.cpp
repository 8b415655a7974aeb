#include "necker/tiling.hpp"

#include <algorithm>
#include <map>

namespace necker {

SymmetryPair symmetry_pair(const Cylinder& cyl, const BoundaryChain& boundary) {
  SymmetryPair sp;
  sp.A = sixfold_witness(cyl.core);
  if (sp.A.order() != 6) throw std::logic_error("symmetry_pair: witness is not order six");

  const SaddleConnection& sc = boundary.saddles.front();
  Vec3r mid = embed(midpoint_state(sc));
  Vec3l doubled;
  for (int i = 0; i < 3; ++i) {
    Rat two = mid(i) + mid(i);
    if (!two.is_integer()) throw std::logic_error("symmetry_pair: midpoint not a half-integer");
    doubled(i) = two.num().to_long();
  }
  sp.B = NeckerIsometry::point_reflection_doubled(doubled);
  if (sp.B.order() != 2) throw std::logic_error("symmetry_pair: reflection is not order two");

  NeckerIsometry ab = sp.A.compose(sp.B);
  if (!ab.compose(ab).compose(ab).is_identity())
    throw std::logic_error("symmetry_pair: (AB)^3 is not the identity");

  auto fa = sp.A.fixed_point();
  if (!fa) throw std::logic_error("symmetry_pair: order-six element has no fixed point");
  sp.center_a = *fa;
  sp.center_b = mid;
  if (exact_eq<Vec3r>(project(sp.center_a), project(sp.center_b)))
    throw std::logic_error("symmetry_pair: coincident rotation centers");
  return sp;
}

namespace {

Vec2l lattice_coords_int(const Vec3l& v) {
  if (v(0) + v(1) + v(2) != 0) throw std::logic_error("lattice_coords_int: not in Lambda_0");
  return Vec2l(v(0), -v(2));
}

Polygon translate_polygon(const Polygon& p, const Vec2r& by) {
  Polygon out;
  out.pts.reserve(p.pts.size());
  for (const Vec2r& v : p.pts) out.pts.push_back(Vec2r(v(0) + by(0), v(1) + by(1)));
  return out;
}

void bounding_box(const Polygon& p, Rat& x0, Rat& x1, Rat& y0, Rat& y1) {
  x0 = x1 = p.pts.front()(0);
  y0 = y1 = p.pts.front()(1);
  for (const Vec2r& v : p.pts) {
    if (v(0) < x0) x0 = v(0);
    if (v(0) > x1) x1 = v(0);
    if (v(1) < y0) y0 = v(1);
    if (v(1) > y1) y1 = v(1);
  }
}

}  // namespace

std::pair<NeckerIsometry, NeckerIsometry> translation_generators(const SymmetryPair& sp) {
  NeckerIsometry a2 = sp.A.compose(sp.A);
  NeckerIsometry t1 = a2.compose(sp.A).compose(sp.B);  // A^3 B, derivative 3*60 + 180 = 0
  // the conjugate A^-1 (A^3 B) A = A^2 B A, the second lattice generator
  NeckerIsometry t2 = a2.compose(sp.B).compose(sp.A);
  for (const NeckerIsometry* t : {&t1, &t2})
    if (!exact_eq<Mat3l>(t->P, Mat3l::Identity()))
      throw std::logic_error("translation_generators: derivative is not the identity");
  Vec2l c1 = lattice_coords_int(t1.t), c2 = lattice_coords_int(t2.t);
  if (c1(0) * c2(1) - c1(1) * c2(0) == 0)
    throw std::logic_error("translation_generators: dependent translations");
  return {t1, t2};
}

Tiling generate_tiling(const Direction& d, bool outer, const Rat& window_radius) {
  TraceOutcome seed = trace(default_start(d), default_max_crossings(d));
  if (seed.kind != TraceKind::Periodic)
    throw std::invalid_argument("generate_tiling: direction is not periodic from the start");
  if (!is_simple(seed))
    throw NonSimpleDirection("generate_tiling: seed geodesic is not simple");
  Cylinder cyl = maximal_cylinder(seed);
  if (!cyl.labeled) throw std::logic_error("generate_tiling: boundary labeling failed");
  const BoundaryChain& chain = outer ? cyl.boundary_out : cyl.boundary_in;

  Tiling tiling;
  tiling.outer = outer;
  tiling.window_radius = window_radius;
  tiling.sym = symmetry_pair(cyl, chain);
  auto [t1, t2] = translation_generators(tiling.sym);
  tiling.t1 = lattice_coords_int(t1.t);
  tiling.t2 = lattice_coords_int(t2.t);
  tiling.anchor = lattice_coords(project(tiling.sym.center_a));

  tiling.base.outer = outer;
  tiling.base.plane = chain.plane_points;
  tiling.base.boundary = chain.projected;
  tiling.base.deck = Vec2l(0, 0);
  if (polygon_area2(tiling.base.boundary) < Rat(0)) {
    std::reverse(tiling.base.boundary.pts.begin(), tiling.base.boundary.pts.end());
    std::reverse(tiling.base.plane.begin(), tiling.base.plane.end());
  }
  if (!polygon_simple(tiling.base.boundary))
    throw std::logic_error("generate_tiling: projected boundary is not simple");

  // translate range: every (m,n) whose shifted bounding box can meet the
  // window, then an exact clip filter
  Rat x0, x1, y0, y1;
  bounding_box(tiling.base.boundary, x0, x1, y0, y1);
  const Rat r = window_radius;
  Rat det = Rat(tiling.t1(0) * tiling.t2(1) - tiling.t1(1) * tiling.t2(0));
  Rat lo_x = -r - x1, hi_x = r - x0, lo_y = -r - y1, hi_y = r - y0;
  long m_lo = 0, m_hi = 0, n_lo = 0, n_hi = 0;
  bool first = true;
  for (const Rat& cx : {lo_x, hi_x})
    for (const Rat& cy : {lo_y, hi_y}) {
      // (m, n) = T^-1 (cx, cy)
      Rat m = (cx * Rat(tiling.t2(1)) - cy * Rat(tiling.t2(0))) / det;
      Rat n = (-cx * Rat(tiling.t1(1)) + cy * Rat(tiling.t1(0))) / det;
      long mf = m.floor().to_long(), mc = m.ceil().to_long();
      long nf = n.floor().to_long(), nc = n.ceil().to_long();
      if (first || mf < m_lo) m_lo = mf;
      if (mc > m_hi || first) m_hi = mc;
      if (nf < n_lo || first) n_lo = nf;
      if (nc > n_hi || first) n_hi = nc;
      first = false;
    }

  for (long m = m_lo - 1; m <= m_hi + 1; ++m)
    for (long n = n_lo - 1; n <= n_hi + 1; ++n) {
      Vec2r shift(Rat(m * tiling.t1(0) + n * tiling.t2(0)),
                  Rat(m * tiling.t1(1) + n * tiling.t2(1)));
      if (x0 + shift(0) > r || x1 + shift(0) < -r || y0 + shift(1) > r || y1 + shift(1) < -r)
        continue;
      Polygon moved = translate_polygon(tiling.base.boundary, shift);
      if (box_clip_area2(moved, -r, r, -r, r).is_zero()) continue;
      Tile tile;
      tile.boundary = moved;
      tile.deck = Vec2l(m, n);
      tile.outer = outer;
      tile.plane.reserve(tiling.base.plane.size());
      Vec3r shift3 = from_lattice_coords(shift);
      for (const Vec3r& p : tiling.base.plane)
        tile.plane.push_back(Vec3r(p(0) + shift3(0), p(1) + shift3(1), p(2) + shift3(2)));
      tiling.tiles.push_back(tile);
    }
  return tiling;
}

TilingReport verify_tiling(const Tiling& tiling) {
  TilingReport report;
  const Rat r = tiling.window_radius;
  report.window_area2 = Rat(8) * r * r;  // twice (2r)^2

  report.tile_area2 = polygon_area2(tiling.base.boundary);
  Rat det = Rat(tiling.t1(0) * tiling.t2(1) - tiling.t1(1) * tiling.t2(0));
  report.covolume2 = (det < Rat(0) ? -det : det) * Rat(2);
  report.area_balance = report.tile_area2 == report.covolume2;

  if (tiling.tiles.empty()) {
    report.covered = false;
    report.overlap = false;
    report.covered_area2 = Rat(0);
    return report;
  }

  // coverage accounting: clipped areas must sum exactly to the window area
  Rat total(0);
  for (const Tile& t : tiling.tiles) total += box_clip_area2(t.boundary, -r, r, -r, r);
  report.covered_area2 = total;

  // pairwise interior disjointness; tiles are translates of one polygon, so
  // only the difference vector matters
  auto tris = triangulate(tiling.base.boundary);
  std::map<std::pair<long, long>, bool> seen;
  bool overlap = false;
  Rat bx0, bx1, by0, by1;
  bounding_box(tiling.base.boundary, bx0, bx1, by0, by1);
  for (std::size_t i = 0; i < tiling.tiles.size() && !overlap; ++i)
    for (std::size_t j = i + 1; j < tiling.tiles.size() && !overlap; ++j) {
      Vec2l dd = tiling.tiles[j].deck - tiling.tiles[i].deck;
      std::pair<long, long> key(dd(0), dd(1));
      auto it = seen.find(key);
      if (it != seen.end()) {
        overlap = it->second;
        continue;
      }
      Vec2r shift(Rat(dd(0) * tiling.t1(0) + dd(1) * tiling.t2(0)),
                  Rat(dd(0) * tiling.t1(1) + dd(1) * tiling.t2(1)));
      bool hit = false;
      if (!(bx0 + shift(0) > bx1 || bx1 + shift(0) < bx0 || by0 + shift(1) > by1 ||
            by1 + shift(1) < by0)) {
        Polygon moved = translate_polygon(tiling.base.boundary, shift);
        hit = !intersection_area2(tris, moved).is_zero();
      }
      seen.emplace(key, hit);
      overlap = hit;
    }
  report.overlap = overlap;
  report.covered = !overlap && total == report.window_area2;
  return report;
}

}  // namespace necker
