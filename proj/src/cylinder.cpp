#include "necker/cylinder.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace necker {

namespace {

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

Mat2z shear_normalize(const Direction& d) {
  std::int64_t x, y;
  ext_gcd(d.a, d.b, x, y);
  Mat2z m;
  m << Zint(x), Zint(y), Zint(-d.b), Zint(d.a);
  return m;  // det = x a + y b = 1, sends (a,b) to (1,0)
}

std::vector<GeodesicState> enumerate_prongs(const Vec3l& cone_point, const Direction& d) {
  if (d.parity() != ParityClass::O)
    throw std::invalid_argument("enumerate_prongs: direction must be odd/odd");
  std::vector<GeodesicState> out;
  for (const IncidentSquare& inc : squares_at_vertex(cone_point)) {
    for (int rot = 0; rot < 4; ++rot) {
      Vec2l u = transition_dir(rot, d.vec());
      bool ok;
      if (inc.corner(0) == 0 && inc.corner(1) == 0) ok = u(0) > 0 && u(1) > 0;
      else if (inc.corner(0) == 1 && inc.corner(1) == 0) ok = u(0) < 0 && u(1) > 0;
      else if (inc.corner(0) == 1 && inc.corner(1) == 1) ok = u(0) < 0 && u(1) < 0;
      else ok = u(0) > 0 && u(1) < 0;
      if (ok) out.push_back(GeodesicState{inc.square, to_rat(inc.corner), u});
    }
  }
  return out;
}

SaddleConnection separatrix(const GeodesicState& prong, std::int64_t max_crossings) {
  const std::int64_t a = prong.dir(0), b = prong.dir(1);
  if (max_crossings <= 0)
    max_crossings = 16 * (std::abs(a) + std::abs(b)) + 64;
  const Rat dir_sq = Rat(a * a + b * b);

  SaddleConnection sc;
  sc.start_state = prong;
  Vec3r start3 = embed(prong);
  for (int i = 0; i < 3; ++i) sc.start(i) = start3(i).num().to_long();
  sc.path.push_back({prong, Rat(0), -1, 0});

  GeodesicState cur = prong;
  Rat tau(0);
  int acc = 0;
  for (std::int64_t i = 0; i < max_crossings; ++i) {
    StepResult res = step(cur);
    if (std::holds_alternative<SingularHit>(res)) {
      const SingularHit& hit = std::get<SingularHit>(res);
      sc.total_tau = tau + hit.tau;
      sc.length_sq = sc.total_tau * sc.total_tau * dir_sq;
      sc.end = hit.vertex;
      sc.path.push_back({GeodesicState{hit.square, hit.corner, cur.dir}, sc.total_tau, -1, acc});
      return sc;
    }
    const Step& st = std::get<Step>(res);
    tau += st.tau;
    acc = (acc + st.rot) & 3;
    cur = st.next;
    sc.path.push_back({cur, tau, st.entry_side, acc});
  }
  throw std::runtime_error("separatrix: crossing cap exceeded");
}

GeodesicState midpoint_state(const SaddleConnection& sc) {
  Rat half = sc.total_tau / Rat(2);
  std::size_t lo = 0, hi = sc.path.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (sc.path[mid].tau <= half) lo = mid; else hi = mid - 1;
  }
  const CrossingRecord& rec = sc.path[lo];
  Rat dt = half - rec.tau;
  GeodesicState st = rec.state;
  st.point = Vec2r(st.point(0) + dt * Rat(st.dir(0)), st.point(1) + dt * Rat(st.dir(1)));
  return st;
}

namespace {

struct EdgeFrame {
  Vec2l normal, tangent;
  Rat coord;  // tangential coordinate of the point on its edge
};

EdgeFrame edge_frame(const CrossingRecord& rec) {
  EdgeFrame f;
  switch (rec.entry_side) {
    case 1:
    case 3:
      f.normal = Vec2l(1, 0);
      f.tangent = Vec2l(0, 1);
      f.coord = rec.state.point(1);
      break;
    default:
      f.normal = Vec2l(0, 1);
      f.tangent = Vec2l(1, 0);
      f.coord = rec.state.point(0);
      break;
  }
  return f;
}

struct CriticalHit {
  std::size_t index = 0;  // path index of the crossing that degenerates
  Rat corner_coord;       // 0 or 1: which end of the edge is reached
  Rat lambda;             // tangential motion coefficient at that crossing
};

struct OffsetWindow {
  Rat eta_minus, eta_plus;
  std::vector<CriticalHit> hits_minus, hits_plus;  // all crossings degenerating there
};

// Tangential motion of the crossing points when the seed line is offset by
// eta * w0 (w0 given in the chart of path[0]); the window ends where some
// crossing reaches a corner.
OffsetWindow offset_window(const TraceOutcome& seed, const Vec2l& w0) {
  OffsetWindow win;
  bool have_plus = false, have_minus = false;
  for (std::int64_t r = seed.period_begin; r < seed.period_end; ++r) {
    const CrossingRecord& rec = seed.path[static_cast<std::size_t>(r)];
    if (rec.entry_side < 0) continue;
    EdgeFrame f = edge_frame(rec);
    Vec2l w = transition_dir(rec.acc_rot, w0);
    const Vec2l& d = rec.state.dir;
    std::int64_t dn = d(0) * f.normal(0) + d(1) * f.normal(1);
    if (dn == 0) throw std::logic_error("offset_window: tangential crossing");
    Rat lambda = Rat(w(0) * f.tangent(0) + w(1) * f.tangent(1)) -
                 Rat(w(0) * f.normal(0) + w(1) * f.normal(1)) *
                     Rat(d(0) * f.tangent(0) + d(1) * f.tangent(1)) / Rat(dn);
    if (lambda.is_zero()) continue;
    for (int corner = 0; corner <= 1; ++corner) {
      Rat eta = (Rat(corner) - f.coord) / lambda;
      CriticalHit hit{static_cast<std::size_t>(r), Rat(corner), lambda};
      if (eta.sign() > 0) {
        if (!have_plus || eta < win.eta_plus) {
          win.eta_plus = eta;
          win.hits_plus.clear();
          have_plus = true;
        }
        if (eta == win.eta_plus) win.hits_plus.push_back(hit);
      } else if (eta.sign() < 0) {
        if (!have_minus || eta > win.eta_minus) {
          win.eta_minus = eta;
          win.hits_minus.clear();
          have_minus = true;
        }
        if (eta == win.eta_minus) win.hits_minus.push_back(hit);
      }
    }
  }
  if (!have_plus || !have_minus)
    throw std::logic_error("offset_window: no critical offset found");
  return win;
}

Vec2r hit_corner_point(const CrossingRecord& rec, const Rat& corner_coord) {
  switch (rec.entry_side) {
    case 0: return Vec2r(corner_coord, Rat(0));
    case 1: return Vec2r(Rat(1), corner_coord);
    case 2: return Vec2r(corner_coord, Rat(1));
    default: return Vec2r(Rat(0), corner_coord);
  }
}

Vec3l hit_vertex(const TraceOutcome& seed, const CriticalHit& hit) {
  const CrossingRecord& rec = seed.path[hit.index];
  GeodesicState st{rec.state.square, hit_corner_point(rec, hit.corner_coord), rec.state.dir};
  Vec3r v = embed(st);
  return Vec3l(v(0).num().to_long(), v(1).num().to_long(), v(2).num().to_long());
}

// A crossing whose incoming segment survives at the critical offset. The
// segment into a crossing collapses exactly when its cyclic predecessor
// degenerates simultaneously at the same vertex; the chain must start from
// the head of such a cluster.
const CriticalHit& cluster_head(const TraceOutcome& seed, const std::vector<CriticalHit>& hits) {
  auto find_hit = [&](std::size_t idx) -> const CriticalHit* {
    for (const CriticalHit& h : hits)
      if (h.index == idx) return &h;
    return nullptr;
  };
  std::size_t j = static_cast<std::size_t>(seed.period_begin);
  std::size_t i = static_cast<std::size_t>(seed.period_end);
  for (const CriticalHit& h : hits) {
    std::size_t pred = h.index > j ? h.index - 1 : i - 1;
    const CriticalHit* ph = find_hit(pred);
    if (!ph || hit_vertex(seed, *ph) != hit_vertex(seed, h)) return h;
  }
  throw std::logic_error("offset_window: every boundary segment degenerates");
}

std::optional<Vec2l> chart_corner_of(const SquareId& sq, const Vec3l& vertex) {
  auto vs = square_vertices(sq);
  const Vec2l corners[4] = {Vec2l(0, 0), Vec2l(1, 0), Vec2l(1, 1), Vec2l(0, 1)};
  for (int i = 0; i < 4; ++i)
    if (vs[static_cast<std::size_t>(i)] == vertex) return corners[i];
  return std::nullopt;
}

bool dir_enters_corner(const Vec2l& corner, const Vec2l& u) {
  if (corner(0) == 0 && corner(1) == 0) return u(0) > 0 && u(1) > 0;
  if (corner(0) == 1 && corner(1) == 0) return u(0) < 0 && u(1) > 0;
  if (corner(0) == 1 && corner(1) == 1) return u(0) < 0 && u(1) < 0;
  return u(0) > 0 && u(1) < 0;
}

// develop half a turn around the vertex on the chosen side: the limit of
// nearby leaves passing a cone point
GeodesicState wrap_through_cone(const SquareId& sq_in, const Vec2l& corner_in,
                                const Vec2l& dir_in, bool ccw) {
  SquareId sq = sq_in;
  Vec2l cor = corner_in;
  int rot = 0;
  for (int k = 0; k < 2; ++k) {
    int side = ccw ? corner_side_ccw(cor) : corner_side_cw(cor);
    Transition tr = adjacent_square(sq, side);
    Vec2r img = transition_point(side, to_rat(cor));
    sq = tr.square;
    cor = Vec2l(img(0).num().to_long(), img(1).num().to_long());
    rot = (rot + tr.rot) & 3;
  }
  Vec2l out_dir = transition_dir(rot, dir_in);
  GeodesicState out{sq, to_rat(cor), out_dir};
  if (!dir_enters_corner(cor, out_dir))
    throw std::logic_error("wrap_through_cone: continuation does not enter the sector");
  return out;
}

bool states_equal(const GeodesicState& a, const GeodesicState& b) {
  return a.square == b.square && a.point(0) == b.point(0) && a.point(1) == b.point(1) &&
         a.dir == b.dir;
}

BoundaryChain boundary_chain(const TraceOutcome& seed, const CriticalHit& hit,
                             int approach_sign) {
  // corner-hit data in the entry chart of the degenerate crossing
  const CrossingRecord& rec = seed.path[hit.index];
  EdgeFrame f = edge_frame(rec);
  // near-leaf displacement away from the corner, on the cylinder side
  Vec2r delta(Rat(approach_sign) * hit.lambda * Rat(f.tangent(0)),
              Rat(approach_sign) * hit.lambda * Rat(f.tangent(1)));
  Rat side_val = Rat(rec.state.dir(0)) * delta(1) - Rat(rec.state.dir(1)) * delta(0);
  if (side_val.is_zero()) throw std::logic_error("boundary_chain: degenerate side");
  // leaves displaced to the right of travel pass the apex sweeping ccw
  bool ccw = side_val.sign() < 0;

  // the incoming ray lives in the square of the preceding segment
  const CrossingRecord& prev = seed.path[hit.index - 1];
  Vec2r corner_pt;
  switch (rec.entry_side) {
    case 0: corner_pt = Vec2r(hit.corner_coord, Rat(0)); break;
    case 1: corner_pt = Vec2r(Rat(1), hit.corner_coord); break;
    case 2: corner_pt = Vec2r(hit.corner_coord, Rat(1)); break;
    default: corner_pt = Vec2r(Rat(0), hit.corner_coord); break;
  }
  GeodesicState hit_state{rec.state.square, corner_pt, rec.state.dir};
  Vec3r v3 = embed(hit_state);
  Vec3l vertex(v3(0).num().to_long(), v3(1).num().to_long(), v3(2).num().to_long());
  auto prev_corner = chart_corner_of(prev.state.square, vertex);
  if (!prev_corner) throw std::logic_error("boundary_chain: hit vertex not on previous square");

  GeodesicState first = wrap_through_cone(prev.state.square, *prev_corner, prev.state.dir, ccw);

  BoundaryChain chain;
  GeodesicState cur = first;
  for (int guard = 0;; ++guard) {
    if (guard >= 64) throw std::logic_error("boundary_chain: chain did not close");
    SaddleConnection sc = separatrix(cur);
    chain.saddles.push_back(sc);
    chain.singularities.push_back(sc.start);
    const CrossingRecord& last = sc.path.back();
    Vec2l hit_corner(last.state.point(0).num().to_long(), last.state.point(1).num().to_long());
    cur = wrap_through_cone(last.state.square, hit_corner, last.state.dir, ccw);
    if (states_equal(cur, first)) break;
  }

  // projected bend points: each saddle's start corner plus interior crossings
  for (const SaddleConnection& sc : chain.saddles) {
    for (std::size_t i = 0; i + 1 < sc.path.size(); ++i) {
      chain.plane_points.push_back(project(embed(sc.path[i].state)));
    }
  }
  for (const Vec3r& p : chain.plane_points) chain.projected.pts.push_back(lattice_coords(p));
  return chain;
}

}  // namespace

Cylinder maximal_cylinder(const TraceOutcome& seed) {
  if (seed.kind != TraceKind::Periodic)
    throw std::invalid_argument("maximal_cylinder: seed must be a periodic trace");
  Cylinder cyl;
  const Vec2l d0 = seed.path.front().state.dir;
  cyl.dir = Direction{d0(0), d0(1)};
  cyl.circumference_sq = seed.length_sq;
  cyl.core = seed;

  Vec2l w0(0, 1);
  if (cross2(d0, w0) == 0) w0 = Vec2l(1, 0);
  OffsetWindow win = offset_window(seed, w0);
  cyl.offset_plus = win.eta_plus;
  cyl.offset_minus = win.eta_minus;

  Rat dtau = seed.path[static_cast<std::size_t>(seed.period_end)].tau -
             seed.path[static_cast<std::size_t>(seed.period_begin)].tau;
  std::int64_t cr = cross2(d0, w0);
  cyl.area = (win.eta_plus - win.eta_minus) * Rat(cr < 0 ? -cr : cr) * dtau;

  BoundaryChain plus = boundary_chain(seed, cluster_head(seed, win.hits_plus), -1);
  BoundaryChain minus = boundary_chain(seed, cluster_head(seed, win.hits_minus), +1);

  // Jordan labeling in projection: the inner boundary lies inside the outer
  // boundary's region
  bool plus_simple = polygon_simple(plus.projected);
  bool minus_simple = polygon_simple(minus.projected);
  if (plus_simple && minus_simple) {
    PointLoc plus_in_minus = locate_point(minus.projected, plus.projected.pts.front());
    PointLoc minus_in_plus = locate_point(plus.projected, minus.projected.pts.front());
    if (plus_in_minus == PointLoc::Inside && minus_in_plus == PointLoc::Outside) {
      cyl.boundary_out = minus;
      cyl.boundary_in = plus;
      cyl.labeled = true;
    } else if (minus_in_plus == PointLoc::Inside && plus_in_minus == PointLoc::Outside) {
      cyl.boundary_out = plus;
      cyl.boundary_in = minus;
      cyl.labeled = true;
    }
  }
  if (!cyl.labeled) {
    cyl.boundary_out = plus;
    cyl.boundary_in = minus;
  }
  return cyl;
}

bool is_simple(const TraceOutcome& seed) {
  if (seed.kind != TraceKind::Periodic)
    throw std::invalid_argument("is_simple: seed must be a periodic trace");
  struct Seg {
    Vec2r a, b;
  };
  std::map<SquareId, std::vector<Seg>> by_square;
  for (std::int64_t r = seed.period_begin; r < seed.period_end; ++r) {
    const CrossingRecord& rec = seed.path[static_cast<std::size_t>(r)];
    const CrossingRecord& next = seed.path[static_cast<std::size_t>(r + 1)];
    Rat dt = next.tau - rec.tau;
    Vec2r b(rec.state.point(0) + dt * Rat(rec.state.dir(0)),
            rec.state.point(1) + dt * Rat(rec.state.dir(1)));
    by_square[rec.state.square].push_back({rec.state.point, b});
  }
  for (const auto& [sq, segs] : by_square) {
    for (std::size_t i = 0; i < segs.size(); ++i)
      for (std::size_t j = i + 1; j < segs.size(); ++j)
        if (segments_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) return false;
  }
  return true;
}

std::vector<SweepBand> sweep_decomposition(const Direction& d) {
  if (d.parity() != ParityClass::O)
    throw std::invalid_argument("sweep_decomposition: direction must be odd/odd");
  GeodesicState vstate{favorite_square(), Vec2r(Rat(1, 3), Rat(1, 7)), Vec2l(0, 1)};
  TraceOutcome vtrace = trace(vstate, 64);
  if (vtrace.kind != TraceKind::DriftPeriodic)
    throw std::logic_error("sweep_decomposition: transversal did not drift");
  const Rat t_begin = vtrace.path[static_cast<std::size_t>(vtrace.period_begin)].tau;
  const Rat t_end = vtrace.path[static_cast<std::size_t>(vtrace.period_end)].tau;
  const Rat period = t_end - t_begin;

  // probing one deck period past t_end wraps back by a translation, which
  // changes nothing measured here
  auto probe_band = [&](const Rat& t_abs) -> std::optional<SweepBand> {
    Rat t = t_abs;
    while (t >= t_end) t -= period;
    GeodesicState vs = state_at_parameter(vtrace, t);
    int k = -1;
    for (int r = 0; r < 4; ++r)
      if (transition_dir(r, Vec2l(0, 1)) == vs.dir) k = r;
    if (k < 0) throw std::logic_error("sweep_decomposition: lost the transversal direction");
    GeodesicState launch{vs.square, vs.point, transition_dir(k, d.vec())};
    TraceOutcome seed = trace(launch, default_max_crossings(d) + 64);
    if (seed.kind != TraceKind::Periodic) return std::nullopt;  // probe on a band edge
    OffsetWindow win = offset_window(seed, vs.dir);
    SweepBand band;
    band.lo = t_abs + win.eta_minus;
    band.hi = t_abs + win.eta_plus;
    band.circumference_sq = seed.length_sq;
    Rat dtau = seed.path[static_cast<std::size_t>(seed.period_end)].tau -
               seed.path[static_cast<std::size_t>(seed.period_begin)].tau;
    std::int64_t cr = cross2(launch.dir, vs.dir);
    band.area = (win.eta_plus - win.eta_minus) * Rat(cr < 0 ? -cr : cr) * dtau;
    band.rotation = k;
    return band;
  };

  // anchor the sweep at a band edge: take the band containing some generic probe
  std::vector<SweepBand> bands;
  Rat delta = period / Rat(3);
  std::optional<SweepBand> first;
  for (int tries = 0; tries < 200 && !first; ++tries, delta = delta / Rat(2))
    first = probe_band(t_begin + delta);
  if (!first) throw std::logic_error("sweep_decomposition: could not seed the sweep");
  bands.push_back(*first);
  const Rat origin = first->lo;
  Rat current = first->hi;

  int guard = 0;
  while (current < origin + period) {
    Rat step = (origin + period - current) / Rat(2);
    for (;; step = step / Rat(2)) {
      if (++guard > 4000) throw std::logic_error("sweep_decomposition: refinement stuck");
      auto band = probe_band(current + step);
      if (!band) continue;
      if (band->lo == current) {
        bands.push_back(*band);
        current = band->hi;
        break;
      }
      if (band->lo < current) throw std::logic_error("sweep_decomposition: band underflow");
      // the probe skipped a thinner band; refine
    }
  }
  if (!(current == origin + period))
    throw std::logic_error("sweep_decomposition: bands do not tile");
  return bands;
}

}  // namespace necker
