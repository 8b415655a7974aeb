#include "necker/geodesic.hpp"

#include <map>
#include <tuple>

namespace necker {

namespace {

bool is_corner(const Vec2r& q) {
  auto extreme = [](const Rat& x) { return x.is_zero() || x == Rat(1); };
  return extreme(q(0)) && extreme(q(1));
}

Vec3l corner_vertex(const GeodesicState& st, const Vec2r& q) {
  Vec3l v = st.square.base;
  if (q(0) == Rat(1)) v += axis_vector(st.square.axis);
  if (q(1) == Rat(1)) v += axis_vector(st.square.axis_l());
  return v;
}

}  // namespace

StepResult step(const GeodesicState& state) {
  const Rat s = state.point(0), t = state.point(1);
  const std::int64_t a = state.dir(0), b = state.dir(1);
  bool has_x = a != 0, has_y = b != 0;
  Rat tx, ty;
  if (has_x) tx = a > 0 ? (Rat(1) - s) / Rat(a) : s / Rat(-a);
  if (has_y) ty = b > 0 ? (Rat(1) - t) / Rat(b) : t / Rat(-b);

  Rat tau;
  bool from_x;
  if (has_x && (!has_y || tx <= ty)) {
    tau = tx;
    from_x = true;
  } else {
    tau = ty;
    from_x = false;
  }

  Vec2r q(s + tau * Rat(a), t + tau * Rat(b));
  if (is_corner(q))
    return SingularHit{corner_vertex(state, q), tau, state.square, q};

  int side = from_x ? (a > 0 ? 1 : 3) : (b > 0 ? 2 : 0);
  Transition tr = adjacent_square(state.square, side);
  GeodesicState next{tr.square, transition_point(side, q), transition_dir(tr.rot, state.dir)};
  return Step{next, tau, side, tr.side, tr.rot};
}

std::int64_t default_max_crossings(const Direction& d) {
  auto abs64 = [](std::int64_t x) { return x < 0 ? -x : x; };
  return 8 * (abs64(d.a) + abs64(d.b)) + 16;
}

GeodesicState default_start(const Direction& d) {
  return GeodesicState{favorite_square(), Vec2r(Rat(1, 3), Rat(1, 7)), d.vec()};
}

GeodesicState sweep_start(const Direction& d) {
  return GeodesicState{favorite_square(), Vec2r(Rat(1, 61), Rat(1, 67)), d.vec()};
}

namespace {

// drift quotient key: the H-state (face index, point, dir)
struct HKey {
  int axis;
  Rat s, t;
  std::int64_t a, b;
  friend bool operator<(const HKey& x, const HKey& y) {
    if (x.axis != y.axis) return x.axis < y.axis;
    if (x.s != y.s) return x.s < y.s;
    if (x.t != y.t) return x.t < y.t;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

}  // namespace

TraceOutcome trace(const GeodesicState& start, std::int64_t max_crossings) {
  TraceOutcome out;
  out.path.push_back({start, Rat(0), -1, 0});
  const std::int64_t a0 = start.dir(0), b0 = start.dir(1);
  const Rat dir_sq = Rat(a0 * a0 + b0 * b0);

  std::map<HKey, std::int64_t> seen;
  GeodesicState cur = start;
  Rat tau(0);
  int acc_rot = 0;

  for (std::int64_t i = 1; i <= max_crossings; ++i) {
    StepResult res = step(cur);
    if (std::holds_alternative<SingularHit>(res)) {
      SingularHit hit = std::get<SingularHit>(res);
      out.kind = TraceKind::Singular;
      out.crossings = i - 1;
      Rat total = tau + hit.tau;
      out.length_sq = total * total * dir_sq;
      out.hit = hit;
      return out;
    }
    const Step& st = std::get<Step>(res);
    tau += st.tau;
    cur = st.next;
    acc_rot = (acc_rot + st.rot) & 3;
    out.path.push_back({cur, tau, st.entry_side, acc_rot});

    HKey key{cur.square.axis, cur.point(0), cur.point(1), cur.dir(0), cur.dir(1)};
    auto it = seen.find(key);
    if (it != seen.end()) {
      std::int64_t j = it->second;
      const CrossingRecord& prev = out.path[static_cast<std::size_t>(j)];
      Rat dtau = tau - prev.tau;
      out.length_sq = dtau * dtau * dir_sq;
      out.crossings = i - j;
      out.period_begin = j;
      out.period_end = i;
      Vec3l disp = cur.square.base - prev.state.square.base;
      out.displacement = disp;
      out.deck_displacement = deck_coordinate(cur.square).first - deck_coordinate(prev.state.square).first;
      bool zero = disp(0) == 0 && disp(1) == 0 && disp(2) == 0;
      out.kind = zero ? TraceKind::Periodic : TraceKind::DriftPeriodic;
      return out;
    }
    seen.emplace(key, i);
  }
  out.kind = TraceKind::Truncated;
  out.crossings = max_crossings;
  out.length_sq = tau * tau * dir_sq;
  return out;
}

GeodesicState state_at_parameter(const TraceOutcome& out, const Rat& tau) {
  if (out.path.empty() || tau < out.path.front().tau || tau > out.path.back().tau)
    throw std::out_of_range("state_at_parameter: parameter outside traced range");
  std::size_t lo = 0, hi = out.path.size() - 1;
  while (lo < hi) {  // last index with path[idx].tau <= tau
    std::size_t mid = (lo + hi + 1) / 2;
    if (out.path[mid].tau <= tau) lo = mid; else hi = mid - 1;
  }
  const CrossingRecord& rec = out.path[lo];
  Rat dt = tau - rec.tau;
  GeodesicState st = rec.state;
  st.point = Vec2r(st.point(0) + dt * Rat(st.dir(0)), st.point(1) + dt * Rat(st.dir(1)));
  return st;
}

NeckerIsometry sixfold_witness(const TraceOutcome& outcome) {
  if (outcome.kind != TraceKind::Periodic)
    throw std::invalid_argument("sixfold_witness: trace is not periodic");
  const std::int64_t j = outcome.period_begin, i = outcome.period_end;
  const std::int64_t n = i - j;
  if (n % 6 != 0)
    throw std::logic_error("sixfold_witness: period crossing count not divisible by six");
  const std::int64_t shift = n / 6;

  auto wrapped = [&](std::int64_t m) -> const CrossingRecord& {
    std::int64_t idx = j + ((m - j) % n + n) % n;
    return outcome.path[static_cast<std::size_t>(idx)];
  };

  const CrossingRecord& c0 = outcome.path[static_cast<std::size_t>(j)];
  const CrossingRecord& c6 = outcome.path[static_cast<std::size_t>(j + shift)];
  if (c6.tau - c0.tau != Rat(1))
    throw std::logic_error("sixfold_witness: sixth-period state not at unit parameter");

  int eps;
  if (c6.state.dir == c0.state.dir) eps = 1;
  else if (c6.state.dir == Vec2l(-c0.state.dir)) eps = -1;
  else throw std::logic_error("sixfold_witness: sixth-period direction not +-d");

  const SquareId& s0 = c0.state.square;
  const SquareId& s6 = c6.state.square;
  Mat3l P = Mat3l::Zero();
  P(s6.axis, s0.axis) = eps;
  P(s6.axis_l(), s0.axis_l()) = eps;
  P(s6.axis_m(), s0.axis_m()) = eps;

  Vec3r x0 = embed(c0.state), x6 = embed(c6.state);
  Vec3l t;
  for (int r = 0; r < 3; ++r) {
    Rat acc = x6(r);
    for (int c = 0; c < 3; ++c) acc -= Rat(P(r, c)) * x0(c);
    if (!acc.is_integer()) throw std::logic_error("sixfold_witness: non-integral translation");
    t(r) = acc.num().to_long();
  }
  NeckerIsometry xi{P, t};

  if (!isometry_well_formed(xi) || surface_orientation_sign(xi) != 1 || xi.order() != 6)
    throw std::logic_error("sixfold_witness: candidate is not an order-six isometry");

  // exact verification on every crossing state of one period
  for (std::int64_t m = j; m < i; ++m) {
    const CrossingRecord& src = outcome.path[static_cast<std::size_t>(m)];
    const CrossingRecord& dst = wrapped(m + shift);
    Vec3r img = xi.apply(embed(src.state));
    if (!exact_eq<Vec3r>(img, embed(dst.state)))
      throw std::logic_error("sixfold_witness: crossing state not shifted by one sixth");
    Vec3l dimg = P * dir3(src.state);
    if (!exact_eq<Vec3l>(dimg, dir3(dst.state)))
      throw std::logic_error("sixfold_witness: direction not shifted by one sixth");
  }
  return xi;
}

}  // namespace necker
