#include "necker/dynamics.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace necker {

UnitDirection UnitDirection::from_angle(double theta) {
  UnitDirection u;
  u.angle = theta;
  u.u1 = std::cos(theta);
  u.u2 = std::sin(theta);
  double n = std::hypot(u.u1, u.u2);
  if (std::abs(n - 1.0) > 1e-12) {
    u.u1 /= n;
    u.u2 /= n;
  }
  return u;
}

CloseReturn close_return_bound(const UnitDirection& u, double vx, double vy) {
  if (vx == 0.0 && vy == 0.0)
    throw std::invalid_argument("close_return_bound: zero holonomy");
  double dot = u.u1 * vx + u.u2 * vy;
  double wedge = u.u1 * vy - u.u2 * vx;
  return CloseReturn{std::abs(dot), std::abs(wedge), std::abs(dot * wedge)};
}

namespace {

double dot_v(const UnitDirection& u, const PeriodicDatum& pd) {
  return u.u1 * static_cast<double>(pd.q) + u.u2 * static_cast<double>(pd.p);
}

double wedge_v(const UnitDirection& u, const PeriodicDatum& pd) {
  return u.u1 * static_cast<double>(pd.p) - u.u2 * static_cast<double>(pd.q);
}

}  // namespace

double busemann_exp(const UnitDirection& u, const PeriodicDatum& pd, double t) {
  double w2 = 72.0 * wedge_v(u, pd) * wedge_v(u, pd);
  double d2 = 72.0 * dot_v(u, pd) * dot_v(u, pd);
  return std::exp(t) * w2 + std::exp(-t) * d2;
}

double busemann_min(const UnitDirection& u, const PeriodicDatum& pd) {
  return 2.0 * 72.0 * std::abs(dot_v(u, pd) * wedge_v(u, pd));
}

double busemann_argmin(const UnitDirection& u, const PeriodicDatum& pd) {
  double dot = std::abs(dot_v(u, pd)) * std::sqrt(72.0);
  double wedge = std::abs(wedge_v(u, pd)) * std::sqrt(72.0);
  return std::log(dot) - std::log(wedge);
}

std::vector<PeriodicDatum> brute_force_candidates(std::int64_t bound) {
  std::vector<PeriodicDatum> out;
  for (std::int64_t q = 1; q <= bound; q += 2)
    for (std::int64_t p = -bound; p <= bound; ++p)
      if (p % 2 != 0 && gcd64(p, q) == 1) out.push_back(PeriodicDatum{q, p});
  return out;
}

std::vector<PeriodicDatum> stern_brocot_candidates(const UnitDirection& u,
                                                   std::int64_t bound) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<PeriodicDatum> out;
  auto add = [&](std::int64_t q, std::int64_t p) {
    if (q <= 0 || q > bound || p == 0 || std::abs(p) > bound) return;
    if (q % 2 == 0 || p % 2 == 0 || gcd64(p, q) != 1) return;
    if (seen.insert({q, p}).second) out.push_back(PeriodicDatum{q, p});
  };
  add(1, 1);
  add(1, -1);

  double slope = std::abs(u.u2) / std::max(std::abs(u.u1), 1e-300);
  int sign = (u.u1 * u.u2 >= 0.0) ? 1 : -1;
  // walk the tree toward the slope; at each bracket add mediant combinations
  // m*L + n*R, which parameterize the fractions between the bracket endpoints
  const int kCombo = 48;
  std::int64_t ql = 1, pl = 0;  // 0/1
  std::int64_t qr = 0, pr = 1;  // 1/0
  for (int depth = 0; depth < 512; ++depth) {
    std::int64_t qm = ql + qr, pm = pl + pr;
    if (qm > bound && std::abs(pm) > bound) break;
    for (int m = 0; m <= kCombo; ++m)
      for (int n = (m == 0 ? 1 : 0); n <= kCombo; ++n) {
        std::int64_t q = m * ql + n * qr, p = m * pl + n * pr;
        add(q, sign * p);
        add(q, -sign * p);
      }
    double mid = static_cast<double>(pm) / static_cast<double>(qm);
    if (slope < mid) {
      qr = qm;
      pr = pm;
    } else {
      ql = qm;
      pl = pm;
    }
  }
  return out;
}

RecurrenceScan recurrence_scan(const UnitDirection& u, double t_max, std::int64_t denom_bound,
                               double grid_step, bool force_brute) {
  if (t_max <= 0.0) throw std::invalid_argument("recurrence_scan: t_max must be positive");
  std::vector<PeriodicDatum> cands = (force_brute || denom_bound <= 100)
                                         ? brute_force_candidates(denom_bound)
                                         : stern_brocot_candidates(u, denom_bound);
  RecurrenceScan scan;
  double best = std::numeric_limits<double>::infinity();
  for (double t = 0.0; t <= t_max + 1e-12; t += grid_step) {
    double lo = std::numeric_limits<double>::infinity();
    const PeriodicDatum* arg = nullptr;
    for (const PeriodicDatum& pd : cands) {
      double v = busemann_exp(u, pd, t);
      if (v < lo) {
        lo = v;
        arg = &pd;
      }
    }
    double logv = std::log(lo);
    if (logv < best && arg) {
      best = logv;
      scan.records.push_back(RecurrenceRecord{t, logv, *arg});
    }
  }
  scan.floor_value = best;
  return scan;
}

Direction convergent_direction(const UnitDirection& u, std::int64_t height) {
  double slope = u.u2 / u.u1;
  int sign = slope < 0 ? -1 : 1;
  double x = std::abs(slope);
  std::int64_t p0 = 0, q0 = 1;  // h_{-2}/k_{-2}
  std::int64_t p1 = 1, q1 = 0;  // h_{-1}/k_{-1}
  double frac = x;
  std::int64_t bp = 1, bq = 1;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 1e17) break;
    std::int64_t a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (p2 > height || q2 > height) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (p1 > 0 && q1 > 0) {
      bp = p1;
      bq = q1;
    }
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  return Direction::make(bq, sign * bp);
}

DiffusionRun diffusion_run(const Direction& d, double t_max, const GeodesicState* start) {
  DiffusionRun run;
  run.approx = d;
  GeodesicState cur = start ? *start : sweep_start(d);
  const GeodesicState origin = cur;
  const Vec3r origin3 = embed(origin);
  const Vec2l deck0 = deck_coordinate(origin.square).first;
  const double dir_norm = std::hypot(static_cast<double>(d.a), static_cast<double>(d.b));

  Rat tau(0);
  double next_threshold = 1.0;
  std::int64_t guard = static_cast<std::int64_t>(t_max * 2.0) + 4096;
  for (std::int64_t i = 0; i < guard; ++i) {
    StepResult res = step(cur);
    if (std::holds_alternative<SingularHit>(res)) {
      run.singular = true;
      break;
    }
    const Step& st = std::get<Step>(res);
    tau += st.tau;
    cur = st.next;
    double len = tau.to_double() * dir_norm;
    if (len >= next_threshold) {
      Vec3r here = embed(cur);
      Rat dsq(0);
      for (int c = 0; c < 3; ++c) {
        Rat diff = here(c) - origin3(c);
        dsq += diff * diff;
      }
      while (len >= next_threshold) {
        DiffusionSample s;
        s.T = next_threshold;
        s.deck = deck_coordinate(cur.square).first - deck0;
        s.dist_sq = dsq.to_double();
        run.samples.push_back(s);
        next_threshold *= 2.0;
      }
      if (len >= t_max) break;
    }
  }
  if (run.samples.size() >= 8) {
    ExponentFit fit = exponent_fit(run.samples);
    run.exponent = fit.slope;
    run.residual = fit.residual;
  }
  return run;
}

ExponentFit exponent_fit(const std::vector<DiffusionSample>& samples) {
  if (samples.size() < 8)
    throw std::invalid_argument("exponent_fit: need at least 8 samples");
  // running maxima emulate the limsup before fitting
  std::vector<std::pair<double, double>> pts;
  double run_max = 0.0;
  for (const DiffusionSample& s : samples) {
    run_max = std::max(run_max, std::sqrt(std::max(s.dist_sq, 0.0)));
    pts.emplace_back(std::log(s.T), std::log(std::max(run_max, 1e-300)));
  }
  std::size_t lo = pts.size() / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
  for (std::size_t i = lo; i < pts.size(); ++i) {
    sx += pts[i].first;
    sy += pts[i].second;
    sxx += pts[i].first * pts[i].first;
    sxy += pts[i].first * pts[i].second;
    n += 1;
  }
  double denom = n * sxx - sx * sx;
  ExponentFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  double mean_x = sx / n, mean_y = sy / n;
  double ss = 0;
  for (std::size_t i = lo; i < pts.size(); ++i) {
    double pred = mean_y + fit.slope * (pts[i].first - mean_x);
    ss += (pts[i].second - pred) * (pts[i].second - pred);
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace necker
