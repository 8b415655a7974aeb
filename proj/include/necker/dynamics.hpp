#pragma once

// Recurrence instrumentation via cylinder close returns and Busemann minima
// along Teichmueller rays, and the diffusion experiment on the Z^2-cover.
// Unlike the exact core, this module works in floating point on top of exact
// traces, as the quantities are analytic (logs, exponentials, fits).

#include "necker/geodesic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace necker {

struct UnitDirection {
  double u1 = 1.0, u2 = 0.0;
  double angle = 0.0;  // the angle seed used to produce the vector

  static UnitDirection from_angle(double theta);
};

// direction (q,p) with p, q odd and coprime; v* = 6 sqrt(2) (q,p)
struct PeriodicDatum {
  std::int64_t q = 1, p = 1;

  double vstar_scale_sq() const { return 72.0 * static_cast<double>(p * p + q * q); }
};

struct CloseReturn {
  double return_time;     // |u . v|
  double distance_bound;  // |u ^ v|
  double bad_measure;     // |(u . v)(u ^ v)|
};
CloseReturn close_return_bound(const UnitDirection& u, double vx, double vy);

// exp B_v(gamma(t)) = e^t (u ^ v*)^2 + e^-t (u . v*)^2 with v* = 6 sqrt2 (q,p)
double busemann_exp(const UnitDirection& u, const PeriodicDatum& pd, double t);
// its minimum 2|(u.v*)(u^v*)| and minimizer log|u.v*| - log|u^v*|
double busemann_min(const UnitDirection& u, const PeriodicDatum& pd);
double busemann_argmin(const UnitDirection& u, const PeriodicDatum& pd);

// odd/odd candidate directions near the slope of u, from the Stern-Brocot
// tree (mediant combinations along the search path), plus the base diagonals
std::vector<PeriodicDatum> stern_brocot_candidates(const UnitDirection& u,
                                                   std::int64_t denom_bound);
// the full odd/odd set with |p|, q <= bound (oracle for small bounds)
std::vector<PeriodicDatum> brute_force_candidates(std::int64_t denom_bound);

struct RecurrenceRecord {
  double t;
  double value;  // log busemann_exp at the minimizing candidate
  PeriodicDatum pd;
};

struct RecurrenceScan {
  std::vector<RecurrenceRecord> records;  // strictly decreasing minima
  double floor_value = 0.0;               // the last record
};

// record minima of min_pd B_pd(gamma(t)) over a t-grid along the ray toward
// the slope of u; candidates by Stern-Brocot above bound 100, brute force
// below (or when forced)
RecurrenceScan recurrence_scan(const UnitDirection& u, double t_max, std::int64_t denom_bound,
                               double grid_step = 0.01, bool force_brute = false);

struct DiffusionSample {
  double T;          // dyadic length threshold
  Vec2l deck;        // deck displacement at the sample crossing
  double dist_sq;    // Euclidean 3-space distance squared (exact, floated)
};

struct DiffusionRun {
  Direction approx{1, 1};  // the rational convergent actually traced
  std::vector<DiffusionSample> samples;
  bool singular = false;
  double exponent = 0.0;
  double residual = 0.0;
};

// continued-fraction convergent of the slope of u with components bounded by
// the height
Direction convergent_direction(const UnitDirection& u, std::int64_t height);

// exact trace sampled at dyadic accumulated lengths 1, 2, 4, ..., t_max
DiffusionRun diffusion_run(const Direction& d, double t_max,
                           const GeodesicState* start = nullptr);

struct ExponentFit {
  double slope = 0.0;
  double residual = 0.0;
};

// least-squares slope of log(max-so-far distance) against log T over the
// upper half of the dyadic range; needs at least 8 samples
ExponentFit exponent_fit(const std::vector<DiffusionSample>& samples);

}  // namespace necker
