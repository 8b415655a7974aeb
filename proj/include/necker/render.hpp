#pragma once

// Deterministic SVG figures in isometric projection: the rhombille background
// plus polyline/polygon layers. Geometry stays exact (plane 3-vectors) until
// serialization, which converts through a fixed orthonormal frame of the
// projection plane at nine decimals.

#include "necker/exact.hpp"

#include <string>
#include <vector>

namespace necker {

struct SceneLayer {
  std::string css_class;            // one of the styles emitted in the header
  std::vector<std::vector<Vec3r>> paths;  // plane points (coordinate sum zero)
  bool closed = false;
};

struct Scene {
  Rat background_radius;            // l-infinity radius in lattice coordinates
  bool background = true;
  std::vector<SceneLayer> layers;
};

// byte-deterministic SVG document for the scene
std::string render_scene(const Scene& scene);

// drawing frame: the plane of the projection with the orthonormal basis
// f1 = (1,-1,0)/sqrt2, f2 = (1,1,-2)/sqrt6; returns (x, y) draw coordinates
std::pair<double, double> draw_coords(const Vec3r& plane_point);

}  // namespace necker
