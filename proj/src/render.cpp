#include "necker/render.hpp"

#include "necker/surface.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace necker {

std::pair<double, double> draw_coords(const Vec3r& p) {
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  double a = p(0).to_double(), b = p(1).to_double(), c = p(2).to_double();
  double x = (a - b) / s2;
  double y = (a + b - 2.0 * c) / s6;
  return {x, -y};  // svg y axis points down
}

namespace {

std::string fixed9(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[48];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
  return std::string(buf, res.ptr);
}

void emit_points(std::string& out, const std::vector<Vec3r>& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto [x, y] = draw_coords(path[i]);
    if (i) out += ' ';
    out += fixed9(x);
    out += ',';
    out += fixed9(y);
  }
}

}  // namespace

std::string render_scene(const Scene& scene) {
  if (!scene.background && scene.layers.empty())
    throw std::invalid_argument("render_scene: empty scene");

  // collect the background rhombi first so the viewport can cover everything
  std::vector<std::pair<int, std::vector<Vec3r>>> rhombi;  // face class, corners
  if (scene.background) {
    long r = scene.background_radius.ceil().to_long();
    for (long m = -r - 1; m <= r + 1; ++m)
      for (long n = -r - 1; n <= r + 1; ++n)
        for (int k = 0; k < 3; ++k) {
          SquareId sq = square_at_deck(Vec2l(m, n), k);
          std::vector<Vec3r> poly;
          bool keep = false;
          for (const Vec3l& v : square_vertices(sq)) {
            Vec3r pr = project(to_rat(v));
            Vec2r lc = lattice_coords(pr);
            if (lc(0).abs() <= scene.background_radius &&
                lc(1).abs() <= scene.background_radius)
              keep = true;
            poly.push_back(pr);
          }
          if (keep) rhombi.emplace_back(k, std::move(poly));
        }
  }

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](const std::vector<Vec3r>& path) {
    for (const Vec3r& p : path) {
      auto [x, y] = draw_coords(p);
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  };
  for (const auto& [k, poly] : rhombi) grow(poly);
  for (const SceneLayer& layer : scene.layers)
    for (const auto& path : layer.paths) grow(path);
  if (x0 > x1) { x0 = y0 = -1; x1 = y1 = 1; }
  double pad = 0.5;
  x0 -= pad; y0 -= pad; x1 += pad; y1 += pad;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += fixed9(x0) + " " + fixed9(y0) + " " + fixed9(x1 - x0) + " " + fixed9(y1 - y0);
  out += "\" width=\"900\" height=\"900\">\n";
  out += "<style>\n"
         ".face0{fill:#c9d4e4;stroke:#6b7a94;stroke-width:0.02}\n"
         ".face1{fill:#a9b8cf;stroke:#6b7a94;stroke-width:0.02}\n"
         ".face2{fill:#ecf0f6;stroke:#6b7a94;stroke-width:0.02}\n"
         ".geodesic{fill:none;stroke:#c62828;stroke-width:0.06;stroke-linejoin:round}\n"
         ".cylinder{fill:none;stroke:#2e7d32;stroke-width:0.06;stroke-linejoin:round}\n"
         ".tile{fill:#ffb74d;fill-opacity:0.45;stroke:#e65100;stroke-width:0.05;stroke-linejoin:round}\n"
         ".lattice{fill:none;stroke:#37474f;stroke-width:0.03}\n"
         "</style>\n";

  for (const auto& [k, poly] : rhombi) {
    out += "<polygon class=\"face" + std::to_string(k) + "\" points=\"";
    emit_points(out, poly);
    out += "\"/>\n";
  }
  for (const SceneLayer& layer : scene.layers) {
    for (const auto& path : layer.paths) {
      out += layer.closed ? "<polygon class=\"" : "<polyline class=\"";
      out += layer.css_class;
      out += "\" points=\"";
      emit_points(out, path);
      out += "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace necker
