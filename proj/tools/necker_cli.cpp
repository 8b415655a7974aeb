// Command-line surface over the library: exact classification and tracing,
// cylinder and tiling reports, homology and Veech-group queries, and the
// recurrence / diffusion experiments. Verdicts are JSON; traces and samples
// are JSON Lines; figures are SVG.

#include "necker/cylinder.hpp"
#include "necker/dynamics.hpp"
#include "necker/homology.hpp"
#include "necker/render.hpp"
#include "necker/tiling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

using namespace necker;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitSingular = 4;
constexpr int kExitNotApplicable = 5;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
  }
};

Direction parse_slope(const std::string& s) {
  auto slash = s.find('/');
  long p = std::stol(s.substr(0, slash));
  long q = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
  return Direction::from_slope(p, q);
}

Vec2r parse_start(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("start must be written as s,t");
  return Vec2r(Rat::parse(s.substr(0, comma)), Rat::parse(s.substr(comma + 1)));
}

json rat_json(const Rat& r) {
  if (r.is_integer() && r.num().fits_long()) return json(r.num().to_long());
  return json(r.str());
}

json vec3l_json(const Vec3l& v) { return json::array({v(0), v(1), v(2)}); }
json vec2l_json(const Vec2l& v) { return json::array({v(0), v(1)}); }

json vec3r_json(const Vec3r& v) {
  return json::array({v(0).str(), v(1).str(), v(2).str()});
}

json state_json(const GeodesicState& st) {
  json j;
  j["square"] = {{"base", vec3l_json(st.square.base)}, {"axis", st.square.axis}};
  j["point"] = json::array({st.point(0).str(), st.point(1).str()});
  j["dir"] = json::array({st.dir(0), st.dir(1)});
  j["embedded"] = vec3r_json(embed(st));
  return j;
}

json outcome_json(const TraceOutcome& out) {
  json j;
  switch (out.kind) {
    case TraceKind::Periodic: j["kind"] = "periodic"; break;
    case TraceKind::DriftPeriodic: j["kind"] = "drift-periodic"; break;
    case TraceKind::Singular: j["kind"] = "singular"; break;
    case TraceKind::Truncated: j["kind"] = "truncated"; break;
  }
  j["crossings"] = out.crossings;
  if (out.kind == TraceKind::Periodic || out.kind == TraceKind::DriftPeriodic) {
    j["length_sq"] = rat_json(out.length_sq);
    j["displacement"] = vec3l_json(out.displacement);
    j["deck_displacement"] = vec2l_json(out.deck_displacement);
  }
  if (out.hit) j["vertex"] = vec3l_json(out.hit->vertex);
  return j;
}

int outcome_exit(const TraceOutcome& out) {
  if (out.kind == TraceKind::Singular) return kExitSingular;
  if (out.kind == TraceKind::Truncated) return kExitTruncated;
  return kExitOk;
}

json saddle_json(const SaddleConnection& sc) {
  json j;
  j["start"] = vec3l_json(sc.start);
  j["end"] = vec3l_json(sc.end);
  j["length_sq"] = rat_json(sc.length_sq);
  return j;
}

json chain_json(const BoundaryChain& c) {
  json j;
  j["saddle_connections"] = json::array();
  for (const SaddleConnection& sc : c.saddles) j["saddle_connections"].push_back(saddle_json(sc));
  j["singularities"] = json::array();
  for (const Vec3l& v : c.singularities) j["singularities"].push_back(vec3l_json(v));
  return j;
}

Mat2z parse_matrix(const std::string& s) {
  std::vector<Zint> vals;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) vals.emplace_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (vals.size() != 4) throw std::invalid_argument("matrix must have four entries a,b,c,d");
  Mat2z m;
  m << vals[0], vals[1], vals[2], vals[3];
  return m;
}

json mat_json(const Mat2z& m) {
  return json::array({json::array({m(0, 0).str(), m(0, 1).str()}),
                      json::array({m(1, 0).str(), m(1, 1).str()})});
}

GeodesicState start_state(const Direction& d, const std::string& start_flag) {
  if (start_flag.empty()) return default_start(d);
  GeodesicState st = default_start(d);
  st.point = parse_start(start_flag);
  if (st.point(0) < Rat(0) || st.point(0) > Rat(1) || st.point(1) < Rat(0) ||
      st.point(1) > Rat(1))
    throw std::invalid_argument("start point must lie in the unit square");
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"necker: exact geodesics, cylinders, tilings and dynamics on the Necker cube surface"};
  app.require_subcommand(1);

  std::string dir_flag, start_flag, out_flag, format_flag = "json", kind_flag = "out";
  std::string matrix_flag, word_flag, class_flag, pq_flag;
  std::int64_t max_crossings = 0, denom_bound = 500, height = 200000, runs = 1, seed = -1;
  double u_angle = 0.0, t_max = 20.0, t_value = 0.0, grid_step = 0.01;
  std::string window_flag = "6";
  bool decompose = false, draw_tiling = false;

  auto add_dir = [&](CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--dir", dir_flag, "slope p/q (direction vector (q,p))");
    if (required) opt->required();
  };

  CLI::App* classify = app.add_subcommand("classify", "classify a direction by exact tracing");
  add_dir(classify);
  classify->add_option("--start", start_flag, "start point s,t on the favorite square");
  classify->add_option("--max-crossings", max_crossings, "crossing cap");
  classify->add_option("--out", out_flag, "output path");

  CLI::App* trace_cmd = app.add_subcommand("trace", "dump the crossing records as JSON lines");
  add_dir(trace_cmd);
  trace_cmd->add_option("--start", start_flag, "start point s,t");
  trace_cmd->add_option("--max-crossings", max_crossings, "crossing cap");
  trace_cmd->add_option("--out", out_flag, "output path");

  CLI::App* cylinders = app.add_subcommand("cylinders", "maximal cylinder report");
  add_dir(cylinders);
  cylinders->add_option("--out", out_flag, "output path");

  CLI::App* tile = app.add_subcommand("tile", "tiling from a simple closed geodesic");
  add_dir(tile);
  tile->add_option("--kind", kind_flag, "out or in")->check(CLI::IsMember({"out", "in"}));
  tile->add_option("--window", window_flag, "window radius (rational)");
  tile->add_option("--format", format_flag, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  tile->add_option("--out", out_flag, "output path");

  CLI::App* homology = app.add_subcommand("homology", "twist action on homology");
  homology->add_option("--word", word_flag, "word over h,v,H,V")->required();
  homology->add_option("--class", class_flag, "homology class c0,c1,c3,c4 to test for lifting");
  homology->add_option("--out", out_flag, "output path");

  CLI::App* veech = app.add_subcommand("veech", "Veech group membership");
  veech->add_option("--matrix", matrix_flag, "integer matrix a,b,c,d")->required();
  veech->add_flag("--decompose", decompose, "only decompose into the twist word");
  veech->add_option("--out", out_flag, "output path");

  CLI::App* busemann = app.add_subcommand("busemann", "Busemann value and closed-form minimum");
  busemann->add_option("--u-angle", u_angle, "direction angle in radians")->required();
  busemann->add_option("--pq", pq_flag, "odd pair q,p")->required();
  busemann->add_option("--t", t_value, "ray parameter");
  busemann->add_option("--out", out_flag, "output path");

  CLI::App* recurrence = app.add_subcommand("recurrence", "record minima along a ray");
  recurrence->add_option("--u-angle", u_angle, "direction angle in radians")->required();
  recurrence->add_option("--t-max", t_max, "ray length");
  recurrence->add_option("--denom-bound", denom_bound, "candidate denominator bound");
  recurrence->add_option("--grid-step", grid_step, "t grid spacing");
  recurrence->add_option("--out", out_flag, "output path");

  CLI::App* diffusion = app.add_subcommand("diffusion", "dyadic diffusion samples");
  diffusion->add_option("--dir", dir_flag, "exact slope p/q (single run)");
  diffusion->add_option("--seed", seed, "RNG seed for the direction ensemble");
  diffusion->add_option("--runs", runs, "ensemble size");
  diffusion->add_option("--height", height, "convergent height bound");
  diffusion->add_option("--t-max", t_max, "trajectory length")->required();
  diffusion->add_option("--out", out_flag, "output path");

  CLI::App* render = app.add_subcommand("render", "SVG figure in isometric projection");
  add_dir(render, false);
  render->add_option("--window", window_flag, "background radius (rational)");
  render->add_flag("--tiling", draw_tiling, "draw the tiling instead of the trace");
  render->add_option("--kind", kind_flag, "out or in")->check(CLI::IsMember({"out", "in"}));
  render->add_option("--start", start_flag, "start point s,t");
  render->add_option("--out", out_flag, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Output out{out_flag};
  try {
    if (classify->parsed()) {
      Direction d = parse_slope(dir_flag);
      GeodesicState st = start_state(d, start_flag);
      TraceOutcome res = trace(st, max_crossings > 0 ? max_crossings : default_max_crossings(d));
      out.write(outcome_json(res).dump() + "\n");
      return outcome_exit(res);
    }

    if (trace_cmd->parsed()) {
      Direction d = parse_slope(dir_flag);
      GeodesicState st = start_state(d, start_flag);
      TraceOutcome res = trace(st, max_crossings > 0 ? max_crossings : default_max_crossings(d));
      std::string lines;
      for (std::size_t i = 1; i < res.path.size(); ++i) {
        json j = state_json(res.path[i].state);
        j["tau"] = res.path[i].tau.str();
        lines += j.dump() + "\n";
      }
      json summary;
      summary["summary"] = outcome_json(res);
      lines += summary.dump() + "\n";
      out.write(lines);
      return outcome_exit(res);
    }

    if (cylinders->parsed()) {
      Direction d = parse_slope(dir_flag);
      TraceOutcome seed_trace = trace(default_start(d), default_max_crossings(d));
      if (seed_trace.kind == TraceKind::Singular) {
        out.write(json{{"error", "singular seed trace"}}.dump() + "\n");
        return kExitSingular;
      }
      if (seed_trace.kind != TraceKind::Periodic) {
        out.write(json{{"error", "direction is not periodic"}}.dump() + "\n");
        return kExitNotApplicable;
      }
      Cylinder cyl = maximal_cylinder(seed_trace);
      json j;
      j["direction"] = json::array({cyl.dir.a, cyl.dir.b});
      j["area"] = rat_json(cyl.area);
      j["circumference_sq"] = rat_json(cyl.circumference_sq);
      j["simple"] = is_simple(seed_trace);
      j["labeled"] = cyl.labeled;
      j["boundaries"] = {{"out", chain_json(cyl.boundary_out)}, {"in", chain_json(cyl.boundary_in)}};
      out.write(j.dump() + "\n");
      return kExitOk;
    }

    if (tile->parsed()) {
      Direction d = parse_slope(dir_flag);
      Tiling tiling;
      try {
        tiling = generate_tiling(d, kind_flag == "out", Rat::parse(window_flag));
      } catch (const NonSimpleDirection&) {
        out.write(json{{"error", "non-simple direction"}}.dump() + "\n");
        return kExitNotApplicable;
      }
      if (format_flag == "svg") {
        Scene scene;
        scene.background_radius = tiling.window_radius;
        SceneLayer layer;
        layer.css_class = "tile";
        layer.closed = true;
        for (const Tile& t : tiling.tiles) layer.paths.push_back(t.plane);
        scene.layers.push_back(layer);
        out.write(render_scene(scene));
        return kExitOk;
      }
      TilingReport rep = verify_tiling(tiling);
      json j;
      j["tiles"] = json::array();
      for (const Tile& t : tiling.tiles) {
        json tj;
        tj["deck"] = vec2l_json(t.deck);
        tj["boundary"] = json::array();
        for (const Vec3r& p : t.plane) tj["boundary"].push_back(vec3r_json(p));
        j["tiles"].push_back(tj);
      }
      j["translations"] = {vec2l_json(tiling.t1), vec2l_json(tiling.t2)};
      j["report"] = {{"covered", rep.covered},
                     {"overlap", rep.overlap},
                     {"area_balance", rep.area_balance},
                     {"tile_area2", rep.tile_area2.str()},
                     {"covolume2", rep.covolume2.str()}};
      out.write(j.dump() + "\n");
      return kExitOk;
    }

    if (homology->parsed()) {
      TwistWord w = TwistWord::parse(word_flag);
      Mat4z psi = psi_star(w);
      json j;
      j["word"] = w.str();
      j["psi"] = json::array();
      for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(psi(r, c).str());
        j["psi"].push_back(row);
      }
      Mat4r b = in_basis_B(psi);
      j["in_basis_B"] = json::array();
      for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) row.push_back(b(r, c).str());
        j["in_basis_B"].push_back(row);
      }
      j["rho"] = mat_json(rho_of(w));
      j["m"] = mat_json(m_of(w));
      WImage img = w_space_image(w);
      j["w_image"] = img == WImage::WPlus ? "W+" : img == WImage::WMinus ? "W-" : "other";
      if (!class_flag.empty()) {
        std::vector<Zint> cs;
        std::string cur;
        for (char c : class_flag + ",") {
          if (c == ',') { cs.emplace_back(cur); cur.clear(); }
          else cur += c;
        }
        if (cs.size() != 4)
          throw std::invalid_argument("class must have four entries c0,c1,c3,c4");
        HomologyClass x;
        for (int i = 0; i < 4; ++i) x(i) = cs[static_cast<std::size_t>(i)];
        j["lifts"] = lifts_to_cover(x);
      }
      out.write(j.dump() + "\n");
      return kExitOk;
    }

    if (veech->parsed()) {
      Mat2z m = parse_matrix(matrix_flag);
      if (decompose) {
        Zint det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (!(det == Zint(1))) {
          out.write(json{{"error", "determinant is not one"}}.dump() + "\n");
          return kExitInvalid;
        }
        auto dec = gamma2_decompose(m);
        if (!dec) {
          out.write(json{{"error", "not in Gamma_2"}}.dump() + "\n");
          return kExitNotApplicable;
        }
        out.write(json{{"word", dec->word.str()}, {"sign", dec->sign}}.dump() + "\n");
        return kExitOk;
      }
      TwoByTwo a;
      a.m = m;
      a.projective = true;
      VeechVerdict verdict = veech_decide(a);
      json j;
      j["member"] = verdict.member;
      if (verdict.member) {
        j["word"] = verdict.word.str();
        j["rotated"] = verdict.rotated;
      }
      out.write(j.dump() + "\n");
      return kExitOk;
    }

    if (busemann->parsed()) {
      UnitDirection u = UnitDirection::from_angle(u_angle);
      auto comma = pq_flag.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("--pq must be q,p");
      PeriodicDatum pd{std::stol(pq_flag.substr(0, comma)), std::stol(pq_flag.substr(comma + 1))};
      if (pd.q % 2 == 0 || pd.p % 2 == 0 || gcd64(pd.p, pd.q) != 1)
        throw std::invalid_argument("--pq must be odd and coprime");
      json j;
      j["value"] = busemann_exp(u, pd, t_value);
      j["log_value"] = std::log(busemann_exp(u, pd, t_value));
      j["min"] = busemann_min(u, pd);
      j["argmin"] = busemann_argmin(u, pd);
      out.write(j.dump() + "\n");
      return kExitOk;
    }

    if (recurrence->parsed()) {
      UnitDirection u = UnitDirection::from_angle(u_angle);
      RecurrenceScan scan = recurrence_scan(u, t_max, denom_bound, grid_step);
      std::string lines;
      for (const RecurrenceRecord& r : scan.records) {
        json j;
        j["t"] = r.t;
        j["value"] = r.value;
        j["q"] = r.pd.q;
        j["p"] = r.pd.p;
        lines += j.dump() + "\n";
      }
      json summary;
      summary["floor"] = scan.floor_value;
      summary["records"] = scan.records.size();
      lines += summary.dump() + "\n";
      out.write(lines);
      return kExitOk;
    }

    if (diffusion->parsed()) {
      std::string lines;
      std::vector<double> exponents;
      if (!dir_flag.empty()) {
        Direction d = parse_slope(dir_flag);
        DiffusionRun run = diffusion_run(d, t_max);
        if (run.singular) {
          out.write(json{{"error", "singular trajectory"}}.dump() + "\n");
          return kExitSingular;
        }
        for (const DiffusionSample& s : run.samples) {
          json j;
          j["T"] = s.T;
          j["deck"] = vec2l_json(s.deck);
          j["dist_sq"] = s.dist_sq;
          lines += j.dump() + "\n";
        }
        json summary;
        summary["direction"] = json::array({d.a, d.b});
        summary["exponent"] = run.exponent;
        lines += summary.dump() + "\n";
        out.write(lines);
        return kExitOk;
      }
      if (seed < 0)
        throw std::invalid_argument("ensemble mode requires --seed");
      std::mt19937 rng(static_cast<std::uint32_t>(seed));
      std::vector<Direction> dirs;
      for (std::int64_t i = 0; i < runs; ++i) {
        double unit = static_cast<double>(rng()) / 4294967296.0;
        double theta = 0.1 + unit * (M_PI / 2 - 0.2);
        dirs.push_back(convergent_direction(UnitDirection::from_angle(theta), height));
      }
      std::vector<DiffusionRun> results(dirs.size());
      std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
      std::vector<std::thread> pool;
      std::atomic<std::size_t> next{0};
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= dirs.size()) return;
            results[i] = diffusion_run(dirs[i], t_max);
          }
        });
      for (auto& th : pool) th.join();
      for (std::size_t i = 0; i < results.size(); ++i) {
        for (const DiffusionSample& s : results[i].samples) {
          json j;
          j["run"] = i;
          j["T"] = s.T;
          j["deck"] = vec2l_json(s.deck);
          j["dist_sq"] = s.dist_sq;
          lines += j.dump() + "\n";
        }
        if (!results[i].singular) exponents.push_back(results[i].exponent);
      }
      std::vector<double> sorted = exponents;
      std::sort(sorted.begin(), sorted.end());
      json summary;
      summary["runs"] = runs;
      summary["exponents"] = exponents;
      summary["median_exponent"] = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
      lines += summary.dump() + "\n";
      out.write(lines);
      return kExitOk;
    }

    if (render->parsed()) {
      Scene scene;
      scene.background_radius = Rat::parse(window_flag);
      if (!dir_flag.empty()) {
        Direction d = parse_slope(dir_flag);
        if (draw_tiling) {
          Tiling tiling;
          try {
            tiling = generate_tiling(d, kind_flag == "out", scene.background_radius);
          } catch (const NonSimpleDirection&) {
            out.write(json{{"error", "non-simple direction"}}.dump() + "\n");
            return kExitNotApplicable;
          }
          SceneLayer layer;
          layer.css_class = "tile";
          layer.closed = true;
          for (const Tile& t : tiling.tiles) layer.paths.push_back(t.plane);
          scene.layers.push_back(layer);
        } else {
          GeodesicState st = start_state(d, start_flag);
          TraceOutcome res =
              trace(st, max_crossings > 0 ? max_crossings : default_max_crossings(d));
          SceneLayer layer;
          layer.css_class = "geodesic";
          layer.closed = res.kind == TraceKind::Periodic;
          std::vector<Vec3r> path;
          std::size_t begin = res.kind == TraceKind::Periodic
                                  ? static_cast<std::size_t>(res.period_begin)
                                  : 0;
          std::size_t end = res.kind == TraceKind::Periodic
                                ? static_cast<std::size_t>(res.period_end)
                                : res.path.size();
          for (std::size_t i = begin; i < end; ++i)
            path.push_back(project(embed(res.path[i].state)));
          layer.paths.push_back(path);
          scene.layers.push_back(layer);
        }
      }
      out.write(render_scene(scene));
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    Output{out_flag}.write(json{{"error", e.what()}}.dump() + "\n");
    return kExitInvalid;
  } catch (const std::exception& e) {
    Output{out_flag}.write(json{{"error", e.what()}}.dump() + "\n");
    return 1;
  }
  return kExitInvalid;
}
