#include "orbitcert/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/error.hpp"
#include "orbitcert/json_io.hpp"
#include "orbitcert/locfin.hpp"
#include "orbitcert/matching.hpp"
#include "orbitcert/orbit.hpp"
#include "orbitcert/roe_witness.hpp"
#include "orbitcert/selftest.hpp"
#include "orbitcert/transitive.hpp"

namespace orbitcert {

namespace {

struct Outcome {
  Json report;
  int exit_code = kExitPass;
  std::optional<Json> artifact;
};

ActionSpec load_spec(const RunConfig& cfg) {
  if (cfg.spec_path.empty()) throw Error(ErrorKind::InvalidArgument, "--spec is required for '" + cfg.command + "'");
  return spec_from_json(read_json_file(cfg.spec_path));
}

Point base_point(const ActionSpec& spec, const std::string& literal) {
  if (literal.empty()) return spec.origin();
  return point_from_json(spec, parse_json_text(literal, "point literal"));
}

PointSet set_literal(const ActionSpec& spec, const std::string& literal, const char* flag) {
  if (literal.empty()) throw Error(ErrorKind::InvalidArgument, std::string(flag) + " is required");
  return point_set_from_json(spec, parse_json_text(literal, flag));
}

// Accepts either the bare object or a CLI report that wraps it under `key`.
Json unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key) && j[key].is_object()) return j[key];
  return j;
}

Certificate load_certificate(const ActionSpec& spec, const RunConfig& cfg) {
  if (cfg.cert_path.empty()) throw Error(ErrorKind::InvalidArgument, "--cert is required");
  return certificate_from_json(spec, unwrap(read_json_file(cfg.cert_path), "certificate"));
}

GeodesicRay load_ray(const ActionSpec& spec, const RunConfig& cfg) {
  if (cfg.ray_path.empty()) throw Error(ErrorKind::InvalidArgument, "--ray is required");
  return ray_from_json(spec, unwrap(read_json_file(cfg.ray_path), "ray"));
}

std::size_t require_length(const RunConfig& cfg) {
  if (!cfg.length) throw Error(ErrorKind::InvalidArgument, "--length is required");
  return *cfg.length;
}

PointSet window_points(const ActionSpec& spec, const RunConfig& cfg) {
  if (!cfg.window_radius) return {};
  return Window::ball(spec, base_point(spec, cfg.center), *cfg.window_radius, cfg.budget).as_set();
}

Outcome cmd_orbit(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  OrbitOptions opts;
  opts.max_depth = cfg.max_depth;
  OrbitGraph g = orbit_bounded(spec, base_point(spec, cfg.base), cfg.budget, opts);
  Outcome o;
  o.report["verdict"] = g.finite() ? "Finite" : "Truncated";
  o.report["base"] = point_to_json(spec, g.base());
  o.report["size"] = g.size();
  o.report["max_depth"] = g.max_depth();
  o.report["sphere_sizes"] = g.sphere_sizes();
  o.report["frontier_edges"] = g.frontier_edge_count();
  o.report["budget"] = cfg.budget;
  if (cfg.list_vertices) {
    Json vs = Json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
      vs.push_back({{"point", point_to_json(spec, g.vertex(v))}, {"depth", g.depth(v)}, {"edges", g.edges(v)}});
    }
    o.report["vertices"] = vs;
  }
  o.exit_code = g.finite() ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_locfin(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  std::vector<Point> points;
  if (!cfg.points.empty()) {
    auto set = point_set_from_json(spec, parse_json_text(cfg.points, "--points"));
    points.assign(set.begin(), set.end());
  } else if (spec.has_finite_universe()) {
    for (std::size_t i = 0; i < spec.parameter(); ++i) points.push_back(Point{static_cast<std::int64_t>(i)});
  } else {
    points.push_back(base_point(spec, cfg.base));
  }
  std::optional<std::vector<GroupWord>> subgroup;
  if (!cfg.subgroup.empty()) {
    Json words = parse_json_text(cfg.subgroup, "--subgroup");
    if (!words.is_array()) throw Error(ErrorKind::ParseError, "field 'subgroup': expected an array of words");
    subgroup.emplace();
    for (const auto& w : words) subgroup->push_back(word_from_json(spec, w));
  }
  LocalFinitenessReport r = test_local_finiteness(spec, points, subgroup, cfg.budget);
  Outcome o;
  o.report = to_json(spec, r);
  o.exit_code = r.all_finite() ? kExitPass : kExitFail;
  return o;
}

RayStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return RayStrategy::Auto;
  if (s == "bfs") return RayStrategy::Bfs;
  if (s == "lex") return RayStrategy::LexGeodesic;
  throw Error(ErrorKind::InvalidArgument, "--strategy must be auto, bfs or lex");
}

Outcome cmd_find_ray(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  Point x = base_point(spec, cfg.base);
  Outcome o;
  try {
    GeodesicRay ray = find_geodesic_ray(spec, x, require_length(cfg), cfg.budget, parse_strategy(cfg.strategy));
    o.report["verdict"] = "Pass";
    o.report["ray"] = to_json(spec, ray);
    o.artifact = o.report["ray"];
  } catch (const OrbitIsFiniteError& e) {
    o.report["verdict"] = "OrbitIsFinite";
    o.report["base"] = point_to_json(spec, x);
    o.report["diameter"] = e.diameter();
    o.report["orbit_size"] = e.orbit_size();
    o.exit_code = kExitFail;
  }
  return o;
}

Outcome cmd_certify_ray(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  GeodesicRay ray = load_ray(spec, cfg);
  certify_simple(spec, ray);
  RayCertificate cert = ray_to_certificate(spec, ray);
  VerificationReport r = verify_ray(spec, cert);
  Outcome o;
  o.report["verdict"] = r.pass() ? "Pass" : "Fail";
  o.report["certificate"] = to_json(spec, Certificate{cert});
  o.report["verification"] = to_json(spec, r);
  o.artifact = o.report["certificate"];
  o.exit_code = r.pass() ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_verify(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  Certificate cert = load_certificate(spec, cfg);
  Outcome o;
  VerificationReport r;
  if (const auto* f = std::get_if<FiniteCertificate>(&cert)) {
    r = verify_finite(spec, *f);
    o.report["kind"] = "finite";
  } else if (const auto* ray = std::get_if<RayCertificate>(&cert)) {
    r = verify_ray(spec, *ray);
    o.report["kind"] = "ray";
    o.report["depth"] = ray->letters.size();
  } else {
    ExtendedWindowReport ew = verify_extended(spec, std::get<ExtendedCertificate>(cert), window_points(spec, cfg));
    r = ew.report;
    o.report["kind"] = "extended";
    o.report["window_size"] = ew.window.size();
    o.report["missing_from_target"] = points_to_json(spec, ew.missing);
    o.report["boundary"] = points_to_json(spec, ew.boundary);
  }
  Json rj = to_json(spec, r);
  for (auto it = rj.begin(); it != rj.end(); ++it) o.report[it.key()] = it.value();
  o.exit_code = r.pass() ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_match(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  MatchReport m = match_oracle(spec, set_literal(spec, cfg.set_a, "--set-a"), set_literal(spec, cfg.set_b, "--set-b"),
                               cfg.max_word_len);
  Outcome o;
  o.report = to_json(spec, m);
  if (m.certificate) {
    o.report["verification"] = to_json(spec, verify_finite(spec, *m.certificate));
    o.artifact = o.report["certificate"];
  }
  o.exit_code = m.certificate ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_brute(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  PointSet a = set_literal(spec, cfg.set_a, "--set-a");
  PointSet b = set_literal(spec, cfg.set_b, "--set-b");
  BruteForceOptions opts{cfg.max_word_len, cfg.max_pieces.value_or(a.size()), cfg.node_cap};
  auto cert = brute_force_pieces(spec, a, b, opts);
  Outcome o;
  o.report["verdict"] = cert ? "Some" : "None";
  o.report["max_word_len"] = opts.max_word_len;
  o.report["max_pieces"] = opts.max_pieces;
  o.report["certificate"] = cert ? to_json(spec, Certificate{*cert}) : Json(nullptr);
  if (cert) o.artifact = o.report["certificate"];
  o.exit_code = cert ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_extend(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  Certificate cert = load_certificate(spec, cfg);
  ExtendedCertificate ext;
  if (const auto* f = std::get_if<FiniteCertificate>(&cert)) {
    ext = extend_to_full_set(spec, *f);
  } else if (const auto* r = std::get_if<RayCertificate>(&cert)) {
    ext = extend_to_full_set(spec, *r);
  } else {
    throw Error(ErrorKind::InvalidArgument, "certificate is already extended");
  }
  ExtendedWindowReport ew = verify_extended(spec, ext, window_points(spec, cfg));
  Outcome o;
  o.report["verdict"] = ew.report.pass() ? "Pass" : "Fail";
  o.report["certificate"] = to_json(spec, Certificate{ext});
  o.report["verification"] = to_json(spec, ew.report);
  o.report["window_size"] = ew.window.size();
  o.report["missing_from_target"] = points_to_json(spec, ew.missing);
  o.report["boundary"] = points_to_json(spec, ew.boundary);
  o.artifact = o.report["certificate"];
  o.exit_code = ew.report.pass() ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_roe_witness(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  if (!cfg.window_radius) throw Error(ErrorKind::InvalidArgument, "--window-radius is required");
  Certificate cert = load_certificate(spec, cfg);
  Window window = Window::ball(spec, base_point(spec, cfg.center), *cfg.window_radius, cfg.budget);

  VerificationReport r;
  if (const auto* f = std::get_if<FiniteCertificate>(&cert)) {
    r = verify_finite(spec, *f);
  } else if (const auto* ray = std::get_if<RayCertificate>(&cert)) {
    r = verify_ray(spec, *ray);
  } else {
    r = verify_extended(spec, std::get<ExtendedCertificate>(cert), window.as_set()).report;
  }
  Outcome o;
  o.report["verification"] = to_json(spec, r);
  if (!r.pass()) {
    o.report["verdict"] = "Fail";
    o.exit_code = kExitFail;
    return o;
  }
  Witness w = build_witness(spec, cert, window);
  GapReport gap = finiteness_gap(w);
  bool ok = w.identities_hold() && w.is_partial_permutation();
  o.report["verdict"] = ok ? "Pass" : "Fail";
  o.report["witness"] = to_json(spec, w);
  o.report["gap"] = to_json(gap);
  o.exit_code = ok ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_embed_profile(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  EmbeddingMap f;
  if (!cfg.map_path.empty()) {
    f = embedding_map_from_json(spec, unwrap(read_json_file(cfg.map_path), "map"));
  } else {
    GeodesicRay ray = load_ray(spec, cfg);
    certify_simple(spec, ray);
    f = ray_embedding(spec, ray);
  }
  EmbeddingProfile p = embedding_profile(spec, f, cfg.budget);
  Outcome o;
  o.report = to_json(p);
  o.report["verdict"] = p.injective ? "Injective" : "NotInjective";
  o.exit_code = p.injective ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_extend_transitive(const RunConfig& cfg) {
  ActionSpec spec = load_spec(cfg);
  TransitiveExtension t = extend_transitive(spec, cfg.budget);
  Outcome o;
  o.report["verdict"] = t.transitive ? "Pass" : "Fail";
  o.report["representatives"] = t.representatives;
  o.report["added_generators"] = t.added_generators;
  o.report["spec"] = spec_to_json(t.spec);
  o.artifact = o.report["spec"];
  o.exit_code = t.transitive ? kExitPass : kExitFail;
  return o;
}

Outcome cmd_selftest(const RunConfig&) {
  Outcome o;
  OracleSweepResult sweep = oracle_sweep(small_finite_specs());
  o.report["oracle_sweep"] = to_json(sweep);
  bool ok = sweep.ok();
  Json rays = Json::object();
  for (const auto& family : infinite_specs()) {
    RayRoundTripResult r = ray_round_trips(family, 100, 100, 1'000'000);
    Json rj = to_json(r);
    rj.erase("fixtures");
    rays[family.name] = rj;
    ok = ok && r.ok();
  }
  o.report["ray_round_trips"] = rays;
  o.report["verdict"] = ok ? "Pass" : "Fail";
  o.exit_code = ok ? kExitPass : kExitFail;
  return o;
}

using Handler = std::function<Outcome(const RunConfig&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"orbit", cmd_orbit},
      {"locfin", cmd_locfin},
      {"find-ray", cmd_find_ray},
      {"certify-ray", cmd_certify_ray},
      {"verify", cmd_verify},
      {"match", cmd_match},
      {"brute-pieces", cmd_brute},
      {"extend", cmd_extend},
      {"roe-witness", cmd_roe_witness},
      {"embed-profile", cmd_embed_profile},
      {"extend-transitive", cmd_extend_transitive},
      {"selftest", cmd_selftest},
  };
  return table;
}

void write_text(const Json& report, std::ostream& out) {
  for (auto it = report.begin(); it != report.end(); ++it) {
    const Json& v = it.value();
    std::string rendered = v.dump();
    if (v.is_structured() && rendered.size() > 120) {
      out << it.key() << ": <" << v.size() << " entries>\n";
    } else {
      out << it.key() << ": " << rendered << "\n";
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                            std::ostream& err, int& exit_code) {
  RunConfig cfg;
  CLI::App app{"Equidecomposition certificates and local finiteness for group actions"};
  app.add_option("command", cfg.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--spec", cfg.spec_path, "Action spec JSON file");
  app.add_option("--budget", cfg.budget, "Vertex / search-node budget")->check(CLI::PositiveNumber);
  app.add_option("--length", cfg.length, "Ray length N")->check(CLI::Range(std::size_t{2}, std::size_t{10'000'000}));
  app.add_option("--max-word-len", cfg.max_word_len, "Maximum word length L");
  app.add_option("--max-pieces", cfg.max_pieces, "Maximum number of pieces K")->check(CLI::PositiveNumber);
  app.add_option("--window-radius", cfg.window_radius, "Window radius R")->check(CLI::NonNegativeNumber);
  app.add_option("--max-depth", cfg.max_depth, "Depth cap for orbit exploration")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--vertices", cfg.list_vertices, "List explored vertices (orbit)");
  app.add_option("--base", cfg.base, "Base point as a JSON literal");
  app.add_option("--center", cfg.center, "Window center as a JSON literal");
  app.add_option("--points", cfg.points, "Base points as a JSON array (locfin)");
  app.add_option("--subgroup", cfg.subgroup, "Subgroup generators as a JSON array of words");
  app.add_option("--set-a", cfg.set_a, "Source set as a JSON array");
  app.add_option("--set-b", cfg.set_b, "Target set as a JSON array");
  app.add_option("--cert", cfg.cert_path, "Certificate JSON file");
  app.add_option("--ray", cfg.ray_path, "Ray JSON file");
  app.add_option("--map", cfg.map_path, "Embedding map JSON file");
  app.add_option("--out", cfg.out_path, "Write the produced ray, certificate or spec here");
  app.add_option("--strategy", cfg.strategy, "Ray search: auto, bfs or lex")
      ->check(CLI::IsMember({"auto", "bfs", "lex"}));
  app.add_option("--node-cap", cfg.node_cap, "Search-node cap for brute-pieces")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    exit_code = app.exit(e, out, err);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? 0 : kExitError;
    return std::nullopt;
  }
  exit_code = kExitPass;
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto it = handlers().find(config.command);
  if (it == handlers().end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kExitError;
  }
  try {
    Outcome o = it->second(config);
    Json report = Json::object();
    report["command"] = config.command;
    for (auto kv = o.report.begin(); kv != o.report.end(); ++kv) report[kv.key()] = kv.value();
    if (!config.out_path.empty() && o.artifact) {
      std::ofstream f(config.out_path);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + config.out_path + "'");
      f << o.artifact->dump(2) << "\n";
    }
    if (config.json) {
      out << report.dump(2) << "\n";
    } else {
      write_text(report, out);
    }
    return o.exit_code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace orbitcert
