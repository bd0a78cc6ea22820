#include "orbitcert/locfin.hpp"

#include <unordered_map>
#include <unordered_set>

#include "orbitcert/error.hpp"
#include "orbitcert/metric.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

bool LocalFinitenessReport::all_finite() const {
  for (const auto& v : verdicts) {
    if (v.kind != OrbitVerdict::Kind::Finite) return false;
  }
  return true;
}

LocalFinitenessReport test_local_finiteness(const ActionSpec& spec, const std::vector<Point>& base_points,
                                            const std::optional<std::vector<GroupWord>>& subgroup_words,
                                            std::size_t budget) {
  LocalFinitenessReport report;
  report.budget = budget;
  report.subgroup_words = subgroup_words;
  OrbitOptions opts;
  if (subgroup_words) {
    if (subgroup_words->empty()) throw Error(ErrorKind::InvalidArgument, "subgroup needs at least one word");
    opts.subgroup_words = *subgroup_words;
  }
  for (const auto& x : base_points) {
    OrbitGraph g = orbit_bounded(spec, x, budget, opts);
    OrbitVerdict v;
    v.base = x;
    v.kind = g.finite() ? OrbitVerdict::Kind::Finite : OrbitVerdict::Kind::Unknown;
    v.orbit_size = g.size();
    v.frontier_edges = g.frontier_edge_count();
    v.max_depth = g.max_depth();
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

namespace {

GeodesicRay bfs_ray(const ActionSpec& spec, const Point& x, std::size_t length, std::size_t budget) {
  OrbitOptions opts;
  opts.max_depth = static_cast<std::int64_t>(length);
  OrbitGraph g = orbit_bounded(spec, x, budget, opts);
  const auto target_depth = static_cast<std::int64_t>(length);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.depth(v) != target_depth) continue;
    GeodesicRay ray{x, {}, false};
    for (std::size_t label : g.tree_path(v)) ray.letters.push_back(g.labels()[label].letters.front());
    return ray;
  }
  if (g.finite()) throw OrbitIsFiniteError(g.max_depth(), g.size());
  throw Error(ErrorKind::BudgetTooSmall, "orbit exploration truncated at " + std::to_string(g.size()) +
                                             " points before reaching depth " + std::to_string(length));
}

class LexGeodesicSearch {
 public:
  LexGeodesicSearch(const ActionSpec& spec, const Point& x, std::size_t length, std::size_t budget)
      : spec_(spec), base_(x), length_(length), budget_(budget) {}

  GeodesicRay run() {
    GeodesicRay ray{base_, {}, false};
    if (!extend(base_, 0, ray.letters)) {
      // Every geodesic dead-ends before N: the orbit has bounded depth.
      throw Error(ErrorKind::BudgetTooSmall, "no geodesic of length " + std::to_string(length_) + " found");
    }
    return ray;
  }

 private:
  bool extend(const Point& p, std::size_t depth, std::vector<Letter>& path) {
    if (depth == length_) return true;
    for (Letter l : spec_.symmetric_closure()) {
      Point q = spec_.apply_letter(l, p);
      if (closed_form_distance(spec_, base_, q) != static_cast<std::int64_t>(depth) + 1) continue;
      if (dead_.contains(q)) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::BudgetTooSmall, "geodesic search exceeded " + std::to_string(budget_) +
                                                   " nodes before reaching depth " + std::to_string(length_));
      }
      path.push_back(l);
      if (extend(q, depth + 1, path)) return true;
      path.pop_back();
      dead_.insert(std::move(q));
    }
    return false;
  }

  const ActionSpec& spec_;
  Point base_;
  std::size_t length_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<Point, PointHash> dead_;
};

}  // namespace

GeodesicRay find_geodesic_ray(const ActionSpec& spec, const Point& x, std::size_t length,
                              std::size_t budget, RayStrategy strategy) {
  if (length < 2) throw Error(ErrorKind::InvalidArgument, "ray length must be at least 2");
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be at least 1");
  spec.validate(x);
  if (strategy == RayStrategy::Auto) {
    strategy = has_closed_form_metric(spec) ? RayStrategy::LexGeodesic : RayStrategy::Bfs;
  }
  if (strategy == RayStrategy::LexGeodesic && !has_closed_form_metric(spec)) {
    throw Error(ErrorKind::InvalidArgument, "lex-geodesic search needs an exact metric for this family");
  }
  GeodesicRay ray = strategy == RayStrategy::Bfs ? bfs_ray(spec, x, length, budget)
                                                 : LexGeodesicSearch(spec, x, length, budget).run();
  certify_simple(spec, ray);
  return ray;
}

void certify_simple(const ActionSpec& spec, GeodesicRay& ray) {
  ray.certified_simple = false;
  std::vector<Point> points = trace_path(spec, ray.base, ray.letters);
  std::unordered_map<Point, std::size_t, PointHash> seen;
  seen.emplace(ray.base, 0);
  for (std::size_t n = 0; n < points.size(); ++n) {
    auto [it, fresh] = seen.emplace(points[n], n + 1);
    if (!fresh) throw NotSimpleError(it->second, n + 1);
  }
  ray.certified_simple = true;
}

RayCertificate ray_to_certificate(const ActionSpec& spec, const GeodesicRay& ray) {
  if (!ray.certified_simple) throw Error(ErrorKind::InvalidArgument, "ray is not certified simple");
  if (ray.letters.size() < 2) throw Error(ErrorKind::InvalidArgument, "ray length must be at least 2");
  RayCertificate c;
  c.base = ray.base;
  c.letters = ray.letters;
  c.gamma = trace_path(spec, ray.base, ray.letters);
  for (Letter s : spec.symmetric_closure()) c.pieces.push_back(RayPiece{s, {}});
  const std::size_t n = ray.letters.size();
  for (std::size_t k = 1; k < n; ++k) {
    // gamma[k-1] = s_k...s_1 x joins A_{s_{k+1}}.
    c.pieces[ray.letters[k].closure_position()].set.insert(c.gamma[k - 1]);
  }
  c.target = PointSet(c.gamma.begin() + 1, c.gamma.end());
  return c;
}

Json to_json(const ActionSpec& spec, const LocalFinitenessReport& r) {
  Json j = Json::object();
  j["verdict"] = r.all_finite() ? "Finite" : "Unknown";
  j["budget"] = r.budget;
  if (r.subgroup_words) {
    Json words = Json::array();
    for (const auto& w : *r.subgroup_words) words.push_back(word_to_json(spec, w));
    j["subgroup_words"] = words;
  } else {
    j["subgroup_words"] = nullptr;
  }
  Json points = Json::array();
  for (const auto& v : r.verdicts) {
    Json e = {{"base", point_to_json(spec, v.base)}, {"max_depth", v.max_depth}};
    if (v.kind == OrbitVerdict::Kind::Finite) {
      e["result"] = "Finite";
      e["orbit_size"] = v.orbit_size;
    } else {
      e["result"] = "Unknown";
      e["explored"] = v.orbit_size;
      e["frontier_edges"] = v.frontier_edges;
    }
    points.push_back(e);
  }
  j["points"] = points;
  return j;
}

Json to_json(const ActionSpec& spec, const GeodesicRay& ray) {
  Json j = Json::object();
  j["base"] = point_to_json(spec, ray.base);
  j["letters"] = letters_to_json(spec, ray.letters);
  j["length"] = ray.letters.size();
  j["certified_simple"] = ray.certified_simple;
  j["endpoint"] = point_to_json(spec, ray.letters.empty() ? ray.base : trace_path(spec, ray.base, ray.letters).back());
  return j;
}

GeodesicRay ray_from_json(const ActionSpec& spec, const Json& j) {
  GeodesicRay ray;
  ray.base = point_from_json(spec, require_field(j, "base", "ray"));
  ray.letters = letters_from_json(spec, require_field(j, "letters", "ray"));
  return ray;
}

}  // namespace orbitcert
