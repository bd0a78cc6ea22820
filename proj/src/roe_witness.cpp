#include "orbitcert/roe_witness.hpp"

#include <algorithm>
#include <cstdlib>

#include "orbitcert/error.hpp"
#include "orbitcert/metric.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

Window Window::from_points(const PointSet& points) {
  Window w;
  w.set_ = points;
  w.points_.assign(points.begin(), points.end());
  for (std::size_t i = 0; i < w.points_.size(); ++i) w.rows_.emplace(w.points_[i], i);
  return w;
}

Window Window::ball(const ActionSpec& spec, const Point& center, std::int64_t radius, std::size_t budget) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "window radius must be nonnegative");
  OrbitOptions opts;
  opts.max_depth = radius;
  OrbitGraph g = orbit_bounded(spec, center, budget, opts);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.depth(v) >= radius) break;
    const auto& e = g.edges(v);
    if (std::find(e.begin(), e.end(), OrbitGraph::kFrontier) != e.end()) {
      throw Error(ErrorKind::BudgetTooSmall, "ball of radius " + std::to_string(radius) +
                                                 " exceeds " + std::to_string(budget) + " points");
    }
  }
  return from_points(PointSet(g.vertices().begin(), g.vertices().end()));
}

std::optional<std::size_t> Window::row(const Point& p) const {
  auto it = rows_.find(p);
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t;
  for (const auto& [ij, v] : m) t.emplace(std::make_pair(ij.second, ij.first), v);
  return t;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>> b_rows;
  for (const auto& [ij, v] : b) b_rows[ij.first].emplace_back(ij.second, v);
  SparseMatrix out;
  for (const auto& [ij, v] : a) {
    auto it = b_rows.find(ij.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, w] : it->second) out[{ij.first, col}] += v * w;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

SparseMatrix diagonal_indicator(const Window& w, const PointSet& points) {
  SparseMatrix d;
  for (const auto& p : points) {
    auto r = w.row(p);
    if (!r) throw Error(ErrorKind::InvalidArgument, "point outside window");
    d.emplace(std::make_pair(*r, *r), 1);
  }
  return d;
}

bool Witness::identities_hold() const {
  return vtv == diagonal_indicator(window, safe) && vvt == diagonal_indicator(window, safe_image);
}

bool Witness::is_partial_permutation() const {
  std::map<std::size_t, int> rows;
  std::map<std::size_t, int> cols;
  for (const auto& [ij, v] : isometry) {
    if (v != 1) return false;
    if (++rows[ij.first] > 1 || ++cols[ij.second] > 1) return false;
  }
  return true;
}

Witness build_witness(const ActionSpec& spec, const Certificate& c, const Window& window) {
  WindowedMap m = restrict_to_window(spec, c, window.as_set());
  if (m.source.empty()) throw Error(ErrorKind::WindowDisjoint, "certificate source does not meet the window");
  Witness w{window, m.source, m.target, {}, {}, {}, {}, {}, {}, {}};
  for (const auto& [a, b] : m.arrows) {
    auto col = window.row(a);
    auto row = window.row(b);
    if (!col || !row) continue;
    w.safe.insert(a);
    w.safe_image.insert(b);
    w.isometry[{*row, *col}] += 1;
  }
  w.projection_source = diagonal_indicator(window, w.source);
  w.projection_target = diagonal_indicator(window, w.target);
  SparseMatrix vt = transpose(w.isometry);
  w.vtv = multiply(vt, w.isometry);
  w.vvt = multiply(w.isometry, vt);
  return w;
}

namespace {

std::optional<std::int64_t> diagonal_rank(const SparseMatrix& m) {
  std::int64_t rank = 0;
  for (const auto& [ij, v] : m) {
    if (ij.first != ij.second) return std::nullopt;
    if (v != 0) ++rank;
  }
  return rank;
}

}  // namespace

GapReport finiteness_gap(const Witness& w) {
  auto rv = diagonal_rank(w.vtv);
  auto rw = diagonal_rank(w.vvt);
  if (!rv || !rw) throw Error(ErrorKind::CertificateInvalid, "V is not a partial isometry on this window");
  GapReport g;
  g.rank_vtv = *rv;
  g.rank_vvt = *rw;
  g.rank_gap = *rv - *rw;
  g.point_count_gap = static_cast<std::int64_t>(w.source.size()) - static_cast<std::int64_t>(w.target.size());
  g.boundary_deficit = static_cast<std::int64_t>(w.source.size()) - static_cast<std::int64_t>(w.safe.size());
  g.flagged = g.rank_gap == 0 && g.point_count_gap > 0;
  return g;
}

EmbeddingMap ray_embedding(const ActionSpec& spec, const GeodesicRay& ray) {
  EmbeddingMap f;
  f.first = 0;
  f.values.push_back(ray.base);
  for (auto& p : trace_path(spec, ray.base, ray.letters)) f.values.push_back(std::move(p));
  return f;
}

EmbeddingProfile embedding_profile(const ActionSpec& spec, const EmbeddingMap& f, std::size_t metric_budget) {
  if (f.values.empty()) throw Error(ErrorKind::InvalidArgument, "embedding map has an empty domain");
  for (const auto& p : f.values) spec.validate(p);
  const std::size_t n = f.values.size();
  const std::size_t span = n - 1;

  EmbeddingProfile prof;
  prof.first = f.first;
  prof.last = f.last();
  prof.injective = PointSet(f.values.begin(), f.values.end()).size() == n;

  // dist[gap] collects the word lengths of f(x) f(y)^-1 for |x - y| = gap.
  WordMetric metric(spec, metric_budget);
  std::vector<std::optional<std::int64_t>> max_at_gap(span + 1, std::int64_t{0});
  std::vector<std::pair<std::int64_t, std::size_t>> finite_pairs;  // (length, gap)
  std::int64_t max_length = 0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = y + 1; x < n; ++x) {
      std::size_t gap = x - y;
      auto d = metric.distance(f.values[y], f.values[x]);
      if (!d) {
        max_at_gap[gap].reset();
        continue;
      }
      finite_pairs.emplace_back(*d, gap);
      max_length = std::max(max_length, *d);
      if (max_at_gap[gap]) max_at_gap[gap] = std::max(*max_at_gap[gap], *d);
    }
  }

  prof.forward.assign(span + 1, std::int64_t{0});
  std::optional<std::int64_t> running = std::int64_t{0};
  for (std::size_t r = 0; r <= span; ++r) {
    if (!running || !max_at_gap[r]) {
      running.reset();
    } else {
      running = std::max(*running, *max_at_gap[r]);
    }
    prof.forward[r] = running;
  }

  const auto rho_max = static_cast<std::size_t>(std::max<std::int64_t>(max_length, static_cast<std::int64_t>(span)));
  std::vector<std::int64_t> max_gap_at_length(rho_max + 1, 0);
  for (const auto& [len, gap] : finite_pairs) {
    auto& slot = max_gap_at_length[static_cast<std::size_t>(len)];
    slot = std::max(slot, static_cast<std::int64_t>(gap));
  }
  prof.backward.assign(rho_max + 1, 0);
  std::int64_t best = 0;
  for (std::size_t rho = 0; rho <= rho_max; ++rho) {
    best = std::max(best, max_gap_at_length[rho]);
    prof.backward[rho] = best;
  }
  return prof;
}

Json to_json(const ActionSpec& spec, const Witness& w) {
  auto coords = [](const SparseMatrix& m) {
    Json j = Json::array();
    for (const auto& [ij, v] : m) j.push_back({ij.first, ij.second, v});
    return j;
  };
  Json j = Json::object();
  j["window"] = points_to_json(spec, w.window.points());
  j["source"] = points_to_json(spec, w.source);
  j["target"] = points_to_json(spec, w.target);
  j["safe_set"] = points_to_json(spec, w.safe);
  j["safe_image"] = points_to_json(spec, w.safe_image);
  j["P_A"] = coords(w.projection_source);
  j["P_B"] = coords(w.projection_target);
  j["V"] = coords(w.isometry);
  j["VtV"] = coords(w.vtv);
  j["VVt"] = coords(w.vvt);
  j["partial_permutation"] = w.is_partial_permutation();
  j["identities_hold"] = w.identities_hold();
  return j;
}

Json to_json(const GapReport& g) {
  return Json{{"rank_VtV", g.rank_vtv},           {"rank_VVt", g.rank_vvt},
              {"rank_gap", g.rank_gap},           {"point_count_gap", g.point_count_gap},
              {"boundary_deficit", g.boundary_deficit}, {"flagged", g.flagged}};
}

Json to_json(const EmbeddingProfile& p) {
  Json forward = Json::array();
  for (const auto& t : p.forward) forward.push_back(t ? Json(*t) : Json(nullptr));
  return Json{{"domain", {p.first, p.last}},
              {"injective", p.injective},
              {"forward", forward},
              {"backward", p.backward}};
}

EmbeddingMap embedding_map_from_json(const ActionSpec& spec, const Json& j) {
  EmbeddingMap f;
  const auto& first = require_field(j, "first", "map");
  if (!first.is_number_integer()) throw Error(ErrorKind::ParseError, "field 'map.first': expected an integer");
  f.first = first.get<std::int64_t>();
  const auto& values = require_field(j, "values", "map");
  if (!values.is_array()) throw Error(ErrorKind::ParseError, "field 'map.values': expected an array");
  for (const auto& v : values) f.values.push_back(point_from_json(spec, v));
  return f;
}

}  // namespace orbitcert
