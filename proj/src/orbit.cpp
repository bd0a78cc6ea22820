#include "orbitcert/orbit.hpp"

#include <algorithm>
#include <deque>

#include "orbitcert/error.hpp"

namespace orbitcert {

std::optional<std::size_t> OrbitGraph::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OrbitGraph::frontier_edge_count() const {
  std::size_t n = 0;
  for (const auto& row : edges_) n += static_cast<std::size_t>(std::count(row.begin(), row.end(), kFrontier));
  return n;
}

std::vector<std::size_t> OrbitGraph::sphere_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_depth()) + 1, 0);
  for (std::int64_t d : depth_) ++out[static_cast<std::size_t>(d)];
  return out;
}

std::vector<std::size_t> OrbitGraph::tree_path(std::size_t v) const {
  std::vector<std::size_t> path;
  for (auto cur = static_cast<std::int64_t>(v); parent_[cur] >= 0; cur = parent_[cur]) {
    path.push_back(parent_label_[cur]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

OrbitGraph orbit_bounded(const ActionSpec& spec, const Point& x, std::size_t budget,
                         const OrbitOptions& options) {
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "orbit budget must be at least 1");
  spec.validate(x);

  OrbitGraph g;
  g.budget_ = budget;
  if (options.subgroup_words.empty()) {
    for (Letter l : spec.symmetric_closure()) g.labels_.push_back(GroupWord::single(l));
  } else {
    for (const auto& w : options.subgroup_words) {
      spec.validate(w);
      g.labels_.push_back(w);
      g.labels_.push_back(w.inverse());
    }
  }
  // Single letters skip the generic word evaluation.
  std::vector<std::optional<Letter>> fast(g.labels_.size());
  for (std::size_t k = 0; k < g.labels_.size(); ++k) {
    if (g.labels_[k].size() == 1) fast[k] = g.labels_[k].letters.front();
  }

  auto add_vertex = [&](Point p, std::int64_t depth, std::int64_t parent, std::size_t label) {
    std::size_t id = g.vertices_.size();
    g.index_.emplace(p, id);
    g.vertices_.push_back(std::move(p));
    g.depth_.push_back(depth);
    g.parent_.push_back(parent);
    g.parent_label_.push_back(label);
    g.edges_.emplace_back(g.labels_.size(), OrbitGraph::kFrontier);
    return id;
  };
  add_vertex(x, 0, -1, 0);

  bool truncated = false;
  for (std::size_t v = 0; v < g.vertices_.size(); ++v) {
    std::int64_t d = g.depth_[v];
    for (std::size_t k = 0; k < g.labels_.size(); ++k) {
      Point q = g.vertices_[v];
      if (fast[k]) {
        spec.apply_letter_in_place(*fast[k], q);
      } else {
        const auto& letters = g.labels_[k].letters;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) spec.apply_letter_in_place(*it, q);
      }
      auto found = g.index_.find(q);
      if (found != g.index_.end()) {
        g.edges_[v][k] = static_cast<std::int64_t>(found->second);
        continue;
      }
      bool depth_capped = options.max_depth && d >= *options.max_depth;
      if (depth_capped || g.vertices_.size() >= budget) {
        truncated = true;
        continue;
      }
      std::size_t id = add_vertex(std::move(q), d + 1, static_cast<std::int64_t>(v), k);
      g.edges_[v][k] = static_cast<std::int64_t>(id);
    }
  }
  g.status_ = truncated ? OrbitGraph::Status::Truncated : OrbitGraph::Status::Finite;
  return g;
}

}  // namespace orbitcert
