#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/point.hpp"
#include "orbitcert/word.hpp"

namespace orbitcert {

struct OrbitOptions {
  /// Vertices at this depth are recorded but not expanded.
  std::optional<std::int64_t> max_depth;
  /// Edge labels of the Schreier graph. Empty means the symmetric closure of
  /// the spec's generators; otherwise each word and its inverse is a label.
  std::vector<GroupWord> subgroup_words;
};

/// The explored part of the Schreier graph around `base`, in BFS order.
class OrbitGraph {
 public:
  enum class Status { Finite, Truncated };
  static constexpr std::int64_t kFrontier = -1;

  const Point& base() const { return vertices_.front(); }
  Status status() const { return status_; }
  bool finite() const { return status_ == Status::Finite; }
  std::size_t budget() const { return budget_; }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  std::int64_t depth(std::size_t i) const { return depth_[i]; }
  const std::vector<std::int64_t>& depths() const { return depth_; }

  /// Edge labels in traversal order.
  const std::vector<GroupWord>& labels() const { return labels_; }
  /// edges(v)[k] is the vertex reached from v along labels()[k], or kFrontier.
  const std::vector<std::int64_t>& edges(std::size_t v) const { return edges_[v]; }

  std::optional<std::size_t> index_of(const Point& p) const;
  std::int64_t max_depth() const { return depth_.empty() ? 0 : depth_.back(); }
  std::size_t frontier_edge_count() const;
  /// Number of vertices at each depth 0..max_depth().
  std::vector<std::size_t> sphere_sizes() const;

  /// Label indices along the BFS tree path from base to vertex v, in
  /// application order.
  std::vector<std::size_t> tree_path(std::size_t v) const;

 private:
  friend OrbitGraph orbit_bounded(const ActionSpec&, const Point&, std::size_t, const OrbitOptions&);

  std::vector<Point> vertices_;
  std::vector<std::int64_t> depth_;
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> parent_label_;
  std::vector<std::vector<std::int64_t>> edges_;
  std::vector<GroupWord> labels_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
  Status status_ = Status::Finite;
  std::size_t budget_ = 0;
};

/// Breadth-first exploration from x visiting labels in their declared order,
/// keeping at most `budget` vertices. Every vertex's out-edges are resolved;
/// edges that would need a vertex beyond the budget (or beyond max_depth) are
/// frontier markers. Status is Finite iff no frontier marker remains.
OrbitGraph orbit_bounded(const ActionSpec& spec, const Point& x, std::size_t budget,
                         const OrbitOptions& options = {});

}  // namespace orbitcert
