#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "orbitcert/action.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

/// True when Schreier-graph distances of `spec` have an exact formula:
/// the standard lattice Z^d (l1 norm), free groups (reduced length of
/// to.from^-1) and the lamplighter (tour length formula).
bool has_closed_form_metric(const ActionSpec& spec);

/// Exact graph distance from `from` to `to`. Precondition: has_closed_form_metric.
std::int64_t closed_form_distance(const ActionSpec& spec, const Point& from, const Point& to);

/// Schreier-graph distance, i.e. the word length of g with g.from = to. For a
/// self-action this is the word length of to.from^-1.
///
/// Uses the closed form when one exists and bounded BFS otherwise. BFS balls
/// are cached per source point.
class WordMetric {
 public:
  WordMetric(const ActionSpec& spec, std::size_t bfs_budget);

  /// nullopt when the two points lie in different (fully explored) orbits.
  /// Throws MetricBudgetExceeded when BFS truncates before reaching `to`.
  std::optional<std::int64_t> distance(const Point& from, const Point& to);

  bool uses_closed_form() const { return closed_form_; }

 private:
  const ActionSpec& spec_;
  std::size_t budget_;
  bool closed_form_;
  std::map<Point, OrbitGraph> balls_;
};

}  // namespace orbitcert
