#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/json_io.hpp"

namespace orbitcert {

struct OrbitVerdict {
  enum class Kind { Finite, Unknown };

  Point base;
  Kind kind = Kind::Unknown;
  std::size_t orbit_size = 0;      // exact when Finite, explored count when Unknown
  std::size_t frontier_edges = 0;  // zero when Finite
  std::int64_t max_depth = 0;
};

/// Unknown means the budget ran out; it never claims the orbit is infinite.
struct LocalFinitenessReport {
  std::vector<OrbitVerdict> verdicts;
  std::optional<std::vector<GroupWord>> subgroup_words;
  std::size_t budget = 0;

  bool all_finite() const;
};

LocalFinitenessReport test_local_finiteness(const ActionSpec& spec, const std::vector<Point>& base_points,
                                            const std::optional<std::vector<GroupWord>>& subgroup_words,
                                            std::size_t budget);

struct GeodesicRay {
  Point base;
  std::vector<Letter> letters;  // application order s_1, ..., s_N
  bool certified_simple = false;
};

enum class RayStrategy {
  Auto,          // LexGeodesic when the family has an exact metric, else Bfs
  Bfs,           // explicit BFS tree up to depth N
  LexGeodesic,   // depth-first search for the lexicographically least geodesic
};

/// Returns the BFS tree path to the first vertex at depth N (generators in
/// declaration order, inverses right after). That path is also the
/// lexicographically least geodesic of length N, which is how LexGeodesic
/// finds it without materializing the ball.
///
/// Throws OrbitIsFiniteError when the orbit is exhausted with diameter < N
/// and BudgetTooSmall when exploration stops before depth N. `budget` counts
/// BFS vertices or search nodes.
GeodesicRay find_geodesic_ray(const ActionSpec& spec, const Point& x, std::size_t length,
                              std::size_t budget, RayStrategy strategy = RayStrategy::Auto);

/// Re-evaluates the path and sets certified_simple when x and all prefix
/// points are pairwise distinct. Throws NotSimpleError otherwise.
void certify_simple(const ActionSpec& spec, GeodesicRay& ray);

/// A_s = {s_n...s_1 x : n <= N-1, s_{n+1} = s} for every s in the symmetric
/// closure; requires a certified ray.
RayCertificate ray_to_certificate(const ActionSpec& spec, const GeodesicRay& ray);

Json to_json(const ActionSpec& spec, const LocalFinitenessReport& r);
Json to_json(const ActionSpec& spec, const GeodesicRay& ray);
GeodesicRay ray_from_json(const ActionSpec& spec, const Json& j);

}  // namespace orbitcert
