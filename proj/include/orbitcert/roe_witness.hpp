#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/json_io.hpp"
#include "orbitcert/locfin.hpp"

namespace orbitcert {

/// A finite set of points with stable row indices (sorted point order).
class Window {
 public:
  static Window from_points(const PointSet& points);
  /// The Schreier-graph ball of the given radius around `center`. Throws
  /// BudgetTooSmall if `budget` vertices do not cover the whole ball.
  static Window ball(const ActionSpec& spec, const Point& center, std::int64_t radius, std::size_t budget);

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const PointSet& as_set() const { return set_; }
  std::optional<std::size_t> row(const Point& p) const;

 private:
  std::vector<Point> points_;
  PointSet set_;
  std::map<Point, std::size_t> rows_;
};

/// Integer matrix stored by nonzero entries.
using SparseMatrix = std::map<std::pair<std::size_t, std::size_t>, std::int64_t>;

SparseMatrix transpose(const SparseMatrix& m);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix diagonal_indicator(const Window& w, const PointSet& points);

/// Window shadow of v = sum_i 1_{B_i} u_{s_i}: V has a 1 at (row of w_i a, row of a)
/// for every safe source point a, i.e. one whose image stays in the window.
struct Witness {
  Window window;
  PointSet source;      // source intersected with the window
  PointSet target;      // target intersected with the window
  PointSet safe;        // source points whose image lies in the window
  PointSet safe_image;
  SparseMatrix projection_source;  // P_A
  SparseMatrix projection_target;  // P_B
  SparseMatrix isometry;           // V
  SparseMatrix vtv;                // V^T V
  SparseMatrix vvt;                // V V^T

  /// V^T V = diag(safe) and V V^T = diag(safe_image), entry for entry.
  bool identities_hold() const;
  /// At most one 1 per row and per column, all entries 0/1.
  bool is_partial_permutation() const;
};

/// Throws WindowDisjoint when the certificate's source misses the window.
Witness build_witness(const ActionSpec& spec, const Certificate& c, const Window& window);

struct GapReport {
  std::int64_t rank_vtv = 0;
  std::int64_t rank_vvt = 0;
  std::int64_t rank_gap = 0;
  std::int64_t point_count_gap = 0;   // |source n W| - |target n W|
  std::int64_t boundary_deficit = 0;  // |source n W| - |safe|
  bool flagged = false;               // rank gap 0 with a positive point-count gap
};

GapReport finiteness_gap(const Witness& w);

/// f restricted to the integer interval [first, first + values.size() - 1].
struct EmbeddingMap {
  std::int64_t first = 0;
  std::vector<Point> values;

  std::int64_t last() const { return first + static_cast<std::int64_t>(values.size()) - 1; }
};

/// f(m) = (s_m ... s_1) x for m = 0..N.
EmbeddingMap ray_embedding(const ActionSpec& spec, const GeodesicRay& ray);

/// Control functions of f on its window. nullopt entries mean "unbounded"
/// (points in different orbits of a finite universe).
struct EmbeddingProfile {
  std::int64_t first = 0;
  std::int64_t last = 0;
  bool injective = false;
  /// forward[r] = max word length of f(x) f(y)^-1 over |x - y| <= r.
  std::vector<std::optional<std::int64_t>> forward;
  /// backward[rho] = max |x - y| over pairs with word length of f(x) f(y)^-1 <= rho.
  std::vector<std::int64_t> backward;
};

/// Throws MetricBudgetExceeded if a needed word length is beyond the BFS budget.
EmbeddingProfile embedding_profile(const ActionSpec& spec, const EmbeddingMap& f, std::size_t metric_budget);

Json to_json(const ActionSpec& spec, const Witness& w);
Json to_json(const GapReport& g);
Json to_json(const EmbeddingProfile& p);
EmbeddingMap embedding_map_from_json(const ActionSpec& spec, const Json& j);

}  // namespace orbitcert
