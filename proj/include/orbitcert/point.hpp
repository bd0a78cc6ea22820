#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace orbitcert {

/// A point of the acting set, held in the canonical integer encoding of its
/// family (see ActionSpec). Two points are equal iff their encodings are.
///
///   finite_perm       [i]                     0 <= i < size
///   z_d               [x_1, ..., x_d]
///   free_group_self   [l_1, ..., l_k]         l = +(g+1) or -(g+1), reduced
///   lamplighter_self  [pos, f_1, ..., f_m]    lit lamps, strictly increasing
struct Point {
  std::vector<std::int64_t> coords;

  Point() = default;
  explicit Point(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Point(std::initializer_list<std::int64_t> c) : coords(c) {}

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    return a.coords <=> b.coords;
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ p.coords.size();
    for (std::int64_t c : p.coords) {
      h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using PointSet = std::set<Point>;

}  // namespace orbitcert
