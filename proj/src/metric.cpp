#include "orbitcert/metric.hpp"

#include <algorithm>
#include <cstdlib>

#include "orbitcert/error.hpp"

namespace orbitcert {

bool has_closed_form_metric(const ActionSpec& spec) {
  switch (spec.family()) {
    case Family::FinitePerm: return false;
    case Family::ZD: return spec.is_standard_lattice();
    case Family::FreeGroupSelf:
    case Family::LamplighterSelf: return true;
  }
  return false;
}

std::int64_t closed_form_distance(const ActionSpec& spec, const Point& from, const Point& to) {
  const auto& a = from.coords;
  const auto& b = to.coords;
  switch (spec.family()) {
    case Family::ZD: {
      std::int64_t d = 0;
      for (std::size_t k = 0; k < a.size(); ++k) d += std::llabs(b[k] - a[k]);
      return d;
    }
    case Family::FreeGroupSelf: {
      // |to . from^-1|: the common suffix cancels.
      std::size_t common = 0;
      while (common < a.size() && common < b.size() &&
             a[a.size() - 1 - common] == b[b.size() - 1 - common]) {
        ++common;
      }
      return static_cast<std::int64_t>(a.size() + b.size() - 2 * common);
    }
    case Family::LamplighterSelf: {
      // to . from^-1 = (q, lamps) with q the relative position and lamps the
      // symmetric difference shifted so `from` sits at the origin. A tour from
      // 0 covering [lo, hi] and ending at q costs 2(hi - lo) - |q| moves.
      std::int64_t shift = a[0];
      std::int64_t q = b[0] - shift;
      std::vector<std::int64_t> diff;
      std::set_symmetric_difference(a.begin() + 1, a.end(), b.begin() + 1, b.end(),
                                    std::back_inserter(diff));
      std::int64_t lo = std::min<std::int64_t>(0, q);
      std::int64_t hi = std::max<std::int64_t>(0, q);
      if (!diff.empty()) {
        lo = std::min(lo, diff.front() - shift);
        hi = std::max(hi, diff.back() - shift);
      }
      return static_cast<std::int64_t>(diff.size()) + 2 * (hi - lo) - std::llabs(q);
    }
    case Family::FinitePerm: break;
  }
  throw Error(ErrorKind::InvalidArgument, "no closed-form metric for this family");
}

WordMetric::WordMetric(const ActionSpec& spec, std::size_t bfs_budget)
    : spec_(spec), budget_(bfs_budget), closed_form_(has_closed_form_metric(spec)) {}

std::optional<std::int64_t> WordMetric::distance(const Point& from, const Point& to) {
  if (closed_form_) return closed_form_distance(spec_, from, to);
  auto it = balls_.find(from);
  if (it == balls_.end()) it = balls_.emplace(from, orbit_bounded(spec_, from, budget_)).first;
  const OrbitGraph& ball = it->second;
  if (auto idx = ball.index_of(to)) return ball.depth(*idx);
  if (ball.finite()) return std::nullopt;
  throw Error(ErrorKind::MetricBudgetExceeded,
              "word metric: target not reached within a ball of " + std::to_string(budget_) + " points");
}

}  // namespace orbitcert
