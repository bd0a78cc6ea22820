#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/equidecomp.hpp"

namespace orbitcert {

struct WitnessEdge {
  Point from;
  Point to;
  GroupWord word;  // first word in BFS order with word.from == to
};

struct HallViolation {
  std::string side;  // "source" when a subset of A is too large, "target" for B
  PointSet set;
  PointSet neighborhood;
};

struct MatchReport {
  std::size_t max_word_len = 0;
  std::vector<WitnessEdge> edges;  // sorted by (from, BFS discovery order)
  std::vector<WitnessEdge> matching;
  std::optional<FiniteCertificate> certificate;
  std::optional<HallViolation> hall_violation;
};

/// Bipartite graph A x B with an edge when some word of length <= L carries
/// a to b, followed by a maximum matching. A perfect matching is grouped by
/// witness word into a finite certificate; otherwise the alternating
/// reachability cut from the unmatched vertices is reported as a Hall
/// violation.
MatchReport match_oracle(const ActionSpec& spec, const PointSet& a, const PointSet& b,
                         std::size_t max_word_len);

struct BruteForceOptions {
  std::size_t max_word_len = 0;
  std::size_t max_pieces = 0;
  /// Search nodes allowed before BudgetExceeded.
  std::size_t node_cap = 50'000'000;
};

/// Exhaustive search over assignments of freely reduced words (length <= L)
/// to the points of A, using at most K distinct words, such that the
/// assignment maps A bijectively onto B. Independent of match_oracle.
std::optional<FiniteCertificate> brute_force_pieces(const ActionSpec& spec, const PointSet& a,
                                                    const PointSet& b, const BruteForceOptions& options);

Json to_json(const ActionSpec& spec, const MatchReport& r);

}  // namespace orbitcert
