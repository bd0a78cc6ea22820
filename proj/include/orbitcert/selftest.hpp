#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/json_io.hpp"

namespace orbitcert {

struct NamedSpec {
  std::string name;
  ActionSpec spec;
};

/// Z/n rotations for n = 1..6, S_3 on {0,1,2} and S_3 acting on itself.
std::vector<NamedSpec> small_finite_specs();
/// Z, Z^2, the free group of rank 2 and the lamplighter group.
std::vector<NamedSpec> infinite_specs();

/// Largest BFS depth over all base points of a finite universe.
std::int64_t action_diameter(const ActionSpec& spec);

struct OracleSweepResult {
  std::size_t instances = 0;
  std::size_t some = 0;
  std::size_t disagreements = 0;           // match_oracle vs brute_force_pieces
  std::size_t verify_failures = 0;         // a returned certificate failed verify_finite
  std::size_t proper_subset_certificates = 0;  // a passing certificate with target strictly inside source
  std::size_t monotonicity_failures = 0;   // Some at L but None at L+1
  std::size_t symmetry_failures = 0;       // inverted certificate failed for B ~ A

  bool ok() const {
    return disagreements == 0 && verify_failures == 0 && proper_subset_certificates == 0 &&
           monotonicity_failures == 0 && symmetry_failures == 0;
  }
};

/// For every spec, every pair of subsets A, B and every word length up to
/// the action diameter: compares the matching oracle with exhaustive search
/// (K = |A|), verifies every certificate and checks cardinality.
OracleSweepResult oracle_sweep(const std::vector<NamedSpec>& specs);

struct RayRoundTripResult {
  std::size_t rays = 0;
  std::size_t not_simple = 0;
  std::size_t not_geodesic = 0;
  std::size_t verify_failures = 0;
  std::size_t extension_failures = 0;  // extended window target does not omit exactly s_1 x
  std::vector<std::string> fixtures;   // one compact line per ray for byte comparison

  bool ok() const {
    return rays > 0 && not_simple == 0 && not_geodesic == 0 && verify_failures == 0 &&
           extension_failures == 0;
  }
};

/// `count` deterministic rays per family with lengths cycling through
/// 2..max_length, each certified, verified and extended.
RayRoundTripResult ray_round_trips(const NamedSpec& family, std::size_t count, std::size_t max_length,
                                   std::size_t budget);

Json to_json(const OracleSweepResult& r);
Json to_json(const RayRoundTripResult& r);

}  // namespace orbitcert
