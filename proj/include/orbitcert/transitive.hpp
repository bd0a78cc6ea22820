#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitcert/action.hpp"

namespace orbitcert {

struct TransitiveExtension {
  ActionSpec spec;
  std::vector<std::int64_t> representatives;  // least index of each orbit, ascending
  std::size_t added_generators = 0;
  bool transitive = false;  // one orbit_bounded call from 0 returned Finite(|X|)
};

/// Joins the orbits of a finite_perm action by adding the transpositions
/// (y_1 y_i) of orbit representatives; these generate the finitary symmetric
/// group on the representatives and fix every other point. An already
/// transitive spec is returned unchanged. Throws NotFinitePerm for the
/// infinite families.
TransitiveExtension extend_transitive(const ActionSpec& spec, std::size_t budget);

}  // namespace orbitcert
