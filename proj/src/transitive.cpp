#include "orbitcert/transitive.hpp"

#include <numeric>

#include "orbitcert/error.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

TransitiveExtension extend_transitive(const ActionSpec& spec, std::size_t budget) {
  if (!spec.has_finite_universe()) {
    throw Error(ErrorKind::NotFinitePerm, "transitive extension needs a finite_perm spec");
  }
  const std::size_t n = spec.parameter();
  if (budget < n) {
    throw Error(ErrorKind::BudgetTooSmall, "budget " + std::to_string(budget) + " is below the universe size " +
                                               std::to_string(n));
  }

  std::vector<bool> assigned(n, false);
  std::vector<std::int64_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    reps.push_back(static_cast<std::int64_t>(i));
    OrbitGraph g = orbit_bounded(spec, Point{static_cast<std::int64_t>(i)}, budget);
    for (const auto& p : g.vertices()) assigned[static_cast<std::size_t>(p.coords[0])] = true;
  }

  std::vector<Generator> gens = spec.generators();
  for (std::size_t k = 1; k < reps.size(); ++k) {
    std::vector<std::int64_t> table(n);
    std::iota(table.begin(), table.end(), 0);
    std::swap(table[static_cast<std::size_t>(reps[0])], table[static_cast<std::size_t>(reps[k])]);
    std::string name = "t" + std::to_string(reps[0]) + "_" + std::to_string(reps[k]);
    while (spec.find_letter(name)) name += "'";
    gens.push_back(Generator{name, "", std::move(table)});
  }

  TransitiveExtension out{reps.size() == 1 ? spec : ActionSpec::finite_perm(n, std::move(gens)), reps,
                          reps.size() - 1, false};
  OrbitGraph all = orbit_bounded(out.spec, Point{0}, budget);
  out.transitive = all.finite() && all.size() == n;
  return out;
}

}  // namespace orbitcert
