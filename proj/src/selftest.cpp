#include "orbitcert/selftest.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "orbitcert/equidecomp.hpp"
#include "orbitcert/locfin.hpp"
#include "orbitcert/matching.hpp"
#include "orbitcert/metric.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

namespace {

std::vector<std::int64_t> rotation(std::size_t n) {
  std::vector<std::int64_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::int64_t>((i + 1) % n);
  return t;
}

// S_3 elements as images of (0,1,2), in lexicographic order; used as the
// point set of the regular action.
std::vector<std::array<int, 3>> s3_elements() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::int64_t> left_multiplication_table(const std::array<int, 3>& g) {
  auto elems = s3_elements();
  std::vector<std::int64_t> table;
  for (const auto& h : elems) {
    std::array<int, 3> gh{g[h[0]], g[h[1]], g[h[2]]};
    table.push_back(std::find(elems.begin(), elems.end(), gh) - elems.begin());
  }
  return table;
}

PointSet subset_of(std::size_t mask, std::size_t n) {
  PointSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1u) s.insert(Point{static_cast<std::int64_t>(i)});
  }
  return s;
}

FiniteCertificate invert(const ActionSpec& spec, const FiniteCertificate& c) {
  FiniteCertificate inv{c.target, {}, c.source};
  for (const auto& piece : c.pieces) {
    Piece p{{}, piece.word.inverse()};
    for (const auto& a : piece.set) p.set.insert(apply(spec, piece.word, a));
    inv.pieces.push_back(std::move(p));
  }
  return inv;
}

bool proper_subset(const PointSet& sub, const PointSet& super) {
  return sub.size() < super.size() && std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

// Portable: only the raw engine output is used, never a std distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

Point random_point(const ActionSpec& spec, Rng& rng) {
  switch (spec.family()) {
    case Family::FinitePerm:
      return Point{rng.range(0, static_cast<std::int64_t>(spec.parameter()) - 1)};
    case Family::ZD: {
      Point p;
      for (std::size_t k = 0; k < spec.parameter(); ++k) p.coords.push_back(rng.range(-20, 20));
      return p;
    }
    case Family::FreeGroupSelf: {
      GroupWord w;
      auto len = rng.range(0, 8);
      for (std::int64_t i = 0; i < len; ++i) {
        const auto& closure = spec.symmetric_closure();
        w.letters.push_back(closure[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(closure.size()) - 1))]);
      }
      return apply(spec, w, spec.origin());
    }
    case Family::LamplighterSelf: {
      Point p{rng.range(-5, 5)};
      for (std::int64_t f = -5; f <= 5; ++f) {
        if (rng.range(0, 1) == 1) p.coords.push_back(f);
      }
      return p;
    }
  }
  return spec.origin();
}

}  // namespace

std::vector<NamedSpec> small_finite_specs() {
  std::vector<NamedSpec> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    out.push_back({"Z/" + std::to_string(n), ActionSpec::finite_perm(n, {Generator{"r", "R", rotation(n)}})});
  }
  out.push_back({"S3 on {0,1,2}",
                 ActionSpec::finite_perm(3, {Generator{"s", "S", {1, 0, 2}}, Generator{"c", "C", {1, 2, 0}}})});
  out.push_back({"S3 regular", ActionSpec::finite_perm(6, {Generator{"s", "S", left_multiplication_table({1, 0, 2})},
                                                          Generator{"c", "C", left_multiplication_table({1, 2, 0})}})});
  return out;
}

std::vector<NamedSpec> infinite_specs() {
  return {{"Z", ActionSpec::z_d(1)},
          {"Z^2", ActionSpec::z_d(2)},
          {"F2", ActionSpec::free_group(2)},
          {"lamplighter", ActionSpec::lamplighter()}};
}

std::int64_t action_diameter(const ActionSpec& spec) {
  std::int64_t diameter = 0;
  for (std::size_t i = 0; i < spec.parameter(); ++i) {
    OrbitGraph g = orbit_bounded(spec, Point{static_cast<std::int64_t>(i)}, spec.parameter());
    diameter = std::max(diameter, g.max_depth());
  }
  return diameter;
}

OracleSweepResult oracle_sweep(const std::vector<NamedSpec>& specs) {
  OracleSweepResult r;
  for (const auto& [name, spec] : specs) {
    const std::size_t n = spec.parameter();
    const auto diameter = static_cast<std::size_t>(action_diameter(spec));
    for (std::size_t ma = 0; ma < (std::size_t{1} << n); ++ma) {
      PointSet a = subset_of(ma, n);
      for (std::size_t mb = 0; mb < (std::size_t{1} << n); ++mb) {
        PointSet b = subset_of(mb, n);
        bool previous_some = false;
        for (std::size_t len = 0; len <= diameter; ++len) {
          ++r.instances;
          MatchReport m = match_oracle(spec, a, b, len);
          auto brute = brute_force_pieces(spec, a, b, BruteForceOptions{len, a.size(), 50'000'000});
          if (m.certificate.has_value() != brute.has_value()) ++r.disagreements;
          if (previous_some && !m.certificate) ++r.monotonicity_failures;
          previous_some = m.certificate.has_value();
          for (const auto* cert : {m.certificate ? &*m.certificate : nullptr, brute ? &*brute : nullptr}) {
            if (cert == nullptr) continue;
            if (!verify_finite(spec, *cert).pass()) {
              ++r.verify_failures;
              continue;
            }
            if (proper_subset(cert->target, cert->source)) ++r.proper_subset_certificates;
            if (!verify_finite(spec, invert(spec, *cert)).pass()) ++r.symmetry_failures;
          }
          if (m.certificate) ++r.some;
        }
      }
    }
  }
  return r;
}

RayRoundTripResult ray_round_trips(const NamedSpec& family, std::size_t count, std::size_t max_length,
                                   std::size_t budget) {
  const ActionSpec& spec = family.spec;
  RayRoundTripResult r;
  Rng rng(0x5eed0000 + static_cast<std::uint64_t>(spec.family()) * 101 + spec.parameter());
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t length = 2 + k % (max_length - 1);
    Point x = k == 0 ? spec.origin() : random_point(spec, rng);
    GeodesicRay ray = find_geodesic_ray(spec, x, length, budget);
    ++r.rays;

    std::vector<Point> path = trace_path(spec, x, ray.letters);
    PointSet distinct(path.begin(), path.end());
    distinct.insert(x);
    if (!ray.certified_simple || distinct.size() != length + 1) ++r.not_simple;
    if (has_closed_form_metric(spec)) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (closed_form_distance(spec, x, path[i]) != static_cast<std::int64_t>(i) + 1) {
          ++r.not_geodesic;
          break;
        }
      }
    }

    RayCertificate cert = ray_to_certificate(spec, ray);
    if (!verify_ray(spec, cert).pass()) {
      ++r.verify_failures;
      continue;
    }
    ExtendedCertificate ext = extend_to_full_set(spec, cert);
    // Window: the path plus the radius-2 ball around the base point.
    OrbitOptions opts;
    opts.max_depth = 2;
    OrbitGraph near = orbit_bounded(spec, x, budget, opts);
    PointSet window(near.vertices().begin(), near.vertices().end());
    window.insert(path.begin(), path.end());
    ExtendedWindowReport ew = verify_extended(spec, ext, window);
    if (!ew.report.pass() || ew.missing != PointSet{path.front()}) ++r.extension_failures;

    std::string line = family.name + " N=" + std::to_string(length) + " letters=";
    for (Letter l : ray.letters) line += spec.letter_name(l) + ",";
    r.fixtures.push_back(std::move(line));
  }
  return r;
}

Json to_json(const OracleSweepResult& r) {
  return Json{{"instances", r.instances},
              {"some", r.some},
              {"disagreements", r.disagreements},
              {"verify_failures", r.verify_failures},
              {"proper_subset_certificates", r.proper_subset_certificates},
              {"monotonicity_failures", r.monotonicity_failures},
              {"symmetry_failures", r.symmetry_failures},
              {"verdict", r.ok() ? "Pass" : "Fail"}};
}

Json to_json(const RayRoundTripResult& r) {
  return Json{{"rays", r.rays},
              {"not_simple", r.not_simple},
              {"not_geodesic", r.not_geodesic},
              {"verify_failures", r.verify_failures},
              {"extension_failures", r.extension_failures},
              {"fixtures", r.fixtures},
              {"verdict", r.ok() ? "Pass" : "Fail"}};
}

}  // namespace orbitcert
