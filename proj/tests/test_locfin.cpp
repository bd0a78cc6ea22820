#include <random>

#include "doctest.h"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/error.hpp"
#include "orbitcert/locfin.hpp"
#include "orbitcert/metric.hpp"
#include "orbitcert/orbit.hpp"
#include "orbitcert/selftest.hpp"
#include "test_util.hpp"

using namespace orbitcert;
using namespace orbitcert::testing;

TEST_CASE("local finiteness: examples") {
  auto s3 = s3_natural();
  auto r = test_local_finiteness(s3, {Point{0}, Point{1}, Point{2}}, std::nullopt, 100);
  CHECK(r.all_finite());
  for (const auto& v : r.verdicts) {
    CHECK(v.kind == OrbitVerdict::Kind::Finite);
    CHECK(v.orbit_size == 3);
    CHECK(v.frontier_edges == 0);
  }

  auto z2 = ActionSpec::z_d(2);
  auto u = test_local_finiteness(z2, {z2.origin()}, std::nullopt, 10000);
  CHECK_FALSE(u.all_finite());
  CHECK(u.verdicts[0].kind == OrbitVerdict::Kind::Unknown);
  CHECK(u.verdicts[0].frontier_edges > 0);

  auto z = ActionSpec::z_d(1);
  auto h = test_local_finiteness(z, {Point{0}}, std::vector<GroupWord>{word(z, {"+1", "+1"})}, 1000);
  CHECK(h.verdicts[0].kind == OrbitVerdict::Kind::Unknown);
  CHECK(h.verdicts[0].orbit_size == 1000);

  auto two_orbits = ActionSpec::finite_perm(5, {Generator{"g", "", {1, 0, 3, 4, 2}}});
  auto w = test_local_finiteness(two_orbits, {Point{0}, Point{4}}, std::vector<GroupWord>{word(two_orbits, {"g", "g"})}, 100);
  CHECK(w.verdicts[0].orbit_size == 1);
  CHECK(w.verdicts[1].orbit_size == 3);
}

TEST_CASE("property: Finite(n) verdicts are stable when the budget grows") {
  for (const auto& named : small_finite_specs()) {
    const auto& spec = named.spec;
    std::vector<Point> all;
    for (std::size_t i = 0; i < spec.parameter(); ++i) all.push_back(Point{static_cast<std::int64_t>(i)});
    for (std::size_t budget : {1u, 2u, 3u, 6u}) {
      auto r = test_local_finiteness(spec, all, std::nullopt, budget);
      for (const auto& v : r.verdicts) {
        if (v.kind != OrbitVerdict::Kind::Finite) continue;
        auto again = test_local_finiteness(spec, {v.base}, std::nullopt, 2 * v.orbit_size);
        CHECK(again.verdicts[0].kind == OrbitVerdict::Kind::Finite);
        CHECK(again.verdicts[0].orbit_size == v.orbit_size);
      }
    }
  }
}

TEST_CASE("find_geodesic_ray: Z") {
  auto z = ActionSpec::z_d(1);
  for (auto strategy : {RayStrategy::Auto, RayStrategy::Bfs, RayStrategy::LexGeodesic}) {
    auto ray = find_geodesic_ray(z, Point{0}, 10, 1000, strategy);
    CHECK(ray.certified_simple);
    CHECK(ray.letters == std::vector<Letter>(10, letter(z, "+1")));
  }
}

TEST_CASE("find_geodesic_ray: finite orbit reports its diameter") {
  auto c12 = cyclic(12);
  try {
    find_geodesic_ray(c12, Point{0}, 10, 1000);
    FAIL("expected OrbitIsFinite");
  } catch (const OrbitIsFiniteError& e) {
    CHECK(e.kind() == ErrorKind::OrbitIsFinite);
    CHECK(e.diameter() == 6);
    CHECK(e.orbit_size() == 12);
  }
  auto ray = find_geodesic_ray(c12, Point{0}, 6, 1000);
  CHECK(ray.letters == std::vector<Letter>(6, letter(c12, "r")));
}

TEST_CASE("find_geodesic_ray: lamplighter fixture") {
  // Independent breadth-first enumeration: the first depth-8 vertex is reached by a^8.
  auto l = ActionSpec::lamplighter();
  for (auto strategy : {RayStrategy::Bfs, RayStrategy::LexGeodesic}) {
    auto ray = find_geodesic_ray(l, l.origin(), 8, 100000, strategy);
    CHECK(ray.certified_simple);
    CHECK(letters_to_json(l, ray.letters) == Json::parse(R"(["a","a","a","a","a","a","a","a"])"));
    CHECK(point_to_json(l, trace_path(l, ray.base, ray.letters).back()) == Json::parse(R"({"lamps":[],"pos":8})"));
  }
}

TEST_CASE("find_geodesic_ray: budget errors") {
  auto z2 = ActionSpec::z_d(2);
  try {
    find_geodesic_ray(z2, z2.origin(), 30, 50, RayStrategy::Bfs);
    FAIL("expected BudgetTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetTooSmall);
  }
  CHECK_THROWS_AS(find_geodesic_ray(z2, z2.origin(), 1, 50), Error);
  auto odd = ActionSpec::z_d(1, {Generator{"two", "", {2}}, Generator{"three", "", {3}}});
  CHECK_THROWS_AS(find_geodesic_ray(odd, Point{0}, 4, 50, RayStrategy::LexGeodesic), Error);
  auto ray = find_geodesic_ray(odd, Point{0}, 4, 1000);
  CHECK(ray.certified_simple);
}

TEST_CASE("property: lexicographic search reproduces the breadth-first ray") {
  std::mt19937_64 rng(53);
  for (const auto& named : infinite_specs()) {
    const auto& spec = named.spec;
    for (int trial = 0; trial < 6; ++trial) {
      Point base = random_point(spec, rng);
      for (std::size_t n = 2; n <= 7; ++n) {
        auto bfs = find_geodesic_ray(spec, base, n, 2000000, RayStrategy::Bfs);
        auto lex = find_geodesic_ray(spec, base, n, 2000000, RayStrategy::LexGeodesic);
        CHECK(bfs.letters == lex.letters);
        auto path = trace_path(spec, base, lex.letters);
        for (std::size_t k = 0; k < n; ++k) {
          CHECK(closed_form_distance(spec, base, path[k]) == static_cast<std::int64_t>(k + 1));
        }
      }
    }
  }
}

TEST_CASE("find_geodesic_ray: length 100 in every infinite family") {
  for (const auto& named : infinite_specs()) {
    auto ray = find_geodesic_ray(named.spec, named.spec.origin(), 100, 1000000);
    CHECK(ray.certified_simple);
    CHECK(ray.letters.size() == 100);
    CHECK(closed_form_distance(named.spec, named.spec.origin(),
                               trace_path(named.spec, named.spec.origin(), ray.letters).back()) == 100);
  }
}

TEST_CASE("certify_simple and ray_to_certificate") {
  auto z = ActionSpec::z_d(1);
  GeodesicRay bad{Point{0}, letters(z, {"+1", "-1", "+1"}), false};
  CHECK_THROWS_AS(certify_simple(z, bad), NotSimpleError);
  CHECK_FALSE(bad.certified_simple);
  CHECK_THROWS_AS(ray_to_certificate(z, bad), Error);

  auto z2 = ActionSpec::z_d(2);
  for (const char* s : {"+e1", "-e1", "+e2", "-e2"}) {
    for (const char* t : {"+e1", "-e1", "+e2", "-e2"}) {
      GeodesicRay ray{z2.origin(), letters(z2, {s, t}), false};
      if (letter(z2, s) == letter(z2, t).inverted()) continue;
      certify_simple(z2, ray);
      auto c = ray_to_certificate(z2, ray);
      CHECK(verify_ray(z2, c).pass());
      std::size_t nonempty = 0;
      for (const auto& p : c.pieces) {
        if (p.set.empty()) continue;
        ++nonempty;
        CHECK(p.letter == letter(z2, t));
        CHECK(p.set == PointSet{z2.apply_letter(letter(z2, s), z2.origin())});
      }
      CHECK(nonempty == 1);
    }
  }
}

TEST_CASE("ray JSON round trip") {
  auto f2 = ActionSpec::free_group(2);
  GeodesicRay ray{pt(f2, "\"bA\""), letters(f2, {"a", "b", "b"}), false};
  certify_simple(f2, ray);
  Json j = to_json(f2, ray);
  CHECK(j["length"] == 3);
  CHECK(j["endpoint"] == "bbabA");
  auto back = ray_from_json(f2, j);
  CHECK(back.base == ray.base);
  CHECK(back.letters == ray.letters);
}
