#include <random>

#include "doctest.h"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/error.hpp"
#include "orbitcert/locfin.hpp"
#include "orbitcert/matching.hpp"
#include "orbitcert/roe_witness.hpp"
#include "test_util.hpp"

using namespace orbitcert;
using namespace orbitcert::testing;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

Dense dense(const SparseMatrix& m, std::size_t n) {
  Dense d(n, std::vector<std::int64_t>(n, 0));
  for (const auto& [ij, v] : m) d.at(ij.first).at(ij.second) = v;
  return d;
}

Dense dense_product(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense dense_transpose(const Dense& a) {
  const std::size_t n = a.size();
  Dense t(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

Dense diag_on(const Window& w, const PointSet& s) {
  Dense d(w.size(), std::vector<std::int64_t>(w.size(), 0));
  for (const auto& p : s) {
    auto r = w.row(p);
    if (r) d[*r][*r] = 1;
  }
  return d;
}

RayCertificate shift_certificate(const ActionSpec& z, std::int64_t base, std::size_t n) {
  GeodesicRay ray{Point{base}, std::vector<Letter>(n, letter(z, "+1")), false};
  certify_simple(z, ray);
  return ray_to_certificate(z, ray);
}

}  // namespace

TEST_CASE("witness: shift of N on the window -10..10") {
  auto z = ActionSpec::z_d(1);
  auto window = Window::from_points(range(-10, 10));
  auto w = build_witness(z, shift_certificate(z, -1, 11), window);
  CHECK(w.source == range(0, 10));
  CHECK(w.target == range(1, 10));
  CHECK(w.safe == range(0, 9));
  CHECK(w.safe_image == range(1, 10));
  CHECK(w.identities_hold());
  CHECK(w.is_partial_permutation());

  // Dense 21x21 integer products as an independent check.
  Dense v = dense(w.isometry, 21);
  CHECK(dense_product(dense_transpose(v), v) == diag_on(window, range(0, 9)));
  CHECK(dense_product(v, dense_transpose(v)) == diag_on(window, range(1, 10)));
  CHECK(dense(w.vtv, 21) == diag_on(window, range(0, 9)));
  CHECK(dense(w.vvt, 21) == diag_on(window, range(1, 10)));
  CHECK(dense(w.projection_source, 21) == diag_on(window, range(0, 10)));

  auto g = finiteness_gap(w);
  CHECK(g.rank_vtv == 10);
  CHECK(g.rank_vvt == 10);
  CHECK(g.rank_gap == 0);
  CHECK(g.point_count_gap == 1);
  CHECK(g.boundary_deficit == 1);
  CHECK(g.flagged);
}

TEST_CASE("witness: identity certificate") {
  auto z = ActionSpec::z_d(1);
  FiniteCertificate id{ints({0}), {Piece{ints({0}), GroupWord::identity()}}, ints({0})};
  auto window = Window::from_points(range(-1, 1));
  auto w = build_witness(z, id, window);
  auto r0 = *window.row(Point{0});
  CHECK(w.isometry == SparseMatrix{{{r0, r0}, 1}});
  CHECK(w.vtv == w.vvt);
  CHECK(w.identities_hold());
  auto g = finiteness_gap(w);
  CHECK(g.point_count_gap == 0);
  CHECK_FALSE(g.flagged);
}

TEST_CASE("witness: Z/5 full window has no boundary") {
  auto c5 = cyclic(5);
  auto m = match_oracle(c5, ints({0, 1}), ints({2, 4}), 1);
  REQUIRE(m.certificate.has_value());
  auto window = Window::ball(c5, Point{0}, 10, 100);
  CHECK(window.size() == 5);
  auto w = build_witness(c5, *m.certificate, window);
  CHECK(w.vtv == w.projection_source);
  CHECK(w.vvt == w.projection_target);
  auto g = finiteness_gap(w);
  CHECK(g.boundary_deficit == 0);
  CHECK(g.point_count_gap == 0);
  CHECK_FALSE(g.flagged);
}

TEST_CASE("witness: window disjoint from the source") {
  auto z = ActionSpec::z_d(1);
  try {
    build_witness(z, shift_certificate(z, 100, 5), Window::from_points(range(-3, 3)));
    FAIL("expected WindowDisjoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowDisjoint);
  }
}

TEST_CASE("gap: extended Z^2 ray on the radius-20 ball") {
  auto z2 = ActionSpec::z_d(2);
  GeodesicRay ray{z2.origin(), std::vector<Letter>(20, letter(z2, "+e1")), false};
  certify_simple(z2, ray);
  auto ext = extend_to_full_set(z2, ray_to_certificate(z2, ray));
  auto window = Window::ball(z2, z2.origin(), 20, 100000);
  auto w = build_witness(z2, ext, window);
  CHECK(w.identities_hold());
  CHECK(w.is_partial_permutation());
  auto g = finiteness_gap(w);
  CHECK(g.rank_gap == 0);
  CHECK(g.point_count_gap == 1);
  CHECK(g.flagged);
  CHECK(w.source.size() == window.size());
  CHECK(w.target.size() == window.size() - 1);
}

TEST_CASE("property: matching certificates give exact partial permutations") {
  std::mt19937_64 rng(61);
  auto z2 = ActionSpec::z_d(2);
  for (int trial = 0; trial < 40; ++trial) {
    PointSet a, b;
    std::size_t k = 1 + rng() % 5;
    while (a.size() < k) a.insert(apply(z2, random_word(z2, rng, 4), z2.origin()));
    while (b.size() < k) b.insert(apply(z2, random_word(z2, rng, 4), z2.origin()));
    auto m = match_oracle(z2, a, b, 8);
    REQUIRE(m.certificate.has_value());
    for (std::int64_t radius : {1, 2, 3, 6}) {
      auto window = Window::ball(z2, z2.origin(), radius, 100000);
      PointSet hit;
      std::set_intersection(a.begin(), a.end(), window.as_set().begin(), window.as_set().end(),
                            std::inserter(hit, hit.end()));
      if (hit.empty()) continue;
      auto w = build_witness(z2, *m.certificate, window);
      CHECK(w.identities_hold());
      CHECK(w.is_partial_permutation());
      Dense v = dense(w.isometry, window.size());
      CHECK(dense_product(dense_transpose(v), v) == diag_on(window, w.safe));
      CHECK(dense_product(v, dense_transpose(v)) == diag_on(window, w.safe_image));
      auto g = finiteness_gap(w);
      CHECK(g.rank_gap == 0);
      CHECK(g.boundary_deficit == static_cast<std::int64_t>(w.source.size() - w.safe.size()));
    }
  }
}

TEST_CASE("embedding profile: powers of a in the free group") {
  auto f2 = ActionSpec::free_group(2);
  for (std::int64_t n : {10, 20}) {
    EmbeddingMap f;
    f.first = -n;
    for (std::int64_t m = -n; m <= n; ++m) {
      GroupWord w;
      for (std::int64_t i = 0; i < std::abs(m); ++i) w.letters.push_back(letter(f2, m > 0 ? "a" : "A"));
      f.values.push_back(apply(f2, w, f2.origin()));
    }
    auto p = embedding_profile(f2, f, 1000);
    CHECK(p.injective);
    REQUIRE(p.forward.size() == static_cast<std::size_t>(2 * n + 1));
    for (std::size_t r = 0; r < p.forward.size(); ++r) CHECK(p.forward[r] == static_cast<std::int64_t>(r));
    REQUIRE(p.backward.size() == static_cast<std::size_t>(2 * n + 1));
    for (std::size_t rho = 0; rho < p.backward.size(); ++rho) CHECK(p.backward[rho] == static_cast<std::int64_t>(rho));
  }
}

TEST_CASE("embedding profile: non-injective maps") {
  auto c3 = cyclic(3);
  EmbeddingMap f;
  f.first = -2;
  for (std::int64_t m = -2; m <= 2; ++m) f.values.push_back(Point{((m % 3) + 3) % 3});
  auto p = embedding_profile(c3, f, 100);
  CHECK_FALSE(p.injective);
  CHECK(p.forward[3] == 1);

  auto l = ActionSpec::lamplighter();
  EmbeddingMap constant{-1, {l.origin(), l.origin(), l.origin()}};
  auto q = embedding_profile(l, constant, 100);
  CHECK_FALSE(q.injective);
  CHECK(q.backward[0] == 2);

  auto two_orbits = ActionSpec::finite_perm(4, {Generator{"g", "", {1, 0, 3, 2}}});
  EmbeddingMap split{0, {Point{0}, Point{2}}};
  auto s = embedding_profile(two_orbits, split, 100);
  CHECK(s.injective);
  CHECK_FALSE(s.forward[1].has_value());
}

TEST_CASE("property: profiles of rays are monotone and bounded") {
  std::mt19937_64 rng(67);
  std::vector<ActionSpec> specs = {ActionSpec::z_d(2), ActionSpec::free_group(2), ActionSpec::lamplighter()};
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 5; ++trial) {
      auto ray = find_geodesic_ray(spec, random_point(spec, rng), 2 + rng() % 12, 100000);
      auto f = ray_embedding(spec, ray);
      CHECK(f.first == 0);
      CHECK(f.values.size() == ray.letters.size() + 1);
      auto p = embedding_profile(spec, f, 100000);
      CHECK(p.injective);
      for (std::size_t r = 0; r < p.forward.size(); ++r) {
        REQUIRE(p.forward[r].has_value());
        CHECK(*p.forward[r] <= static_cast<std::int64_t>(r));
        if (r > 0) CHECK(*p.forward[r - 1] <= *p.forward[r]);
      }
      for (std::size_t rho = 1; rho < p.backward.size(); ++rho) CHECK(p.backward[rho - 1] <= p.backward[rho]);
    }
  }
}
