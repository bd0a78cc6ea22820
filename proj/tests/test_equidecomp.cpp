#include <random>

#include "doctest.h"
#include "orbitcert/equidecomp.hpp"
#include "orbitcert/error.hpp"
#include "orbitcert/locfin.hpp"
#include "orbitcert/roe_witness.hpp"
#include "test_util.hpp"

using namespace orbitcert;
using namespace orbitcert::testing;

namespace {

bool has_violation(const VerificationReport& r, const std::string& kind) {
  for (const auto& v : r.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

RayCertificate ray_cert(const ActionSpec& spec, const Point& base, std::vector<Letter> letters) {
  GeodesicRay ray{base, std::move(letters), false};
  certify_simple(spec, ray);
  return ray_to_certificate(spec, ray);
}

// Random non-self-intersecting walk of the given length.
std::vector<Letter> simple_walk(const ActionSpec& spec, const Point& base, std::size_t length, std::mt19937_64& rng) {
  const auto& closure = spec.symmetric_closure();
  for (;;) {
    std::vector<Letter> out;
    PointSet seen{base};
    Point cur = base;
    bool stuck = false;
    while (out.size() < length && !stuck) {
      std::vector<Letter> options;
      for (Letter l : closure) {
        if (!seen.contains(spec.apply_letter(l, cur))) options.push_back(l);
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      Letter l = options[rng() % options.size()];
      cur = spec.apply_letter(l, cur);
      seen.insert(cur);
      out.push_back(l);
    }
    if (!stuck) return out;
  }
}

}  // namespace

TEST_CASE("verify_finite: examples") {
  auto z = ActionSpec::z_d(1);
  FiniteCertificate shift3{ints({0}), {Piece{ints({0}), word(z, {"+1", "+1", "+1"})}}, ints({3})};
  CHECK(verify_finite(z, shift3).pass());

  FiniteCertificate off_by_one{range(0, 50), {Piece{range(0, 50), word(z, {"+1"})}}, range(0, 50)};
  auto r = verify_finite(z, off_by_one);
  CHECK_FALSE(r.pass());
  CHECK(has_violation(r, "image_outside_target"));
  CHECK(has_violation(r, "target_uncovered"));
  REQUIRE(r.violations.size() == 2);

  auto c5 = cyclic(5);
  FiniteCertificate rot{ints({0, 1}), {Piece{ints({0}), word(c5, {"R"})}, Piece{ints({1}), word(c5, {"r"})}}, ints({4, 2})};
  CHECK(verify_finite(c5, rot).pass());
}

TEST_CASE("verify_finite: reports every kind of partition failure") {
  auto z = ActionSpec::z_d(1);
  auto id = GroupWord::identity();
  FiniteCertificate overlap{ints({0, 1}), {Piece{ints({0, 1}), id}, Piece{ints({1}), word(z, {"+1"})}}, ints({0, 1, 2})};
  auto r = verify_finite(z, overlap);
  CHECK(has_violation(r, "piece_overlap"));

  FiniteCertificate outside{ints({0}), {Piece{ints({0, 5}), id}}, ints({0, 5})};
  CHECK(has_violation(verify_finite(z, outside), "piece_outside_source"));

  FiniteCertificate uncovered{ints({0, 1}), {Piece{ints({0}), id}}, ints({0})};
  CHECK(has_violation(verify_finite(z, uncovered), "source_uncovered"));

  FiniteCertificate collide{ints({0, 1}), {Piece{ints({0}), word(z, {"+1"})}, Piece{ints({1}), id}}, ints({1})};
  CHECK(has_violation(verify_finite(z, collide), "image_overlap"));
}

TEST_CASE("verify_ray: the shift on Z") {
  auto z = ActionSpec::z_d(1);
  std::vector<Letter> plus(10, letter(z, "+1"));
  auto c = ray_cert(z, Point{0}, plus);
  CHECK(verify_ray(z, c).pass());
  REQUIRE(c.pieces.size() == 2);
  CHECK(c.pieces[0].letter == letter(z, "+1"));
  CHECK(c.pieces[0].set == range(1, 9));
  CHECK(c.pieces[1].set.empty());
  CHECK(c.target == range(2, 10));
  CHECK(c.source() == range(1, 10));
}

TEST_CASE("verify_ray: backtracking path is not simple") {
  auto z = ActionSpec::z_d(1);
  RayCertificate c;
  c.base = Point{0};
  c.letters = letters(z, {"+1", "-1", "+1"});
  try {
    verify_ray(z, c);
    FAIL("expected NotSimple");
  } catch (const NotSimpleError& e) {
    CHECK(e.kind() == ErrorKind::NotSimple);
    CHECK(e.first() == 0);
    CHECK(e.second() == 2);
  }
  RayCertificate short_ray{Point{0}, letters(z, {"+1"}), {}, {}, {}};
  CHECK_THROWS_AS(verify_ray(z, short_ray), Error);
}

TEST_CASE("verify_ray: alternating letters in the free group") {
  auto f2 = ActionSpec::free_group(2);
  std::vector<Letter> ab;
  for (int i = 0; i < 10; ++i) {
    ab.push_back(letter(f2, "a"));
    ab.push_back(letter(f2, "b"));
  }
  auto c = ray_cert(f2, f2.origin(), ab);
  CHECK(verify_ray(f2, c).pass());
  PointSet even, odd;
  for (std::size_t n = 1; n <= 19; ++n) (n % 2 == 0 ? even : odd).insert(c.gamma[n - 1]);
  CHECK(c.pieces[0].set == even);  // letter a
  CHECK(c.pieces[2].set == odd);   // letter b
  CHECK(c.pieces[1].set.empty());
  CHECK(c.pieces[3].set.empty());
  CHECK(point_to_json(f2, c.gamma.back()) == "babababababababababa");
}

TEST_CASE("verify_ray: tampering is detected") {
  auto z = ActionSpec::z_d(2);
  auto c = ray_cert(z, z.origin(), letters(z, {"+e1", "+e2", "+e1", "+e1"}));
  REQUIRE(verify_ray(z, c).pass());

  auto moved = c;
  moved.pieces[0].set.erase(moved.pieces[0].set.begin());
  CHECK(has_violation(verify_ray(z, moved), "source_uncovered"));

  auto wrong_target = c;
  wrong_target.target.insert(c.gamma.front());
  CHECK(has_violation(verify_ray(z, wrong_target), "target_mismatch"));

  auto wrong_path = c;
  wrong_path.gamma.back() = Point{9, 9};
  CHECK(has_violation(verify_ray(z, wrong_path), "path_mismatch"));
}

TEST_CASE("property: random simple walks give passing ray certificates") {
  std::mt19937_64 rng(29);
  std::vector<ActionSpec> specs = {ActionSpec::z_d(1), ActionSpec::z_d(2), ActionSpec::free_group(2),
                                   ActionSpec::lamplighter()};
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 40; ++trial) {
      Point base = random_point(spec, rng);
      std::size_t n = 2 + rng() % 30;
      auto c = ray_cert(spec, base, simple_walk(spec, base, n, rng));
      CHECK(verify_ray(spec, c).pass());
      CHECK(c.pieces.size() == spec.symmetric_closure().size());
      std::size_t total = 0;
      for (const auto& p : c.pieces) total += p.set.size();
      CHECK(total == n - 1);

      auto ext = extend_to_full_set(spec, c);
      auto w = verify_extended(spec, ext, c.source());
      CHECK(w.report.pass());
      CHECK(w.missing == PointSet{c.gamma.front()});
      CHECK(w.boundary == PointSet{c.gamma.back()});
    }
  }
}

TEST_CASE("extend_to_full_set: Z shift misses exactly s_1 x") {
  auto z = ActionSpec::z_d(1);
  auto c = ray_cert(z, Point{0}, std::vector<Letter>(10, letter(z, "+1")));
  auto ext = extend_to_full_set(z, c);
  CHECK(ext.rest_word.empty());
  auto w = verify_extended(z, ext, range(-10, 10));
  CHECK(w.report.pass());
  CHECK(w.missing == ints({1}));
  CHECK(w.boundary == ints({10}));
}

TEST_CASE("extend_to_full_set: finite certificates with equal cardinality are refused") {
  auto c5 = cyclic(5);
  FiniteCertificate rot{ints({0, 1}), {Piece{ints({0}), word(c5, {"R"})}, Piece{ints({1}), word(c5, {"r"})}}, ints({4, 2})};
  try {
    extend_to_full_set(c5, rot);
    FAIL("expected NotProper");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotProper);
  }
  FiniteCertificate bad{ints({0}), {Piece{ints({0}), word(c5, {"r"})}}, ints({3})};
  try {
    extend_to_full_set(c5, bad);
    FAIL("expected CertificateInvalid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CertificateInvalid);
  }
}

TEST_CASE("extend_to_full_set: Z^2 ray on the radius-N ball") {
  auto z2 = ActionSpec::z_d(2);
  const std::size_t n = 12;
  auto c = ray_cert(z2, z2.origin(), std::vector<Letter>(n, letter(z2, "+e1")));
  auto ext = extend_to_full_set(z2, c);
  auto ball = Window::ball(z2, z2.origin(), static_cast<std::int64_t>(n), 100000);
  CHECK(ball.size() == 2 * n * n + 2 * n + 1);
  auto w = verify_extended(z2, ext, ball.as_set());
  CHECK(w.report.pass());
  CHECK(w.missing == PointSet{Point{1, 0}});
  CHECK(w.window == ball.as_set());

  // A rest word that moves points is caught.
  auto moving = ext;
  moving.rest_word = word(z2, {"+e2"});
  CHECK(has_violation(verify_extended(z2, moving, ball.as_set()).report, "rest_not_fixed"));
}

TEST_CASE("certificate JSON round trip") {
  auto l = ActionSpec::lamplighter();
  auto ray = ray_cert(l, l.origin(), letters(l, {"b", "a", "b", "A", "A", "b"}));
  REQUIRE(verify_ray(l, ray).pass());
  std::vector<Certificate> certs = {ray, extend_to_full_set(l, ray),
                                    FiniteCertificate{PointSet{l.origin()}, {Piece{PointSet{l.origin()}, GroupWord::identity()}},
                                                      PointSet{l.origin()}}};
  for (const auto& c : certs) {
    Json j = to_json(l, c);
    CHECK(to_json(l, certificate_from_json(l, j)) == j);
  }
  Json j = to_json(l, certs[0]);
  CHECK(j["kind"] == "ray");
  CHECK(j["letters"] == Json::parse(R"(["b","a","b","A","A","b"])"));
  CHECK(j["source"].size() == 6);

  Json broken = j;
  broken.erase("target");
  try {
    certificate_from_json(l, broken);
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("certificate.target") != std::string::npos);
  }
}
