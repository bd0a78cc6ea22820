#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbitcert/action.hpp"
#include "orbitcert/json_io.hpp"
#include "orbitcert/point.hpp"
#include "orbitcert/word.hpp"

namespace orbitcert {

struct Piece {
  PointSet set;
  GroupWord word;
};

/// Finite partitions {A_i} of `source` and {w_i A_i} of `target`.
struct FiniteCertificate {
  PointSet source;
  std::vector<Piece> pieces;
  PointSet target;
};

struct RayPiece {
  Letter letter;
  PointSet set;
};

/// A simple path x, s_1 x, s_2 s_1 x, ... truncated after N letters, with the
/// window pieces A_s = {s_n...s_1 x : n <= N-1, s_{n+1} = s}. The window
/// source is gamma = {s_n...s_1 x : 1 <= n <= N} (x itself excluded) and the
/// target is gamma minus s_1 x.
struct RayCertificate {
  Point base;
  std::vector<Letter> letters;   // application order s_1, ..., s_N
  std::vector<Point> gamma;      // gamma[n-1] = s_n ... s_1 x
  std::vector<RayPiece> pieces;  // one per symmetric-closure letter, closure order
  PointSet target;

  PointSet source() const { return PointSet(gamma.begin(), gamma.end()); }
};

/// X = A u A^c equidecomposed with B u A^c: the inner pieces plus the
/// complement of the inner source carried by the identity word.
struct ExtendedCertificate {
  std::variant<FiniteCertificate, RayCertificate> inner;
  GroupWord rest_word;
};

using Certificate = std::variant<FiniteCertificate, RayCertificate, ExtendedCertificate>;

struct Violation {
  std::string kind;
  std::vector<std::size_t> pieces;
  std::vector<Point> points;
};

struct VerificationReport {
  std::vector<Violation> violations;
  std::size_t points_checked = 0;

  bool pass() const { return violations.empty(); }
};

VerificationReport verify_finite(const ActionSpec& spec, const FiniteCertificate& c);

/// Recomputes the path by evaluating the letters, then checks that
/// {A_s} partitions gamma minus its last point and {s A_s} partitions
/// gamma minus s_1 x. Throws NotSimpleError if two of x, s_1 x, ..., s_N...s_1 x
/// coincide and InvalidArgument when N < 2.
VerificationReport verify_ray(const ActionSpec& spec, const RayCertificate& c);

/// Throws CertificateInvalid if the inner certificate fails verification
/// and NotProper unless its target is a proper subset of its source.
ExtendedCertificate extend_to_full_set(const ActionSpec& spec, const FiniteCertificate& c);
ExtendedCertificate extend_to_full_set(const ActionSpec& spec, const RayCertificate& c);

struct ExtendedWindowReport {
  VerificationReport report;
  PointSet window;          // window plus the inner source and target
  PointSet boundary;        // window points no piece covers (truncation edge)
  PointSet missing;         // window points outside the extended target
};

/// Verifies an extended certificate on a finite window of X. Besides the
/// inner checks, every window point outside the inner source must be fixed
/// by the rest word, and the extended target must omit exactly
/// source minus target of the inner certificate.
ExtendedWindowReport verify_extended(const ActionSpec& spec, const ExtendedCertificate& c,
                                     const PointSet& window);

/// A certificate read on a finite window: the source and target points that
/// lie in the window and, for every covered source point in the window, its
/// image under its piece word (which may leave the window).
struct WindowedMap {
  PointSet source;
  PointSet target;
  std::vector<std::pair<Point, Point>> arrows;
};

WindowedMap restrict_to_window(const ActionSpec& spec, const Certificate& c, const PointSet& window);

Json to_json(const ActionSpec& spec, const Certificate& c);
Certificate certificate_from_json(const ActionSpec& spec, const Json& j);
Json to_json(const ActionSpec& spec, const VerificationReport& r);

}  // namespace orbitcert
