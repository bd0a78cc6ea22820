#include "orbitcert/equidecomp.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "orbitcert/error.hpp"

namespace orbitcert {

namespace {

Violation violation(std::string kind, std::vector<std::size_t> pieces, std::vector<Point> points) {
  return Violation{std::move(kind), std::move(pieces), std::move(points)};
}

// Checks that `parts` (piece index -> points) partition `whole` and that the
// images partition `image_whole`. Shared by the finite and ray verifiers.
template <typename ImageFn>
void check_partitions(const std::vector<const PointSet*>& parts, const PointSet& whole,
                      const PointSet& image_whole, ImageFn&& image_of, VerificationReport& report) {
  std::map<Point, std::size_t> owner;
  std::map<Point, std::size_t> image_owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Point& a : *parts[i]) {
      ++report.points_checked;
      auto [it, inserted] = owner.emplace(a, i);
      if (!inserted) report.violations.push_back(violation("piece_overlap", {it->second, i}, {a}));
      if (!whole.contains(a)) report.violations.push_back(violation("piece_outside_source", {i}, {a}));

      Point b = image_of(i, a);
      auto [jt, fresh] = image_owner.emplace(b, i);
      if (!fresh) report.violations.push_back(violation("image_overlap", {jt->second, i}, {b}));
      if (!image_whole.contains(b)) {
        report.violations.push_back(violation("image_outside_target", {i}, {a, b}));
      }
    }
  }
  for (const Point& a : whole) {
    if (!owner.contains(a)) report.violations.push_back(violation("source_uncovered", {}, {a}));
  }
  for (const Point& b : image_whole) {
    if (!image_owner.contains(b)) report.violations.push_back(violation("target_uncovered", {}, {b}));
  }
}

bool proper_subset(const PointSet& sub, const PointSet& super) {
  return sub.size() < super.size() && std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

VerificationReport verify_finite(const ActionSpec& spec, const FiniteCertificate& c) {
  VerificationReport report;
  std::vector<const PointSet*> parts;
  for (const auto& piece : c.pieces) {
    spec.validate(piece.word);
    parts.push_back(&piece.set);
  }
  check_partitions(parts, c.source, c.target,
                   [&](std::size_t i, const Point& a) { return apply(spec, c.pieces[i].word, a); },
                   report);
  return report;
}

VerificationReport verify_ray(const ActionSpec& spec, const RayCertificate& c) {
  const std::size_t n = c.letters.size();
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "ray certificate needs at least 2 letters");

  std::vector<Point> gamma = trace_path(spec, c.base, c.letters);
  std::unordered_map<Point, std::size_t, PointHash> seen;
  seen.emplace(c.base, 0);
  for (std::size_t k = 0; k < n; ++k) {
    auto [it, inserted] = seen.emplace(gamma[k], k + 1);
    if (!inserted) throw NotSimpleError(it->second, k + 1);
  }

  VerificationReport report;
  if (c.gamma != gamma) report.violations.push_back(violation("path_mismatch", {}, {}));

  PointSet body(gamma.begin(), gamma.end() - 1);  // gamma minus its last point
  PointSet image_whole(gamma.begin() + 1, gamma.end());  // gamma minus s_1 x
  if (c.target != image_whole) report.violations.push_back(violation("target_mismatch", {}, {gamma.front()}));

  std::vector<const PointSet*> parts;
  for (const auto& piece : c.pieces) {
    spec.validate(piece.letter);
    parts.push_back(&piece.set);
  }
  check_partitions(parts, body, image_whole,
                   [&](std::size_t i, const Point& a) { return spec.apply_letter(c.pieces[i].letter, a); },
                   report);
  return report;
}

ExtendedCertificate extend_to_full_set(const ActionSpec& spec, const FiniteCertificate& c) {
  if (!verify_finite(spec, c).pass()) {
    throw Error(ErrorKind::CertificateInvalid, "cannot extend a certificate that fails verification");
  }
  if (!proper_subset(c.target, c.source)) {
    throw Error(ErrorKind::NotProper, "target is not a proper subset of source (|source| = " +
                                          std::to_string(c.source.size()) + ", |target| = " +
                                          std::to_string(c.target.size()) + ")");
  }
  return ExtendedCertificate{c, GroupWord::identity()};
}

ExtendedCertificate extend_to_full_set(const ActionSpec& spec, const RayCertificate& c) {
  if (!verify_ray(spec, c).pass()) {
    throw Error(ErrorKind::CertificateInvalid, "cannot extend a certificate that fails verification");
  }
  if (!proper_subset(c.target, c.source())) {
    throw Error(ErrorKind::NotProper, "target is not a proper subset of source");
  }
  return ExtendedCertificate{c, GroupWord::identity()};
}

namespace {

struct InnerView {
  PointSet source;
  PointSet target;
  std::vector<std::pair<const PointSet*, GroupWord>> pieces;
};

InnerView view_of(const FiniteCertificate& f) {
  InnerView v;
  v.source = f.source;
  v.target = f.target;
  for (const auto& p : f.pieces) v.pieces.emplace_back(&p.set, p.word);
  return v;
}

InnerView view_of(const RayCertificate& r) {
  InnerView v;
  v.source = r.source();
  v.target = r.target;
  for (const auto& p : r.pieces) v.pieces.emplace_back(&p.set, GroupWord::single(p.letter));
  return v;
}

InnerView view_of(const std::variant<FiniteCertificate, RayCertificate>& inner) {
  return std::visit([](const auto& x) { return view_of(x); }, inner);
}

}  // namespace

ExtendedWindowReport verify_extended(const ActionSpec& spec, const ExtendedCertificate& c,
                                     const PointSet& window) {
  ExtendedWindowReport out;
  if (const auto* f = std::get_if<FiniteCertificate>(&c.inner)) {
    out.report = verify_finite(spec, *f);
  } else {
    out.report = verify_ray(spec, std::get<RayCertificate>(c.inner));
  }
  auto& violations = out.report.violations;
  InnerView inner = view_of(c.inner);
  if (!proper_subset(inner.target, inner.source)) {
    violations.push_back(violation("not_proper", {}, {}));
  }

  out.window = window;
  out.window.insert(inner.source.begin(), inner.source.end());
  out.window.insert(inner.target.begin(), inner.target.end());
  for (const auto& p : out.window) spec.validate(p);

  PointSet covered;
  PointSet extended_target;
  for (const auto& [set, word] : inner.pieces) {
    for (const Point& a : *set) {
      covered.insert(a);
      extended_target.insert(apply(spec, word, a));
    }
  }
  const std::size_t rest_index = inner.pieces.size();
  for (const Point& p : out.window) {
    if (inner.source.contains(p)) continue;
    ++out.report.points_checked;
    covered.insert(p);
    Point image = apply(spec, c.rest_word, p);
    if (image != p) violations.push_back(violation("rest_not_fixed", {rest_index}, {p, image}));
    if (!extended_target.insert(image).second) {
      violations.push_back(violation("image_overlap", {rest_index}, {image}));
    }
  }
  std::set_difference(out.window.begin(), out.window.end(), covered.begin(), covered.end(),
                      std::inserter(out.boundary, out.boundary.end()));
  std::set_difference(out.window.begin(), out.window.end(), extended_target.begin(),
                      extended_target.end(), std::inserter(out.missing, out.missing.end()));

  PointSet expected;
  std::set_difference(inner.source.begin(), inner.source.end(), inner.target.begin(),
                      inner.target.end(), std::inserter(expected, expected.end()));
  if (out.missing != expected) {
    violations.push_back(violation("missing_mismatch", {}, std::vector<Point>(out.missing.begin(), out.missing.end())));
  }
  return out;
}

WindowedMap restrict_to_window(const ActionSpec& spec, const Certificate& c, const PointSet& window) {
  WindowedMap m;
  auto in_window = [&](const PointSet& s) {
    PointSet out;
    std::set_intersection(s.begin(), s.end(), window.begin(), window.end(),
                          std::inserter(out, out.end()));
    return out;
  };
  auto add_arrows = [&](const InnerView& v) {
    for (const auto& [set, word] : v.pieces) {
      for (const Point& a : *set) {
        if (window.contains(a)) m.arrows.emplace_back(a, apply(spec, word, a));
      }
    }
  };

  if (const auto* ext = std::get_if<ExtendedCertificate>(&c)) {
    InnerView v = view_of(ext->inner);
    m.source = window;
    add_arrows(v);
    PointSet target = in_window(v.target);
    for (const Point& p : window) {
      if (v.source.contains(p)) continue;
      Point image = apply(spec, ext->rest_word, p);
      m.arrows.emplace_back(p, image);
      if (window.contains(image)) target.insert(image);
    }
    m.target = std::move(target);
  } else {
    InnerView v = std::holds_alternative<FiniteCertificate>(c) ? view_of(std::get<FiniteCertificate>(c))
                                                                : view_of(std::get<RayCertificate>(c));
    m.source = in_window(v.source);
    m.target = in_window(v.target);
    add_arrows(v);
  }
  std::sort(m.arrows.begin(), m.arrows.end());
  return m;
}

namespace {

Json inner_to_json(const ActionSpec& spec, const std::variant<FiniteCertificate, RayCertificate>& inner) {
  return std::visit([&](const auto& x) { return to_json(spec, Certificate{x}); }, inner);
}

}  // namespace

Json to_json(const ActionSpec& spec, const Certificate& c) {
  Json j = Json::object();
  if (const auto* f = std::get_if<FiniteCertificate>(&c)) {
    j["kind"] = "finite";
    j["source"] = points_to_json(spec, f->source);
    Json pieces = Json::array();
    for (const auto& p : f->pieces) {
      pieces.push_back({{"set", points_to_json(spec, p.set)}, {"word", word_to_json(spec, p.word)}});
    }
    j["pieces"] = pieces;
    j["target"] = points_to_json(spec, f->target);
  } else if (const auto* r = std::get_if<RayCertificate>(&c)) {
    j["kind"] = "ray";
    j["base"] = point_to_json(spec, r->base);
    j["letters"] = letters_to_json(spec, r->letters);
    j["source"] = points_to_json(spec, r->gamma);
    Json pieces = Json::array();
    for (const auto& p : r->pieces) {
      pieces.push_back({{"ray_letter", spec.letter_name(p.letter)},
                        {"set", points_to_json(spec, p.set)},
                        {"word", word_to_json(spec, GroupWord::single(p.letter))}});
    }
    j["pieces"] = pieces;
    j["target"] = points_to_json(spec, r->target);
  } else {
    const auto& e = std::get<ExtendedCertificate>(c);
    j["kind"] = "extended";
    j["inner"] = inner_to_json(spec, e.inner);
    j["rest_piece"] = {{"set", "complement"}, {"word", word_to_json(spec, e.rest_word)}};
  }
  return j;
}

Certificate certificate_from_json(const ActionSpec& spec, const Json& j) {
  std::string kind = require_field(j, "kind", "certificate").is_string()
                         ? j["kind"].get<std::string>()
                         : std::string();
  if (kind == "finite") {
    FiniteCertificate c;
    c.source = point_set_from_json(spec, require_field(j, "source", "certificate"));
    c.target = point_set_from_json(spec, require_field(j, "target", "certificate"));
    const auto& pieces = require_field(j, "pieces", "certificate");
    if (!pieces.is_array()) throw Error(ErrorKind::ParseError, "field 'certificate.pieces': expected an array");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      std::string ctx = "certificate.pieces[" + std::to_string(i) + "]";
      Piece p;
      p.set = point_set_from_json(spec, require_field(pieces[i], "set", ctx));
      p.word = word_from_json(spec, require_field(pieces[i], "word", ctx));
      c.pieces.push_back(std::move(p));
    }
    return c;
  }
  if (kind == "ray") {
    RayCertificate c;
    c.base = point_from_json(spec, require_field(j, "base", "certificate"));
    c.letters = letters_from_json(spec, require_field(j, "letters", "certificate"));
    const auto& source = require_field(j, "source", "certificate");
    if (!source.is_array()) throw Error(ErrorKind::ParseError, "field 'certificate.source': expected an array");
    for (const auto& p : source) c.gamma.push_back(point_from_json(spec, p));
    c.target = point_set_from_json(spec, require_field(j, "target", "certificate"));
    const auto& pieces = require_field(j, "pieces", "certificate");
    if (!pieces.is_array()) throw Error(ErrorKind::ParseError, "field 'certificate.pieces': expected an array");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      std::string ctx = "certificate.pieces[" + std::to_string(i) + "]";
      const auto& name = require_field(pieces[i], "ray_letter", ctx);
      auto letters = letters_from_json(spec, Json::array({name}));
      c.pieces.push_back(RayPiece{letters.front(), point_set_from_json(spec, require_field(pieces[i], "set", ctx))});
    }
    return c;
  }
  if (kind == "extended") {
    Certificate inner = certificate_from_json(spec, require_field(j, "inner", "certificate"));
    ExtendedCertificate e;
    if (auto* f = std::get_if<FiniteCertificate>(&inner)) {
      e.inner = std::move(*f);
    } else if (auto* r = std::get_if<RayCertificate>(&inner)) {
      e.inner = std::move(*r);
    } else {
      throw Error(ErrorKind::ParseError, "field 'certificate.inner': nested extension is not supported");
    }
    if (j.contains("rest_piece")) {
      e.rest_word = word_from_json(spec, require_field(j["rest_piece"], "word", "certificate.rest_piece"));
    }
    return e;
  }
  throw Error(ErrorKind::ParseError, "field 'certificate.kind': expected finite, ray or extended");
}

Json to_json(const ActionSpec& spec, const VerificationReport& r) {
  Json j = Json::object();
  j["verdict"] = r.pass() ? "Pass" : "Fail";
  j["points_checked"] = r.points_checked;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"kind", v.kind}, {"pieces", v.pieces}, {"points", points_to_json(spec, v.points)}});
  }
  j["violations"] = vs;
  return j;
}

}  // namespace orbitcert
