#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcert/point.hpp"
#include "orbitcert/word.hpp"

namespace orbitcert {

enum class Family { FinitePerm, ZD, FreeGroupSelf, LamplighterSelf };

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct Generator {
  std::string name;
  std::string inverse_name;
  /// Permutation table (finite_perm) or translation vector (z_d); empty for
  /// the self-action families, whose generators are fixed.
  std::vector<std::int64_t> data;
};

/// A finitely generated group acting on a countable set.
///
/// The lamplighter family is the left regular action of Z_2 wr Z written with
/// the law (p, f)(p', f') = (p + p', shift_{p'}(f) + f'). Under this law left
/// multiplication by `a` moves the lamplighter one step to the right and left
/// multiplication by `b` toggles the lamp under the lamplighter. The group is
/// the opposite of the usual presentation and isomorphic to it via g -> g^-1.
class ActionSpec {
 public:
  /// Each table must be a permutation of {0, ..., size-1}.
  static ActionSpec finite_perm(std::size_t size, std::vector<Generator> generators);
  /// Standard basis generators named "+e1"/"-e1", ... ("+1"/"-1" when dim is 1).
  static ActionSpec z_d(std::size_t dim);
  static ActionSpec z_d(std::size_t dim, std::vector<Generator> generators);
  /// Free group on generators a, b, c, ... acting on itself by left multiplication.
  static ActionSpec free_group(std::size_t rank);
  static ActionSpec lamplighter();

  Family family() const { return family_; }
  std::size_t generator_count() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const { return generators_; }

  /// Universe size for finite_perm, dimension for z_d, rank for free_group_self.
  std::size_t parameter() const { return parameter_; }
  bool has_finite_universe() const { return family_ == Family::FinitePerm; }
  /// Points are group elements and generators act by left multiplication
  /// (for z_d, by translation).
  bool is_self_action() const { return family_ != Family::FinitePerm; }
  /// z_d whose generators are, up to sign and order, the standard basis.
  bool is_standard_lattice() const;

  /// Generators in declaration order, each followed by its inverse.
  const std::vector<Letter>& symmetric_closure() const { return closure_; }

  std::string letter_name(Letter l) const;
  std::optional<Letter> find_letter(std::string_view name) const;

  /// The identity element for self-actions, the origin of Z^d, index 0 for
  /// finite universes.
  Point origin() const;

  /// Throws InvalidPoint unless `p` is the canonical encoding of a point.
  void validate(const Point& p) const;
  void validate(Letter l) const;
  void validate(const GroupWord& w) const;

  /// s.p for a single symmetric generator. Assumes `p` is canonical.
  Point apply_letter(Letter l, const Point& p) const;
  void apply_letter_in_place(Letter l, Point& p) const;

 private:
  ActionSpec() = default;
  void finish();

  Family family_ = Family::FinitePerm;
  std::size_t parameter_ = 0;
  std::vector<Generator> generators_;
  std::vector<std::vector<std::int64_t>> inverse_tables_;
  std::vector<Letter> closure_;
};

/// Evaluates (s_n ... s_1) . p, rightmost letter first. Validates the word
/// and the point.
Point apply(const ActionSpec& spec, const GroupWord& w, const Point& p);
Point apply(const ActionSpec& spec, Letter l, const Point& p);

/// Applies letters given in application order s_1, s_2, ... and returns the
/// visited points s_1 x, s_2 s_1 x, ... (excluding x).
std::vector<Point> trace_path(const ActionSpec& spec, const Point& x,
                              const std::vector<Letter>& applied);

}  // namespace orbitcert
