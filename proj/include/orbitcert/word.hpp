#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbitcert {

/// One element of the symmetric generating set: generator `index`, or its
/// inverse when `inverse` is set.
struct Letter {
  std::uint32_t index = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{index, !inverse}; }

  /// Position in the symmetric closure: generators in declaration order,
  /// each followed immediately by its inverse.
  std::size_t closure_position() const { return 2 * std::size_t{index} + (inverse ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return a.closure_position() <=> b.closure_position();
  }
};

/// A group word written left to right as s_n ... s_1. The rightmost letter
/// acts first, so `letters.back()` is applied to the point before the rest.
struct GroupWord {
  std::vector<Letter> letters;

  static GroupWord identity() { return {}; }
  static GroupWord single(Letter l) { return GroupWord{{l}}; }

  /// Builds the word s_n ... s_1 from letters listed in application order
  /// s_1, ..., s_n.
  static GroupWord from_application_order(const std::vector<Letter>& applied);

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  GroupWord inverse() const;

  /// Removes adjacent letter/inverse pairs.
  GroupWord freely_reduced() const;
  bool is_freely_reduced() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord& a, const GroupWord& b) {
    return a.letters <=> b.letters;
  }
};

}  // namespace orbitcert
