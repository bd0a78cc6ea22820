#include "orbitcert/word.hpp"

#include <algorithm>

namespace orbitcert {

GroupWord GroupWord::from_application_order(const std::vector<Letter>& applied) {
  GroupWord w;
  w.letters.assign(applied.rbegin(), applied.rend());
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(it->inverted());
  return w;
}

GroupWord GroupWord::freely_reduced() const {
  GroupWord w;
  for (Letter l : letters) {
    if (!w.letters.empty() && w.letters.back() == l.inverted()) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

bool GroupWord::is_freely_reduced() const {
  return std::adjacent_find(letters.begin(), letters.end(), [](Letter a, Letter b) {
           return a == b.inverted();
         }) == letters.end();
}

}  // namespace orbitcert
