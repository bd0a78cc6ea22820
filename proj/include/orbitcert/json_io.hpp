#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orbitcert/action.hpp"
#include "orbitcert/point.hpp"
#include "orbitcert/word.hpp"

namespace orbitcert {

using Json = nlohmann::json;

// Point encodings on the wire:
//   finite_perm       0-based index as a JSON integer: 3
//   z_d               array of d integers: [1, -2]; a bare integer is accepted when d = 1
//   free_group_self   reduced word as a string over a,A,b,B,...: "aBa"; "" is the identity
//   lamplighter_self  {"lamps": [strictly increasing integers], "pos": integer}
// Words are arrays of letter names, leftmost letter applied last: ["a", "B"] = a.B^-1.

Json point_to_json(const ActionSpec& spec, const Point& p);
Point point_from_json(const ActionSpec& spec, const Json& j);

Json points_to_json(const ActionSpec& spec, const PointSet& points);
Json points_to_json(const ActionSpec& spec, const std::vector<Point>& points);
PointSet point_set_from_json(const ActionSpec& spec, const Json& j);

Json word_to_json(const ActionSpec& spec, const GroupWord& w);
GroupWord word_from_json(const ActionSpec& spec, const Json& j);

/// Letters listed in application order s_1, s_2, ...
Json letters_to_json(const ActionSpec& spec, const std::vector<Letter>& letters);
std::vector<Letter> letters_from_json(const ActionSpec& spec, const Json& j);

Json spec_to_json(const ActionSpec& spec);
ActionSpec spec_from_json(const Json& j);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& what);

/// Looks up `key` in object `j`, throwing ParseError naming `context.key` if absent.
const Json& require_field(const Json& j, const std::string& key, const std::string& context);

}  // namespace orbitcert
