#include "orbitcert/json_io.hpp"

#include <fstream>
#include <sstream>

#include "orbitcert/error.hpp"

namespace orbitcert {

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + why);
}

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) parse_fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_array(const Json& j, const std::string& field) {
  if (!j.is_array()) parse_fail(field, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) parse_fail(field, "expected a string");
  return j.get<std::string>();
}

Letter parse_letter(const ActionSpec& spec, const Json& j, const std::string& field) {
  auto name = as_string(j, field);
  auto l = spec.find_letter(name);
  if (!l) throw Error(ErrorKind::InvalidLetter, "field '" + field + "': unknown letter '" + name + "'");
  return *l;
}

}  // namespace

const Json& require_field(const Json& j, const std::string& key, const std::string& context) {
  if (!j.is_object()) parse_fail(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(context.empty() ? key : context + "." + key, "missing");
  return *it;
}

Json point_to_json(const ActionSpec& spec, const Point& p) {
  const auto& c = p.coords;
  switch (spec.family()) {
    case Family::FinitePerm: return c.at(0);
    case Family::ZD: return Json(c);
    case Family::FreeGroupSelf: {
      std::string s;
      for (std::int64_t code : c) {
        Letter l{static_cast<std::uint32_t>((code > 0 ? code : -code) - 1), code < 0};
        s += spec.letter_name(l);
      }
      return s;
    }
    case Family::LamplighterSelf: {
      Json j = Json::object();
      j["lamps"] = std::vector<std::int64_t>(c.begin() + 1, c.end());
      j["pos"] = c.at(0);
      return j;
    }
  }
  return nullptr;
}

Point point_from_json(const ActionSpec& spec, const Json& j) {
  Point p;
  switch (spec.family()) {
    case Family::FinitePerm:
      p = Point{as_int(j, "point")};
      break;
    case Family::ZD:
      if (j.is_number_integer() && spec.parameter() == 1) {
        p = Point{j.get<std::int64_t>()};
      } else {
        p = Point(as_int_array(j, "point"));
      }
      break;
    case Family::FreeGroupSelf: {
      auto s = as_string(j, "point");
      for (char ch : s) {
        auto l = spec.find_letter(std::string(1, ch));
        if (!l) throw Error(ErrorKind::InvalidPoint, "free_group_self: unknown letter '" + std::string(1, ch) + "'");
        auto g = static_cast<std::int64_t>(l->index) + 1;
        p.coords.push_back(l->inverse ? -g : g);
      }
      break;
    }
    case Family::LamplighterSelf: {
      if (!j.is_object()) parse_fail("point", "expected {\"lamps\": [...], \"pos\": n}");
      p.coords.push_back(as_int(require_field(j, "pos", "point"), "point.pos"));
      for (std::int64_t f : as_int_array(require_field(j, "lamps", "point"), "point.lamps")) {
        p.coords.push_back(f);
      }
      break;
    }
  }
  spec.validate(p);
  return p;
}

Json points_to_json(const ActionSpec& spec, const PointSet& points) {
  Json j = Json::array();
  for (const auto& p : points) j.push_back(point_to_json(spec, p));
  return j;
}

Json points_to_json(const ActionSpec& spec, const std::vector<Point>& points) {
  Json j = Json::array();
  for (const auto& p : points) j.push_back(point_to_json(spec, p));
  return j;
}

PointSet point_set_from_json(const ActionSpec& spec, const Json& j) {
  if (!j.is_array()) parse_fail("points", "expected an array of points");
  PointSet out;
  for (const auto& e : j) out.insert(point_from_json(spec, e));
  return out;
}

Json word_to_json(const ActionSpec& spec, const GroupWord& w) {
  Json j = Json::array();
  for (Letter l : w.letters) j.push_back(spec.letter_name(l));
  return j;
}

GroupWord word_from_json(const ActionSpec& spec, const Json& j) {
  if (!j.is_array()) parse_fail("word", "expected an array of letter names");
  GroupWord w;
  for (std::size_t i = 0; i < j.size(); ++i) {
    w.letters.push_back(parse_letter(spec, j[i], "word[" + std::to_string(i) + "]"));
  }
  return w;
}

Json letters_to_json(const ActionSpec& spec, const std::vector<Letter>& letters) {
  Json j = Json::array();
  for (Letter l : letters) j.push_back(spec.letter_name(l));
  return j;
}

std::vector<Letter> letters_from_json(const ActionSpec& spec, const Json& j) {
  if (!j.is_array()) parse_fail("letters", "expected an array of letter names");
  std::vector<Letter> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_letter(spec, j[i], "letters[" + std::to_string(i) + "]"));
  }
  return out;
}

Json spec_to_json(const ActionSpec& spec) {
  Json j = Json::object();
  j["family"] = std::string(to_string(spec.family()));
  Json params = Json::object();
  Json gens = Json::array();
  switch (spec.family()) {
    case Family::FinitePerm:
      params["size"] = spec.parameter();
      for (const auto& g : spec.generators()) {
        gens.push_back({{"name", g.name}, {"inverse_name", g.inverse_name}, {"perm", g.data}});
      }
      break;
    case Family::ZD:
      params["dim"] = spec.parameter();
      for (const auto& g : spec.generators()) {
        gens.push_back({{"name", g.name}, {"inverse_name", g.inverse_name}, {"vector", g.data}});
      }
      break;
    case Family::FreeGroupSelf:
      params["rank"] = spec.parameter();
      for (const auto& g : spec.generators()) gens.push_back({{"name", g.name}, {"inverse_name", g.inverse_name}});
      break;
    case Family::LamplighterSelf:
      for (const auto& g : spec.generators()) gens.push_back({{"name", g.name}, {"inverse_name", g.inverse_name}});
      break;
  }
  j["params"] = params;
  j["generators"] = gens;
  return j;
}

ActionSpec spec_from_json(const Json& j) {
  auto family_name = as_string(require_field(j, "family", "spec"), "family");
  auto family = family_from_string(family_name);
  if (!family) parse_fail("family", "unknown family '" + family_name + "'");
  Json params = j.contains("params") ? j["params"] : Json::object();
  if (!params.is_object()) parse_fail("params", "expected an object");

  auto read_generators = [&](const char* data_key) {
    std::vector<Generator> gens;
    const auto& arr = require_field(j, "generators", "spec");
    if (!arr.is_array()) parse_fail("generators", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string ctx = "generators[" + std::to_string(i) + "]";
      Generator g;
      g.name = as_string(require_field(arr[i], "name", ctx), ctx + ".name");
      if (arr[i].contains("inverse_name")) {
        g.inverse_name = as_string(arr[i]["inverse_name"], ctx + ".inverse_name");
      }
      g.data = as_int_array(require_field(arr[i], data_key, ctx), ctx + "." + data_key);
      gens.push_back(std::move(g));
    }
    return gens;
  };

  switch (*family) {
    case Family::FinitePerm: {
      auto size = as_int(require_field(params, "size", "params"), "params.size");
      if (size <= 0) parse_fail("params.size", "must be positive");
      return ActionSpec::finite_perm(static_cast<std::size_t>(size), read_generators("perm"));
    }
    case Family::ZD: {
      auto dim = as_int(require_field(params, "dim", "params"), "params.dim");
      if (dim <= 0) parse_fail("params.dim", "must be positive");
      if (!j.contains("generators")) return ActionSpec::z_d(static_cast<std::size_t>(dim));
      return ActionSpec::z_d(static_cast<std::size_t>(dim), read_generators("vector"));
    }
    case Family::FreeGroupSelf: {
      auto rank = as_int(require_field(params, "rank", "params"), "params.rank");
      if (rank <= 0 || rank > 26) parse_fail("params.rank", "must be in 1..26");
      return ActionSpec::free_group(static_cast<std::size_t>(rank));
    }
    case Family::LamplighterSelf:
      return ActionSpec::lamplighter();
  }
  parse_fail("family", "unsupported");
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, what + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace orbitcert
