#include "orbitcert/action.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "orbitcert/error.hpp"

namespace orbitcert {

namespace {

std::string default_inverse_name(const std::string& name) {
  if (name.size() == 1 && std::isalpha(static_cast<unsigned char>(name[0]))) {
    char c = name[0];
    return std::string(1, std::islower(static_cast<unsigned char>(c))
                              ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                              : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (!name.empty() && name[0] == '+') return "-" + name.substr(1);
  return name + "^-1";
}

std::int64_t free_letter(Letter l) {
  auto g = static_cast<std::int64_t>(l.index) + 1;
  return l.inverse ? -g : g;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::FinitePerm: return "finite_perm";
    case Family::ZD: return "z_d";
    case Family::FreeGroupSelf: return "free_group_self";
    case Family::LamplighterSelf: return "lamplighter_self";
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "finite_perm") return Family::FinitePerm;
  if (name == "z_d") return Family::ZD;
  if (name == "free_group_self") return Family::FreeGroupSelf;
  if (name == "lamplighter_self") return Family::LamplighterSelf;
  return std::nullopt;
}

ActionSpec ActionSpec::finite_perm(std::size_t size, std::vector<Generator> generators) {
  if (size == 0) throw Error(ErrorKind::InvalidSpec, "finite_perm: universe must be nonempty");
  ActionSpec spec;
  spec.family_ = Family::FinitePerm;
  spec.parameter_ = size;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& table = generators[g].data;
    if (table.size() != size) {
      throw Error(ErrorKind::InvalidSpec, "finite_perm: generator '" + generators[g].name +
                                              "' table has " + std::to_string(table.size()) +
                                              " entries, expected " + std::to_string(size));
    }
    std::vector<std::int64_t> inverse(size, -1);
    for (std::size_t i = 0; i < size; ++i) {
      std::int64_t j = table[i];
      if (j < 0 || static_cast<std::size_t>(j) >= size || inverse[j] != -1) {
        throw Error(ErrorKind::InvalidSpec,
                    "finite_perm: generator '" + generators[g].name + "' is not a permutation");
      }
      inverse[j] = static_cast<std::int64_t>(i);
    }
    spec.inverse_tables_.push_back(std::move(inverse));
  }
  spec.generators_ = std::move(generators);
  spec.finish();
  return spec;
}

ActionSpec ActionSpec::z_d(std::size_t dim) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<std::int64_t> v(dim, 0);
    v[i] = 1;
    std::string name = dim == 1 ? "+1" : "+e" + std::to_string(i + 1);
    gens.push_back(Generator{name, "", std::move(v)});
  }
  return z_d(dim, std::move(gens));
}

ActionSpec ActionSpec::z_d(std::size_t dim, std::vector<Generator> generators) {
  if (dim == 0) throw Error(ErrorKind::InvalidSpec, "z_d: dimension must be positive");
  for (const auto& g : generators) {
    if (g.data.size() != dim) {
      throw Error(ErrorKind::InvalidSpec, "z_d: generator '" + g.name + "' must have " +
                                              std::to_string(dim) + " components");
    }
  }
  ActionSpec spec;
  spec.family_ = Family::ZD;
  spec.parameter_ = dim;
  spec.generators_ = std::move(generators);
  spec.finish();
  return spec;
}

ActionSpec ActionSpec::free_group(std::size_t rank) {
  if (rank == 0 || rank > 26) throw Error(ErrorKind::InvalidSpec, "free_group_self: rank must be in 1..26");
  ActionSpec spec;
  spec.family_ = Family::FreeGroupSelf;
  spec.parameter_ = rank;
  for (std::size_t i = 0; i < rank; ++i) {
    spec.generators_.push_back(Generator{std::string(1, static_cast<char>('a' + i)), "", {}});
  }
  spec.finish();
  return spec;
}

ActionSpec ActionSpec::lamplighter() {
  ActionSpec spec;
  spec.family_ = Family::LamplighterSelf;
  spec.parameter_ = 0;
  spec.generators_ = {Generator{"a", "", {}}, Generator{"b", "", {}}};
  spec.finish();
  return spec;
}

void ActionSpec::finish() {
  std::set<std::string> names;
  closure_.clear();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    auto& g = generators_[i];
    if (g.name.empty()) throw Error(ErrorKind::InvalidSpec, "generator names must be nonempty");
    if (g.inverse_name.empty()) g.inverse_name = default_inverse_name(g.name);
    for (const auto& n : {g.name, g.inverse_name}) {
      if (!names.insert(n).second) {
        throw Error(ErrorKind::InvalidSpec, "duplicate generator name '" + n + "'");
      }
    }
    closure_.push_back(Letter{static_cast<std::uint32_t>(i), false});
    closure_.push_back(Letter{static_cast<std::uint32_t>(i), true});
  }
}

bool ActionSpec::is_standard_lattice() const {
  if (family_ != Family::ZD || generators_.size() != parameter_) return false;
  std::vector<bool> seen(parameter_, false);
  for (const auto& g : generators_) {
    std::size_t nonzero = 0;
    std::size_t axis = 0;
    for (std::size_t k = 0; k < g.data.size(); ++k) {
      if (g.data[k] != 0) {
        ++nonzero;
        axis = k;
      }
    }
    if (nonzero != 1 || (g.data[axis] != 1 && g.data[axis] != -1) || seen[axis]) return false;
    seen[axis] = true;
  }
  return true;
}

std::string ActionSpec::letter_name(Letter l) const {
  validate(l);
  const auto& g = generators_[l.index];
  return l.inverse ? g.inverse_name : g.name;
}

std::optional<Letter> ActionSpec::find_letter(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return Letter{static_cast<std::uint32_t>(i), false};
    if (generators_[i].inverse_name == name) return Letter{static_cast<std::uint32_t>(i), true};
  }
  return std::nullopt;
}

Point ActionSpec::origin() const {
  switch (family_) {
    case Family::FinitePerm: return Point{0};
    case Family::ZD: return Point(std::vector<std::int64_t>(parameter_, 0));
    case Family::FreeGroupSelf: return Point{};
    case Family::LamplighterSelf: return Point{0};
  }
  return Point{};
}

void ActionSpec::validate(Letter l) const {
  if (l.index >= generators_.size()) {
    throw Error(ErrorKind::InvalidLetter, "letter index " + std::to_string(l.index) +
                                              " out of range (" +
                                              std::to_string(generators_.size()) + " generators)");
  }
}

void ActionSpec::validate(const GroupWord& w) const {
  for (Letter l : w.letters) validate(l);
}

void ActionSpec::validate(const Point& p) const {
  const auto& c = p.coords;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidPoint, std::string(to_string(family_)) + ": " + why);
  };
  switch (family_) {
    case Family::FinitePerm:
      if (c.size() != 1) fail("point must be a single index");
      if (c[0] < 0 || static_cast<std::size_t>(c[0]) >= parameter_) {
        fail("index " + std::to_string(c[0]) + " outside universe of size " +
             std::to_string(parameter_));
      }
      return;
    case Family::ZD:
      if (c.size() != parameter_) fail("point must have " + std::to_string(parameter_) + " coordinates");
      return;
    case Family::FreeGroupSelf:
      for (std::size_t i = 0; i < c.size(); ++i) {
        auto r = static_cast<std::int64_t>(parameter_);
        if (c[i] == 0 || c[i] > r || c[i] < -r) fail("letter code out of range");
        if (i > 0 && c[i] == -c[i - 1]) fail("word is not freely reduced");
      }
      return;
    case Family::LamplighterSelf:
      if (c.empty()) fail("point must carry a position");
      for (std::size_t i = 2; i < c.size(); ++i) {
        if (c[i] <= c[i - 1]) fail("lamp positions must be strictly increasing");
      }
      return;
  }
}

void ActionSpec::apply_letter_in_place(Letter l, Point& p) const {
  auto& c = p.coords;
  switch (family_) {
    case Family::FinitePerm: {
      const auto& table = l.inverse ? inverse_tables_[l.index] : generators_[l.index].data;
      c[0] = table[static_cast<std::size_t>(c[0])];
      return;
    }
    case Family::ZD: {
      const auto& v = generators_[l.index].data;
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += l.inverse ? -v[k] : v[k];
      return;
    }
    case Family::FreeGroupSelf: {
      std::int64_t code = free_letter(l);
      if (!c.empty() && c.front() == -code) {
        c.erase(c.begin());
      } else {
        c.insert(c.begin(), code);
      }
      return;
    }
    case Family::LamplighterSelf: {
      if (l.index == 0) {
        c[0] += l.inverse ? -1 : 1;
        return;
      }
      auto it = std::lower_bound(c.begin() + 1, c.end(), c[0]);
      if (it != c.end() && *it == c[0]) {
        c.erase(it);
      } else {
        c.insert(it, c[0]);
      }
      return;
    }
  }
}

Point ActionSpec::apply_letter(Letter l, const Point& p) const {
  Point q = p;
  apply_letter_in_place(l, q);
  return q;
}

Point apply(const ActionSpec& spec, const GroupWord& w, const Point& p) {
  spec.validate(w);
  spec.validate(p);
  Point q = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) spec.apply_letter_in_place(*it, q);
  return q;
}

Point apply(const ActionSpec& spec, Letter l, const Point& p) {
  spec.validate(l);
  spec.validate(p);
  return spec.apply_letter(l, p);
}

std::vector<Point> trace_path(const ActionSpec& spec, const Point& x,
                              const std::vector<Letter>& applied) {
  spec.validate(x);
  std::vector<Point> out;
  out.reserve(applied.size());
  Point q = x;
  for (Letter l : applied) {
    spec.validate(l);
    spec.apply_letter_in_place(l, q);
    out.push_back(q);
  }
  return out;
}

}  // namespace orbitcert
