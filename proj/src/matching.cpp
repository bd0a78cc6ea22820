#include "orbitcert/matching.hpp"

#include <algorithm>
#include <map>

#include "orbitcert/error.hpp"
#include "orbitcert/orbit.hpp"

namespace orbitcert {

namespace {

// Kuhn's augmenting-path matching; adjacency lists are tried in order, so
// the result is deterministic.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t left, std::size_t right, std::vector<std::vector<std::size_t>> adj)
      : adj_(std::move(adj)), match_left_(left, kNone), match_right_(right, kNone) {}

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      visited_.assign(match_right_.size(), false);
      if (augment(u)) ++size;
    }
    return size;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::vector<std::size_t>& left_matches() const { return match_left_; }
  const std::vector<std::size_t>& right_matches() const { return match_right_; }

 private:
  bool augment(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      if (visited_[v]) continue;
      visited_[v] = true;
      if (match_right_[v] == kNone || augment(match_right_[v])) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<bool> visited_;
};

// Alternating reachability from the unmatched vertices on one side: non-matching
// edges forward, matching edges back. The reached set Z on that side has
// |N(Z)| = |Z| - #unmatched < |Z|.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> alternating_cut(
    const std::vector<std::vector<std::size_t>>& adj, const std::vector<std::size_t>& match_this,
    const std::vector<std::size_t>& match_other) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<bool> seen_other(match_other.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (match_this[u] == BipartiteMatcher::kNone) {
      seen[u] = true;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : adj[u]) {
      if (seen_other[v]) continue;
      seen_other[v] = true;
      std::size_t w = match_other[v];
      if (w != BipartiteMatcher::kNone && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> z;
  std::vector<std::size_t> nz;
  for (std::size_t u = 0; u < seen.size(); ++u) {
    if (seen[u]) z.push_back(u);
  }
  for (std::size_t v = 0; v < seen_other.size(); ++v) {
    if (seen_other[v]) nz.push_back(v);
  }
  return {z, nz};
}

GroupWord word_from_path(const OrbitGraph& g, std::size_t v) {
  std::vector<Letter> applied;
  for (std::size_t label : g.tree_path(v)) applied.push_back(g.labels()[label].letters.front());
  return GroupWord::from_application_order(applied);
}

}  // namespace

MatchReport match_oracle(const ActionSpec& spec, const PointSet& a, const PointSet& b,
                         std::size_t max_word_len) {
  MatchReport report;
  report.max_word_len = max_word_len;
  std::vector<Point> left(a.begin(), a.end());
  std::vector<Point> right(b.begin(), b.end());
  std::map<Point, std::size_t> right_index;
  for (std::size_t i = 0; i < right.size(); ++i) {
    spec.validate(right[i]);
    right_index.emplace(right[i], i);
  }

  // Balls of radius L: the vertex count of a ball is at most the number of words.
  std::size_t closure = spec.symmetric_closure().size();
  constexpr std::size_t kBallCap = std::size_t{1} << 24;
  std::size_t cap = 1;
  bool saturated = false;
  for (std::size_t len = 0, layer = 1; len < max_word_len; ++len) {
    layer *= std::max<std::size_t>(closure, 1);
    cap += layer;
    if (cap >= kBallCap) {
      cap = kBallCap;
      saturated = true;
      break;
    }
  }
  if (spec.has_finite_universe()) {
    cap = std::min(cap, spec.parameter());
    saturated = false;
  }

  std::vector<std::vector<std::size_t>> adj(left.size());
  std::map<std::pair<std::size_t, std::size_t>, GroupWord> witness;
  OrbitOptions opts;
  opts.max_depth = static_cast<std::int64_t>(max_word_len);
  for (std::size_t i = 0; i < left.size(); ++i) {
    OrbitGraph ball = orbit_bounded(spec, left[i], cap, opts);
    if (saturated && ball.size() == cap) {
      throw Error(ErrorKind::BudgetExceeded, "match_oracle: word ball of radius " +
                                                 std::to_string(max_word_len) + " is too large");
    }
    for (std::size_t v = 0; v < ball.size(); ++v) {
      auto it = right_index.find(ball.vertex(v));
      if (it == right_index.end()) continue;
      adj[i].push_back(it->second);
      GroupWord w = word_from_path(ball, v);
      witness.emplace(std::make_pair(i, it->second), w);
      report.edges.push_back(WitnessEdge{left[i], right[it->second], std::move(w)});
    }
  }

  BipartiteMatcher matcher(left.size(), right.size(), adj);
  std::size_t size = matcher.run();
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::size_t j = matcher.left_matches()[i];
    if (j != BipartiteMatcher::kNone) {
      report.matching.push_back(WitnessEdge{left[i], right[j], witness.at({i, j})});
    }
  }

  if (size == left.size() && size == right.size()) {
    FiniteCertificate cert;
    cert.source = a;
    cert.target = b;
    std::map<GroupWord, std::size_t> piece_of;
    for (const auto& e : report.matching) {
      auto [it, fresh] = piece_of.emplace(e.word, cert.pieces.size());
      if (fresh) cert.pieces.push_back(Piece{{}, e.word});
      cert.pieces[it->second].set.insert(e.from);
    }
    report.certificate = std::move(cert);
    return report;
  }

  HallViolation hall;
  if (size < left.size()) {
    auto [z, nz] = alternating_cut(adj, matcher.left_matches(), matcher.right_matches());
    hall.side = "source";
    for (auto u : z) hall.set.insert(left[u]);
    for (auto v : nz) hall.neighborhood.insert(right[v]);
  } else {
    std::vector<std::vector<std::size_t>> radj(right.size());
    for (std::size_t u = 0; u < adj.size(); ++u) {
      for (std::size_t v : adj[u]) radj[v].push_back(u);
    }
    auto [z, nz] = alternating_cut(radj, matcher.right_matches(), matcher.left_matches());
    hall.side = "target";
    for (auto v : z) hall.set.insert(right[v]);
    for (auto u : nz) hall.neighborhood.insert(left[u]);
  }
  report.hall_violation = std::move(hall);
  return report;
}

namespace {

class PieceSearch {
 public:
  PieceSearch(const ActionSpec& spec, const PointSet& a, const PointSet& b, const BruteForceOptions& o)
      : spec_(spec), left_(a.begin(), a.end()), right_(b), options_(o) {
    enumerate_words();
  }

  std::optional<FiniteCertificate> run() {
    if (!search(0)) return std::nullopt;
    FiniteCertificate cert;
    cert.source = PointSet(left_.begin(), left_.end());
    cert.target = right_;
    std::map<std::size_t, std::size_t> piece_of;
    for (std::size_t i = 0; i < left_.size(); ++i) {
      auto [it, fresh] = piece_of.emplace(chosen_[i], cert.pieces.size());
      if (fresh) cert.pieces.push_back(Piece{{}, words_[chosen_[i]]});
      cert.pieces[it->second].set.insert(left_[i]);
    }
    return cert;
  }

 private:
  // All freely reduced words of length <= L, shortest first.
  void enumerate_words() {
    std::vector<GroupWord> layer{GroupWord{}};
    words_.push_back(GroupWord{});
    for (std::size_t len = 0; len < options_.max_word_len; ++len) {
      std::vector<GroupWord> next;
      for (const auto& w : layer) {
        for (Letter l : spec_.symmetric_closure()) {
          if (!w.empty() && w.letters.front() == l.inverted()) continue;
          GroupWord v;
          v.letters.push_back(l);
          v.letters.insert(v.letters.end(), w.letters.begin(), w.letters.end());
          next.push_back(std::move(v));
          if (words_.size() + next.size() > options_.node_cap) {
            throw Error(ErrorKind::BudgetExceeded, "brute_force_pieces: word enumeration exceeds cap");
          }
        }
      }
      words_.insert(words_.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }

  bool search(std::size_t i) {
    if (++nodes_ > options_.node_cap) {
      throw Error(ErrorKind::BudgetExceeded, "brute_force_pieces: search exceeds node cap of " +
                                                 std::to_string(options_.node_cap));
    }
    if (i == left_.size()) return used_targets_.size() == right_.size();
    // With a slack piece bound, two words with the same image at this point
    // lead to equivalent subtrees.
    bool slack = options_.max_pieces >= left_.size();
    PointSet tried;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Point image = apply(spec_, words_[k], left_[i]);
      if (!right_.contains(image) || used_targets_.contains(image)) continue;
      if (slack && !tried.insert(image).second) continue;
      bool new_word = word_uses_[k] == 0;
      if (new_word && distinct_words_ == options_.max_pieces) continue;

      chosen_.push_back(k);
      used_targets_.insert(image);
      ++word_uses_[k];
      if (new_word) ++distinct_words_;
      if (search(i + 1)) return true;
      if (new_word) --distinct_words_;
      --word_uses_[k];
      used_targets_.erase(image);
      chosen_.pop_back();
    }
    return false;
  }

  const ActionSpec& spec_;
  std::vector<Point> left_;
  PointSet right_;
  BruteForceOptions options_;
  std::vector<GroupWord> words_;
  std::map<std::size_t, std::size_t> word_uses_;
  std::vector<std::size_t> chosen_;
  PointSet used_targets_;
  std::size_t distinct_words_ = 0;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<FiniteCertificate> brute_force_pieces(const ActionSpec& spec, const PointSet& a,
                                                    const PointSet& b, const BruteForceOptions& options) {
  for (const auto& p : a) spec.validate(p);
  for (const auto& p : b) spec.validate(p);
  return PieceSearch(spec, a, b, options).run();
}

Json to_json(const ActionSpec& spec, const MatchReport& r) {
  auto edge_json = [&](const WitnessEdge& e) {
    return Json{{"from", point_to_json(spec, e.from)}, {"to", point_to_json(spec, e.to)},
                {"word", word_to_json(spec, e.word)}};
  };
  Json j = Json::object();
  j["verdict"] = r.certificate ? "Some" : "None";
  j["max_word_len"] = r.max_word_len;
  j["edge_count"] = r.edges.size();
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(edge_json(e));
  j["edges"] = edges;
  j["matching_size"] = r.matching.size();
  Json matching = Json::array();
  for (const auto& e : r.matching) matching.push_back(edge_json(e));
  j["matching"] = matching;
  j["certificate"] = r.certificate ? to_json(spec, Certificate{*r.certificate}) : Json(nullptr);
  if (r.hall_violation) {
    j["hall_violation"] = {{"side", r.hall_violation->side},
                           {"set", points_to_json(spec, r.hall_violation->set)},
                           {"neighborhood", points_to_json(spec, r.hall_violation->neighborhood)}};
  } else {
    j["hall_violation"] = nullptr;
  }
  return j;
}

}  // namespace orbitcert
