/*
 * Copyright 2026 The vpow Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "vpow/game_file.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "vpow/errors.hpp"
#include "vpow/indices.hpp"

namespace vpow {
namespace {

using nlohmann::json;

// Forward iterator over the text that remembers the line of the last
// non-whitespace character consumed. Copies share the counter.
class LineCountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  struct State {
    std::size_t line = 1;
    std::size_t token_line = 1;
  };

  LineCountingIterator() = default;
  LineCountingIterator(const char* p, State* state) : p_(p), state_(state) {}

  reference operator*() const { return *p_; }
  LineCountingIterator& operator++() {
    const char c = *p_;
    if (c == '\n') {
      ++state_->line;
    } else if (c != ' ' && c != '\t' && c != '\r') {
      state_->token_line = state_->line;
    }
    ++p_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  bool operator==(const LineCountingIterator& other) const { return p_ == other.p_; }
  bool operator!=(const LineCountingIterator& other) const { return p_ != other.p_; }

 private:
  const char* p_ = nullptr;
  State* state_ = nullptr;
};

using Lines = std::map<std::string, std::size_t>;

// Builds the DOM while recording the line of every value by field path.
// Non-integer numbers are kept as their source text so they convert to
// rationals exactly.
class LocatingHandler {
 public:
  LocatingHandler(json& root, Lines& lines, const LineCountingIterator::State& state)
      : dom_(root, true), lines_(lines), state_(state) {}

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
  bool number_integer(json::number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
  bool number_unsigned(json::number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
  bool number_float(json::number_float_t, const json::string_t& raw) {
    json::string_t text = raw;
    return scalar([&] { return dom_.string(text); });
  }
  bool string(json::string_t& v) { return scalar([&] { return dom_.string(v); }); }
  bool binary(json::binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

  bool start_object(std::size_t n) {
    record();
    frames_.push_back(Frame{false, 0, {}, {}});
    return dom_.start_object(n);
  }
  bool key(json::string_t& k) {
    auto& top = frames_.back();
    if (!top.keys.insert(k).second) {
      throw ValidationError(join(path_to(frames_.size() - 1), k) + " (line " + std::to_string(state_.token_line) +
                            "): duplicate key '" + k + "'");
    }
    top.key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    const bool ok = dom_.end_object();
    advance();
    return ok;
  }
  bool start_array(std::size_t n) {
    record();
    frames_.push_back(Frame{true, 0, {}, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    const bool ok = dom_.end_array();
    advance();
    return ok;
  }
  template <class Exception>
  bool parse_error(std::size_t position, const std::string& token, const Exception& ex) {
    return dom_.parse_error(position, token, ex);
  }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
    std::set<std::string> keys;
  };

  static std::string join(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
  }

  std::string path_to(std::size_t depth) const {
    std::string path;
    for (std::size_t i = 0; i < depth; ++i) {
      const auto& f = frames_[i];
      path = f.array ? path + "[" + std::to_string(f.index) + "]" : join(path, f.key);
    }
    return path;
  }

  void record() { lines_.emplace(path_to(frames_.size()), state_.token_line); }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  template <class F>
  bool scalar(F&& emit) {
    record();
    const bool ok = emit();
    advance();
    return ok;
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  Lines& lines_;
  const LineCountingIterator::State& state_;
  std::vector<Frame> frames_;
};

// Schema interpretation with path-qualified errors.
class Reader {
 public:
  explicit Reader(const Lines& lines) : lines_(lines) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    std::string where = path.empty() ? "game file" : path;
    if (auto line = line_of(path)) where += " (line " + std::to_string(*line) + ")";
    throw ValidationError(where + ": " + message);
  }

  static std::string child(const std::string& parent, const std::string& key) {
    return parent.empty() ? key : parent + "." + key;
  }
  static std::string item(const std::string& parent, std::size_t i) {
    return parent + "[" + std::to_string(i) + "]";
  }

  const json& object(const json& node, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!node.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : node.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail(child(path, key), "unknown field '" + key + "'");
    }
    return node;
  }

  const json& required(const json& node, const std::string& path, const char* key) const {
    const auto it = node.find(key);
    if (it == node.end()) fail(path, std::string("missing required field '") + key + "'");
    return *it;
  }

  const json& array(const json& node, const std::string& path) const {
    if (!node.is_array()) fail(path, "expected an array");
    return node;
  }

  std::string string(const json& node, const std::string& path) const {
    if (!node.is_string()) fail(path, "expected a string");
    return node.get<std::string>();
  }

  std::vector<std::string> strings(const json& node, const std::string& path) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(node, path).size(); ++i) out.push_back(string(node[i], item(path, i)));
    return out;
  }

  Rational rational(const json& node, const std::string& path) const {
    if (node.is_number_integer()) {
      return node.is_number_unsigned() ? Rational(mpz_class(std::to_string(node.get<std::uint64_t>())))
                                       : Rational(mpz_class(std::to_string(node.get<std::int64_t>())));
    }
    if (node.is_string()) {
      try {
        return parse_rational(node.get<std::string>());
      } catch (const ValidationError& e) {
        fail(path, e.what());
      }
    }
    fail(path, "expected a number or a \"p/q\" string");
  }

 private:
  std::optional<std::size_t> line_of(std::string path) const {
    while (true) {
      if (auto it = lines_.find(path); it != lines_.end()) return it->second;
      if (path.empty()) return std::nullopt;
      const auto cut = path.find_last_of(".[");
      path = cut == std::string::npos ? std::string() : path.substr(0, cut);
    }
  }

  const Lines& lines_;
};

std::size_t label_index(const Reader& r, const std::vector<std::string>& labels, const std::string& label,
                        const std::string& path, const std::string& what) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  r.fail(path, "unknown " + what + " '" + label + "'");
}

Configuration read_configuration(const Reader& r, const json& node, const std::string& path,
                                 const std::vector<PlayerSpace>& players) {
  const auto labels = r.strings(node, path);
  if (labels.size() != players.size()) {
    r.fail(path, "configuration has " + std::to_string(labels.size()) + " entries, expected " +
                     std::to_string(players.size()));
  }
  Configuration c;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    c.actions.push_back(label_index(r, players[p].actions, labels[p], Reader::item(path, p),
                                    "action for player '" + players[p].id + "'"));
  }
  return c;
}

ProbabilityModel read_model(const Reader& r, const json& node, const std::string& path,
                            const std::vector<PlayerSpace>& players) {
  if (!node.is_object()) r.fail(path, "expected an object");
  const std::string kind = r.string(r.required(node, path, "kind"), Reader::child(path, "kind"));
  if (kind == "uniform") {
    r.object(node, path, {"kind"});
    return ProbabilityModel::uniform();
  }
  if (kind == "homogeneity") {
    r.object(node, path, {"kind"});
    return ProbabilityModel::homogeneity();
  }
  if (kind == "product") {
    r.object(node, path, {"kind", "distributions"});
    const std::string dpath = Reader::child(path, "distributions");
    const auto& dist = r.required(node, path, "distributions");
    if (!dist.is_object()) r.fail(dpath, "expected an object keyed by player id");
    std::vector<std::vector<Rational>> distributions;
    for (const auto& player : players) {
      const std::string ppath = Reader::child(dpath, player.id);
      const auto it = dist.find(player.id);
      if (it == dist.end()) r.fail(dpath, "missing distribution for player '" + player.id + "'");
      if (!it->is_object()) r.fail(ppath, "expected an object keyed by action label");
      std::vector<Rational> masses(player.actions.size(), Rational(0));
      for (const auto& [action, value] : it->items()) {
        const auto a = label_index(r, player.actions, action, Reader::child(ppath, action),
                                   "action for player '" + player.id + "'");
        masses[a] = r.rational(value, Reader::child(ppath, action));
      }
      distributions.push_back(std::move(masses));
    }
    for (const auto& [id, value] : dist.items()) {
      bool known = false;
      for (const auto& p : players) known = known || p.id == id;
      if (!known) r.fail(Reader::child(dpath, id), "unknown player '" + id + "'");
    }
    return ProbabilityModel::product(std::move(distributions));
  }
  if (kind == "explicit-table") {
    r.object(node, path, {"kind", "entries"});
    const std::string epath = Reader::child(path, "entries");
    const auto& entries = r.array(r.required(node, path, "entries"), epath);
    std::map<Configuration, Rational> masses;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string ipath = Reader::item(epath, i);
      r.object(entries[i], ipath, {"config", "mass"});
      auto config = read_configuration(r, r.required(entries[i], ipath, "config"), Reader::child(ipath, "config"),
                                       players);
      auto mass = r.rational(r.required(entries[i], ipath, "mass"), Reader::child(ipath, "mass"));
      if (!masses.emplace(std::move(config), std::move(mass)).second) r.fail(ipath, "duplicate configuration");
    }
    return ProbabilityModel::explicit_table(std::move(masses));
  }
  if (kind == "mixture") {
    r.object(node, path, {"kind", "components"});
    const std::string cpath = Reader::child(path, "components");
    const auto& comps = r.array(r.required(node, path, "components"), cpath);
    std::vector<ProbabilityModel::Component> components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string ipath = Reader::item(cpath, i);
      r.object(comps[i], ipath, {"weight", "model"});
      ProbabilityModel::Component c;
      c.weight = r.rational(r.required(comps[i], ipath, "weight"), Reader::child(ipath, "weight"));
      c.model = std::make_shared<const ProbabilityModel>(
          read_model(r, r.required(comps[i], ipath, "model"), Reader::child(ipath, "model"), players));
      components.push_back(std::move(c));
    }
    return ProbabilityModel::mixture(std::move(components));
  }
  r.fail(Reader::child(path, "kind"),
         "unknown model kind '" + kind + "' (expected uniform, product, homogeneity, explicit-table or mixture)");
}

std::vector<std::vector<Rational>> read_weight_matrix(const Reader& r, const json& node, const std::string& path,
                                                      const std::vector<PlayerSpace>& players) {
  const auto& rows = r.array(node, path);
  if (rows.size() != players.size()) {
    r.fail(path, "expected one weight row per player (" + std::to_string(players.size()) + ")");
  }
  std::vector<std::vector<Rational>> weights;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    const std::string rpath = Reader::item(path, p);
    const auto& row = r.array(rows[p], rpath);
    if (row.size() != players[p].actions.size()) {
      r.fail(rpath, "expected one weight per action of player '" + players[p].id + "'");
    }
    std::vector<Rational> w;
    for (std::size_t a = 0; a < row.size(); ++a) w.push_back(r.rational(row[a], Reader::item(rpath, a)));
    weights.push_back(std::move(w));
  }
  return weights;
}

std::string rule_description(const MonotonicityResult& m, const GeneralVotingGame& game, std::size_t outcome) {
  std::string out = "player '" + game.players[*m.violating_player].id + "'";
  if (!m.witness.empty()) {
    auto show = [&](const Configuration& c) {
      std::string s = "(";
      for (std::size_t p = 0; p < c.actions.size(); ++p) {
        s += (p ? "," : "") + game.players[p].actions[c.actions[p]];
      }
      return s + ")";
    };
    out += ": " + show(m.witness[0].first) + " yields '" + game.outcomes.labels[outcome] + "' but " +
           show(m.witness[0].second) + " does not, while " + show(m.witness[1].first) + " yields it and " +
           show(m.witness[1].second) + " does not";
  }
  return out;
}

GeneralVotingGame interpret(const json& root, const Lines& lines) {
  const Reader r(lines);
  r.object(root, "", {"version", "title", "description", "outcomes", "players", "rule", "model"});
  const auto& version = r.required(root, "", "version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kGameFileVersion) {
    r.fail("version", "unsupported version (expected " + std::to_string(kGameFileVersion) + ")");
  }

  GeneralVotingGame game;
  if (root.contains("title")) game.title = r.string(root["title"], "title");
  if (root.contains("description")) game.description = r.string(root["description"], "description");

  game.outcomes.labels = r.strings(r.required(root, "", "outcomes"), "outcomes");
  if (game.outcomes.size() < 2) r.fail("outcomes", "at least two outcomes are required");
  {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < game.outcomes.size(); ++i) {
      if (!seen.insert(game.outcomes.labels[i]).second) {
        r.fail(Reader::item("outcomes", i), "duplicate outcome '" + game.outcomes.labels[i] + "'");
      }
    }
  }

  const auto& players = r.array(r.required(root, "", "players"), "players");
  if (players.empty()) r.fail("players", "at least one player is required");
  std::vector<std::optional<std::vector<Rational>>> player_weights;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string path = Reader::item("players", i);
    r.object(players[i], path, {"id", "actions", "weights", "min_action"});
    PlayerSpace ps;
    ps.id = r.string(r.required(players[i], path, "id"), Reader::child(path, "id"));
    if (!ids.insert(ps.id).second) r.fail(Reader::child(path, "id"), "duplicate player id '" + ps.id + "'");
    const std::string apath = Reader::child(path, "actions");
    ps.actions = r.strings(r.required(players[i], path, "actions"), apath);
    if (ps.actions.size() < 2) r.fail(apath, "player '" + ps.id + "' needs at least two actions");
    std::set<std::string> labels;
    for (std::size_t a = 0; a < ps.actions.size(); ++a) {
      if (!labels.insert(ps.actions[a]).second) {
        r.fail(Reader::item(apath, a), "duplicate action '" + ps.actions[a] + "' for player '" + ps.id + "'");
      }
    }
    if (players[i].contains("min_action")) {
      const std::string mpath = Reader::child(path, "min_action");
      ps.min_action = label_index(r, ps.actions, r.string(players[i]["min_action"], mpath), mpath, "action");
    }
    if (players[i].contains("weights")) {
      const std::string wpath = Reader::child(path, "weights");
      const auto& w = r.array(players[i]["weights"], wpath);
      if (w.size() != ps.actions.size()) r.fail(wpath, "expected one weight per action");
      std::vector<Rational> weights;
      for (std::size_t a = 0; a < w.size(); ++a) weights.push_back(r.rational(w[a], Reader::item(wpath, a)));
      player_weights.emplace_back(std::move(weights));
    } else {
      player_weights.emplace_back();
    }
    game.players.push_back(std::move(ps));
  }

  const auto& rule = r.required(root, "", "rule");
  if (!rule.is_object()) r.fail("rule", "expected an object");
  const std::string kind = r.string(r.required(rule, "rule", "kind"), "rule.kind");
  auto outcome_field = [&](const char* key) {
    const std::string path = Reader::child("rule", key);
    return label_index(r, game.outcomes.labels, r.string(r.required(rule, "rule", key), path), path, "outcome");
  };
  auto forbid_player_weights = [&] {
    for (std::size_t i = 0; i < player_weights.size(); ++i) {
      if (player_weights[i]) {
        r.fail(Reader::child(Reader::item("players", i), "weights"),
               "per-player weights are only used by the weighted-quota rule");
      }
    }
  };
  if (kind == "weighted-quota") {
    r.object(rule, "rule", {"kind", "quota", "met", "unmet", "monotone"});
    std::vector<std::vector<Rational>> weights;
    for (std::size_t i = 0; i < player_weights.size(); ++i) {
      if (!player_weights[i]) r.fail(Reader::item("players", i), "weighted-quota rule needs 'weights'");
      weights.push_back(*player_weights[i]);
    }
    game.rule = DecisionRule::weighted_quota(std::move(weights), r.rational(r.required(rule, "rule", "quota"), "rule.quota"),
                                             outcome_field("met"), outcome_field("unmet"));
  } else if (kind == "k-weighted-quota") {
    r.object(rule, "rule", {"kind", "components", "met", "unmet", "monotone"});
    forbid_player_weights();
    const auto& comps = r.array(r.required(rule, "rule", "components"), "rule.components");
    if (comps.empty()) r.fail("rule.components", "at least one component is required");
    std::vector<QuotaComponent> components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string cpath = Reader::item("rule.components", i);
      r.object(comps[i], cpath, {"quota", "weights"});
      QuotaComponent c;
      c.quota = r.rational(r.required(comps[i], cpath, "quota"), Reader::child(cpath, "quota"));
      c.weights = read_weight_matrix(r, r.required(comps[i], cpath, "weights"), Reader::child(cpath, "weights"),
                                     game.players);
      components.push_back(std::move(c));
    }
    game.rule = DecisionRule::k_weighted_quota(std::move(components), outcome_field("met"), outcome_field("unmet"));
  } else if (kind == "explicit-table") {
    r.object(rule, "rule", {"kind", "table", "monotone"});
    forbid_player_weights();
    const auto space = game.space();
    if (space.saturated() || space.size() > kDefaultEnumerationCap) {
      r.fail("rule.table", "explicit-table rules are limited to " + std::to_string(kDefaultEnumerationCap) +
                               " configurations");
    }
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> outcomes(space.size(), kUnset);
    const auto& table = r.array(r.required(rule, "rule", "table"), "rule.table");
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string ipath = Reader::item("rule.table", i);
      r.object(table[i], ipath, {"config", "outcome"});
      const auto config =
          read_configuration(r, r.required(table[i], ipath, "config"), Reader::child(ipath, "config"), game.players);
      const std::string opath = Reader::child(ipath, "outcome");
      const auto o =
          label_index(r, game.outcomes.labels, r.string(r.required(table[i], ipath, "outcome"), opath), opath, "outcome");
      auto& slot = outcomes[space.index_of(config.actions)];
      if (slot != kUnset) r.fail(ipath, "duplicate configuration");
      slot = o;
    }
    for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i] != kUnset) continue;
      const auto missing = space.decode(i);
      std::string text;
      for (std::size_t p = 0; p < missing.actions.size(); ++p) {
        text += (p ? "," : "") + game.players[p].actions[missing.actions[p]];
      }
      r.fail("rule.table", "table does not cover configuration (" + text + ")");
    }
    game.rule = DecisionRule::explicit_table(std::move(outcomes));
  } else {
    r.fail("rule.kind", "unknown rule kind '" + kind + "' (expected weighted-quota, k-weighted-quota or explicit-table)");
  }
  if (rule.contains("monotone")) {
    if (!rule["monotone"].is_boolean()) r.fail("rule.monotone", "expected true or false");
    game.rule.declared_monotone = rule["monotone"].get<bool>();
  }

  game.model = read_model(r, r.required(root, "", "model"), "model", game.players);
  try {
    game.model.validate(game.players);
  } catch (const ValidationError& e) {
    r.fail("model", e.what());
  }
  try {
    game.validate();
  } catch (const ValidationError& e) {
    r.fail("", e.what());
  }

  if (game.rule.declared_monotone) {
    const auto space = game.space();
    if (space.saturated() || space.size() > kDefaultEnumerationCap) {
      r.fail("rule.monotone", "cannot verify the declared monotonicity above the enumeration cap");
    }
    const EnumeratedGame eg(game);
    for (std::size_t o = 0; o < game.outcomes.size(); ++o) {
      const auto m = is_monotone(eg, o);
      if (*game.rule.declared_monotone && !m.monotone) {
        r.fail("rule.monotone", "rule declared monotone but is not for outcome '" + game.outcomes.labels[o] +
                                    "': " + rule_description(m, game, o));
      }
      if (!*game.rule.declared_monotone && m.monotone && o + 1 == game.outcomes.size()) {
        r.fail("rule.monotone", "rule declared non-monotone but is monotone for every outcome");
      }
      if (!*game.rule.declared_monotone && !m.monotone) break;
    }
  }
  return game;
}

json configuration_labels(const GeneralVotingGame& game, const Configuration& c) {
  json out = json::array();
  for (std::size_t p = 0; p < c.actions.size(); ++p) out.push_back(game.players[p].actions[c.actions[p]]);
  return out;
}

json model_to_json(const GeneralVotingGame& game, const ProbabilityModel& model) {
  json out;
  switch (model.kind()) {
    case ProbabilityModel::Kind::uniform:
      out["kind"] = "uniform";
      break;
    case ProbabilityModel::Kind::homogeneity:
      out["kind"] = "homogeneity";
      break;
    case ProbabilityModel::Kind::product: {
      out["kind"] = "product";
      json dist = json::object();
      for (std::size_t p = 0; p < game.players.size(); ++p) {
        json per = json::object();
        for (std::size_t a = 0; a < game.players[p].actions.size(); ++a) {
          per[game.players[p].actions[a]] = rational_to_json(model.distributions()[p][a]);
        }
        dist[game.players[p].id] = std::move(per);
      }
      out["distributions"] = std::move(dist);
      break;
    }
    case ProbabilityModel::Kind::explicit_table: {
      out["kind"] = "explicit-table";
      json entries = json::array();
      for (const auto& [config, mass] : model.table()) {
        entries.push_back(json{{"config", configuration_labels(game, config)}, {"mass", rational_to_json(mass)}});
      }
      out["entries"] = std::move(entries);
      break;
    }
    case ProbabilityModel::Kind::mixture: {
      out["kind"] = "mixture";
      json comps = json::array();
      for (const auto& c : model.components()) {
        comps.push_back(json{{"weight", rational_to_json(c.weight)}, {"model", model_to_json(game, *c.model)}});
      }
      out["components"] = std::move(comps);
      break;
    }
  }
  return out;
}

}  // namespace

json rational_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return json(value.get_num().get_si());
  return json(to_fraction_string(value));
}

GeneralVotingGame parse_game_file(std::string_view text) {
  json root;
  Lines lines;
  LineCountingIterator::State state;
  LocatingHandler handler(root, lines, state);
  const LineCountingIterator first(text.data(), &state);
  const LineCountingIterator last(text.data() + text.size(), &state);
  try {
    json::sax_parse(first, last, &handler);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return interpret(root, lines);
}

GeneralVotingGame load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game_file(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

json game_to_json(const GeneralVotingGame& game) {
  json out;
  out["version"] = kGameFileVersion;
  out["title"] = game.title;
  out["description"] = game.description;
  out["outcomes"] = game.outcomes.labels;
  json players = json::array();
  for (std::size_t p = 0; p < game.players.size(); ++p) {
    const auto& ps = game.players[p];
    json entry{{"id", ps.id}, {"actions", ps.actions}};
    if (ps.min_action) entry["min_action"] = ps.actions[*ps.min_action];
    if (game.rule.kind() == DecisionRule::Kind::weighted_quota) {
      json w = json::array();
      for (const auto& v : game.rule.components()[0].weights[p]) w.push_back(rational_to_json(v));
      entry["weights"] = std::move(w);
    }
    players.push_back(std::move(entry));
  }
  out["players"] = std::move(players);

  json rule;
  rule["kind"] = to_string(game.rule.kind());
  switch (game.rule.kind()) {
    case DecisionRule::Kind::weighted_quota:
      rule["quota"] = rational_to_json(game.rule.components()[0].quota);
      rule["met"] = game.outcomes.labels[game.rule.met()];
      rule["unmet"] = game.outcomes.labels[game.rule.unmet()];
      break;
    case DecisionRule::Kind::k_weighted_quota: {
      json comps = json::array();
      for (const auto& c : game.rule.components()) {
        json weights = json::array();
        for (const auto& row : c.weights) {
          json w = json::array();
          for (const auto& v : row) w.push_back(rational_to_json(v));
          weights.push_back(std::move(w));
        }
        comps.push_back(json{{"quota", rational_to_json(c.quota)}, {"weights", std::move(weights)}});
      }
      rule["components"] = std::move(comps);
      rule["met"] = game.outcomes.labels[game.rule.met()];
      rule["unmet"] = game.outcomes.labels[game.rule.unmet()];
      break;
    }
    case DecisionRule::Kind::explicit_table: {
      const auto space = game.space();
      json table = json::array();
      for (std::uint64_t i = 0; i < game.rule.table().size(); ++i) {
        table.push_back(json{{"config", configuration_labels(game, space.decode(i))},
                             {"outcome", game.outcomes.labels[game.rule.table()[i]]}});
      }
      rule["table"] = std::move(table);
      break;
    }
  }
  if (game.rule.declared_monotone) rule["monotone"] = *game.rule.declared_monotone;
  out["rule"] = std::move(rule);
  out["model"] = model_to_json(game, game.model);
  return out;
}

std::string serialize_game(const GeneralVotingGame& game) { return game_to_json(game).dump(2) + "\n"; }

}  // namespace vpow
