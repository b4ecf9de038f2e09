#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdec/act.hpp"
#include "latdec/lattice.hpp"
#include "latdec/lottery.hpp"
#include "latdec/partition.hpp"
#include "latdec/rational.hpp"
#include "latdec/valuation.hpp"

namespace latdec {

/// A fully validated problem description: one lattice plus named valuations,
/// partitions, acts and lotteries. See the README for the file format.
struct ProblemDocument {
  Lattice lattice;
  std::map<std::string, Valuation> valuations;
  std::map<std::string, Partition> partitions;
  std::map<std::string, Act> acts;
  std::map<std::string, Lottery> lotteries;
};

namespace detail {

using nlohmann::json;

/// Rationals in documents are strings ("1/3", "0.89", "5") or JSON
/// integers. JSON floats are rejected: a binary double cannot represent
/// decimals like 0.89 exactly, so decimal literals must be quoted.
inline Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_number_float())
    fail(Errc::parse_error,
         where + ": write decimals as strings (e.g. \"0.89\") so they stay exact");
  fail(Errc::parse_error, where + ": expected a rational string or integer");
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::parse_error, where + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(Errc::parse_error, where + ": expected a name string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

/// Blocks come in as arrays of point-name arrays; payoff binding happens
/// before canonical sorting, so order as written is what counts.
inline std::vector<Element> blocks_from_json(const Lattice& l, const json& j, const std::string& where) {
  if (!j.is_array()) fail(Errc::parse_error, where + ": expected an array of blocks");
  std::vector<Element> blocks;
  for (const auto& block : j) blocks.push_back(l.element_of(string_list(block, where)));
  return blocks;
}

/// Element ids in "values" maps are the canonical names: the element's
/// points, comma-separated, with optional braces ("{a,c}" or "a,c"; the
/// bottom element is "{}").
inline Element element_from_id(const Lattice& l, std::string id) {
  if (!id.empty() && id.front() == '{' && id.back() == '}') id = id.substr(1, id.size() - 2);
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= id.size() && !id.empty()) {
    std::size_t comma = id.find(',', start);
    std::string part = id.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    if (!part.empty()) names.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return l.element_of(names);
}

template <typename Fn>
void with_context(const std::string& context, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    throw Error(e.code(), context + ": " + e.detail());
  }
}

}  // namespace detail

inline ProblemDocument parse_problem(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line/column for the error message.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail(Errc::parse_error,
         "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) fail(Errc::parse_error, "top level must be an object");
  if (!doc.contains("lattice")) fail(Errc::parse_error, "missing \"lattice\"");

  const json& lat = doc["lattice"];
  Lattice lattice = [&] {
    if (lat.is_object() && lat.contains("atoms"))
      return Lattice::boolean(detail::string_list(lat["atoms"], "lattice.atoms"));
    if (lat.is_object() && lat.contains("poset")) {
      const json& poset = lat["poset"];
      std::vector<std::string> points = detail::string_list(poset.value("points", json::array()), "poset.points");
      std::vector<std::pair<std::string, std::string>> covers;
      for (const auto& pair : poset.value("covers", json::array())) {
        auto names = detail::string_list(pair, "poset.covers");
        if (names.size() != 2) fail(Errc::parse_error, "poset.covers: each cover is a [lower, upper] pair");
        covers.emplace_back(names[0], names[1]);
      }
      return Lattice::from_poset(points, covers);
    }
    fail(Errc::parse_error, "\"lattice\" needs either \"atoms\" or \"poset\"");
  }();

  ProblemDocument out{lattice, {}, {}, {}, {}};

  auto name_of = [](const json& item, const std::string& kind) {
    if (!item.is_object() || !item.contains("name") || !item["name"].is_string())
      fail(Errc::parse_error, "every " + kind + " needs a \"name\"");
    return item["name"].get<std::string>();
  };

  for (const auto& item : doc.value("valuations", json::array())) {
    std::string name = name_of(item, "valuation");
    if (out.valuations.count(name)) fail(Errc::duplicate_name, "valuation '" + name + "'");
    detail::with_context("valuation '" + name + "'", [&] {
      if (item.contains("weights")) {
        std::map<std::string, Rat> weights;
        for (const auto& [atom, value] : item["weights"].items())
          weights.emplace(atom, detail::rat_from_json(value, "weight of '" + atom + "'"));
        out.valuations.emplace(name, from_atom_weights(lattice, weights));
      } else if (item.contains("values")) {
        std::vector<std::pair<Element, Rat>> assignments;
        for (const auto& [id, value] : item["values"].items())
          assignments.emplace_back(detail::element_from_id(lattice, id),
                                   detail::rat_from_json(value, "value of '" + id + "'"));
        out.valuations.emplace(name, make_valuation(lattice, assignments));
      } else {
        fail(Errc::parse_error, "needs \"weights\" or \"values\"");
      }
    });
  }

  for (const auto& item : doc.value("partitions", json::array())) {
    std::string name = name_of(item, "partition");
    if (out.partitions.count(name)) fail(Errc::duplicate_name, "partition '" + name + "'");
    detail::with_context("partition '" + name + "'", [&] {
      if (!item.contains("blocks")) fail(Errc::parse_error, "needs \"blocks\"");
      out.partitions.emplace(name,
                             make_partition(lattice, detail::blocks_from_json(lattice, item["blocks"], "blocks")));
    });
  }

  for (const auto& item : doc.value("acts", json::array())) {
    std::string name = name_of(item, "act");
    if (out.acts.count(name)) fail(Errc::duplicate_name, "act '" + name + "'");
    detail::with_context("act '" + name + "'", [&] {
      if (!item.contains("partition") || !item.contains("payoffs"))
        fail(Errc::parse_error, "needs \"partition\" and \"payoffs\"");
      std::vector<Element> blocks;
      if (item["partition"].is_string()) {
        auto it = out.partitions.find(item["partition"].get<std::string>());
        if (it == out.partitions.end())
          fail(Errc::unknown_name, "unknown partition '" + item["partition"].get<std::string>() + "'");
        blocks = it->second.blocks();
      } else {
        blocks = detail::blocks_from_json(lattice, item["partition"], "partition");
      }
      const json& payoffs = item["payoffs"];
      if (!payoffs.is_array() || payoffs.size() != blocks.size())
        fail(Errc::payoff_count_mismatch, std::to_string(payoffs.size()) + " payoffs for " +
                                              std::to_string(blocks.size()) + " blocks");
      std::vector<std::pair<Element, Rat>> assignments;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        assignments.emplace_back(blocks[i], detail::rat_from_json(payoffs[i], "payoff " + std::to_string(i)));
      out.acts.emplace(name, Act(lattice, std::move(assignments)));
    });
  }

  for (const auto& item : doc.value("lotteries", json::array())) {
    std::string name = name_of(item, "lottery");
    if (out.lotteries.count(name)) fail(Errc::duplicate_name, "lottery '" + name + "'");
    detail::with_context("lottery '" + name + "'", [&] {
      if (!item.contains("lottery")) fail(Errc::parse_error, "needs \"lottery\"");
      std::vector<std::pair<Rat, Rat>> entries;
      for (const auto& [reward, prob] : item["lottery"].items())
        entries.emplace_back(parse_rational(reward), detail::rat_from_json(prob, "probability of '" + reward + "'"));
      out.lotteries.emplace(name, Lottery::make(std::move(entries)));
    });
  }

  return out;
}

/// Lookup helpers with unknown-name errors naming the kind.
inline const Valuation& find_valuation(const ProblemDocument& doc, const std::string& name) {
  auto it = doc.valuations.find(name);
  if (it == doc.valuations.end()) fail(Errc::unknown_name, "unknown valuation '" + name + "'");
  return it->second;
}

inline const Partition& find_partition(const ProblemDocument& doc, const std::string& name) {
  auto it = doc.partitions.find(name);
  if (it == doc.partitions.end()) fail(Errc::unknown_name, "unknown partition '" + name + "'");
  return it->second;
}

inline const Act& find_act(const ProblemDocument& doc, const std::string& name) {
  auto it = doc.acts.find(name);
  if (it == doc.acts.end()) fail(Errc::unknown_name, "unknown act '" + name + "'");
  return it->second;
}

inline const Lottery& find_lottery(const ProblemDocument& doc, const std::string& name) {
  auto it = doc.lotteries.find(name);
  if (it == doc.lotteries.end()) fail(Errc::unknown_name, "unknown lottery '" + name + "'");
  return it->second;
}

}  // namespace latdec
