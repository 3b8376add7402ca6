#pragma once

// Finite posets of Tambara primes: the full pairwise containment relation,
// partial-order sanity checks, Hasse covers, closures, and deterministic
// DOT / JSON export (nodes sorted by label).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nakaoka/contains.hpp"

namespace nakaoka {

struct SpecNode {
  std::string label;
  TambaraPrime prime;
  std::map<std::string, std::string> meta;  // ordered, hence deterministic
};

class SpecPoset {
 public:
  explicit SpecPoset(std::vector<SpecNode> nodes) : nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const SpecNode& a, const SpecNode& b) { return a.label < b.label; });
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
      if (nodes_[i].label == nodes_[i + 1].label)
        throw LevelError("SpecPoset: duplicate node label " + nodes_[i].label);
    const std::size_t n = nodes_.size();
    rel_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      rel_[i].reserve(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          ContainsResult self;
          self.status = ContainsStatus::LE;
          self.note = "reflexive";
          rel_[i].push_back(std::move(self));
        } else {
          rel_[i].push_back(contains(nodes_[i].prime, nodes_[j].prime));
        }
      }
    }
  }

  std::size_t size() const { return nodes_.size(); }
  const SpecNode& node(std::size_t i) const { return nodes_.at(i); }

  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].label == label) return i;
    return std::nullopt;
  }

  const ContainsResult& relation(std::size_t i, std::size_t j) const {
    return rel_.at(i).at(j);
  }
  bool le(std::size_t i, std::size_t j) const {
    return rel_.at(i).at(j).status == ContainsStatus::LE;
  }
  bool strictly_less(std::size_t i, std::size_t j) const {
    return i != j && le(i, j) && !le(j, i);
  }

  bool fully_decided() const {
    for (const auto& row : rel_)
      for (const auto& c : row)
        if (c.status == ContainsStatus::Unknown) return false;
    return true;
  }

  // no two distinct nodes may satisfy LE in both directions
  bool antisymmetry_ok() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (le(i, j) && le(j, i)) return false;
    return true;
  }

  bool transitivity_ok() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (!le(i, j)) continue;
        for (std::size_t k = 0; k < size(); ++k)
          if (le(j, k) && !le(i, k)) return false;
      }
    return true;
  }

  // covering pairs of the strict order: i < j with nothing strictly between
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const {
    if (!fully_decided())
      throw UndecidedError("SpecPoset: Hasse reduction requires all relations decided");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (!strictly_less(i, j)) continue;
        bool cover = true;
        for (std::size_t k = 0; k < size() && cover; ++k)
          if (k != i && k != j && strictly_less(i, k) && strictly_less(k, j)) cover = false;
        if (cover) out.emplace_back(i, j);
      }
    return out;
  }

  // Zariski closure of a set of points: the up-set under LE
  std::vector<std::size_t> closure(const std::vector<std::size_t>& pts) const {
    std::vector<bool> in(size(), false);
    for (std::size_t i : pts) {
      in.at(i) = true;
      for (std::size_t j = 0; j < size(); ++j)
        if (le(i, j)) in[j] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (in[j]) out.push_back(j);
    return out;
  }

  std::string dot() const {
    std::string s = "digraph spec {\n  rankdir=BT;\n";
    for (const auto& nd : nodes_) s += "  \"" + nd.label + "\";\n";
    for (const auto& [i, j] : hasse_edges())
      s += "  \"" + nodes_[i].label + "\" -> \"" + nodes_[j].label + "\";\n";
    s += "}";
    return s;
  }

  std::string json() const {
    nlohmann::json root;
    root["nodes"] = nlohmann::json::array();
    for (const auto& nd : nodes_) {
      nlohmann::json jn;
      jn["label"] = nd.label;
      jn["prime"] = nd.prime.str();
      if (!nd.meta.empty()) {
        nlohmann::json jm;
        for (const auto& [k, v] : nd.meta) jm[k] = v;
        jn["meta"] = jm;
      }
      root["nodes"].push_back(jn);
    }
    root["relations"] = nlohmann::json::array();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) {
        if (i == j) continue;
        const ContainsResult& c = rel_[i][j];
        nlohmann::json je;
        je["from"] = nodes_[i].label;
        je["to"] = nodes_[j].label;
        je["status"] = status_str(c.status);
        if (c.witness)
          je["witness"] = nodes_[i].prime.functor().print(*c.witness);
        root["relations"].push_back(je);
      }
    if (fully_decided()) {
      root["hasse"] = nlohmann::json::array();
      for (const auto& [i, j] : hasse_edges())
        root["hasse"].push_back({nodes_[i].label, nodes_[j].label});
    } else {
      root["partial"] = true;
    }
    return root.dump(2);
  }

 private:
  std::vector<SpecNode> nodes_;
  std::vector<std::vector<ContainsResult>> rel_;
};

}  // namespace nakaoka
