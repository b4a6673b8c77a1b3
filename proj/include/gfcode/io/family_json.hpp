// Copyright 2026 The gfcode Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON interchange for graph families.
//
//   {"version":1, "n":5, "edge_order":"colex-1based", "role":"family",
//    "provenance":{...}, "claimed_size":"16", "graphs":["0b02", ...]}
//
// Slot idx is bit (idx mod 8) of byte floor(idx/8); bytes are lowercase hex,
// ceil(C(n,2)/8) of them per graph. Keys are written in a fixed order so a
// read/write round trip is byte-exact.

#ifndef GFCODE_IO_FAMILY_JSON_HPP_
#define GFCODE_IO_FAMILY_JSON_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfcode/cardinality.hpp"
#include "gfcode/family.hpp"
#include "gfcode/graph.hpp"

namespace gfcode::io {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kEdgeOrder = "colex-1based";

/// A family file plus the metadata that does not live on GraphFamily.
struct FamilyDocument {
  GraphFamily family;
  std::string role = "family";  // family | basis | factorization
};

inline std::size_t byte_count(int n) { return (pair_count(n) + 7) / 8; }

inline std::string to_hex(const LabeledGraph& g) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const auto words = g.words();
  const std::size_t bytes = byte_count(g.order());
  out.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    const auto byte = static_cast<unsigned>((words[b / 8] >> (8 * (b % 8))) & 0xffu);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xfu]);
  }
  return out;
}

inline LabeledGraph from_hex(int n, const std::string& hex) {
  const std::size_t bytes = byte_count(n);
  if (hex.size() != 2 * bytes)
    throw std::domain_error("graph hex '" + hex + "' has " + std::to_string(hex.size()) +
                            " digits; n=" + std::to_string(n) + " needs " +
                            std::to_string(2 * bytes));
  auto digit = [&](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    throw std::domain_error("graph hex '" + hex + "': not lowercase hex");
  };
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t b = 0; b < bytes; ++b) {
    const std::uint64_t byte = digit(hex[2 * b]) << 4 | digit(hex[2 * b + 1]);
    words[b / 8] |= byte << (8 * (b % 8));
  }
  return LabeledGraph::from_words(n, words);  // rejects padding bits
}

/// Inverse of Cardinality::to_short_string: "d", "2^e" or "m*2^e".
inline Cardinality parse_cardinality(const std::string& text) {
  auto number = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::domain_error("bad cardinality '" + text + "'");
    try {
      return std::stoull(part);
    } catch (const std::out_of_range&) {
      throw std::domain_error("cardinality '" + text + "' out of range");
    }
  };
  const auto caret = text.find("2^");
  if (caret == std::string::npos) return Cardinality(number(text));
  const std::uint64_t e = number(text.substr(caret + 2));
  if (caret == 0) return Cardinality::pow2(static_cast<std::int64_t>(e));
  if (caret < 2 || text[caret - 1] != '*') throw std::domain_error("bad cardinality '" + text + "'");
  return Cardinality::times_pow2(number(text.substr(0, caret - 1)), static_cast<std::int64_t>(e));
}

inline nlohmann::ordered_json to_json(const GraphFamily& fam, const std::string& role = "family") {
  nlohmann::ordered_json j;
  j["version"] = kFormatVersion;
  j["n"] = fam.order();
  j["edge_order"] = kEdgeOrder;
  j["role"] = role;
  nlohmann::ordered_json prov;
  prov["construction"] = fam.provenance().construction;
  prov["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fam.provenance().params) prov["params"][k] = v;
  j["provenance"] = prov;
  if (fam.claimed_size()) j["claimed_size"] = fam.claimed_size()->to_short_string();
  j["graphs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) j["graphs"].push_back(to_hex(fam[i]));
  return j;
}

inline std::string dump(const GraphFamily& fam, const std::string& role = "family") {
  return to_json(fam, role).dump(2) + "\n";
}

/// Parses and validates a family document; duplicates are rejected.
inline FamilyDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::domain_error(std::string("family file: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.is_object() || !j.contains(key))
      throw std::domain_error(std::string("family file: missing \"") + key + "\"");
    return j.at(key);
  };
  try {
    if (need("version").get<int>() != kFormatVersion)
      throw std::domain_error("family file: unsupported version");
    if (need("edge_order").get<std::string>() != kEdgeOrder)
      throw std::domain_error("family file: unsupported edge_order");
    const int n = need("n").get<int>();
    if (n < 1 || n > kMaxVertices) throw std::domain_error("family file: n out of range");

    FamilyDocument doc;
    Provenance prov;
    if (j.contains("provenance")) {
      const auto& p = j.at("provenance");
      prov.construction = p.value("construction", std::string());
      if (p.contains("params"))
        for (const auto& [k, v] : p.at("params").items()) prov.params[k] = v.get<std::string>();
    }
    doc.family = GraphFamily(n, prov);
    if (j.contains("role")) doc.role = j.at("role").get<std::string>();
    const auto& graphs = need("graphs");
    if (!graphs.is_array()) throw std::domain_error("family file: \"graphs\" must be an array");
    doc.family.reserve(graphs.size());
    for (const auto& h : graphs) doc.family.push_back(from_hex(n, h.get<std::string>()));
    if (j.contains("claimed_size"))
      doc.family.set_claimed_size(parse_cardinality(j.at("claimed_size").get<std::string>()));
    doc.family.validate();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("family file: ") + e.what());
  }
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FamilyDocument read_document(const std::string& path) { return parse_document(read_text(path)); }

inline void write_family(const std::string& path, const GraphFamily& fam,
                         const std::string& role = "family") {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::domain_error("cannot write '" + path + "'");
  out << dump(fam, role);
}

/// A pattern file is a family file holding exactly one graph.
inline LabeledGraph read_pattern(const std::string& path) {
  const FamilyDocument doc = read_document(path);
  if (doc.family.size() != 1)
    throw std::domain_error("pattern file '" + path + "' must hold exactly one graph");
  return doc.family[0];
}

}  // namespace gfcode::io

#endif  // GFCODE_IO_FAMILY_JSON_HPP_
