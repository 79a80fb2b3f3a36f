// Copyright 2026 The cospec Authors
//
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

// Certification of an unfolding pair and its JSON representation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cospec/charpoly.hpp"
#include "cospec/equivalence.hpp"
#include "cospec/graph6.hpp"
#include "cospec/unfolding.hpp"

namespace cospec {

using Json = nlohmann::ordered_json;

/// Input JSON does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IsoVerdict { kYes, kNo, kUndecided };

inline std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kYes: return "yes";
    case IsoVerdict::kNo: return "no";
    case IsoVerdict::kUndecided: return "undecided";
  }
  return "undecided";
}

/// What the isomorphism theorems say about a pair given its hypotheses and
/// the PET / PST status of B. std::nullopt means no stated result applies.
struct Prediction {
  std::optional<bool> cospectral;
  std::optional<bool> isomorphic;
  std::string basis;
};

struct PairReport {
  Construction construction{};
  UnfoldingSeed seed;
  std::size_t vertices = 0;
  std::vector<std::size_t> left_partition, right_partition;
  bool cospectral = false;
  CharPoly left_charpoly, right_charpoly;
  IsoVerdict isomorphic = IsoVerdict::kUndecided;
  std::optional<PermWitness> witness;
  std::string iso_method;
  HypothesisReport hypotheses;
  bool b_quick_non_pet = false;
  std::optional<bool> b_pet, b_pst;  // empty when B is over the search cap
  Prediction prediction;
  std::string left_graph6, right_graph6;
};

inline Prediction predict(const HypothesisReport& h, const UnfoldingSeed& seed, std::optional<bool> pet,
                          std::optional<bool> pst) {
  Prediction p;
  switch (h.construction) {
    case Construction::kReflexive: {
      const bool square_v = h.m_equals_n;
      p.cospectral = square_v || h.a_d_cospectral;
      p.basis = square_v ? "V square: cospectral" : (h.a_d_cospectral ? "m != n, A and D cospectral: cospectral"
                                                                          : "m != n, A and D not cospectral: not cospectral");
      const bool applies = h.k_ne_l && h.b_nondegenerate && h.v_nondegenerate;
      if (applies && pet.has_value()) {
        const bool ad_iso = graph_isomorphic(Graph(*seed.a), Graph(*seed.d)).has_value();
        if (!*pet || !ad_iso) {
          p.isomorphic = false;
          p.basis += "; biregular k != l with B non-PET or G_A, G_D non-isomorphic: non-isomorphic";
        }
      }
      break;
    }
    case Construction::kSemiReflexive: {
      p.cospectral = true;
      p.basis = "always cospectral";
      if (pet.value_or(false)) {
        p.isomorphic = true;
        p.basis += "; B PET: isomorphic";
      } else if (pet.has_value() && (h.condition1 || h.condition2) && h.b_nondegenerate) {
        p.isomorphic = false;
        p.basis += std::string("; condition ") + (h.condition1 ? "1" : "2") + " holds and B non-PET: non-isomorphic";
      }
      break;
    }
    case Construction::kTripartite: {
      if (h.p_equals_r || pst.value_or(false)) {
        p.cospectral = true;
        p.isomorphic = true;
        p.basis = h.p_equals_r ? "p == r: isomorphic" : "B PST: isomorphic";
      } else if (h.p_lt_q_lt_r && h.p_plus_q_lt_r && pet.has_value() && !*pet) {
        p.isomorphic = false;
        p.basis = "p < q < r, p + q < r and B non-PET: non-isomorphic";
      } else {
        p.basis = "no stated result applies";
      }
      break;
    }
  }
  return p;
}

/// Builds the full certificate of a pair: exact char polys, an exhaustive
/// isomorphism verdict (undecided above the size cap), hypotheses and the
/// theorem-level prediction.
inline PairReport certify(const UnfoldingPair& pair, const SearchLimits& limits = {}) {
  PairReport r;
  r.construction = pair.construction;
  r.seed = pair.seed;
  r.vertices = pair.order();
  r.left_partition = pair.left.partition;
  r.right_partition = pair.right.partition;
  r.left_charpoly = char_poly(pair.left.adj);
  r.right_charpoly = char_poly(pair.right.adj);
  r.cospectral = r.left_charpoly == r.right_charpoly;
  try {
    r.witness = graph_isomorphic(pair.left, pair.right, limits);
    r.isomorphic = r.witness ? IsoVerdict::kYes : IsoVerdict::kNo;
    r.iso_method = "exhaustive";
  } catch (const CapExceeded&) {
    r.isomorphic = IsoVerdict::kUndecided;
    r.iso_method = "size cap exceeded";
  }
  r.hypotheses = check_hypotheses(pair);
  r.b_quick_non_pet = pair.seed.b.square() && quick_non_pet(pair.seed.b);
  if (pair.seed.b.square() && pair.seed.b.rows() <= limits.max_matrix_dim) {
    r.b_pet = is_pet(pair.seed.b, limits).has_value();
    r.b_pst = is_pst(pair.seed.b, limits).has_value();
  }
  r.prediction = predict(r.hypotheses, pair.seed, r.b_pet, r.b_pst);
  r.left_graph6 = graph6::encode(pair.left);
  r.right_graph6 = graph6::encode(pair.right);
  return r;
}

// ---------------------------------------------------------------------------
// JSON

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (auto v : m.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j, const std::string& name, bool binary = true) {
  if (!j.is_array() || j.empty()) throw SchemaError(name + ": expected a non-empty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw SchemaError(name + ": rows must be non-empty arrays");
  std::vector<std::int64_t> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw SchemaError(name + ": ragged or malformed row");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw SchemaError(name + ": entries must be integers");
      const auto x = v.get<std::int64_t>();
      if (binary && x != 0 && x != 1) throw SchemaError(name + ": entries must be 0 or 1");
      data.push_back(x);
    }
  }
  return IntMatrix(j.size(), cols, std::move(data));
}

inline RealMatrix real_matrix_from_json(const Json& j, const std::string& name) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) throw SchemaError(name + ": expected an array of rows");
  const std::size_t cols = j.front().size();
  std::vector<double> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw SchemaError(name + ": ragged or malformed row");
    for (const auto& v : row) {
      if (!v.is_number()) throw SchemaError(name + ": entries must be numbers");
      data.push_back(v.get<double>());
    }
  }
  return RealMatrix(j.size(), cols, std::move(data));
}

namespace detail {

inline void require_keys(const Json& j, const std::set<std::string>& required, const std::set<std::string>& allowed,
                         const std::string& what) {
  if (!j.is_object()) throw SchemaError(what + ": expected a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) throw SchemaError(what + ": missing key \"" + k + "\"");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw SchemaError(what + ": unexpected key \"" + k + "\"");
}

inline std::array<std::size_t, 3> pqr_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw SchemaError("pqr: expected [p, q, r]");
  std::array<std::size_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_integer() || j[i].get<std::int64_t>() < 1) throw SchemaError("pqr: entries must be positive integers");
    out[i] = j[i].get<std::size_t>();
  }
  return out;
}

inline Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

inline Json charpoly_to_json(const CharPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs) out.push_back(bigint_to_json(c));
  return out;
}

inline Json opt_to_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline std::string witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::kPermEquivalence: return "perm-equivalence";
    case WitnessKind::kPermSimilarity: return "perm-similarity";
    case WitnessKind::kGraphIso: return "graph-iso";
    case WitnessKind::kPartitionIso: return "partition-iso";
  }
  return "unknown";
}

}  // namespace detail

inline Construction construction_from_int(int kind) {
  if (kind < 1 || kind > 3) throw SchemaError("construction kind must be 1, 2 or 3");
  return static_cast<Construction>(kind);
}

/// Seed schema: kind 1 {"V","A","B","D"}, kind 2 {"U","X","B"}, kind 3
/// {"pqr","B"}. Matrices are row-major arrays of 0/1 rows.
inline UnfoldingSeed seed_from_json(Construction kind, const Json& j) {
  UnfoldingSeed s;
  switch (kind) {
    case Construction::kReflexive:
      detail::require_keys(j, {"V", "A", "B", "D"}, {"V", "A", "B", "D"}, "reflexive seed");
      s.v = matrix_from_json(j["V"], "V");
      s.a = matrix_from_json(j["A"], "A");
      s.d = matrix_from_json(j["D"], "D");
      break;
    case Construction::kSemiReflexive:
      detail::require_keys(j, {"U", "X", "B"}, {"U", "X", "B"}, "semi-reflexive seed");
      s.u = matrix_from_json(j["U"], "U");
      s.x = matrix_from_json(j["X"], "X");
      break;
    case Construction::kTripartite:
      detail::require_keys(j, {"pqr", "B"}, {"pqr", "B"}, "tripartite seed");
      s.pqr = detail::pqr_from_json(j["pqr"]);
      break;
  }
  s.b = matrix_from_json(j["B"], "B");
  return s;
}

inline Json seed_to_json(const UnfoldingSeed& s) {
  Json j = Json::object();
  if (s.pqr) j["pqr"] = {(*s.pqr)[0], (*s.pqr)[1], (*s.pqr)[2]};
  if (s.v) j["V"] = matrix_to_json(*s.v);
  if (s.u) j["U"] = matrix_to_json(*s.u);
  if (s.x) j["X"] = matrix_to_json(*s.x);
  if (s.a) j["A"] = matrix_to_json(*s.a);
  j["B"] = matrix_to_json(s.b);
  if (s.d) j["D"] = matrix_to_json(*s.d);
  return j;
}

inline Json witness_to_json(const PermWitness& w) {
  Json j = Json::object();
  j["kind"] = detail::witness_kind_name(w.kind);
  if (w.kind == WitnessKind::kPermEquivalence) {
    j["row_perm"] = w.row_perm;
    j["col_perm"] = w.col_perm;
  } else {
    j["perm"] = w.row_perm;
  }
  if (!w.block_map.empty()) j["block_map"] = w.block_map;
  return j;
}

inline Json hypotheses_to_json(const HypothesisReport& h) {
  Json j = Json::object();
  j["b_zero"] = h.b_zero;
  j["b_nondegenerate"] = h.b_nondegenerate;
  switch (h.construction) {
    case Construction::kReflexive:
      j["biregular"] = h.biregular;
      j["k"] = h.k ? Json(*h.k) : Json(nullptr);
      j["l"] = h.l ? Json(*h.l) : Json(nullptr);
      j["k_ne_l"] = h.k_ne_l;
      j["m_equals_n"] = h.m_equals_n;
      j["v_nondegenerate"] = h.v_nondegenerate;
      j["a_d_cospectral"] = h.a_d_cospectral;
      break;
    case Construction::kSemiReflexive:
      j["biregular"] = h.biregular;
      j["k"] = h.k ? Json(*h.k) : Json(nullptr);
      j["l"] = h.l ? Json(*h.l) : Json(nullptr);
      j["gx_max_degree"] = h.gx_max_degree;
      j["gx_has_isolated"] = h.gx_has_isolated;
      j["condition1"] = h.condition1;
      j["condition2"] = h.condition2;
      break;
    case Construction::kTripartite:
      j["p_equals_r"] = h.p_equals_r;
      j["p_lt_q_lt_r"] = h.p_lt_q_lt_r;
      j["p_plus_q_lt_r"] = h.p_plus_q_lt_r;
      break;
  }
  return j;
}

inline Json report_to_json(const PairReport& r) {
  Json j = Json::object();
  j["construction"] = static_cast<int>(r.construction);
  j["construction_name"] = to_string(r.construction);
  j["seed"] = seed_to_json(r.seed);
  j["vertices"] = r.vertices;
  j["partition"] = {{"left", r.left_partition}, {"right", r.right_partition}};
  j["cospectral"] = r.cospectral;
  j["charpoly"] = {{"left", detail::charpoly_to_json(r.left_charpoly)},
                   {"right", detail::charpoly_to_json(r.right_charpoly)}};
  Json iso = Json::object();
  iso["verdict"] = to_string(r.isomorphic);
  iso["method"] = r.iso_method;
  iso["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  j["isomorphic"] = std::move(iso);
  j["hypotheses"] = hypotheses_to_json(r.hypotheses);
  j["b"] = {{"quick_non_pet", r.b_quick_non_pet}, {"pet", detail::opt_to_json(r.b_pet)}, {"pst", detail::opt_to_json(r.b_pst)}};
  j["prediction"] = {{"cospectral", detail::opt_to_json(r.prediction.cospectral)},
                     {"isomorphic", detail::opt_to_json(r.prediction.isomorphic)},
                     {"basis", r.prediction.basis}};
  j["graph6"] = {{"left", r.left_graph6}, {"right", r.right_graph6}};
  return j;
}

/// Rebuilds and re-certifies the pair described by a report's seed.
inline PairReport recertify(const Json& report, const SearchLimits& limits = {}) {
  if (!report.is_object() || !report.contains("construction") || !report.contains("seed")) {
    throw SchemaError("pair report: missing construction or seed");
  }
  if (!report["construction"].is_number_integer()) throw SchemaError("pair report: construction must be an integer");
  const Construction kind = construction_from_int(report["construction"].get<int>());
  return certify(build_unfolding(kind, seed_from_json(kind, report["seed"])), limits);
}

/// The two graphs stored in a report, with their partitions.
inline std::pair<Graph, Graph> graphs_from_report(const Json& report) {
  try {
    const auto& g6 = report.at("graph6");
    const auto& part = report.at("partition");
    Graph left = graph6::decode(g6.at("left").get<std::string>());
    Graph right = graph6::decode(g6.at("right").get<std::string>());
    return {Graph(left.adj, part.at("left").get<std::vector<std::size_t>>()),
            Graph(right.adj, part.at("right").get<std::vector<std::size_t>>())};
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("pair report: ") + e.what());
  } catch (const PreconditionError& e) {
    throw SchemaError(std::string("pair report: ") + e.what());
  }
}

}  // namespace cospec
