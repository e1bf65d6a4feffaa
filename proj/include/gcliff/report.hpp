#pragma once

// JSON encodings. Prime-field scalars are plain integer residues next to a
// "field" record carrying the modulus; rationals are "num/den" strings.

#include "gcliff/commgeo.hpp"
#include "gcliff/repthy.hpp"
#include "gcliff/scalars.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gcliff::report {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json field_json(const PrimeField& k) { return {{"kind", "prime"}, {"modulus", k.modulus()}}; }
inline json field_json(const RationalField&) { return {{"kind", "rational"}}; }

inline json scalar(const PrimeField&, const Residue& v) { return v.value; }
inline json scalar(const RationalField& k, const Rational& v) { return k.to_string(v); }

template <Field K>
json point_json(const K& k, const CentralPoint<K>& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(scalar(k, c));
  return out;
}

inline json blocks_json(const BlockStructure& b) {
  json blocks = json::array();
  for (auto blk : b.blocks) blocks.push_back({{"n", blk.n}, {"k", blk.k}});
  return {{"blocks", blocks}, {"radical_dim", b.radical_dim}, {"irrep_dims", b.irrep_dims()},
          {"sum_squares", b.sum_squares()}};
}

inline json pair_json(const Residue& a, const Residue& b) { return json::array({a.value, b.value}); }

inline json envelope(const std::string& command, json field, json result) {
  return {{"schema", kSchemaVersion}, {"command", command}, {"field", std::move(field)}, {"result", std::move(result)}};
}

}  // namespace gcliff::report
