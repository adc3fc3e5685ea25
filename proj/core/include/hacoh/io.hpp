#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hacoh/reg.hpp"

namespace hacoh::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const FieldSpec& spec);
FieldSpec field_spec_from_json(const json& j);

/// Field elements are integer arrays (see Field::repr). Integers beyond 64 bits are written as decimal strings.
json scalar_to_json(const Field& k, Scalar a);
Scalar scalar_from_json(const Field& k, const json& j);

json vec_to_json(const Field& k, const Vec& v);
Vec vec_from_json(const Field& k, const json& j, std::size_t dim);

json to_json(const FiniteAbelianGroup& g);

/// Letters naming the slots of tensor spaces, e.g. {{'N', n}, {'T', t}, {'H', h}}.
using SlotNames = std::vector<std::pair<char, HopfData::Ptr>>;

std::string pattern_of(const SlotSpace& space, const SlotNames& names);
SlotSpace::Ptr space_from_pattern(const Field::Ptr& k, const std::string& pattern, const SlotNames& names);

/// {"space": pattern, "values": [one vector of field elements per basis tuple]}.
json to_json(const RegElement& f, const SlotNames& names);
RegElement reg_from_json(const json& j, const SlotNames& names, const AlgebraData::Ptr& coeff);

/// Reads a JSON document; syntax errors raise ParseError with the line and column.
json parse_document(const std::string& text, const std::string& source);

}  // namespace hacoh::io
