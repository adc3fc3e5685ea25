#include "hacoh/io.hpp"

#include <limits>

namespace hacoh::io {

namespace {

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    raise(ErrorCode::ValidationError, "expected an integer, got " + j.dump());
}

std::string kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::Prime: return "prime";
        case FieldKind::PrimePower: return "prime_power";
        case FieldKind::Rational: return "rational";
    }
    return "?";
}

}  // namespace

json to_json(const FieldSpec& spec) {
    json j{{"kind", kind_name(spec.kind)}};
    if (spec.kind != FieldKind::Rational) j["p"] = spec.p;
    if (spec.kind == FieldKind::PrimePower) {
        j["m"] = spec.m;
        j["modulus"] = spec.modulus;
    }
    return j;
}

FieldSpec field_spec_from_json(const json& j) {
    require(j.is_object() && j.contains("kind"), ErrorCode::ValidationError, "field needs a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    require(j.contains("p") && j.at("p").is_number_integer(), ErrorCode::ValidationError, "field needs an integer \"p\"");
    const auto p = j.at("p").get<std::int64_t>();
    if (kind == "prime") return FieldSpec::prime(p);
    if (kind == "prime_power") {
        require(j.contains("modulus"), ErrorCode::ValidationError, "prime_power field needs a \"modulus\"");
        FieldSpec s = FieldSpec::prime_power(p, j.at("modulus").get<std::vector<std::int64_t>>());
        if (j.contains("m"))
            require(j.at("m").get<int>() == s.m, ErrorCode::ValidationError, "field \"m\" disagrees with the modulus degree");
        return s;
    }
    raise(ErrorCode::ValidationError, "unknown field kind \"" + kind + "\"");
}

json scalar_to_json(const Field& k, Scalar a) {
    json out = json::array();
    for (const auto& c : k.repr(a)) out.push_back(big_to_json(c));
    return out;
}

Scalar scalar_from_json(const Field& k, const json& j) {
    if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
    require(j.is_array(), ErrorCode::ValidationError, "field element must be an integer array, got " + j.dump());
    std::vector<BigInt> r;
    for (const auto& c : j) r.push_back(big_from_json(c));
    return k.from_repr(r);
}

json vec_to_json(const Field& k, const Vec& v) {
    json out = json::array();
    for (Scalar a : v) out.push_back(scalar_to_json(k, a));
    return out;
}

Vec vec_from_json(const Field& k, const json& j, std::size_t dim) {
    require(j.is_array() && j.size() == dim, ErrorCode::ValidationError,
            "expected " + std::to_string(dim) + " field elements, got " + j.dump());
    Vec v;
    for (const auto& e : j) v.push_back(scalar_from_json(k, e));
    return v;
}

json to_json(const FiniteAbelianGroup& g) {
    return {{"invariant_factors", g.invariant_factors()}, {"order", g.order()}, {"display", g.to_string()}};
}

std::string pattern_of(const SlotSpace& space, const SlotNames& names) {
    std::string out;
    for (const auto& slot : space.slots()) {
        char c = 0;
        for (const auto& [letter, h] : names)
            if (h == slot) {
                c = letter;
                break;
            }
        require(c != 0, ErrorCode::ShapeMismatch, "slot " + slot->name() + " has no name");
        out += c;
    }
    return out;
}

SlotSpace::Ptr space_from_pattern(const Field::Ptr& k, const std::string& pattern, const SlotNames& names) {
    std::vector<HopfData::Ptr> slots;
    for (char c : pattern) {
        HopfData::Ptr h;
        for (const auto& [letter, p] : names)
            if (letter == c) h = p;
        require(h != nullptr, ErrorCode::ValidationError, std::string("unknown slot letter '") + c + "'");
        slots.push_back(h);
    }
    return SlotSpace::make(k, std::move(slots));
}

json to_json(const RegElement& f, const SlotNames& names) {
    json values = json::array();
    const auto& k = f.space().k();
    for (std::size_t x = 0; x < f.space().size(); ++x) values.push_back(vec_to_json(k, f.value(x)));
    return {{"space", pattern_of(f.space(), names)}, {"values", std::move(values)}};
}

RegElement reg_from_json(const json& j, const SlotNames& names, const AlgebraData::Ptr& coeff) {
    require(j.is_object() && j.contains("space") && j.contains("values"), ErrorCode::ValidationError,
            "an element needs \"space\" and \"values\"");
    auto space = space_from_pattern(coeff->field(), j.at("space").get<std::string>(), names);
    const auto& vals = j.at("values");
    require(vals.is_array() && vals.size() == space->size(), ErrorCode::ValidationError,
            "expected " + std::to_string(space->size()) + " values for space " + j.at("space").get<std::string>());
    std::vector<Scalar> flat;
    flat.reserve(space->size() * coeff->dim());
    for (const auto& v : vals)
        for (Scalar a : vec_from_json(coeff->k(), v, coeff->dim())) flat.push_back(a);
    return RegElement(std::move(space), coeff, std::move(flat));
}

json parse_document(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        raise(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
}

}  // namespace hacoh::io
