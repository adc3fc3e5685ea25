#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hacoh/io.hpp"
#include "hacoh/smash.hpp"

namespace hacoh::cli {

using io::json;

/// One named declaration of a problem file.
struct Object {
    std::string kind;  // group, group_algebra, primitive_truncated, tensor, hopf, ground, truncated_polynomial,
                       // algebra, action, smash
    std::optional<FiniteGroup> group;
    HopfData::Ptr hopf;
    AlgebraData::Ptr algebra;
    std::optional<ActionData> action;
    std::optional<SmashData> smash;
};

struct Problem {
    json source;  // the document as read, with command-line overrides applied
    std::string directory;
    Field::Ptr field;
    std::map<std::string, Object> objects;
    std::string task;
    json params;
    std::uint64_t budget = 6561;
    std::uint64_t seed = 1;

    const Object& object(const std::string& name) const;
    const Object& param_object(const std::string& key) const;
    HopfData::Ptr hopf(const std::string& key) const;
    AlgebraData::Ptr coeff(const std::string& key = "coeff") const;  // defaults to the ground field
    const ActionData& action(const std::string& key) const;
};

struct Overrides {
    std::optional<std::uint64_t> budget, seed;
};

/// Validates and builds every object. Throws ValidationError naming the failing invariant.
Problem load_problem(json doc, const Overrides& ov = {}, std::string directory = ".");
Problem read_problem(const std::string& path, const Overrides& ov = {});

}  // namespace hacoh::cli
