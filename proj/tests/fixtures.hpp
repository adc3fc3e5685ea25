#pragma once

#include "hacoh/smash.hpp"

namespace fixtures {

using namespace hacoh;

inline Field::Ptr fp(std::int64_t p) { return Field::make(FieldSpec::prime(p)); }
inline Field::Ptr f4() { return Field::make(FieldSpec::prime_power(2, {1, 1, 1})); }

/// T acting on N on the left.
struct Pair {
    HopfData::Ptr t, n;
    ActionData action;
};

/// kC2 acting on kC3 by inversion.
inline Pair c2_on_c3(Field::Ptr f) {
    auto c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);
    auto t = group_algebra(f, c2), n = group_algebra(f, c3);
    return {t, n, ActionData::from_group_action(t, n, GroupAction::cyclic(c2, c3, inversion_automorphism(c3)))};
}

/// kC2 acting trivially on kC2.
inline Pair c2_on_c2(Field::Ptr f) {
    auto t = group_algebra(f, FiniteGroup::cyclic(2)), n = group_algebra(f, FiniteGroup::cyclic(2));
    return {t, n, ActionData::trivial_left(t, n)};
}

/// kC2 acting on k[x]/(x^p) by x -> -x.
inline Pair c2_on_prim(Field::Ptr f, std::int64_t p) {
    auto n = primitive_truncated(p, f);
    auto t = group_algebra(f, FiniteGroup::cyclic(2));
    const std::size_t d = n->dim();
    std::vector<Scalar> map(2 * d * d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        map[(0 * d + k) * d + k] = 1;
        map[(1 * d + k) * d + k] = k % 2 ? f->neg(1) : 1;
    }
    return {t, n, ActionData::left(t, n, map)};
}

inline SmashData smash(const Pair& p) { return smash_product(p.n, p.t, p.action); }

/// k[y]/(y^m).
inline AlgebraData::Ptr truncated_poly(Field::Ptr f, std::size_t m) {
    AlgebraData::Tables t;
    t.name = "k[y]/(y^" + std::to_string(m) + ")";
    for (std::size_t i = 0; i < m; ++i) t.labels.push_back("y^" + std::to_string(i));
    t.mult.assign(m * m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j) t.mult[(i * m + j) * m + i + j] = 1;
    t.unit.assign(m, 0);
    t.unit[0] = 1;
    return AlgebraData::make(std::move(f), std::move(t));
}

}  // namespace fixtures
