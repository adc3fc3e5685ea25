#include <doctest.h>

#include <random>
#include <string>

#include "hacoh/normalize.hpp"

using namespace hacoh;

namespace {

Field::Ptr f4() { return Field::make(FieldSpec::prime_power(2, {1, 1, 1})); }

SmashData c3_by_c2(Field::Ptr f) {
    auto c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);
    auto t = group_algebra(f, c2), n = group_algebra(f, c3);
    return smash_product(n, t, ActionData::from_group_action(t, n, GroupAction::cyclic(c2, c3, inversion_automorphism(c3))));
}

SmashData c2_times_c2(Field::Ptr f) {
    auto t = group_algebra(f, FiniteGroup::cyclic(2)), n = group_algebra(f, FiniteGroup::cyclic(2));
    return smash_product(n, t, ActionData::trivial_left(t, n));
}

SmashData prim_by_c2(Field::Ptr f3) {
    auto n = primitive_truncated(3, f3);
    auto t = group_algebra(f3, FiniteGroup::cyclic(2));
    std::vector<Scalar> map(2 * 3 * 3, 0);
    for (std::size_t k = 0; k < 3; ++k) {
        map[(0 * 3 + k) * 3 + k] = 1;
        map[(1 * 3 + k) * 3 + k] = k % 2 ? f3->neg(1) : 1;
    }
    return smash_product(n, t, ActionData::left(t, n, map));
}

void check_normalization(const SmashCochains& sc, const RegElement& f) {
    const auto r = normalize_cocycle(sc, f);
    CHECK(sc.restrict_nt(r.cocycle).is_unit());
    CHECK(convolve(f, sc.on_h().differential(r.w)) == r.cocycle);
    CHECK(is_cocycle(sc.on_h(), r.cocycle).ok);
    const auto ids = check_normalized_identities(sc, r.cocycle);
    INFO(ids.to_string());
    CHECK(ids.ok());
}

}  // namespace

TEST_CASE("normalizing coboundaries on kC3 # kC2 over F4") {
    const SmashCochains sc(c3_by_c2(f4()), AlgebraData::ground(f4()));
    std::mt19937_64 rng(41);
    const auto grid = sc.on_h().grid(1, false);
    for (int trial = 0; trial < 6; ++trial) {
        const RegElement t = grid.random(rng);
        const RegElement f = sc.on_h().differential(t);
        check_normalization(sc, f);
        const auto r = normalize_cocycle(sc, f);
        CHECK(coboundary_witness(sc.on_h(), r.cocycle).found());
    }
}

TEST_CASE("normalizing random cocycles on kC2 (x) kC2 over F3") {
    auto f3 = Field::make(FieldSpec::prime(3));
    const SmashCochains sc(c2_times_c2(f3), AlgebraData::ground(f3));
    const auto h2 = cohomology_bruteforce(sc.on_h(), 2);
    CHECK(h2.group.order() == 8);
    std::mt19937_64 rng(3);
    const auto grid = sc.on_h().grid(1, false);
    for (std::size_t cls = 0; cls < h2.classes->class_count(); ++cls) {
        const RegElement f = convolve(h2.classes->representative(cls), sc.on_h().differential(grid.random(rng)));
        check_normalization(sc, f);
    }
}

TEST_CASE("normalizing on a non-pointed-basis smash product") {
    auto f3 = Field::make(FieldSpec::prime(3));
    const SmashCochains sc(prim_by_c2(f3), AlgebraData::ground(f3));
    std::mt19937_64 rng(8);
    const auto grid = sc.on_h().grid(1, false);
    for (int trial = 0; trial < 4; ++trial) {
        const RegElement t = grid.random(rng);
        if (!try_conv_inverse(t)) continue;
        check_normalization(sc, sc.on_h().differential(t));
    }
}

TEST_CASE("normalized input is a fixed point") {
    const SmashCochains sc(c3_by_c2(f4()), AlgebraData::ground(f4()));
    const RegElement u = sc.on_h().unit(2);
    const auto r = normalize_cocycle(sc, u);
    CHECK(r.cocycle == u);
    CHECK(r.w.is_unit());

    RegElement bad = u;
    bad.set(bad.space().encode({1, 2}), {2});
    try {
        normalize_cocycle(sc, bad);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotACocycle);
    }
}

TEST_CASE("assembly from components") {
    const SmashCochains sc(c3_by_c2(f4()), AlgebraData::ground(f4()));
    const RegElement unit = assemble_normalized(sc, sc.on_n().unit(2), sc.on_t().unit(2), sc.over_t().unit(1));
    CHECK(unit.is_unit());

    std::mt19937_64 rng(17);
    const auto grid = sc.on_h().grid(1, false);
    for (int trial = 0; trial < 4; ++trial) {
        const auto r = normalize_cocycle(sc, sc.on_h().differential(grid.random(rng)));
        const RegElement fnn = sc.restrict_nn(r.cocycle), ftt = sc.restrict_tt(r.cocycle), ftn = sc.restrict_tn(r.cocycle);
        CHECK(check_components(sc, fnn, ftt, ftn).ok());
        CHECK(assemble_normalized(sc, fnn, ftt, ftn) == r.cocycle);
    }

    // break t_multiplicative: g(t (x) n) on the generator pair
    RegElement g = sc.over_t().unit(1);
    g.set(g.space().encode({1, 1}), {2});
    const auto rep = check_components(sc, sc.on_n().unit(2), sc.on_t().unit(2), g);
    CHECK_FALSE(rep.find("t_multiplicative")->passed);
    try {
        assemble_normalized(sc, sc.on_n().unit(2), sc.on_t().unit(2), g);
        FAIL("expected ComponentConditionFailed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ComponentConditionFailed);
        CHECK(std::string(e.what()).find("t_multiplicative") != std::string::npos);
    }
}
