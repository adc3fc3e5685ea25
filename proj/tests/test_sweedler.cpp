#include <doctest.h>

#include <random>

#include "hacoh/bridge.hpp"
#include "hacoh/sweedler.hpp"

using namespace hacoh;

namespace {

Field::Ptr fp(std::int64_t p) { return Field::make(FieldSpec::prime(p)); }
Field::Ptr f4() { return Field::make(FieldSpec::prime_power(2, {1, 1, 1})); }

AlgebraData::Ptr ground(const Field::Ptr& f) { return AlgebraData::ground(f); }

RegElement constant_on(const CochainComplex& c, std::size_t q, const std::vector<std::pair<std::vector<std::size_t>, Scalar>>& entries) {
    RegElement f = c.unit(q);
    for (const auto& [idx, v] : entries) f.set(f.space().encode(idx), {v});
    return f;
}

/// k x k with the swap action of C2.
struct SwapSetup {
    HopfData::Ptr h;
    AlgebraData::Ptr a;
    ActionData action;
};

SwapSetup swap_setup(Field::Ptr f) {
    AlgebraData::Tables t;
    t.name = "k^2";
    t.labels = {"e1", "e2"};
    t.mult.assign(8, 0);
    t.mult[(0 * 2 + 0) * 2 + 0] = 1;
    t.mult[(1 * 2 + 1) * 2 + 1] = 1;
    t.unit = {1, 1};
    auto a = AlgebraData::make(f, t);
    auto h = group_algebra(f, FiniteGroup::cyclic(2));
    std::vector<Scalar> map(2 * 2 * 2, 0);
    for (std::size_t e = 0; e < 2; ++e) {
        map[(e * 2 + 0) * 2 + e] = 1;
        map[(e * 2 + 1) * 2 + (1 - e)] = 1;
    }
    return {h, a, ActionData::right(h, a, map)};
}

HopfData::Ptr prim_smash(Field::Ptr f3) {
    auto n = primitive_truncated(3, f3);
    auto t = group_algebra(f3, FiniteGroup::cyclic(2));
    std::vector<Scalar> map(2 * 3 * 3, 0);
    for (std::size_t k = 0; k < 3; ++k) {
        map[(0 * 3 + k) * 3 + k] = 1;
        map[(1 * 3 + k) * 3 + k] = k % 2 ? f3->neg(1) : 1;
    }
    return smash_product(n, t, ActionData::left(t, n, map)).h;
}

}  // namespace

TEST_CASE("convolution and inverses") {
    auto f3 = fp(3);
    auto c = CochainComplex::sweedler(group_algebra(f3, FiniteGroup::cyclic(2)), ground(f3));
    const RegElement f = constant_on(*c, 1, {{{1}, 2}});
    CHECK(convolve(f, c->unit(1)) == f);
    CHECK(convolve(f, f).value(1) == Vec{1});
    CHECK(conv_inverse(c->unit(1)) == c->unit(1));
    CHECK(conv_inverse(f).value(1) == Vec{2});
    const RegElement zero = constant_on(*c, 1, {{{1}, 0}});
    CHECK_THROWS_AS(conv_inverse(zero), Error);
    try {
        conv_inverse(zero);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInvertible);
    }

    // primitive x: (f * g)(x) = f(x) + g(x)
    auto p = primitive_truncated(3, f3);
    auto cp = CochainComplex::sweedler(p, ground(f3));
    const RegElement a = constant_on(*cp, 1, {{{1}, 1}, {{2}, 0}});
    const RegElement b = constant_on(*cp, 1, {{{1}, 2}, {{2}, 1}});
    CHECK(convolve(a, b).value(1) == Vec{0});
    CHECK(convolve(a, conv_inverse(a)) == cp->unit(1));
    CHECK(convolve(a, b) == convolve(b, a));
}

TEST_CASE("differential in low degrees") {
    auto f3 = fp(3);
    auto c = CochainComplex::sweedler(group_algebra(f3, FiniteGroup::cyclic(2)), ground(f3));
    const RegElement f = constant_on(*c, 1, {{{1}, 2}});
    const RegElement df = c->differential(f);
    CHECK(df.arity() == 2);
    CHECK(df.value(df.space().encode({1, 1})) == Vec{1});
    for (std::size_t q = 0; q <= 3; ++q) CHECK(c->differential(c->unit(q)) == c->unit(q + 1));
    CHECK_THROWS_AS(c->differential(c->unit(4)), Error);
}

TEST_CASE("degree-1 differential matches the group coboundary with a twisted action") {
    auto f3 = fp(3);
    auto s = swap_setup(f3);
    auto c = CochainComplex::sweedler(s.h, s.a, s.action);
    std::mt19937_64 rng(7);
    const auto grid = c->grid(1, false);
    for (int trial = 0; trial < 10; ++trial) {
        const RegElement t = grid.random(rng);
        const RegElement d = c->differential(t);
        const RegElement tinv = conv_inverse(t);
        for (std::size_t x = 0; x < 2; ++x)
            for (std::size_t y = 0; y < 2; ++y) {
                // t(y) t(xy)^{-1} t(x)^y on group-likes
                const Vec tx_y = s.action.act_dense(s.h->basis(y), t.value(x));
                const Vec expect = s.a->mul(s.a->mul(t.value(y), tinv.value(x ^ y)), tx_y);
                CHECK(d.value(d.space().encode({x, y})) == expect);
            }
        CHECK(c->differential(d).is_unit());
    }
}

TEST_CASE("delta squared is trivial") {
    std::mt19937_64 rng(11);
    auto check_complex = [&](const CochainComplex& c) {
        for (std::size_t q = 0; q <= 2; ++q) {
            const auto grid = c.grid(q, false);
            for (int trial = 0; trial < 4; ++trial) {
                const RegElement f = grid.random(rng);
                if (!try_conv_inverse(f)) continue;
                CHECK(c.differential(c.differential(f)).is_unit());
            }
        }
    };
    auto f4f = f4();
    check_complex(*CochainComplex::sweedler(group_algebra(f4f, FiniteGroup::symmetric(3)), ground(f4f)));
    auto f3 = fp(3);
    check_complex(*CochainComplex::sweedler(prim_smash(f3), ground(f3)));
    auto s = swap_setup(f3);
    check_complex(*CochainComplex::sweedler(s.h, s.a, s.action));
}

TEST_CASE("cocycle predicate agrees with delta on complete grids") {
    auto f4f = f4();
    auto c = CochainComplex::sweedler(group_algebra(f4f, FiniteGroup::cyclic(3)), ground(f4f));
    const auto grid = c->grid(2);
    std::size_t cocycles = 0;
    for (std::uint64_t i = 0; i < grid.count(); ++i) {
        const RegElement f = grid.candidate(i);
        const bool direct = is_cocycle(*c, f).ok;
        CHECK(direct == delta_is_unit(*c, f).ok);
        cocycles += direct;
    }
    CHECK(cocycles == 9);  // |Z^2| = |B^2| |H^2| = 3 * 3

    auto f3 = fp(3);
    auto s = swap_setup(f3);
    auto cs = CochainComplex::sweedler(s.h, s.a, s.action);
    const auto g1 = cs->grid(1);
    for (std::uint64_t i = 0; i < g1.count(); ++i) {
        const RegElement f = g1.candidate(i);
        CHECK(is_cocycle(*cs, f).ok == delta_is_unit(*cs, f).ok);
    }
}

TEST_CASE("cocycle examples and witnesses") {
    auto f3 = fp(3);
    auto c = CochainComplex::sweedler(group_algebra(f3, FiniteGroup::cyclic(2)), ground(f3));
    CHECK(is_cocycle(*c, c->unit(2)).ok);
    const RegElement f = constant_on(*c, 2, {{{1, 1}, 2}});
    CHECK(is_cocycle(*c, f).ok);
    const auto search = coboundary_search(*c, f);
    CHECK_FALSE(search.found());
    CHECK(search.searched == 2);
    const auto bridged = coboundary_witness(*c, f);
    CHECK_FALSE(bridged.found());
    CHECK(bridged.method == "group_bridge");

    auto f4f = f4();
    auto cs = CochainComplex::sweedler(group_algebra(f4f, FiniteGroup::symmetric(3)), ground(f4f));
    RegElement bad = cs->unit(2);
    bad.set(bad.space().encode({1, 2}), {2});
    const auto chk = is_cocycle(*cs, bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.witness.size() == 3);

    std::mt19937_64 rng(5);
    const auto g1 = cs->grid(1);
    for (int trial = 0; trial < 5; ++trial) {
        const RegElement t = g1.random(rng);
        const RegElement d = cs->differential(t);
        const auto w = coboundary_witness(*cs, d);
        REQUIRE(w.found());
        CHECK(cs->differential(*w.witness) == d);
    }

    auto p = prim_smash(f3);
    auto cp = CochainComplex::sweedler(p, ground(f3));
    const auto gp = cp->grid(1);
    const RegElement t = gp.random(rng);
    const auto w = coboundary_witness(*cp, cp->differential(t));
    CHECK(w.method == "enumeration");
    REQUIRE(w.found());

    auto q = Field::make(FieldSpec::rational());
    auto cq = CochainComplex::sweedler(group_algebra(q, FiniteGroup::cyclic(2)), ground(q));
    RegElement fq = cq->unit(2);
    fq.set(fq.space().encode({1, 1}), {q->from_int(2)});
    try {
        coboundary_witness(*cq, fq);
        FAIL("expected a budget error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
    }
}

TEST_CASE("brute-force second cohomology") {
    auto f3 = fp(3), f2 = fp(2), f4f = f4();
    auto c2 = FiniteGroup::cyclic(2);
    CHECK(h2_bruteforce(group_algebra(f3, c2), ground(f3)).group == FiniteAbelianGroup::cyclic(2));
    CHECK(h2_bruteforce(group_algebra(f2, c2), ground(f2)).group.is_trivial());
    const auto r3 = h2_bruteforce(group_algebra(f4f, FiniteGroup::cyclic(3)), ground(f4f));
    CHECK(r3.group == FiniteAbelianGroup::cyclic(3));
    REQUIRE(r3.representatives.size() == 1);
    CHECK(r3.classes->cocycle_count() == 9);
    CHECK(r3.classes->coboundary_count() == 3);

    auto klein = group_algebra(f3, FiniteGroup::direct_product(c2, c2));
    const auto rk = h2_bruteforce(klein, ground(f3));
    CHECK(rk.group == FiniteAbelianGroup::from_cyclic_orders({2, 2, 2}));
    const auto via = sweedler_cohomology_via_bridge(*CochainComplex::sweedler(klein, ground(f3)), 2);
    CHECK(via.group == rk.group);

    // representatives are pairwise non-cohomologous
    auto ck = CochainComplex::sweedler(klein, ground(f3));
    for (std::size_t i = 0; i < rk.classes->class_count(); ++i)
        for (std::size_t j = i + 1; j < rk.classes->class_count(); ++j) {
            const RegElement quot = convolve(rk.classes->representative(i), conv_inverse(rk.classes->representative(j)));
            CHECK_FALSE(coboundary_witness(*ck, quot).found());
        }
    // witnesses relate each cocycle to its class representative
    for (const auto& z : rk.classes->cocycles()) {
        const auto cls = rk.classes->class_of(z);
        REQUIRE(cls.has_value());
        const RegElement t = rk.classes->witness(z);
        CHECK(convolve(rk.classes->representative(*cls), ck->differential(t)) == z);
    }

    CHECK_THROWS_AS(h2_bruteforce(group_algebra(f4f, FiniteGroup::symmetric(3)), ground(f4f)), Error);
}

TEST_CASE("enumeration order does not depend on the worker count") {
    auto f3 = fp(3);
    auto klein = group_algebra(f3, FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    auto c = CochainComplex::sweedler(klein, ground(f3));
    auto run = [&](const char* threads) {
        setenv("HACOH_THREADS", threads, 1);
        return enumerate_grid(c->grid(2), 6561, [&](const RegElement& f) { return is_cocycle(*c, f).ok; });
    };
    const auto one = run("1");
    const auto four = run("4");
    unsetenv("HACOH_THREADS");
    CHECK(one.size() == 16);
    CHECK(one == four);
}
