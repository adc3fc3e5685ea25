#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hacoh/measuring.hpp"

using namespace hacoh;
using namespace fixtures;

namespace {

std::vector<RegElement> measuring_cochains(const MeasuringComplex& mc, std::size_t q) {
    return enumerate_grid(mc.complex().grid(q), 1 << 16, [&](const RegElement& f) { return mc.is_measuring(f).ok; });
}

}  // namespace

TEST_CASE("measuring law on kC2 x kC3 over F4") {
    auto f = f4();
    auto p = c2_on_c3(f);
    const MeasuringComplex mc(p.t, p.n, p.action, AlgebraData::ground(f));
    CHECK(mc.is_measuring(mc.complex().unit(1)).ok);

    Scalar w = 0;
    for (Scalar c = 2; c < 4; ++c)
        if (f->pow(c, 3) == 1) w = c;
    REQUIRE(w != 0);
    // f(t)(n) = phi(n)^{deg t} with phi(g) = w
    RegElement phi = mc.complex().unit(1);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t n = 0; n < 3; ++n) phi.set(phi.space().encode({t, n}), {f->pow(w, static_cast<std::int64_t>(t * n))});
    CHECK(mc.is_measuring(phi).ok);

    RegElement bad = phi;
    const std::size_t x = bad.space().encode({1, 1});
    bad.set(x, {f->add(bad.value(x)[0], 1)});
    const auto r = mc.is_measuring(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.law == "measuring");
    CHECK(r.witness.size() == 3);
    CHECK(r.witness[0] == 1);

    RegElement bad_unit = phi;
    bad_unit.set(bad_unit.space().encode({1, 0}), {w});
    const auto u = mc.is_measuring(bad_unit);
    CHECK_FALSE(u.ok);
    CHECK(u.law == "unit");
    CHECK(u.witness == std::vector<std::size_t>{1});
}

TEST_CASE("measuring differential") {
    auto f3 = fp(3);
    auto p = c2_on_prim(f3, 3);
    auto a = truncated_poly(f3, 3);
    const MeasuringComplex mc(p.t, p.n, p.action, a);
    for (std::size_t q = 0; q <= 2; ++q) CHECK(mc.differential(mc.complex().unit(q)).is_unit());

    const auto ones = measuring_cochains(mc, 1);
    REQUIRE(ones.size() > 1);
    for (const auto& f : ones) {
        const RegElement d = mc.differential(f);
        CHECK(mc.is_measuring(d).ok);
        CHECK(mc.differential(d).is_unit());
    }
    const auto zeros = measuring_cochains(mc, 0);
    for (const auto& g : zeros) {
        // delta of an algebra map: (delta g)(t)(n) = sum g(n_1) g^{-1}(t(n_2))
        const RegElement d = mc.differential(g);
        const RegElement ginv = conv_inverse(g);
        bool ok = true;
        for (std::size_t t = 0; t < 2; ++t)
            for (std::size_t n = 0; n < 3; ++n) {
                const auto& sp = d.space();
                Vec expect = a->zero();
                for (const auto& c : p.n->coproduct(n)) {
                    Vec term = g.value(c.left);
                    Vec acted = a->zero();
                    for (const auto& s : p.action.act(t, c.right)) acted = a->add(acted, a->scale(s.coeff, ginv.value(s.index)));
                    expect = a->add(expect, a->scale(c.coeff, a->mul(term, acted)));
                }
                ok = ok && d.value(sp.encode({t, n})) == expect;
            }
        CHECK(ok);
    }

    RegElement bad = mc.complex().unit(1);
    bad.set(bad.space().encode({1, 1}), {1, 1, 0});
    try {
        mc.differential(bad);
        FAIL("expected NotMeasuring");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotMeasuring);
    }
}

TEST_CASE("trivial action reduces to trivial coefficients") {
    auto f3 = fp(3);
    auto p = c2_on_c2(f3);
    auto a = AlgebraData::ground(f3);
    const MeasuringComplex mc(p.t, p.n, p.action, a);
    CochainComplex::Layout l;
    l.name = "plain";
    l.active = p.t;
    l.suffix = {p.n};
    l.coeff = a;
    l.normalize_passive = true;
    const auto plain = CochainComplex::make(l);
    for (std::size_t q = 0; q <= 1; ++q)
        for (const auto& f : measuring_cochains(mc, q)) {
            const RegElement g(plain->space(q), a, f.values());
            CHECK(mc.differential(f).values() == plain->differential(g).values());
        }
}

TEST_CASE("measuring cohomology examples") {
    SUBCASE("trivial kC2 on kC2 over F3") {
        auto f3 = fp(3);
        auto p = c2_on_c2(f3);
        auto a = AlgebraData::ground(f3);
        const auto h1 = h_meas(p.t, p.n, p.action, a, 1);
        CHECK(h1.group.invariant_factors() == std::vector<std::int64_t>{2});
        CHECK(h1.method == "enumeration");

        const auto pg = pairing_group(p.t, p.n, a);
        CHECK(pg.group().invariant_factors() == std::vector<std::int64_t>{2});
        // every pairing is a measuring 1-cocycle, and distinct pairings give distinct classes
        const MeasuringComplex mc(p.t, p.n, p.action, a);
        const auto table = cohomology_bruteforce(mc.complex(), 1, {}, [&](const RegElement& f) { return mc.is_measuring(f).ok; });
        std::set<std::size_t> hit;
        for (const auto& pr : pg.pairings) {
            const RegElement f(mc.complex().space(1), a, pr.values());
            CHECK(is_cocycle(mc.complex(), f).ok);
            const auto cls = table.classes->class_of(f);
            REQUIRE(cls.has_value());
            hit.insert(*cls);
        }
        CHECK(hit.size() == table.classes->class_count());
    }
    SUBCASE("x -> -x on the truncated primitive algebra") {
        auto f3 = fp(3);
        auto p = c2_on_prim(f3, 3);
        auto a = AlgebraData::ground(f3);
        const MeasuringComplex mc(p.t, p.n, p.action, a);
        const KgSpecialization kg(mc);
        CHECK(kg.algebra_maps().size() == 1);
        CHECK(kg.uniquely_divisible());
        for (std::size_t q = 1; q <= 2; ++q) {
            CHECK(mc.cohomology(q).group.is_trivial());
            CHECK(kg.cohomology(q).group.is_trivial());
        }
    }
    SUBCASE("inversion on kC3 over F4") {
        auto f = f4();
        auto p = c2_on_c3(f);
        const MeasuringComplex mc(p.t, p.n, p.action, AlgebraData::ground(f));
        const KgSpecialization kg(mc);
        CHECK(kg.algebra_maps().group().invariant_factors() == std::vector<std::int64_t>{3});
        for (std::size_t q = 1; q <= 2; ++q) {
            CHECK(mc.cohomology(q).group.is_trivial());
            CHECK(kg.cohomology(q).group.is_trivial());
        }
    }
}

TEST_CASE("algebra maps") {
    auto f3 = fp(3);
    auto prim = primitive_truncated(3, f3);
    CHECK(AlgebraMaps(prim, AlgebraData::ground(f3)).size() == 1);
    const AlgebraMaps nil(prim, truncated_poly(f3, 3));
    CHECK(nil.group().invariant_factors() == std::vector<std::int64_t>{3, 3});
    auto f = f4();
    CHECK(AlgebraMaps(group_algebra(f, FiniteGroup::cyclic(3)), AlgebraData::ground(f)).group().invariant_factors() ==
          std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(AlgebraMaps(prim, truncated_poly(f3, 3), SearchOptions{10}), Error);
}

TEST_CASE("kG specialization matches enumeration") {
    struct Case {
        Pair p;
        AlgebraData::Ptr a;
    };
    auto f3 = fp(3);
    auto f = f4();
    std::vector<Case> cases = {{c2_on_c2(f3), AlgebraData::ground(f3)},
                               {c2_on_c3(f), AlgebraData::ground(f)},
                               {c2_on_prim(f3, 3), truncated_poly(f3, 3)},
                               {c2_on_c3(fp(7)), AlgebraData::ground(fp(7))}};
    for (const auto& c : cases) {
        const MeasuringComplex mc(c.p.t, c.p.n, c.p.action, c.a);
        const KgSpecialization kg(mc);
        for (std::size_t q = 1; q <= 2; ++q) {
            INFO(mc.complex().layout().name << " q=" << q);
            const auto e = mc.cohomology(q);
            const auto b = kg.cohomology(q);
            CHECK(e.group == b.group);
            for (const auto& r : b.representatives) {
                CHECK(mc.is_measuring(r).ok);
                CHECK(is_cocycle(mc.complex(), r).ok);
            }
        }
        // the dictionary commutes with the differentials
        for (std::size_t q = 0; q <= 1; ++q)
            for (const auto& f : measuring_cochains(mc, q)) {
                const Cochain c0 = kg.to_cochain(f);
                CHECK(kg.to_reg(c0) == f);
                CHECK(kg.to_cochain(mc.differential(f)) == bar_differential(kg.module(), c0));
            }
    }
}

TEST_CASE("pairings") {
    auto f2 = fp(2);
    auto t = group_algebra(f2, FiniteGroup::cyclic(2));
    const auto pg = pairing_group(t, primitive_truncated(2, f2), AlgebraData::ground(f2));
    CHECK(pg.group().is_trivial());
    CHECK(pg.pairings.size() == 1);

    auto f3 = fp(3);
    auto c2 = group_algebra(f3, FiniteGroup::cyclic(2));
    const MeasuringComplex mc(c2, c2, ActionData::trivial_left(c2, c2), AlgebraData::ground(f3));
    RegElement f = mc.complex().unit(1);
    f.set(f.space().encode({1, 1}), {2});
    CHECK(measures_in_t(mc, f).ok);
    f.set(f.space().encode({1, 1}), {0});
    CHECK_FALSE(measures_in_t(mc, f).ok);
}
