#include <doctest.h>

#include "hacoh/hopf.hpp"

using namespace hacoh;

namespace {

Field::Ptr fp(std::int64_t p) { return Field::make(FieldSpec::prime(p)); }
Field::Ptr f4() { return Field::make(FieldSpec::prime_power(2, {1, 1, 1})); }

// {1, z} with z^2 = z and z group-like: a bialgebra with no antipode.
HopfData::Ptr idempotent_monoid(Field::Ptr f) {
    HopfData::Tables t;
    t.name = "k{1,z}";
    t.labels = {"1", "z"};
    t.mult.assign(8, 0);
    t.mult[(0 * 2 + 0) * 2 + 0] = 1;
    t.mult[(0 * 2 + 1) * 2 + 1] = 1;
    t.mult[(1 * 2 + 0) * 2 + 1] = 1;
    t.mult[(1 * 2 + 1) * 2 + 1] = 1;
    t.unit = {1, 0};
    t.comult.assign(8, 0);
    t.comult[(0 * 2 + 0) * 2 + 0] = 1;
    t.comult[(1 * 2 + 1) * 2 + 1] = 1;
    t.counit = {1, 1};
    return HopfData::make(std::move(f), std::move(t));
}

}  // namespace

TEST_CASE("group algebras pass the axiom suite") {
    for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3),
                          FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))}) {
        auto h = group_algebra(fp(3), g);
        const auto r = verify_hopf(*h);
        INFO(r.to_string());
        CHECK(r.ok());
        CHECK(h->is_cocommutative());
        CHECK(h->is_commutative() == g.is_abelian());
        CHECK(h->all_group_like());
    }
    CHECK_FALSE(group_algebra(fp(2), FiniteGroup::symmetric(3))->is_commutative());
}

TEST_CASE("C3 over F4 has S(g) = g^2") {
    auto h = group_algebra(f4(), FiniteGroup::cyclic(3));
    CHECK(verify_hopf(*h).ok());
    CHECK(h->apply_antipode(h->basis(1)) == h->basis(2));
}

TEST_CASE("corrupted antipode is caught with a witness") {
    auto h = group_algebra(fp(3), FiniteGroup::cyclic(2));
    FieldMatrix s = h->antipode();
    s(0, 1) = 1;
    const auto r = verify_hopf(*h->with_antipode(s));
    CHECK_FALSE(r.ok());
    const auto* item = r.find("antipode_left");
    REQUIRE(item != nullptr);
    CHECK_FALSE(item->passed);
    CHECK(item->witness == std::vector<std::size_t>{1});
}

TEST_CASE("non-group tables are rejected") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
    try {
        FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
        FAIL("expected NotAGroup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAGroup);
    }
}

TEST_CASE("primitive truncated algebras") {
    auto h2 = primitive_truncated(2, fp(2));
    CHECK(h2->dim() == 2);
    CHECK(h2->mul(h2->basis(1), h2->basis(1)) == Vec{0, 0});
    CHECK(verify_hopf(*h2).ok());

    auto h3 = primitive_truncated(3, fp(3));
    CHECK(verify_hopf(*h3).ok());
    // Delta(x^2) = x^2 (x) 1 + 2 x (x) x + 1 (x) x^2
    const auto& t = h3->tables();
    auto d = [&](std::size_t i, std::size_t j, std::size_t k) { return t.comult[(i * 3 + j) * 3 + k]; };
    CHECK(d(2, 2, 0) == 1);
    CHECK(d(2, 1, 1) == 2);
    CHECK(d(2, 0, 2) == 1);
    CHECK(h3->apply_antipode(h3->basis(1)) == Vec{0, 2, 0});

    CHECK_THROWS_AS(primitive_truncated(3, fp(2)), Error);
    CHECK_THROWS_AS(primitive_truncated(2, Field::make(FieldSpec::rational())), Error);
}

TEST_CASE("tensor products") {
    auto c2 = group_algebra(fp(3), FiniteGroup::cyclic(2));
    auto t = tensor_hopf(*c2, *c2);
    auto klein = group_algebra(fp(3), FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    CHECK(t->dim() == 4);
    const auto iso = find_basis_isomorphism(*t, *klein);
    REQUIRE(iso.has_value());
    CHECK(is_basis_isomorphism(*t, *klein, *iso));

    auto unit = group_algebra(fp(3), FiniteGroup::cyclic(1));
    auto c3 = group_algebra(fp(3), FiniteGroup::cyclic(3));
    CHECK(find_basis_isomorphism(*tensor_hopf(*c3, *unit), *c3).has_value());

    auto mixed = tensor_hopf(*group_algebra(fp(2), FiniteGroup::cyclic(2)), *primitive_truncated(2, fp(2)));
    CHECK(mixed->dim() == 4);
    CHECK(mixed->is_cocommutative());
    CHECK(verify_hopf(*mixed).ok());

    CHECK_THROWS_AS(tensor_hopf(*c2, *group_algebra(fp(5), FiniteGroup::cyclic(2))), Error);
    CHECK_FALSE(find_basis_isomorphism(*c3, *group_algebra(fp(3), FiniteGroup::cyclic(2))).has_value());
}

TEST_CASE("antipode recovery") {
    for (auto h : {group_algebra(fp(3), FiniteGroup::cyclic(3)), primitive_truncated(3, fp(3)),
                   group_algebra(fp(2), FiniteGroup::symmetric(3)), primitive_truncated(5, fp(5))}) {
        const auto s = antipode_from_bialgebra(*h->with_antipode(std::nullopt));
        REQUIRE(s.has_value());
        CHECK(*s == h->antipode());
    }
    auto b = idempotent_monoid(fp(3));
    CHECK_FALSE(antipode_from_bialgebra(*b).has_value());
    const auto r = verify_hopf(*b);
    CHECK(r.find("associativity")->passed);
    CHECK(r.find("comultiplication_multiplicative")->passed);
    CHECK_FALSE(r.find("antipode_left")->passed);
}

TEST_CASE("group extraction") {
    auto h = group_algebra(fp(5), FiniteGroup::symmetric(3));
    CHECK(extract_group(*h) == FiniteGroup::symmetric(3));
    CHECK_THROWS_AS(extract_group(*primitive_truncated(3, fp(3))), Error);
}

TEST_CASE("algebras") {
    auto a = AlgebraData::ground(f4());
    CHECK(a->unit_codes().size() == 3);
    auto dual = primitive_truncated(2, fp(2))->algebra();
    CHECK(verify_algebra(*dual).ok());
    // k[x]/(x^2) over F_2: units are 1 and 1 + x
    CHECK(dual->unit_codes() == std::vector<std::int64_t>{1, 3});
    CHECK(dual->is_commutative());
}
