#include <doctest.h>

#include "hacoh/smash.hpp"

using namespace hacoh;

namespace {

Field::Ptr fp(std::int64_t p) { return Field::make(FieldSpec::prime(p)); }

ActionData inversion_c3(Field::Ptr f) {
    auto c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);
    return ActionData::from_group_action(group_algebra(f, c2), group_algebra(f, c3),
                                         GroupAction::cyclic(c2, c3, inversion_automorphism(c3)));
}

}  // namespace

TEST_CASE("trivial and inversion actions are valid") {
    auto f = fp(3);
    auto t = group_algebra(f, FiniteGroup::cyclic(2));
    auto n = group_algebra(f, FiniteGroup::cyclic(3));
    const auto triv = ActionData::trivial_left(t, n);
    CHECK(triv.is_trivial());
    CHECK(verify_action(triv).ok());
    const auto inv = inversion_c3(f);
    CHECK_FALSE(inv.is_trivial());
    const auto r = verify_action(inv);
    INFO(r.to_string());
    CHECK(r.ok());
}

TEST_CASE("non-homomorphic permutation action fails the module-algebra law") {
    auto f = fp(3);
    auto t = group_algebra(f, FiniteGroup::cyclic(2));
    auto n = group_algebra(f, FiniteGroup::cyclic(3));
    // generator swaps 1 and g, fixes g^2
    std::vector<Scalar> map(2 * 3 * 3, 0);
    for (std::size_t x = 0; x < 3; ++x) map[(0 * 3 + x) * 3 + x] = 1;
    const std::size_t perm[3] = {1, 0, 2};
    for (std::size_t x = 0; x < 3; ++x) map[(1 * 3 + x) * 3 + perm[x]] = 1;
    const auto r = verify_action(ActionData::left(t, n, map));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("module_algebra")->passed);
    CHECK(r.find("module_algebra")->witness.size() == 3);
    CHECK_THROWS_AS(smash_product(n, t, ActionData::left(t, n, map)), Error);
}

TEST_CASE("smash with trivial action is the tensor product") {
    auto f = fp(3);
    auto t = group_algebra(f, FiniteGroup::cyclic(2));
    auto n = primitive_truncated(3, f);
    const auto s = smash_product(n, t, ActionData::trivial_left(t, n));
    const auto tensor = tensor_hopf(*n, *t);
    CHECK(s.h->tables().mult == tensor->tables().mult);
    CHECK(s.h->tables().comult == tensor->tables().comult);
    CHECK(s.h->tables().unit == tensor->tables().unit);
    CHECK(s.h->tables().counit == tensor->tables().counit);
    CHECK(s.h->antipode() == tensor->antipode());
}

TEST_CASE("kC3 # kC2 by inversion is kS3") {
    auto f = fp(5);
    const auto act = inversion_c3(f);
    const auto s = smash_product(act.target_hopf(), act.actor(), act);
    CHECK(s.h->dim() == 6);
    CHECK_FALSE(s.h->is_commutative());
    CHECK(s.h->is_cocommutative());
    CHECK(verify_hopf(*s.h).ok());
    // h^a # g^b -> h^a g^b, compared through an explicit generator pair in S3
    const auto s3 = group_algebra(f, FiniteGroup::symmetric(3));
    const auto iso = find_basis_isomorphism(*s.h, *s3);
    REQUIRE(iso.has_value());
    CHECK(is_basis_isomorphism(*s.h, *s3, *iso));
    // n # t = (n # 1)(1 # t)
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(s.h->mul(s.h->basis(s.index(i, 0)), s.h->basis(s.index(0, j))) == s.h->basis(s.index(i, j)));
}

TEST_CASE("primitive truncated # kC2 with x -> -x") {
    auto f = fp(3);
    auto t = group_algebra(f, FiniteGroup::cyclic(2));
    auto n = primitive_truncated(3, f);
    std::vector<Scalar> map(2 * 3 * 3, 0);
    for (std::size_t k = 0; k < 3; ++k) {
        map[(0 * 3 + k) * 3 + k] = 1;
        map[(1 * 3 + k) * 3 + k] = k % 2 == 0 ? 1 : 2;
    }
    const auto act = ActionData::left(t, n, map);
    CHECK(verify_action(act).ok());
    const auto s = smash_product(n, t, act);
    CHECK(s.h->dim() == 6);
    CHECK(verify_hopf(*s.h).ok());
    // embeddings and projections
    for (std::size_t j = 0; j < 2; ++j) {
        Vec e(2, 0);
        e[j] = 1;
        CHECK(mat_vec(*f, s.project_t, mat_vec(*f, s.embed_t, e)) == e);
    }
    // (1 # g)(x # 1) = -x # g
    const Vec prod = s.h->mul(s.h->basis(s.index(0, 1)), s.h->basis(s.index(1, 0)));
    Vec expect(6, 0);
    expect[s.index(1, 1)] = 2;
    CHECK(prod == expect);
}

TEST_CASE("crossed products") {
    auto f = fp(3);
    auto a = AlgebraData::ground(f);
    auto h = group_algebra(f, FiniteGroup::cyclic(2));
    // trivial cocycle: componentwise product
    std::vector<Vec> eps(4, Vec{1});
    const auto k0 = crossed_product_algebra(*a, *h, eps);
    CHECK(k0.k->dim() == 2);
    CHECK(k0.k->mul(k0.section(h->basis(1)), k0.section(h->basis(1))) == k0.section(h->basis(0)));

    // f(g, g) = 2: (1 (x) g)^2 = 2 (x) 1
    std::vector<Vec> twisted{{1}, {1}, {1}, {2}};
    const auto k1 = crossed_product_algebra(*a, *h, twisted);
    CHECK(k1.k->mul(k1.section(h->basis(1)), k1.section(h->basis(1))) == Vec{2, 0});
    CHECK(k1.coinvariant_part(Vec{2, 0}) == Vec{2});
    CHECK_FALSE(k1.coinvariant_part(Vec{0, 1}).has_value());

    // on kC3 a non-cocycle breaks associativity
    auto h3 = group_algebra(f, FiniteGroup::cyclic(3));
    std::vector<Vec> bad(9, Vec{1});
    bad[1 * 3 + 1] = {2};
    try {
        crossed_product_algebra(*a, *h3, bad);
        FAIL("expected NotACocycle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotACocycle);
    }
    // unnormalized values break the unit law
    std::vector<Vec> unnorm(4, Vec{1});
    unnorm[0] = {2};
    CHECK_THROWS_AS(crossed_product_algebra(*a, *h, unnorm), Error);
}
