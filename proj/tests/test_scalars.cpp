#include <doctest.h>

#include "hacoh/field.hpp"
#include "hacoh/linalg.hpp"

using namespace hacoh;

namespace {

Field::Ptr f4() { return Field::make(FieldSpec::prime_power(2, {1, 1, 1})); }

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto f = Field::make(FieldSpec::prime(3));
    FieldElement two(f, f->from_int(2));
    CHECK((two * two).repr() == std::vector<BigInt>{1});
    CHECK((two + two).repr() == std::vector<BigInt>{1});
    CHECK_THROWS_AS(f->inv(0), Error);
    for (Scalar a = 1; a < 3; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
}

TEST_CASE("F4 via x^2 + x + 1") {
    auto f = f4();
    const Scalar x = f->from_coeffs({0, 1});
    CHECK(f->coeffs(f->mul(x, x)) == std::vector<std::int64_t>{1, 1});
    CHECK(f->order() == 4);
    // every nonzero element is a unit and x generates
    for (Scalar a = 1; a < 4; ++a) CHECK(f->mul(a, f->inv(a)) == f->one());
    CHECK(f->pow(x, 3) == f->one());
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(Field::make(FieldSpec::prime_power(2, {1, 0, 1})), Error);
    CHECK_THROWS_AS(Field::make(FieldSpec::prime(6)), Error);
}

TEST_CASE("rationals") {
    auto q = Field::make(FieldSpec::rational());
    FieldElement half(q, q->from_rational(Rational(1, 2)));
    FieldElement third(q, q->from_rational(Rational(1, 3)));
    CHECK((half + third).repr() == std::vector<BigInt>{5, 6});
    CHECK((half / third).repr() == std::vector<BigInt>{3, 2});
    CHECK_THROWS_AS(unit_group(*q), Error);
    CHECK_THROWS_AS(q->order(), Error);
}

TEST_CASE("mixed fields are rejected") {
    auto a = Field::make(FieldSpec::prime(3));
    auto b = Field::make(FieldSpec::prime(5));
    CHECK_THROWS_AS(field_ops(FieldElement(a, 1), FieldElement(b, 1), FieldOp::Add), Error);
}

TEST_CASE("unit groups") {
    CHECK(unit_group(*Field::make(FieldSpec::prime(5))).group.invariant_factors() == std::vector<std::int64_t>{4});
    CHECK(unit_group(*f4()).group.invariant_factors() == std::vector<std::int64_t>{3});
    CHECK(unit_group(*Field::make(FieldSpec::prime(2))).group.is_trivial());
    auto f7 = Field::make(FieldSpec::prime(7));
    const auto u = unit_group(*f7);
    for (Scalar a = 1; a < 7; ++a) CHECK(f7->pow(u.generator, u.discrete_log[a]) == a);
}

TEST_CASE("power class groups") {
    CHECK(power_class_group(*Field::make(FieldSpec::prime(5)), 2).group.order() == 2);
    CHECK(power_class_group(*Field::make(FieldSpec::prime(7)), 3).group.order() == 3);
    CHECK(power_class_group(*Field::make(FieldSpec::prime(7)), 1).group.is_trivial());
    CHECK(power_class_group(*Field::make(FieldSpec::prime(5)), 3).group.is_trivial());
}

TEST_CASE("invariant factor normalisation") {
    CHECK(FiniteAbelianGroup::from_cyclic_orders({6, 4}).invariant_factors() == std::vector<std::int64_t>{2, 12});
    CHECK(FiniteAbelianGroup::from_cyclic_orders({1, 1}).is_trivial());
    CHECK(FiniteAbelianGroup::from_cyclic_orders({2, 2}).to_string() == "Z/2 x Z/2");
}

TEST_CASE("smith normal form") {
    const auto a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    const auto s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<BigInt>{1, 6});
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.u * s.u_inv == IntMatrix::identity(2));
    CHECK(s.v * s.v_inv == IntMatrix::identity(2));

    const auto b = IntMatrix::from_rows({{4, 6, 2}, {2, 4, 8}, {6, 10, 10}});
    const auto t = smith_normal_form(b);
    CHECK(t.u * b * t.v == t.d);
    CHECK(t.rank == 2);
    CHECK(t.diagonal() == std::vector<BigInt>{2, 2});
    CHECK(b.determinant() == 0);
}

TEST_CASE("integer kernel and solve") {
    const auto a = IntMatrix::from_rows({{1, 2, 3}});
    const auto ker = integer_kernel(a);
    CHECK(ker.size() == 2);
    for (const auto& k : ker) CHECK(a * k == std::vector<BigInt>{0});
    CHECK(solve_integer(IntMatrix::from_rows({{2}}), {BigInt(3)}) == std::nullopt);
    CHECK(solve_integer(IntMatrix::from_rows({{2, 3}}), {BigInt(1)}).has_value());
}

TEST_CASE("subquotient of (Z/2)^2 by the diagonal") {
    std::vector<std::vector<BigInt>> rel{{2, 0}, {0, 2}};
    std::vector<std::vector<BigInt>> z{{1, 0}, {0, 1}};
    std::vector<std::vector<BigInt>> b{{1, 1}};
    const auto q = subquotient(2, rel, z, b);
    CHECK(q.group().invariant_factors() == std::vector<std::int64_t>{2});
    CHECK(q.is_zero({1, 1}));
    CHECK_FALSE(q.is_zero({1, 0}));
    CHECK(q.coordinates(q.lift({1})) == std::vector<std::int64_t>{1});
}

TEST_CASE("explicit groups") {
    // Z/2 x Z/4 as pairs
    auto op = [](std::size_t a, std::size_t b) {
        return ((a / 4 + b / 4) % 2) * 4 + (a % 4 + b % 4) % 4;
    };
    ExplicitAbelianGroup g(8, 0, op);
    CHECK(g.group().invariant_factors() == std::vector<std::int64_t>{2, 4});
    for (std::size_t a = 0; a < 8; ++a) {
        CHECK(g.element_of(g.coordinates(a)) == a);
        for (std::size_t b = 0; b < 8; ++b) {
            auto ca = g.coordinates(a), cb = g.coordinates(b);
            for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
            CHECK(g.element_of(ca) == op(a, b));
        }
    }
    ExplicitAbelianGroup c6(6, 0, [](std::size_t a, std::size_t b) { return (a + b) % 6; });
    CHECK(c6.group().invariant_factors() == std::vector<std::int64_t>{6});
    CHECK(c6.power(1, 6) == 0);
}

TEST_CASE("field linear algebra") {
    auto f = Field::make(FieldSpec::prime(5));
    FieldMatrix a(2, 3);
    a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
    a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 2;
    CHECK(rank(*f, a) == 2);
    const auto ker = kernel_basis(*f, a);
    REQUIRE(ker.size() == 1);
    CHECK(mat_vec(*f, a, ker[0]) == FieldVector{0, 0});
    const auto x = solve_linear(*f, a, {1, 0});
    REQUIRE(x.has_value());
    CHECK(mat_vec(*f, a, *x) == FieldVector{1, 0});
}
