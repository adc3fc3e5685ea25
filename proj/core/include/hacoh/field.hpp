#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hacoh/abelian.hpp"
#include "hacoh/error.hpp"

namespace hacoh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raw field element code. Finite fields use the base-p digit encoding of the
/// residue polynomial (c_0 + c_1 p + ...); the rational field uses an interned index.
/// Codes are canonical: two elements of one field are equal iff their codes are.
using Scalar = std::int64_t;

enum class FieldKind { Prime, PrimePower, Rational };

struct FieldSpec {
    FieldKind kind = FieldKind::Prime;
    std::int64_t p = 0;
    int m = 1;
    /// Monic modulus, coefficients low to high (size m + 1). Empty for prime and rational kinds.
    std::vector<std::int64_t> modulus;

    static FieldSpec prime(std::int64_t p);
    static FieldSpec prime_power(std::int64_t p, std::vector<std::int64_t> modulus);
    static FieldSpec rational();

    bool is_finite() const noexcept { return kind != FieldKind::Rational; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Exact arithmetic on the codes of one field. Immutable once built; safe to share across threads.
class Field {
public:
    using Ptr = std::shared_ptr<const Field>;

    /// Validates the spec (primality, irreducibility of the modulus) and builds lookup tables.
    static Ptr make(const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_finite() const noexcept { return spec_.is_finite(); }
    std::int64_t characteristic() const noexcept { return spec_.kind == FieldKind::Rational ? 0 : spec_.p; }
    /// Number of elements; throws InfiniteField for the rationals.
    std::int64_t order() const;

    Scalar zero() const noexcept { return 0; }
    Scalar one() const noexcept { return 1; }
    bool is_zero(Scalar a) const noexcept { return a == 0; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, std::int64_t e) const;

    Scalar from_int(std::int64_t v) const;
    Scalar from_rational(const Rational& r) const;
    /// Finite fields only: residue polynomial coefficients (reduced mod p), low to high.
    Scalar from_coeffs(const std::vector<std::int64_t>& coeffs) const;
    std::vector<std::int64_t> coeffs(Scalar a) const;
    Rational rational_value(Scalar a) const;

    /// Canonical serialization: prime [r], prime power [c_0..c_{m-1}], rational [num, den].
    std::vector<BigInt> repr(Scalar a) const;
    Scalar from_repr(const std::vector<BigInt>& r) const;
    std::string to_string(Scalar a) const;

    /// Finite fields: a primitive element and discrete log / exp tables.
    Scalar generator() const;
    std::int64_t log(Scalar a) const;
    Scalar exp(std::int64_t e) const;

private:
    explicit Field(FieldSpec spec);
    void build_finite_tables();
    Scalar poly_mul_code(Scalar a, Scalar b) const;
    Scalar intern(const Rational& r) const;

    FieldSpec spec_;
    std::int64_t q_ = 0;
    Scalar generator_ = 1;
    std::vector<std::int32_t> log_;  // log_[0] unused
    std::vector<Scalar> exp_;        // size q - 1
    std::vector<std::int32_t> add_table_;
    std::vector<Scalar> neg_table_;

    mutable std::shared_mutex rat_mutex_;
    mutable std::vector<Rational> rat_values_;
    mutable std::map<Rational, Scalar> rat_index_;
};

/// Value-semantic element bound to its field.
class FieldElement {
public:
    FieldElement(Field::Ptr field, Scalar code) : field_(std::move(field)), code_(code) {}

    const Field::Ptr& field() const noexcept { return field_; }
    Scalar code() const noexcept { return code_; }
    std::vector<BigInt> repr() const { return field_->repr(code_); }
    std::string to_string() const { return field_->to_string(code_); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_->spec() == b.field_->spec() && a.code_ == b.code_;
    }

private:
    void check_same(const FieldElement& o) const;

    Field::Ptr field_;
    Scalar code_;
};

enum class FieldOp { Add, Sub, Mul, Div };
FieldElement field_ops(const FieldElement& a, const FieldElement& b, FieldOp op);

/// Multiplicative group of a finite field: cyclic of order q - 1.
struct UnitGroup {
    FiniteAbelianGroup group;
    Scalar generator = 1;
    /// discrete_log[code] = e with generator^e = code; -1 for zero.
    std::vector<std::int64_t> discrete_log;
};
UnitGroup unit_group(const Field& field);

/// k^x / (k^x)^n with one coset representative per class (generator powers).
struct PowerClassGroup {
    FiniteAbelianGroup group;
    std::vector<Scalar> representatives;
};
PowerClassGroup power_class_group(const Field& field, std::int64_t n);

}  // namespace hacoh
