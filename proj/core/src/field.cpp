#include "hacoh/field.hpp"

#include <numeric>
#include <sstream>

namespace hacoh {

namespace {

constexpr std::int64_t kMaxFieldOrder = 1 << 16;

std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t = t - quot * new_t;
        std::swap(t, new_t);
        r = r - quot * new_r;
        std::swap(r, new_r);
    }
    return mod(t, p);
}

// remainder of a modulo monic b, coefficients mod p, low to high
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::int64_t lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
        }
        a.pop_back();
    }
    return a;
}

bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t c = 0; c < count; ++c) {
            std::vector<std::int64_t> g(d + 1, 0);
            std::int64_t x = c;
            for (int i = 0; i < d; ++i) {
                g[i] = x % p;
                x /= p;
            }
            g[d] = 1;
            auto r = poly_rem(f, g, p);
            bool zero = true;
            for (auto v : r) zero = zero && v == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

FieldSpec FieldSpec::prime(std::int64_t p) {
    FieldSpec s;
    s.kind = FieldKind::Prime;
    s.p = p;
    s.m = 1;
    return s;
}

FieldSpec FieldSpec::prime_power(std::int64_t p, std::vector<std::int64_t> modulus) {
    FieldSpec s;
    s.kind = FieldKind::PrimePower;
    s.p = p;
    s.m = static_cast<int>(modulus.size()) - 1;
    s.modulus = std::move(modulus);
    return s;
}

FieldSpec FieldSpec::rational() {
    FieldSpec s;
    s.kind = FieldKind::Rational;
    s.m = 0;
    return s;
}

std::string FieldSpec::to_string() const {
    switch (kind) {
        case FieldKind::Prime: return "F_" + std::to_string(p);
        case FieldKind::PrimePower: {
            std::int64_t q = 1;
            for (int i = 0; i < m; ++i) q *= p;
            return "F_" + std::to_string(q);
        }
        case FieldKind::Rational: return "Q";
    }
    return "?";
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {}

Field::Ptr Field::make(const FieldSpec& spec) {
    switch (spec.kind) {
        case FieldKind::Prime:
            require(is_prime(spec.p), ErrorCode::InvalidField, std::to_string(spec.p) + " is not prime");
            require(spec.p < kMaxFieldOrder, ErrorCode::InvalidField, "field order exceeds 2^16");
            break;
        case FieldKind::PrimePower: {
            require(is_prime(spec.p), ErrorCode::InvalidField, std::to_string(spec.p) + " is not prime");
            require(spec.m >= 1 && spec.modulus.size() == static_cast<std::size_t>(spec.m) + 1,
                    ErrorCode::InvalidField, "modulus must have m + 1 coefficients");
            require(mod(spec.modulus.back(), spec.p) == 1, ErrorCode::InvalidField, "modulus must be monic");
            std::int64_t q = 1;
            for (int i = 0; i < spec.m; ++i) {
                q *= spec.p;
                require(q <= kMaxFieldOrder, ErrorCode::InvalidField, "field order exceeds 2^16");
            }
            std::vector<std::int64_t> f;
            for (auto c : spec.modulus) f.push_back(mod(c, spec.p));
            require(is_irreducible(f, spec.p), ErrorCode::InvalidField, "modulus is reducible over F_" + std::to_string(spec.p));
            break;
        }
        case FieldKind::Rational: break;
    }
    auto normalized = spec;
    if (normalized.kind == FieldKind::PrimePower)
        for (auto& c : normalized.modulus) c = mod(c, normalized.p);
    if (normalized.kind == FieldKind::PrimePower && normalized.m == 1) {
        // F_p presented by a linear modulus is still F_p
        normalized = FieldSpec::prime(normalized.p);
    }
    std::shared_ptr<Field> f(new Field(normalized));
    if (f->is_finite()) {
        f->build_finite_tables();
    } else {
        f->rat_values_ = {Rational(0), Rational(1)};
        f->rat_index_[Rational(0)] = 0;
        f->rat_index_[Rational(1)] = 1;
    }
    return f;
}

std::int64_t Field::order() const {
    require(is_finite(), ErrorCode::InfiniteField, "the rational field has no finite order");
    return q_;
}

Scalar Field::poly_mul_code(Scalar a, Scalar b) const {
    const std::int64_t p = spec_.p;
    const int m = spec_.m;
    std::vector<std::int64_t> x(m), y(m), prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i) {
        x[i] = a % p;
        a /= p;
        y[i] = b % p;
        b /= p;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    auto r = poly_rem(prod, spec_.modulus, p);
    Scalar code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + (static_cast<std::size_t>(i) < r.size() ? r[i] : 0);
    return code;
}

void Field::build_finite_tables() {
    q_ = 1;
    for (int i = 0; i < spec_.m; ++i) q_ *= spec_.p;
    const std::int64_t n = q_ - 1;
    auto slow_mul = [&](Scalar a, Scalar b) -> Scalar {
        if (spec_.kind == FieldKind::Prime) return (a * b) % spec_.p;
        return poly_mul_code(a, b);
    };
    auto slow_pow = [&](Scalar a, std::int64_t e) {
        Scalar r = 1;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    const auto factors = prime_factors(n);
    generator_ = 1;
    if (n > 1) {
        for (Scalar g = 2; g < q_; ++g) {
            bool primitive = true;
            for (auto r : factors) primitive = primitive && slow_pow(g, n / r) != 1;
            if (primitive) {
                generator_ = g;
                break;
            }
        }
    }
    exp_.assign(n, 1);
    log_.assign(q_, 0);
    Scalar x = 1;
    for (std::int64_t e = 0; e < n; ++e) {
        exp_[e] = x;
        log_[x] = static_cast<std::int32_t>(e);
        x = slow_mul(x, generator_);
    }
    if (spec_.kind == FieldKind::PrimePower) {
        const std::int64_t p = spec_.p;
        auto digit_add = [&](Scalar a, Scalar b, int sign) {
            Scalar out = 0, place = 1;
            for (int i = 0; i < spec_.m; ++i) {
                out += mod(a % p + sign * (b % p), p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            return out;
        };
        neg_table_.resize(q_);
        for (Scalar a = 0; a < q_; ++a) neg_table_[a] = digit_add(0, a, -1);
        if (q_ <= 256) {
            add_table_.resize(q_ * q_);
            for (Scalar a = 0; a < q_; ++a)
                for (Scalar b = 0; b < q_; ++b) add_table_[a * q_ + b] = static_cast<std::int32_t>(digit_add(a, b, 1));
        }
    }
}

Scalar Field::add(Scalar a, Scalar b) const {
    switch (spec_.kind) {
        case FieldKind::Prime: {
            Scalar s = a + b;
            return s >= spec_.p ? s - spec_.p : s;
        }
        case FieldKind::PrimePower: {
            if (!add_table_.empty()) return add_table_[a * q_ + b];
            const std::int64_t p = spec_.p;
            Scalar out = 0, place = 1;
            for (int i = 0; i < spec_.m; ++i) {
                out += ((a % p + b % p) % p) * place;
                a /= p;
                b /= p;
                place *= p;
            }
            return out;
        }
        case FieldKind::Rational: return intern(rational_value(a) + rational_value(b));
    }
    return 0;
}

Scalar Field::neg(Scalar a) const {
    switch (spec_.kind) {
        case FieldKind::Prime: return a == 0 ? 0 : spec_.p - a;
        case FieldKind::PrimePower: return neg_table_[a];
        case FieldKind::Rational: return intern(-rational_value(a));
    }
    return 0;
}

Scalar Field::sub(Scalar a, Scalar b) const {
    if (spec_.kind == FieldKind::Prime) {
        Scalar s = a - b;
        return s < 0 ? s + spec_.p : s;
    }
    return add(a, neg(b));
}

Scalar Field::mul(Scalar a, Scalar b) const {
    switch (spec_.kind) {
        case FieldKind::Prime: return (a * b) % spec_.p;
        case FieldKind::PrimePower: {
            if (a == 0 || b == 0) return 0;
            std::int64_t e = log_[a] + log_[b];
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        case FieldKind::Rational: return intern(rational_value(a) * rational_value(b));
    }
    return 0;
}

Scalar Field::inv(Scalar a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero in " + spec_.to_string());
    switch (spec_.kind) {
        case FieldKind::Prime: return inverse_mod(a, spec_.p);
        case FieldKind::PrimePower: {
            std::int64_t e = log_[a];
            return exp_[e == 0 ? 0 : q_ - 1 - e];
        }
        case FieldKind::Rational: return intern(Rational(1) / rational_value(a));
    }
    return 0;
}

Scalar Field::pow(Scalar a, std::int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Scalar r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Scalar Field::from_int(std::int64_t v) const {
    if (spec_.kind == FieldKind::Rational) return intern(Rational(v));
    return mod(v, spec_.p);
}

Scalar Field::from_rational(const Rational& r) const {
    if (spec_.kind == FieldKind::Rational) return intern(r);
    // reduce numerator and denominator mod p
    const BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    const std::int64_t n = static_cast<std::int64_t>(((num % spec_.p) + spec_.p) % spec_.p);
    const std::int64_t d = static_cast<std::int64_t>(((den % spec_.p) + spec_.p) % spec_.p);
    return div(from_int(n), from_int(d));
}

Scalar Field::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    require(is_finite(), ErrorCode::InfiniteField, "coefficient encoding applies to finite fields");
    require(coeffs.size() <= static_cast<std::size_t>(spec_.m), ErrorCode::ValidationError,
            "too many coefficients for " + spec_.to_string());
    Scalar code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * spec_.p + mod(coeffs[i], spec_.p);
    return code;
}

std::vector<std::int64_t> Field::coeffs(Scalar a) const {
    require(is_finite(), ErrorCode::InfiniteField, "coefficient encoding applies to finite fields");
    std::vector<std::int64_t> c(spec_.m);
    for (int i = 0; i < spec_.m; ++i) {
        c[i] = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

Rational Field::rational_value(Scalar a) const {
    if (spec_.kind != FieldKind::Rational) return Rational(a);
    std::shared_lock lock(rat_mutex_);
    return rat_values_.at(static_cast<std::size_t>(a));
}

Scalar Field::intern(const Rational& r) const {
    {
        std::shared_lock lock(rat_mutex_);
        auto it = rat_index_.find(r);
        if (it != rat_index_.end()) return it->second;
    }
    std::unique_lock lock(rat_mutex_);
    auto it = rat_index_.find(r);
    if (it != rat_index_.end()) return it->second;
    Scalar code = static_cast<Scalar>(rat_values_.size());
    rat_values_.push_back(r);
    rat_index_.emplace(r, code);
    return code;
}

std::vector<BigInt> Field::repr(Scalar a) const {
    switch (spec_.kind) {
        case FieldKind::Prime: return {BigInt(a)};
        case FieldKind::PrimePower: {
            std::vector<BigInt> out;
            for (auto c : coeffs(a)) out.emplace_back(c);
            return out;
        }
        case FieldKind::Rational: {
            auto r = rational_value(a);
            return {boost::multiprecision::numerator(r), boost::multiprecision::denominator(r)};
        }
    }
    return {};
}

Scalar Field::from_repr(const std::vector<BigInt>& r) const {
    switch (spec_.kind) {
        case FieldKind::Prime:
            require(r.size() == 1, ErrorCode::ParseError, "prime-field element must be [residue]");
            return from_int(static_cast<std::int64_t>(((r[0] % spec_.p) + spec_.p) % spec_.p));
        case FieldKind::PrimePower: {
            std::vector<std::int64_t> c;
            for (const auto& v : r) c.push_back(static_cast<std::int64_t>(((v % spec_.p) + spec_.p) % spec_.p));
            return from_coeffs(c);
        }
        case FieldKind::Rational:
            require(r.size() == 1 || r.size() == 2, ErrorCode::ParseError, "rational element must be [num] or [num, den]");
            require(r.size() == 1 || r[1] != 0, ErrorCode::DivisionByZero, "zero denominator");
            return intern(r.size() == 1 ? Rational(r[0]) : Rational(r[0], r[1]));
    }
    return 0;
}

std::string Field::to_string(Scalar a) const {
    switch (spec_.kind) {
        case FieldKind::Prime: return std::to_string(a);
        case FieldKind::PrimePower: {
            auto c = coeffs(a);
            std::string s;
            for (int i = spec_.m - 1; i >= 0; --i) {
                if (c[i] == 0) continue;
                std::string term;
                if (i == 0) term = std::to_string(c[i]);
                else {
                    term = c[i] == 1 ? "" : std::to_string(c[i]);
                    term += i == 1 ? "x" : "x^" + std::to_string(i);
                }
                s += s.empty() ? term : "+" + term;
            }
            return s.empty() ? "0" : s;
        }
        case FieldKind::Rational: {
            std::ostringstream os;
            os << rational_value(a);
            return os.str();
        }
    }
    return "?";
}

Scalar Field::generator() const {
    require(is_finite(), ErrorCode::InfiniteField, "the rational field has no primitive element");
    return generator_;
}

std::int64_t Field::log(Scalar a) const {
    require(is_finite(), ErrorCode::InfiniteField, "discrete log needs a finite field");
    require(a != 0, ErrorCode::DivisionByZero, "log of zero");
    return log_[a];
}

Scalar Field::exp(std::int64_t e) const {
    require(is_finite(), ErrorCode::InfiniteField, "exp needs a finite field");
    const std::int64_t n = q_ - 1;
    return exp_[mod(e, n)];
}

void FieldElement::check_same(const FieldElement& o) const {
    require(field_->spec() == o.field_->spec(), ErrorCode::FieldMismatch,
            field_->spec().to_string() + " vs " + o.field_->spec().to_string());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->div(code_, o.code_)};
}

FieldElement field_ops(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::Add: return a + b;
        case FieldOp::Sub: return a - b;
        case FieldOp::Mul: return a * b;
        case FieldOp::Div: return a / b;
    }
    return a;
}

UnitGroup unit_group(const Field& field) {
    require(field.is_finite(), ErrorCode::InfiniteField, "unit group of Q is not finite");
    UnitGroup u;
    const std::int64_t q = field.order();
    u.generator = field.generator();
    u.discrete_log.assign(q, -1);
    Scalar x = field.one();
    for (std::int64_t e = 0; e < q - 1; ++e) {
        u.discrete_log[x] = e;
        x = field.mul(x, u.generator);
    }
    u.group = FiniteAbelianGroup::cyclic(q - 1);
    return u;
}

PowerClassGroup power_class_group(const Field& field, std::int64_t n) {
    require(field.is_finite(), ErrorCode::InfiniteField, "k^x/(k^x)^n needs a finite field");
    require(n >= 1, ErrorCode::ValidationError, "n must be positive");
    const std::int64_t q = field.order();
    std::vector<char> is_power(q, 0);
    for (Scalar a = 1; a < q; ++a) is_power[field.pow(a, n)] = 1;
    std::int64_t powers = 0;
    for (Scalar a = 1; a < q; ++a) powers += is_power[a];
    const std::int64_t index = (q - 1) / powers;
    PowerClassGroup out;
    out.group = FiniteAbelianGroup::cyclic(index);
    for (std::int64_t i = 0; i < index; ++i) out.representatives.push_back(field.exp(i));
    return out;
}

}  // namespace hacoh
