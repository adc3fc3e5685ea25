#include "hacoh/hopf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hacoh {

// ---------------------------------------------------------------------------
// CheckReport

bool CheckReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.passed; });
}

const CheckItem* CheckReport::find(const std::string& name) const {
    for (const auto& c : items)
        if (c.name == name) return &c;
    return nullptr;
}

std::string CheckReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : items) {
        os << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.passed && !c.witness.empty()) {
            os << " at (";
            for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? ", " : "") << c.witness[i];
            os << ")";
        }
        if (!c.detail.empty()) os << " " << c.detail;
        os << "\n";
    }
    return os.str();
}

void CheckReport::add(std::string name, std::optional<std::vector<std::size_t>> failure, std::string detail) {
    CheckItem item;
    item.name = std::move(name);
    item.passed = !failure.has_value();
    if (failure) item.witness = std::move(*failure);
    item.detail = std::move(detail);
    items.push_back(std::move(item));
}

namespace {

using Failure = std::optional<std::vector<std::size_t>>;

std::size_t cube_size(std::size_t n) { return n * n * n; }

std::vector<SparseVec> sparse_products(std::size_t n, const std::vector<Scalar>& mult) {
    std::vector<SparseVec> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (Scalar c = mult[(i * n + j) * n + k]; c != 0)
                    out[i * n + j].push_back({static_cast<std::uint32_t>(k), c});
    return out;
}

Vec dense_mul(const Field& f, std::size_t n, const std::vector<SparseVec>& prods, const Vec& a, const Vec& b) {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            const Scalar ab = f.mul(a[i], b[j]);
            for (const auto& t : prods[i * n + j]) out[t.index] = f.add(out[t.index], f.mul(ab, t.coeff));
        }
    }
    return out;
}

std::optional<std::size_t> basis_index(const Vec& v) {
    std::optional<std::size_t> idx;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (idx || v[i] != 1) return std::nullopt;
        idx = i;
    }
    return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraData

AlgebraData::Ptr AlgebraData::make(Field::Ptr field, Tables tables) {
    require(field != nullptr, ErrorCode::ValidationError, "algebra without a field");
    const std::size_t n = tables.unit.size();
    require(n >= 1, ErrorCode::DimensionMismatch, "algebra of dimension zero");
    require(tables.mult.size() == cube_size(n), ErrorCode::DimensionMismatch, "multiplication tensor size mismatch");
    if (tables.labels.empty())
        for (std::size_t i = 0; i < n; ++i) tables.labels.push_back("a" + std::to_string(i));
    require(tables.labels.size() == n, ErrorCode::DimensionMismatch, "label count mismatch");
    auto* a = new AlgebraData();
    Ptr out(a);
    a->field_ = std::move(field);
    a->n_ = n;
    a->products_ = sparse_products(n, tables.mult);
    a->commutative_ = true;
    for (std::size_t i = 0; i < n && a->commutative_; ++i)
        for (std::size_t j = 0; j < n && a->commutative_; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (tables.mult[(i * n + j) * n + k] != tables.mult[(j * n + i) * n + k]) {
                    a->commutative_ = false;
                    break;
                }
    a->t_ = std::move(tables);
    return out;
}

AlgebraData::Ptr AlgebraData::ground(Field::Ptr field) {
    Tables t;
    t.name = field->spec().to_string();
    t.labels = {"1"};
    t.mult = {1};
    t.unit = {1};
    return make(std::move(field), std::move(t));
}

Vec AlgebraData::mul(const Vec& a, const Vec& b) const {
    if (n_ == 1) return {field_->mul(a[0], b[0])};
    return dense_mul(*field_, n_, products_, a, b);
}

Vec AlgebraData::add(const Vec& a, const Vec& b) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = field_->add(a[i], b[i]);
    return out;
}

Vec AlgebraData::scale(Scalar c, const Vec& a) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = field_->mul(c, a[i]);
    return out;
}

std::optional<Vec> AlgebraData::inverse(const Vec& a) const {
    if (n_ == 1) {
        if (a[0] == 0) return std::nullopt;
        return Vec{field_->inv(a[0])};
    }
    FieldMatrix left(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vec e(n_, 0);
        e[j] = 1;
        const Vec col = mul(a, e);
        for (std::size_t i = 0; i < n_; ++i) left(i, j) = col[i];
    }
    auto x = solve_linear(*field_, left, t_.unit);
    if (!x || mul(*x, a) != t_.unit) return std::nullopt;
    return x;
}

std::int64_t AlgebraData::element_count() const {
    const std::int64_t q = field_->order();
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        require(total <= (std::int64_t{1} << 40) / q, ErrorCode::EnumerationInfeasible, "algebra too large to enumerate");
        total *= q;
    }
    return total;
}

std::int64_t AlgebraData::encode(const Vec& a) const {
    const std::int64_t q = field_->order();
    std::int64_t code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * q + a[i];
    return code;
}

Vec AlgebraData::decode(std::int64_t code) const {
    const std::int64_t q = field_->order();
    Vec a(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        a[i] = code % q;
        code /= q;
    }
    return a;
}

std::vector<std::int64_t> AlgebraData::unit_codes(std::int64_t limit) const {
    const std::int64_t total = element_count();
    require(total <= limit, ErrorCode::EnumerationInfeasible, "coefficient algebra has too many elements to enumerate");
    std::vector<std::int64_t> out;
    for (std::int64_t c = 0; c < total; ++c)
        if (inverse(decode(c))) out.push_back(c);
    return out;
}

std::string AlgebraData::format(const Vec& a) const {
    if (n_ == 1) return field_->to_string(a[0]);
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += field_->to_string(a[i]) + "*" + t_.labels[i];
    }
    return s.empty() ? "0" : s;
}

CheckReport verify_algebra(const AlgebraData& a) {
    CheckReport r;
    const std::size_t n = a.dim();
    auto e = [n](std::size_t i) {
        Vec v(n, 0);
        v[i] = 1;
        return v;
    };
    Failure assoc;
    for (std::size_t i = 0; i < n && !assoc; ++i)
        for (std::size_t j = 0; j < n && !assoc; ++j)
            for (std::size_t k = 0; k < n && !assoc; ++k)
                if (a.mul(a.mul(e(i), e(j)), e(k)) != a.mul(e(i), a.mul(e(j), e(k)))) assoc = {{i, j, k}};
    r.add("associativity", assoc);
    Failure unit;
    for (std::size_t i = 0; i < n && !unit; ++i)
        if (a.mul(a.one(), e(i)) != e(i) || a.mul(e(i), a.one()) != e(i)) unit = {{i}};
    r.add("unit", unit);
    return r;
}

// ---------------------------------------------------------------------------
// HopfData

HopfData::Ptr HopfData::make(Field::Ptr field, Tables tables) {
    require(field != nullptr, ErrorCode::ValidationError, "Hopf algebra without a field");
    const std::size_t n = tables.unit.size();
    require(n >= 1 && n <= kMaxDim, ErrorCode::DimensionMismatch,
            "Hopf algebra dimension must be between 1 and " + std::to_string(kMaxDim));
    require(tables.mult.size() == cube_size(n), ErrorCode::DimensionMismatch, "multiplication tensor size mismatch");
    require(tables.comult.size() == cube_size(n), ErrorCode::DimensionMismatch, "comultiplication tensor size mismatch");
    require(tables.counit.size() == n, ErrorCode::DimensionMismatch, "counit length mismatch");
    if (tables.antipode)
        require(tables.antipode->rows() == n && tables.antipode->cols() == n, ErrorCode::DimensionMismatch,
                "antipode matrix shape mismatch");
    if (tables.labels.empty())
        for (std::size_t i = 0; i < n; ++i) tables.labels.push_back("b" + std::to_string(i));
    require(tables.labels.size() == n, ErrorCode::DimensionMismatch, "label count mismatch");

    auto* h = new HopfData();
    Ptr out(h);
    h->field_ = std::move(field);
    h->n_ = n;
    h->products_ = sparse_products(n, tables.mult);
    h->coproducts_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (Scalar c = tables.comult[(i * n + j) * n + k]; c != 0)
                    h->coproducts_[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), c});
    if (tables.antipode) {
        h->antipode_cols_.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (Scalar c = (*tables.antipode)(i, j); c != 0)
                    h->antipode_cols_[j].push_back({static_cast<std::uint32_t>(i), c});
    }
    h->unit_index_ = basis_index(tables.unit);
    h->group_like_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = h->coproducts_[i];
        h->group_like_[i] = c.size() == 1 && c[0].left == i && c[0].right == i && c[0].coeff == 1 && tables.counit[i] == 1;
    }
    if (!tables.cocommutative_flag) {
        bool coc = true;
        for (std::size_t i = 0; i < n && coc; ++i)
            for (std::size_t j = 0; j < n && coc; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (tables.comult[(i * n + j) * n + k] != tables.comult[(i * n + k) * n + j]) {
                        coc = false;
                        break;
                    }
        tables.cocommutative_flag = coc;
    }
    if (!tables.commutative_flag) {
        bool com = true;
        for (std::size_t i = 0; i < n && com; ++i)
            for (std::size_t j = 0; j < n && com; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (tables.mult[(i * n + j) * n + k] != tables.mult[(j * n + i) * n + k]) {
                        com = false;
                        break;
                    }
        tables.commutative_flag = com;
    }
    h->t_ = std::move(tables);
    return out;
}

const FieldMatrix& HopfData::antipode() const {
    require(has_antipode(), ErrorCode::ValidationError, name() + " has no antipode");
    return *t_.antipode;
}

const SparseVec& HopfData::antipode_of(std::size_t i) const {
    require(has_antipode(), ErrorCode::ValidationError, name() + " has no antipode");
    return antipode_cols_[i];
}

std::size_t HopfData::unit_basis() const {
    require(unit_index_.has_value(), ErrorCode::UnitNotBasis, "the unit of " + name() + " is not a basis vector");
    return *unit_index_;
}

bool HopfData::all_group_like() const {
    return std::all_of(group_like_.begin(), group_like_.end(), [](bool b) { return b; });
}

Vec HopfData::mul(const Vec& a, const Vec& b) const { return dense_mul(*field_, n_, products_, a, b); }

Vec HopfData::basis(std::size_t i) const {
    Vec v(n_, 0);
    v[i] = 1;
    return v;
}

Vec HopfData::apply_antipode(const Vec& a) const {
    Vec out(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
        if (a[j] == 0) continue;
        for (const auto& t : antipode_of(j)) out[t.index] = field_->add(out[t.index], field_->mul(a[j], t.coeff));
    }
    return out;
}

Scalar HopfData::counit_of(const Vec& a) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (a[i] != 0) s = field_->add(s, field_->mul(a[i], t_.counit[i]));
    return s;
}

HopfData::Ptr HopfData::with_antipode(std::optional<FieldMatrix> s) const {
    Tables t = t_;
    t.antipode = std::move(s);
    return make(field_, std::move(t));
}

AlgebraData::Ptr HopfData::algebra() const {
    AlgebraData::Tables t;
    t.name = t_.name;
    t.labels = t_.labels;
    t.mult = t_.mult;
    t.unit = t_.unit;
    return AlgebraData::make(field_, std::move(t));
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

// Dense element of H (x) H, index j * n + k.
Vec coproduct_dense(const HopfData& h, std::size_t i) {
    const std::size_t n = h.dim();
    Vec out(n * n, 0);
    for (const auto& t : h.coproduct(i)) out[t.left * n + t.right] = t.coeff;
    return out;
}

Vec tensor_mul(const HopfData& h, const Vec& x, const Vec& y) {
    const auto& f = h.k();
    const std::size_t n = h.dim();
    Vec out(n * n, 0);
    for (std::size_t a = 0; a < n * n; ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < n * n; ++b) {
            if (y[b] == 0) continue;
            const Scalar c = f.mul(x[a], y[b]);
            for (const auto& l : h.product(a / n, b / n))
                for (const auto& r : h.product(a % n, b % n)) {
                    auto& slot = out[l.index * n + r.index];
                    slot = f.add(slot, f.mul(c, f.mul(l.coeff, r.coeff)));
                }
        }
    }
    return out;
}

// (S * id)(x_i) when left, (id * S)(x_i) otherwise.
Vec antipode_convolution(const HopfData& h, std::size_t i, bool left) {
    const auto& f = h.k();
    Vec out(h.dim(), 0);
    for (const auto& t : h.coproduct(i)) {
        const Vec prod = left ? h.mul(h.apply_antipode(h.basis(t.left)), h.basis(t.right))
                              : h.mul(h.basis(t.left), h.apply_antipode(h.basis(t.right)));
        for (std::size_t k = 0; k < h.dim(); ++k) out[k] = f.add(out[k], f.mul(t.coeff, prod[k]));
    }
    return out;
}

}  // namespace

CheckReport verify_hopf(const HopfData& h) {
    const auto& f = h.k();
    const std::size_t n = h.dim();
    const auto& t = h.tables();
    CheckReport r;

    Failure assoc;
    for (std::size_t i = 0; i < n && !assoc; ++i)
        for (std::size_t j = 0; j < n && !assoc; ++j)
            for (std::size_t k = 0; k < n && !assoc; ++k)
                if (h.mul(h.mul(h.basis(i), h.basis(j)), h.basis(k)) != h.mul(h.basis(i), h.mul(h.basis(j), h.basis(k))))
                    assoc = {{i, j, k}};
    r.add("associativity", assoc);

    Failure unit;
    for (std::size_t i = 0; i < n && !unit; ++i)
        if (h.mul(t.unit, h.basis(i)) != h.basis(i) || h.mul(h.basis(i), t.unit) != h.basis(i)) unit = {{i}};
    r.add("unit", unit);

    Failure coassoc;
    for (std::size_t i = 0; i < n && !coassoc; ++i) {
        Vec lhs(n * n * n, 0), rhs(n * n * n, 0);
        for (const auto& c : h.coproduct(i)) {
            for (const auto& d : h.coproduct(c.left)) {
                auto& s = lhs[(d.left * n + d.right) * n + c.right];
                s = f.add(s, f.mul(c.coeff, d.coeff));
            }
            for (const auto& d : h.coproduct(c.right)) {
                auto& s = rhs[(c.left * n + d.left) * n + d.right];
                s = f.add(s, f.mul(c.coeff, d.coeff));
            }
        }
        if (lhs != rhs) coassoc = {{i}};
    }
    r.add("coassociativity", coassoc);

    Failure counit;
    for (std::size_t i = 0; i < n && !counit; ++i) {
        Vec left(n, 0), right(n, 0);
        for (const auto& c : h.coproduct(i)) {
            left[c.right] = f.add(left[c.right], f.mul(c.coeff, t.counit[c.left]));
            right[c.left] = f.add(right[c.left], f.mul(c.coeff, t.counit[c.right]));
        }
        if (left != h.basis(i) || right != h.basis(i)) counit = {{i}};
    }
    r.add("counit", counit);

    Failure delta_mult;
    for (std::size_t i = 0; i < n && !delta_mult; ++i)
        for (std::size_t j = 0; j < n && !delta_mult; ++j) {
            Vec lhs(n * n, 0);
            for (const auto& p : h.product(i, j)) {
                const Vec d = coproduct_dense(h, p.index);
                for (std::size_t a = 0; a < n * n; ++a) lhs[a] = f.add(lhs[a], f.mul(p.coeff, d[a]));
            }
            if (lhs != tensor_mul(h, coproduct_dense(h, i), coproduct_dense(h, j))) delta_mult = {{i, j}};
        }
    r.add("comultiplication_multiplicative", delta_mult);

    {
        Vec d1(n * n, 0), expect(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (t.unit[i] == 0) continue;
            const Vec d = coproduct_dense(h, i);
            for (std::size_t a = 0; a < n * n; ++a) d1[a] = f.add(d1[a], f.mul(t.unit[i], d[a]));
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) expect[a * n + b] = f.mul(t.unit[a], t.unit[b]);
        r.add("comultiplication_unit", d1 == expect ? Failure{} : Failure{std::vector<std::size_t>{}});
    }

    Failure eps_mult;
    for (std::size_t i = 0; i < n && !eps_mult; ++i)
        for (std::size_t j = 0; j < n && !eps_mult; ++j)
            if (h.counit_of(h.mul(h.basis(i), h.basis(j))) != f.mul(t.counit[i], t.counit[j])) eps_mult = {{i, j}};
    r.add("counit_multiplicative", eps_mult);
    r.add("counit_unit", h.counit_of(t.unit) == f.one() ? Failure{} : Failure{std::vector<std::size_t>{}});

    if (h.has_antipode()) {
        for (bool left : {true, false}) {
            Failure anti;
            for (std::size_t i = 0; i < n && !anti; ++i) {
                Vec expect(n, 0);
                for (std::size_t k = 0; k < n; ++k) expect[k] = f.mul(t.counit[i], t.unit[k]);
                if (antipode_convolution(h, i, left) != expect) anti = {{i}};
            }
            r.add(left ? "antipode_left" : "antipode_right", anti);
        }
    } else {
        r.add("antipode_left", Failure{std::vector<std::size_t>{}}, "no antipode");
        r.add("antipode_right", Failure{std::vector<std::size_t>{}}, "no antipode");
    }

    {
        Failure coc;
        for (std::size_t i = 0; i < n && !coc; ++i)
            for (std::size_t j = 0; j < n && !coc; ++j)
                for (std::size_t k = 0; k < n && !coc; ++k)
                    if (t.comult[(i * n + j) * n + k] != t.comult[(i * n + k) * n + j]) coc = {{i, j, k}};
        const bool actual = !coc;
        r.add("cocommutative_flag", actual == h.is_cocommutative() ? Failure{} : Failure{coc.value_or(std::vector<std::size_t>{})},
              actual == h.is_cocommutative() ? "" : "flag disagrees with the comultiplication");
    }
    {
        Failure com;
        for (std::size_t i = 0; i < n && !com; ++i)
            for (std::size_t j = 0; j < n && !com; ++j)
                for (std::size_t k = 0; k < n && !com; ++k)
                    if (t.mult[(i * n + j) * n + k] != t.mult[(j * n + i) * n + k]) com = {{i, j, k}};
        const bool actual = !com;
        r.add("commutative_flag", actual == h.is_commutative() ? Failure{} : Failure{com.value_or(std::vector<std::size_t>{})},
              actual == h.is_commutative() ? "" : "flag disagrees with the multiplication");
    }

    if (h.is_cocommutative() && h.has_antipode()) {
        Failure inv;
        for (std::size_t i = 0; i < n && !inv; ++i)
            if (h.apply_antipode(h.apply_antipode(h.basis(i))) != h.basis(i)) inv = {{i}};
        r.add("antipode_involutive", inv);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Constructors

HopfData::Ptr group_algebra(Field::Ptr field, const FiniteGroup& g) {
    const std::size_t n = g.order();
    HopfData::Tables t;
    t.name = "k" + g.name();
    t.labels = g.labels();
    t.mult.assign(cube_size(n), 0);
    t.comult.assign(cube_size(n), 0);
    t.unit.assign(n, 0);
    t.unit[g.identity()] = 1;
    t.counit.assign(n, 1);
    FieldMatrix s(n, n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t.mult[(a * n + b) * n + g.mul(a, b)] = 1;
        t.comult[(a * n + a) * n + a] = 1;
        s(g.inverse(a), a) = 1;
    }
    t.antipode = std::move(s);
    return HopfData::make(std::move(field), std::move(t));
}

HopfData::Ptr primitive_truncated(std::int64_t p, Field::Ptr field) {
    require(field->characteristic() == p, ErrorCode::CharMismatch,
            "k[x]/(x^" + std::to_string(p) + ") with x primitive needs characteristic " + std::to_string(p) + ", field has " +
                std::to_string(field->characteristic()));
    const auto n = static_cast<std::size_t>(p);
    require(n <= HopfData::kMaxDim, ErrorCode::DimensionMismatch, "truncation degree exceeds the supported dimension");
    const Field& f = *field;
    HopfData::Tables t;
    t.name = "k[x]/(x^" + std::to_string(p) + ")";
    for (std::size_t k = 0; k < n; ++k) t.labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
    t.mult.assign(cube_size(n), 0);
    t.comult.assign(cube_size(n), 0);
    t.unit.assign(n, 0);
    t.unit[0] = 1;
    t.counit.assign(n, 0);
    t.counit[0] = 1;
    FieldMatrix s(n, n, 0);
    // binomials mod p by Pascal's rule
    std::vector<std::vector<Scalar>> binom(n, std::vector<Scalar>(n, 0));
    for (std::size_t k = 0; k < n; ++k) {
        binom[k][0] = binom[k][k] = 1;
        for (std::size_t i = 1; i < k; ++i) binom[k][i] = f.add(binom[k - 1][i - 1], binom[k - 1][i]);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; a + b < n; ++b) t.mult[(a * n + b) * n + a + b] = 1;
        for (std::size_t i = 0; i <= a; ++i) t.comult[(a * n + i) * n + (a - i)] = binom[a][i];
        s(a, a) = a % 2 == 0 ? f.one() : f.neg(f.one());
    }
    t.antipode = std::move(s);
    return HopfData::make(std::move(field), std::move(t));
}

HopfData::Ptr tensor_hopf(const HopfData& a, const HopfData& b) {
    require(a.k().spec() == b.k().spec(), ErrorCode::FieldMismatch, "tensor product of Hopf algebras over different fields");
    const Field& f = a.k();
    const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
    require(n <= HopfData::kMaxDim, ErrorCode::DimensionMismatch, "tensor product exceeds the supported dimension");
    HopfData::Tables t;
    t.name = a.name() + "⊗" + b.name();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) t.labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
    t.mult.assign(cube_size(n), 0);
    t.comult.assign(cube_size(n), 0);
    t.unit.assign(n, 0);
    t.counit.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t i = x / nb, j = x % nb;
        t.unit[x] = f.mul(a.tables().unit[i], b.tables().unit[j]);
        t.counit[x] = f.mul(a.counit(i), b.counit(j));
        for (std::size_t y = 0; y < n; ++y)
            for (const auto& l : a.product(i, y / nb))
                for (const auto& r : b.product(j, y % nb))
                    t.mult[(x * n + y) * n + l.index * nb + r.index] = f.mul(l.coeff, r.coeff);
        for (const auto& l : a.coproduct(i))
            for (const auto& r : b.coproduct(j)) {
                auto& s = t.comult[(x * n + l.left * nb + r.left) * n + l.right * nb + r.right];
                s = f.add(s, f.mul(l.coeff, r.coeff));
            }
    }
    if (a.has_antipode() && b.has_antipode()) {
        FieldMatrix s(n, n, 0);
        for (std::size_t x = 0; x < n; ++x)
            for (const auto& l : a.antipode_of(x / nb))
                for (const auto& r : b.antipode_of(x % nb)) s(l.index * nb + r.index, x) = f.mul(l.coeff, r.coeff);
        t.antipode = std::move(s);
    }
    return HopfData::make(a.field(), std::move(t));
}

std::optional<FieldMatrix> antipode_from_bialgebra(const HopfData& b) {
    const Field& f = b.k();
    const std::size_t n = b.dim();
    // unknown S(m, j) sits at column j * n + m; equation (i, l) is the x_l-coefficient of (S * id)(x_i)
    FieldMatrix sys(n * n, n * n, 0);
    FieldVector rhs(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) rhs[i * n + l] = f.mul(b.counit(i), b.tables().unit[l]);
        for (const auto& c : b.coproduct(i))
            for (std::size_t m = 0; m < n; ++m)
                for (const auto& p : b.product(m, c.right)) {
                    auto& e = sys(i * n + p.index, c.left * n + m);
                    e = f.add(e, f.mul(c.coeff, p.coeff));
                }
    }
    const auto sol = solve_linear(f, sys, rhs);
    if (!sol) return std::nullopt;
    FieldMatrix s(n, n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t m = 0; m < n; ++m) s(m, j) = (*sol)[j * n + m];
    const auto h = b.with_antipode(s);
    for (std::size_t i = 0; i < n; ++i) {
        Vec expect(n, 0);
        for (std::size_t k = 0; k < n; ++k) expect[k] = f.mul(b.counit(i), b.tables().unit[k]);
        if (antipode_convolution(*h, i, false) != expect) return std::nullopt;
    }
    return s;
}

bool is_basis_isomorphism(const HopfData& a, const HopfData& b, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.dim();
    if (b.dim() != n || perm.size() != n || !(a.k().spec() == b.k().spec())) return false;
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) return false;
        seen[p] = true;
    }
    const auto& ta = a.tables();
    const auto& tb = b.tables();
    for (std::size_t i = 0; i < n; ++i) {
        if (ta.unit[i] != tb.unit[perm[i]] || ta.counit[i] != tb.counit[perm[i]]) return false;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (ta.mult[(i * n + j) * n + k] != tb.mult[(perm[i] * n + perm[j]) * n + perm[k]]) return false;
                if (ta.comult[(i * n + j) * n + k] != tb.comult[(perm[i] * n + perm[j]) * n + perm[k]]) return false;
            }
    }
    if (a.has_antipode() && b.has_antipode())
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a.antipode()(i, j) != b.antipode()(perm[i], perm[j])) return false;
    return true;
}

std::optional<std::vector<std::size_t>> find_basis_isomorphism(const HopfData& a, const HopfData& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n || !(a.k().spec() == b.k().spec())) return std::nullopt;
    const auto& ta = a.tables();
    const auto& tb = b.tables();
    auto signature = [n](const HopfData& h, std::size_t i) {
        const auto& t = h.tables();
        std::vector<Scalar> s{t.unit[i], t.counit[i], static_cast<Scalar>(h.coproduct(i).size()),
                              static_cast<Scalar>(h.product(i, i).size())};
        for (std::size_t k = 0; k < n; ++k) s.push_back(t.mult[(i * n + i) * n + k] != 0 && k == i);
        return s;
    };
    std::vector<std::size_t> perm(n, n);
    std::vector<bool> used(n, false);
    std::vector<std::size_t> assigned;
    // consistency of every structure constant whose three indices are already assigned
    auto consistent = [&](std::size_t i) {
        for (std::size_t x : assigned)
            for (std::size_t y : assigned) {
                if (x != i && y != i) continue;
                for (std::size_t z : assigned) {
                    std::size_t idx_a[3][3] = {{x, y, z}, {x, z, y}, {z, x, y}};
                    for (auto& ix : idx_a) {
                        const std::size_t p = ix[0], q = ix[1], r = ix[2];
                        if (ta.mult[(p * n + q) * n + r] != tb.mult[(perm[p] * n + perm[q]) * n + perm[r]]) return false;
                        if (ta.comult[(p * n + q) * n + r] != tb.comult[(perm[p] * n + perm[q]) * n + perm[r]]) return false;
                    }
                }
            }
        return true;
    };
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == n) return is_basis_isomorphism(a, b, perm);
        const auto sig = signature(a, i);
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c] || signature(b, c) != sig) continue;
            perm[i] = c;
            used[c] = true;
            assigned.push_back(i);
            if (consistent(i) && search(i + 1)) return true;
            assigned.pop_back();
            used[c] = false;
            perm[i] = n;
        }
        return false;
    };
    if (search(0)) return perm;
    return std::nullopt;
}

FiniteGroup extract_group(const HopfData& h) {
    require(h.all_group_like(), ErrorCode::NotGroupAlgebra, h.name() + " has a basis vector that is not group-like");
    require(h.unit_index().has_value(), ErrorCode::NotGroupAlgebra, "the unit of " + h.name() + " is not a basis vector");
    const std::size_t n = h.dim();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& p = h.product(i, j);
            require(p.size() == 1 && p[0].coeff == 1, ErrorCode::NotGroupAlgebra,
                    "product of basis vectors " + std::to_string(i) + ", " + std::to_string(j) + " is not a basis vector");
            table[i][j] = p[0].index;
        }
    try {
        return FiniteGroup::from_table(std::move(table), h.labels(), h.name());
    } catch (const Error& e) {
        raise(ErrorCode::NotGroupAlgebra, e.what());
    }
}

}  // namespace hacoh
