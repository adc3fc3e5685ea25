#include "hacoh/bridge.hpp"

#include <map>

namespace hacoh {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t d) {
    const std::int64_t r = a % d;
    return r < 0 ? r + d : r;
}

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::size_t> tuple_of(std::size_t x, std::size_t n, std::size_t q) {
    std::vector<std::size_t> t(q);
    for (std::size_t i = q; i-- > 0;) {
        t[i] = x % n;
        x /= n;
    }
    return t;
}

std::size_t index_of(const std::vector<std::size_t>& t, std::size_t n) {
    std::size_t x = 0;
    for (std::size_t v : t) x = x * n + v;
    return x;
}

/// Tuples of G^q, optionally only those avoiding the identity.
std::vector<std::size_t> tuple_list(const FiniteGroup& g, std::size_t q, bool normalized) {
    std::vector<std::size_t> out;
    const std::size_t n = g.order(), total = ipow(n, q);
    for (std::size_t x = 0; x < total; ++x) {
        const auto t = tuple_of(x, n, q);
        bool ok = true;
        if (normalized)
            for (std::size_t v : t) ok = ok && v != g.identity();
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<BigInt> flatten_on(const GModule& m, const Cochain& c, const std::vector<std::size_t>& tuples) {
    std::vector<BigInt> out;
    out.reserve(tuples.size() * m.rank());
    for (std::size_t x : tuples)
        for (std::size_t j = 0; j < m.rank(); ++j) out.emplace_back(c.values[x][j]);
    return out;
}

Cochain unflatten_on(const GModule& m, std::size_t q, const std::vector<BigInt>& v, const std::vector<std::size_t>& tuples) {
    Cochain c = constant_zero(m, q);
    const auto& d = m.module().invariant_factors();
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < m.rank(); ++j) {
            const BigInt r = v[i * m.rank() + j] % d[j];
            c.values[tuples[i]][j] = mod(static_cast<std::int64_t>(r), d[j]);
        }
    return c;
}

/// Matrix of delta^q restricted to the given tuple lists, generators e_{T, j} as columns.
IntMatrix delta_matrix(const GModule& m, std::size_t q, const std::vector<std::size_t>& src, const std::vector<std::size_t>& dst) {
    const std::size_t r = m.rank();
    IntMatrix d(dst.size() * r, src.size() * r);
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Cochain e = constant_zero(m, q);
            e.values[src[i]][j] = 1;
            const Cochain de = bar_differential(m, e);
            for (std::size_t k = 0; k < dst.size(); ++k)
                for (std::size_t l = 0; l < r; ++l) d(k * r + l, i * r + j) = de.values[dst[k]][l];
        }
    return d;
}

std::vector<std::vector<BigInt>> relations_on(const GModule& m, std::size_t count) {
    const auto& d = m.module().invariant_factors();
    std::vector<std::vector<BigInt>> out;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < d.size(); ++j) {
            std::vector<BigInt> v(count * d.size(), 0);
            v[i * d.size() + j] = d[j];
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// GModule

GModule GModule::make(FiniteGroup g, FiniteAbelianGroup m, std::vector<std::vector<Elem>> action) {
    GModule out;
    out.g_ = std::move(g);
    out.m_ = std::move(m);
    out.action_ = std::move(action);
    const std::size_t n = out.g_.order(), r = out.m_.rank();
    require(out.action_.size() == n, ErrorCode::ActionInvalid, "one action matrix per group element expected");
    const auto& d = out.m_.invariant_factors();
    for (auto& a : out.action_) {
        require(a.size() == r, ErrorCode::ActionInvalid, "action matrix has the wrong number of columns");
        for (std::size_t j = 0; j < r; ++j) {
            require(a[j].size() == r, ErrorCode::ActionInvalid, "action image has the wrong length");
            a[j] = out.reduce(a[j]);
            // d_j e_j = 0 must map to 0
            require(out.scale(d[j], a[j]) == out.zero(), ErrorCode::ActionInvalid, "action is not well defined on the module");
        }
    }
    for (std::size_t j = 0; j < r; ++j) {
        Elem e = out.zero();
        e[j] = 1;
        require(out.act(e, out.g_.identity()) == e, ErrorCode::ActionInvalid, "identity acts nontrivially");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                require(out.act(out.act(e, a), b) == out.act(e, out.g_.mul(a, b)), ErrorCode::ActionInvalid,
                        "right action composition fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    return out;
}

GModule GModule::trivial(FiniteGroup g, FiniteAbelianGroup m) {
    const std::size_t r = m.rank();
    std::vector<Elem> id(r, Elem(r, 0));
    for (std::size_t j = 0; j < r; ++j) id[j][j] = 1;
    std::vector<std::vector<Elem>> action(g.order(), id);
    return make(std::move(g), std::move(m), std::move(action));
}

bool GModule::is_trivial() const {
    for (std::size_t g = 0; g < g_.order(); ++g)
        for (std::size_t j = 0; j < rank(); ++j) {
            Elem e = zero();
            e[j] = 1;
            if (act(e, g) != e) return false;
        }
    return true;
}

GModule::Elem GModule::reduce(Elem a) const {
    const auto& d = m_.invariant_factors();
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = mod(a[j], d[j]);
    return a;
}

GModule::Elem GModule::add(const Elem& a, const Elem& b) const {
    Elem out(rank());
    for (std::size_t j = 0; j < rank(); ++j) out[j] = a[j] + b[j];
    return reduce(std::move(out));
}

GModule::Elem GModule::neg(const Elem& a) const { return scale(-1, a); }

GModule::Elem GModule::scale(std::int64_t k, const Elem& a) const {
    const auto& d = m_.invariant_factors();
    Elem out(rank());
    for (std::size_t j = 0; j < rank(); ++j) out[j] = mod(mod(k, d[j]) * a[j], d[j]);
    return out;
}

GModule::Elem GModule::act(const Elem& a, std::size_t g) const {
    Elem out = zero();
    for (std::size_t j = 0; j < rank(); ++j)
        if (a[j]) out = add(out, scale(a[j], action_[g][j]));
    return out;
}

// ---------------------------------------------------------------------------
// Bar complex

bool Cochain::is_normalized(const FiniteGroup& g) const {
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < values.size(); ++x) {
        const auto t = tuple_of(x, n, q);
        bool hit = false;
        for (std::size_t v : t) hit = hit || v == g.identity();
        if (!hit) continue;
        for (auto c : values[x])
            if (c != 0) return false;
    }
    return true;
}

Cochain constant_zero(const GModule& m, std::size_t q) {
    return {q, std::vector<GModule::Elem>(ipow(m.group().order(), q), m.zero())};
}

Cochain bar_differential(const GModule& m, const Cochain& c) {
    const std::size_t q = c.q;
    if (q > 3) raise(ErrorCode::DegreeUnsupported, "bar differential implemented for degrees 0..3");
    const FiniteGroup& g = m.group();
    const std::size_t n = g.order();
    require(c.values.size() == ipow(n, q), ErrorCode::ShapeMismatch, "cochain has the wrong number of values");
    Cochain out = constant_zero(m, q + 1);
    for (std::size_t x = 0; x < out.values.size(); ++x) {
        const auto t = tuple_of(x, n, q + 1);
        GModule::Elem acc = c.values[index_of({t.begin() + 1, t.end()}, n)];
        for (std::size_t i = 1; i <= q; ++i) {
            std::vector<std::size_t> s;
            for (std::size_t k = 0; k < q + 1; ++k) {
                if (k == i) continue;
                s.push_back(k == i - 1 ? g.mul(t[i - 1], t[i]) : t[k]);
            }
            const auto& v = c.values[index_of(s, n)];
            acc = m.add(acc, i % 2 ? m.neg(v) : v);
        }
        const auto last = m.act(c.values[index_of({t.begin(), t.end() - 1}, n)], t[q]);
        acc = m.add(acc, (q + 1) % 2 ? m.neg(last) : last);
        out.values[x] = std::move(acc);
    }
    return out;
}

GroupCohomology::GroupCohomology(const GModule& m, std::size_t q) : m_(m), q_(q) {
    require(q >= 1 && q <= 3, ErrorCode::DegreeUnsupported, "group cohomology in degrees 1..3");
    const FiniteGroup& g = m_.group();
    tuples_ = tuple_list(g, q, true);
    lower_tuples_ = tuple_list(g, q - 1, true);
    const auto upper = tuple_list(g, q + 1, true);
    const std::size_t r = m_.rank(), n = tuples_.size() * r;

    const IntMatrix d = delta_matrix(m_, q, tuples_, upper);
    d_lower_ = delta_matrix(m_, q - 1, lower_tuples_, tuples_);

    // cocycles: c with d c in the relation lattice of degree q + 1
    const auto& fac = m_.module().invariant_factors();
    const std::size_t nu = upper.size() * r;
    IntMatrix big(nu, n + nu);
    for (std::size_t i = 0; i < nu; ++i) {
        for (std::size_t j = 0; j < n; ++j) big(i, j) = d(i, j);
        big(i, n + i) = fac.empty() ? 1 : fac[i % r];
    }
    std::vector<std::vector<BigInt>> z;
    for (auto& v : integer_kernel(big)) z.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::vector<BigInt>> b;
    for (std::size_t j = 0; j < d_lower_.cols(); ++j) b.push_back(d_lower_.column(j));
    quotient_.emplace(subquotient(n, relations_on(m_, tuples_.size()), z, b));
}

std::vector<BigInt> GroupCohomology::flatten(const Cochain& c) const { return flatten_on(m_, c, tuples_); }

Cochain GroupCohomology::unflatten(const std::vector<BigInt>& x, std::size_t q) const { return unflatten_on(m_, q, x, tuples_); }

std::vector<Cochain> GroupCohomology::representatives() const {
    std::vector<Cochain> out;
    for (const auto& gen : quotient_->generators()) out.push_back(unflatten(gen, q_));
    return out;
}

bool GroupCohomology::is_cocycle(const Cochain& c) const {
    const Cochain d = bar_differential(m_, c);
    return d == constant_zero(m_, q_ + 1);
}

std::vector<std::int64_t> GroupCohomology::coordinates(const Cochain& c) const {
    require(c.q == q_ && c.is_normalized(m_.group()), ErrorCode::NotNormalized, "expected a normalized cochain of the right degree");
    require(is_cocycle(c), ErrorCode::NotACocycle, "cochain is not a cocycle");
    return quotient_->coordinates(flatten(c));
}

Cochain GroupCohomology::from_coordinates(const std::vector<std::int64_t>& coords) const {
    return unflatten(quotient_->lift(coords), q_);
}

std::optional<Cochain> GroupCohomology::coboundary_witness(const Cochain& c) const {
    return bar_coboundary_witness(m_, c);
}

std::optional<Cochain> bar_coboundary_witness(const GModule& m, const Cochain& c) {
    const std::size_t q = c.q;
    require(q >= 1 && q <= 4, ErrorCode::DegreeUnsupported, "coboundaries in degrees 1..4");
    const FiniteGroup& g = m.group();
    const bool normalized = c.is_normalized(g);
    const auto src = tuple_list(g, q - 1, normalized), dst = tuple_list(g, q, normalized);
    const IntMatrix d = delta_matrix(m, q - 1, src, dst);
    const std::size_t r = m.rank(), ns = src.size() * r, nd = dst.size() * r;
    const auto& fac = m.module().invariant_factors();
    IntMatrix big(nd, ns + nd);
    for (std::size_t i = 0; i < nd; ++i) {
        for (std::size_t j = 0; j < ns; ++j) big(i, j) = d(i, j);
        big(i, ns + i) = fac[i % r];
    }
    if (r == 0) return constant_zero(m, q - 1);
    const auto sol = solve_integer(big, flatten_on(m, c, dst));
    if (!sol) return std::nullopt;
    Cochain b = unflatten_on(m, q - 1, std::vector<BigInt>(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(ns)), src);
    require(bar_differential(m, b) == c, ErrorCode::InvalidWitness, "lattice solution fails the coboundary check");
    return b;
}

// ---------------------------------------------------------------------------
// Dictionary

UnitDictionary::UnitDictionary(HopfData::Ptr kg, AlgebraData::Ptr a, const std::optional<ActionData>& right)
    : kg_(std::move(kg)), a_(std::move(a)), g_(extract_group(*kg_)) {
    unit_codes_ = a_->unit_codes(1 << 16);
    for (std::size_t i = 0; i < unit_codes_.size(); ++i) unit_index_[unit_codes_[i]] = i;
    const std::int64_t one = a_->encode(a_->one());
    units_.emplace(unit_codes_.size(), unit_index_.at(one), [this](std::size_t x, std::size_t y) {
        return unit_index_.at(a_->encode(a_->mul(a_->decode(unit_codes_[x]), a_->decode(unit_codes_[y]))));
    });

    const FiniteAbelianGroup m = units_->group();
    std::vector<std::vector<GModule::Elem>> action(g_.order());
    for (std::size_t h = 0; h < g_.order(); ++h)
        for (std::size_t j = 0; j < m.rank(); ++j) {
            const Vec gen = a_->decode(unit_codes_[units_->generators()[j]]);
            if (!right || right->is_trivial()) {
                action[h].push_back(to_module(gen));
                continue;
            }
            require(right->side() == ActionSide::RightOnAlgebra && right->actor() == kg_, ErrorCode::ActionInvalid,
                    "dictionary needs a right action of the group algebra");
            action[h].push_back(to_module(right->act_dense(kg_->basis(h), gen)));
        }
    module_.emplace(GModule::make(g_, m, std::move(action)));
}

GModule::Elem UnitDictionary::to_module(const Vec& unit) const {
    auto it = unit_index_.find(a_->encode(unit));
    if (it == unit_index_.end()) raise(ErrorCode::NotInvertible, "value " + a_->format(unit) + " is not a unit");
    return units_->coordinates(it->second);
}

Vec UnitDictionary::to_algebra(const GModule::Elem& e) const {
    return a_->decode(unit_codes_[units_->element_of(e)]);
}

Cochain UnitDictionary::to_cochain(const RegElement& f) const {
    for (const auto& s : f.space().slots())
        require(s == kg_, ErrorCode::NotGroupAlgebra, "cochain is not on tensor powers of the group algebra");
    const std::size_t q = f.arity();
    Cochain c = constant_zero(*module_, q);
    for (std::size_t x = 0; x < c.values.size(); ++x) c.values[x] = to_module(f.value(x));
    return c;
}

RegElement UnitDictionary::to_reg(const Cochain& c, SlotSpace::Ptr space) const {
    for (const auto& s : space->slots())
        require(s == kg_, ErrorCode::NotGroupAlgebra, "target is not a tensor power of the group algebra");
    require(space->arity() == c.q, ErrorCode::ShapeMismatch, "degree mismatch");
    RegElement f(space, a_, std::vector<Scalar>(space->size() * a_->dim(), 0));
    for (std::size_t x = 0; x < c.values.size(); ++x) f.set(x, to_algebra(c.values[x]));
    return f;
}

namespace {

bool bridge_applies(const CochainComplex& c) {
    const auto& l = c.layout();
    if (!l.prefix.empty() || !l.suffix.empty() || l.last == LastFactor::Precomposition) return false;
    if (!l.active->all_group_like() || !l.active->unit_index()) return false;
    if (!l.coeff->k().is_finite()) return false;
    try {
        return l.coeff->element_count() <= (1 << 16);
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

std::optional<WitnessSearch> bridge_coboundary_witness(const CochainComplex& c, const RegElement& f) {
    if (!bridge_applies(c)) return std::nullopt;
    const std::size_t q = c.degree(f);
    require(q >= 1, ErrorCode::DegreeUnsupported, "degree-0 cochains are not coboundaries");
    const UnitDictionary dict(c.layout().active, c.coeff(), c.layout().action);
    WitnessSearch out;
    out.method = "group_bridge";
    Cochain cf;
    try {
        cf = dict.to_cochain(f);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInvertible) throw;
        return out;
    }
    auto b = bar_coboundary_witness(dict.module(), cf);
    if (!b) return out;
    RegElement t = dict.to_reg(*b, c.space(q - 1));
    require(c.differential(t) == f, ErrorCode::InvalidWitness, "dictionary witness fails delta t = f");
    out.status = WitnessSearch::Status::Found;
    out.witness = std::move(t);
    return out;
}

CohomologyResult sweedler_cohomology_via_bridge(const CochainComplex& c, std::size_t q) {
    require(bridge_applies(c), ErrorCode::NotGroupAlgebra, "group-cohomology route needs a group algebra over a finite field");
    const UnitDictionary dict(c.layout().active, c.coeff(), c.layout().action);
    const GroupCohomology h(dict.module(), q);
    CohomologyResult r;
    r.group = h.group();
    r.method = "group_bridge";
    for (const auto& rep : h.representatives()) r.representatives.push_back(dict.to_reg(rep, c.space(q)));
    return r;
}

// ---------------------------------------------------------------------------
// Stable part

StablePart stable_part(const FiniteGroup& n, const FiniteGroup& t, const GroupAction& action, const GModule& m) {
    require(m.group() == n, ErrorCode::ShapeMismatch, "module is over another group");
    require(m.is_trivial(), ErrorCode::ActionNotTrivial, "stable part needs trivial N-action on the module");
    const GroupCohomology h2(m, 2);
    StablePart out;
    out.ambient = h2.group();
    const auto& fac = out.ambient.invariant_factors();
    const std::size_t on = n.order();

    std::vector<std::vector<std::int64_t>> all{{}};
    for (std::int64_t d : fac) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& v : all)
            for (std::int64_t k = 0; k < d; ++k) {
                auto w = v;
                w.push_back(k);
                next.push_back(std::move(w));
            }
        all = std::move(next);
    }

    for (const auto& coords : all) {
        const Cochain f = h2.from_coordinates(coords);
        std::vector<Cochain> gs;
        bool stable = true;
        for (std::size_t s = 0; s < t.order() && stable; ++s) {
            Cochain diff = constant_zero(m, 2);
            for (std::size_t x = 0; x < diff.values.size(); ++x) {
                const std::size_t a = x / on, b = x % on;
                const auto& ft = f.values[action.apply(s, a) * on + action.apply(s, b)];
                diff.values[x] = m.add(f.values[x], m.neg(ft));
            }
            auto g = bar_coboundary_witness(m, diff);
            if (!g) stable = false;
            else gs.push_back(std::move(*g));
        }
        if (!stable) continue;
        out.classes.push_back(coords);
        out.witnesses.push_back(std::move(gs));
    }

    std::map<std::vector<std::int64_t>, std::size_t> where;
    for (std::size_t i = 0; i < out.classes.size(); ++i) where[out.classes[i]] = i;
    const std::vector<std::int64_t> zero(fac.size(), 0);
    require(where.count(zero) > 0, ErrorCode::NotASubgroup, "zero class must be stable");
    const ExplicitAbelianGroup sub(out.classes.size(), where.at(zero), [&](std::size_t a, std::size_t b) {
        std::vector<std::int64_t> s(fac.size());
        for (std::size_t j = 0; j < fac.size(); ++j) s[j] = (out.classes[a][j] + out.classes[b][j]) % fac[j];
        auto it = where.find(s);
        require(it != where.end(), ErrorCode::NotASubgroup, "stable classes are not closed under addition");
        return it->second;
    });
    out.group = sub.group();
    return out;
}

}  // namespace hacoh
