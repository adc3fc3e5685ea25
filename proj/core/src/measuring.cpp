#include "hacoh/measuring.hpp"

#include <numeric>

namespace hacoh {

namespace {

// phi(v) for a map phi on the one-slot space [N].
Vec apply_linear(const RegElement& phi, const Vec& v) {
    const AlgebraData& a = phi.coeff();
    Vec out = a.zero();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out = a.add(out, a.scale(v[i], phi.value(i)));
    return out;
}

Vec to_dense(const SparseVec& s, std::size_t dim) {
    Vec v(dim, 0);
    for (const auto& t : s) v[t.index] = t.coeff;
    return v;
}

// Compares lhs and rhs and, on failure, records the tuple.
MeasuringCheck compare(const RegElement& lhs, const RegElement& rhs, std::string law) {
    MeasuringCheck r;
    auto diff = first_difference(lhs, rhs);
    if (!diff.empty()) {
        r.ok = false;
        r.law = std::move(law);
        r.witness = std::move(diff);
    }
    return r;
}

}  // namespace

MeasuringComplex::MeasuringComplex(HopfData::Ptr t, HopfData::Ptr n, ActionData left, AlgebraData::Ptr a)
    : t_(std::move(t)), n_(std::move(n)), action_(std::move(left)), a_(std::move(a)) {
    require(action_.actor() == t_ && action_.target_hopf() == n_, ErrorCode::ActionInvalid,
            "the action must be T acting on N");
    n_->unit_basis();
    c_ = CochainComplex::measuring(t_, n_, action_, a_);
}

MeasuringCheck MeasuringComplex::is_measuring(const RegElement& f) const {
    const std::size_t q = c_->degree(f);
    const auto& s = f.space();
    const std::size_t nslot = q;

    // unit law on (x, 1_N)
    const std::size_t one = n_->unit_basis();
    for (std::size_t x = 0; x < s.size(); ++x) {
        auto idx = s.decode(x);
        if (idx[nslot] != one) continue;
        if (f.value(x) != a_->scale(s.counit(x), a_->one())) {
            idx.pop_back();
            return {false, "unit", idx};
        }
    }

    std::shared_ptr<const SlotMap> maps[3];
    {
        std::lock_guard lock(mutex_);
        for (std::size_t w = 0; w < 3; ++w) {
            auto& m = mult_maps_[q * 3 + w];
            if (!m) {
                std::vector<HopfData::Ptr> slots = s.slots();
                slots.push_back(n_);
                auto ext = SlotSpace::make(t_->field(), slots);
                std::vector<Piece> pieces;
                for (std::size_t i = 0; i < q; ++i) pieces.push_back(Piece::identity(i, i));
                if (w == 0) {
                    pieces.push_back(Piece::multiply(*n_, nslot, nslot + 1, nslot));
                } else if (w == 1) {
                    pieces.push_back(Piece::identity(nslot, nslot));
                    pieces.push_back(Piece::counit(*n_, nslot + 1));
                } else {
                    pieces.push_back(Piece::identity(nslot + 1, nslot));
                    pieces.push_back(Piece::counit(*n_, nslot));
                }
                m = std::make_shared<const SlotMap>(build_map(ext, f.space_ptr(), pieces));
            }
            maps[w] = m;
        }
    }
    const RegElement lhs = pullback(f, *maps[0]);
    const RegElement rhs = convolve(pullback(f, *maps[1]), pullback(f, *maps[2]));
    return compare(lhs, rhs, "measuring");
}

RegElement MeasuringComplex::differential(const RegElement& f) const {
    const auto in = is_measuring(f);
    require(in.ok, ErrorCode::NotMeasuring, "input violates the " + in.law + " law");
    RegElement out = c_->differential(f);
    const auto check = is_measuring(out);
    require(check.ok, ErrorCode::NotMeasuring, "differential left the measuring subcomplex (" + check.law + " law)");
    return out;
}

CohomologyResult MeasuringComplex::cohomology(std::size_t q, const SearchOptions& opt) const {
    require(q >= 1 && q <= 2, ErrorCode::DegreeUnsupported, "measuring cohomology in degrees 1 and 2");
    try {
        auto r = cohomology_bruteforce(*c_, q, opt, [this](const RegElement& f) { return is_measuring(f).ok; });
        r.method = "enumeration";
        return r;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SearchBudgetExceeded || !t_->all_group_like()) throw;
    }
    return KgSpecialization(*this, opt).cohomology(q);
}

CohomologyResult h_meas(HopfData::Ptr t, HopfData::Ptr n, const ActionData& left, AlgebraData::Ptr a, std::size_t q,
                        const SearchOptions& opt) {
    const MeasuringComplex mc(std::move(t), std::move(n), left, std::move(a));
    return mc.cohomology(q, opt);
}

// --- algebra maps ---

AlgebraMaps::AlgebraMaps(HopfData::Ptr n, AlgebraData::Ptr a, const SearchOptions& opt)
    : n_(std::move(n)), a_(std::move(a)) {
    space_ = SlotSpace::make(n_->field(), {n_});
    const std::size_t one = n_->unit_basis();
    const CochainGrid grid(space_, a_, GridSpec{{0}, std::nullopt, true});
    require(grid.count() <= opt.budget, ErrorCode::EnumerationInfeasible,
            "Alg(" + n_->name() + ", " + a_->name() + ") grid exceeds the budget");
    const std::size_t d = n_->dim();
    maps_ = enumerate_grid(grid, opt.budget, [&](const RegElement& phi) {
        if (phi.value(one) != a_->one()) return false;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (apply_linear(phi, to_dense(n_->product(i, j), d)) != a_->mul(phi.value(i), phi.value(j)))
                    return false;
        return true;
    });
    for (std::size_t i = 0; i < maps_.size(); ++i) index_[maps_[i].values()] = i;

    const std::size_t m = maps_.size();
    std::vector<std::size_t> table(m * m);
    std::size_t unit = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (maps_[i].is_unit()) unit = i;
        for (std::size_t j = 0; j < m; ++j) {
            const auto k = index_of(convolve(maps_[i], maps_[j]));
            require(k.has_value(), ErrorCode::ValidationError, "algebra maps are not closed under convolution");
            table[i * m + j] = *k;
        }
    }
    require(unit < m, ErrorCode::ValidationError, "the counit is not an algebra map");
    group_.emplace(m, unit, [table = std::move(table), m](std::size_t i, std::size_t j) { return table[i * m + j]; });
}

std::optional<std::size_t> AlgebraMaps::index_of(const RegElement& phi) const {
    auto it = index_.find(phi.values());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// --- kG specialization ---

KgSpecialization::KgSpecialization(const MeasuringComplex& mc, const SearchOptions& opt)
    : mc_(mc), g_(extract_group(*mc.t())), alg_(mc.n(), mc.coeff(), opt) {
    const auto& n = *mc.n();
    const std::size_t d = n.dim();
    const auto& m = alg_.group();
    std::vector<std::vector<GModule::Elem>> action(g_.order());
    for (std::size_t g = 0; g < g_.order(); ++g) {
        for (std::size_t j = 0; j < m.rank(); ++j) {
            std::vector<std::int64_t> e(m.rank(), 0);
            e[j] = 1;
            const RegElement& phi = alg_.from_coordinates(e);
            std::vector<Scalar> values;
            for (std::size_t x = 0; x < d; ++x) {
                const Vec v = apply_linear(phi, mc.action().act_dense(mc.t()->basis(g), n.basis(x)));
                values.insert(values.end(), v.begin(), v.end());
            }
            const auto k = alg_.index_of(RegElement(alg_.space(), mc.coeff(), std::move(values)));
            require(k.has_value(), ErrorCode::ActionInvalid, "precomposition does not preserve algebra maps");
            action[g].push_back(alg_.explicit_group().coordinates(*k));
        }
    }
    module_.emplace(GModule::make(g_, m, std::move(action)));
}

Cochain KgSpecialization::to_cochain(const RegElement& f) const {
    const std::size_t q = mc_.complex().degree(f);
    const std::size_t chunk = mc_.n()->dim() * mc_.coeff()->dim();
    Cochain c{q, {}};
    const std::size_t tuples = f.values().size() / chunk;
    c.values.reserve(tuples);
    for (std::size_t x = 0; x < tuples; ++x) {
        std::vector<Scalar> v(f.values().begin() + x * chunk, f.values().begin() + (x + 1) * chunk);
        const auto k = alg_.index_of(RegElement(alg_.space(), mc_.coeff(), std::move(v)));
        require(k.has_value(), ErrorCode::NotMeasuring, "a value of the cochain is not an algebra map");
        c.values.push_back(alg_.explicit_group().coordinates(*k));
    }
    return c;
}

RegElement KgSpecialization::to_reg(const Cochain& c) const {
    std::vector<Scalar> values;
    for (const auto& e : c.values) {
        const auto& v = alg_.from_coordinates(e).values();
        values.insert(values.end(), v.begin(), v.end());
    }
    return RegElement(mc_.complex().space(c.q), mc_.coeff(), std::move(values));
}

CohomologyResult KgSpecialization::cohomology(std::size_t q) const {
    const GroupCohomology gc(*module_, q);
    CohomologyResult r;
    r.group = gc.group();
    for (const auto& c : gc.representatives()) r.representatives.push_back(to_reg(c));
    r.method = "kg_specialize";
    return r;
}

bool KgSpecialization::uniquely_divisible() const {
    return std::gcd(static_cast<std::int64_t>(g_.order()), alg_.group().order()) == 1;
}

// --- pairings ---

MeasuringCheck measures_in_t(const MeasuringComplex& mc, const RegElement& f) {
    require(mc.complex().degree(f) == 1, ErrorCode::ShapeMismatch, "pairings live in degree 1");
    const auto& t = *mc.t();
    const std::size_t one = t.unit_basis();
    const auto& s = f.space();
    for (std::size_t x = 0; x < s.size(); ++x) {
        const auto idx = s.decode(x);
        if (idx[0] == one && f.value(x) != mc.coeff()->scale(s.counit(x), mc.coeff()->one()))
            return {false, "unit", {idx[1]}};
    }
    auto ext = SlotSpace::make(t.field(), {mc.t(), mc.t(), mc.n()});
    const auto mult = build_map(ext, f.space_ptr(), {Piece::multiply(t, 0, 1, 0), Piece::identity(2, 1)});
    const auto left = build_map(ext, f.space_ptr(), {Piece::identity(0, 0), Piece::counit(t, 1), Piece::identity(2, 1)});
    const auto right = build_map(ext, f.space_ptr(), {Piece::counit(t, 0), Piece::identity(1, 0), Piece::identity(2, 1)});
    return compare(pullback(f, mult), convolve(pullback(f, left), pullback(f, right)), "measuring");
}

PairingGroup pairing_group(HopfData::Ptr t, HopfData::Ptr n, AlgebraData::Ptr a, const SearchOptions& opt) {
    const MeasuringComplex mc(t, n, ActionData::trivial_left(t, n), a);
    const auto grid = mc.complex().grid(1);
    require(grid.count() <= opt.budget, ErrorCode::EnumerationInfeasible, "pairing grid exceeds the budget");
    PairingGroup p;
    p.pairings = enumerate_grid(grid, opt.budget, [&](const RegElement& f) {
        return mc.is_measuring(f).ok && measures_in_t(mc, f).ok;
    });
    std::map<std::vector<Scalar>, std::size_t> index;
    std::size_t unit = 0;
    for (std::size_t i = 0; i < p.pairings.size(); ++i) {
        index[p.pairings[i].values()] = i;
        if (p.pairings[i].is_unit()) unit = i;
    }
    const std::size_t m = p.pairings.size();
    std::vector<std::size_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto it = index.find(convolve(p.pairings[i], p.pairings[j]).values());
            require(it != index.end(), ErrorCode::ValidationError, "pairings are not closed under convolution");
            table[i * m + j] = it->second;
        }
    p.explicit_group.emplace(m, unit, [table = std::move(table), m](std::size_t i, std::size_t j) { return table[i * m + j]; });
    return p;
}

}  // namespace hacoh
