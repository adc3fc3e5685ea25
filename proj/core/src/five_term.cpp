#include "hacoh/five_term.hpp"

#include <set>

namespace hacoh {

namespace {

Vec unit_vec(std::size_t dim, std::size_t i, Scalar c = 1) {
    Vec v(dim, 0);
    v[i] = c;
    return v;
}

Vec column(const FieldMatrix& m, std::size_t j) {
    Vec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, j);
    return v;
}

Vec dense(std::size_t n, const SparseVec& s) {
    Vec v(n, 0);
    for (const auto& t : s) v[t.index] = t.coeff;
    return v;
}

// The same values on another space with the same slots.
RegElement on(const SlotSpace::Ptr& space, const RegElement& f) {
    require(space->same_as(f.space()), ErrorCode::ShapeMismatch, "rewrapping onto a space with other slots");
    return RegElement(space, f.coeff_ptr(), f.values());
}

CohomologyResult from_table(std::shared_ptr<const ClassTable> table, std::string method) {
    CohomologyResult r;
    r.group = table->group();
    for (std::size_t g : table->explicit_group().generators()) r.representatives.push_back(table->representative(g));
    r.method = std::move(method);
    r.classes = std::move(table);
    return r;
}

}  // namespace

SequenceSetup::SequenceSetup(SmashData smash, AlgebraData::Ptr a) : sc_(std::move(smash), std::move(a)) {
    const auto& s = sc_.smash();
    mc_ = std::make_unique<MeasuringComplex>(s.t, s.n, s.action, sc_.coeff());
}

std::optional<RegElement> same_class_witness(const ClassTable& table, const RegElement& a, const RegElement& b) {
    const auto ca = table.class_of(a), cb = table.class_of(b);
    if (!ca || !cb || *ca != *cb) return std::nullopt;
    return convolve(table.witness(a), conv_inverse(table.witness(b)));
}

RegElement inflate_from_t(const SmashCochains& sc, const RegElement& a) {
    const auto& p = sc.smash().project_t;
    return pullback_fn(a, sc.on_h().space(2), [&](const auto& x) { return TensorTerms{{column(p, x[0]), column(p, x[1])}}; });
}

// ---------------------------------------------------------------------------
// Reduced second cohomology

ReducedH2 tilde_h2(const SequenceSetup& s, const SearchOptions& opt) {
    const auto& sc = s.sc();
    const auto& meas = s.mc().complex();
    ReducedH2 r;
    r.on_n = cohomology_bruteforce(sc.on_n(), 2, opt);
    r.on_t = cohomology_bruteforce(sc.on_t(), 2, opt);

    // Witnesses g = f|T(x)N: normalized, invertible, trivial measuring differential (t_multiplicative).
    const auto gs = enumerate_grid(sc.over_t().grid(1), opt.budget, [&](const RegElement& g) {
        return try_conv_inverse(g).has_value() && meas.differential(on(meas.space(1), g)).is_unit();
    });
    std::map<std::vector<Scalar>, std::vector<std::size_t>> by_defect;  // stability
    for (std::size_t i = 0; i < gs.size(); ++i) by_defect[sc.over_t().differential(gs[i]).values()].push_back(i);

    std::vector<RegElement> zfull, ztilde;
    for (const auto& fnn : r.on_n.classes->cocycles()) {
        auto it = by_defect.find(stability_defect(sc, fnn).values());
        if (it == by_defect.end()) continue;
        for (std::size_t gi : it->second)
            for (const auto& ftt : r.on_t.classes->cocycles()) {
                RegElement f = assemble_raw(sc, fnn, ftt, gs[gi]);
                require(is_cocycle(sc.on_h(), f).ok, ErrorCode::ComponentConditionFailed,
                        "components passing t_multiplicative and stability assemble to a non-cocycle");
                if (ftt.is_unit()) ztilde.push_back(f);
                zfull.push_back(std::move(f));
            }
    }

    std::vector<RegElement> pfull, ptilde;
    for (auto& w : enumerate_grid(sc.on_h().grid(1), opt.budget, [](const RegElement& w) { return try_conv_inverse(w).has_value(); })) {
        const RegElement d = sc.on_h().differential(w);
        if (!sc.restrict_nt(d).is_unit()) continue;
        if (sc.restrict_tt(d).is_unit()) ptilde.push_back(w);
        pfull.push_back(std::move(w));
    }
    auto delta = [&sc](const RegElement& w) { return sc.on_h().differential(w); };
    auto full = std::make_shared<const ClassTable>(std::move(zfull), pfull, delta);
    auto tilde = std::make_shared<const ClassTable>(std::move(ztilde), ptilde, delta);

    std::set<std::size_t> hit;
    bool sections = true;
    for (std::size_t a = 0; a < r.on_t.classes->class_count(); ++a) {
        const RegElement& rep = r.on_t.classes->representative(a);
        const RegElement inf = inflate_from_t(sc, rep);
        sections = sections && sc.restrict_tt(inf) == rep;
        for (std::size_t b = 0; b < tilde->class_count(); ++b) {
            const auto c = full->class_of(convolve(inf, tilde->representative(b)));
            require(c.has_value(), ErrorCode::NotASubgroup, "inflated product escaped the enumerated cocycles");
            hit.insert(*c);
        }
    }
    const std::size_t expected = r.on_t.classes->class_count() * tilde->class_count();
    r.split = sections && hit.size() == expected && full->class_count() == expected;
    r.split_detail = "|H^2(H)| = " + std::to_string(full->class_count()) + ", |H^2(T)| * |H~^2| = " +
                     std::to_string(r.on_t.classes->class_count()) + " * " + std::to_string(tilde->class_count()) +
                     ", distinct products " + std::to_string(hit.size());

    r.full = from_table(std::move(full), "components");
    r.tilde = from_table(std::move(tilde), "components");
    return r;
}

// ---------------------------------------------------------------------------
// The maps

RegElement iota_raw(const SequenceSetup& s, const RegElement& f) {
    const auto& sm = s.smash();
    const Field& k = s.coeff()->k();
    const std::size_t nt = sm.t->dim(), nn = sm.n->dim();
    return pullback_fn(f, s.sc().on_h().space(2), [&](const auto& x) {
        const std::size_t i = x[0] / nt, j = x[0] % nt, i2 = x[1] / nt, j2 = x[1] % nt;
        return TensorTerms{{unit_vec(nt, j, k.mul(sm.n->counit(i), sm.t->counit(j2))), unit_vec(nn, i2)}};
    });
}

RegElement iota(const SequenceSetup& s, const RegElement& f) {
    require(s.mc().is_measuring(f).ok && is_cocycle(s.mc().complex(), f).ok, ErrorCode::NotACocycle,
            "iota needs a measuring 1-cocycle");
    return iota_raw(s, f);
}

bool is_stable_witness(const SequenceSetup& s, const RegElement& fnn, const RegElement& g) {
    const auto& sc = s.sc();
    return stability_defect(sc, fnn) == sc.over_t().differential(on(sc.over_t().space(1), g));
}

StableClass res_to_stable(const SequenceSetup& s, const RegElement& f) {
    const auto& sc = s.sc();
    require(sc.restrict_nt(f).is_unit() && sc.restrict_tt(f).is_unit(), ErrorCode::NotNormalized,
            "res needs a cocycle trivial on N (x) T and T (x) T");
    StableClass st{sc.restrict_nn(f), sc.restrict_tn(f)};
    require(is_stable_witness(s, st.f, st.g), ErrorCode::InvalidWitness, "f|T(x)N does not witness stability");
    return st;
}

RegElement d_map(const SequenceSetup& s, const StableClass& st) {
    require(is_stable_witness(s, st.f, st.g), ErrorCode::InvalidWitness, "g does not witness stability of f");
    const auto& meas = s.mc().complex();
    RegElement df = meas.differential(on(meas.space(1), st.g));
    require(s.mc().is_measuring(df).ok && is_cocycle(meas, df).ok, ErrorCode::InvalidWitness,
            "d(f) is not a measuring 2-cocycle");
    return df;
}

RegElement j_map(const SequenceSetup& s, const RegElement& f) {
    require(s.mc().is_measuring(f).ok && is_cocycle(s.mc().complex(), f).ok, ErrorCode::NotACocycle,
            "j needs a measuring 2-cocycle");
    const auto& sm = s.smash();
    const Field& k = s.coeff()->k();
    const std::size_t nt = sm.t->dim(), nn = sm.n->dim();
    return pullback_fn(f, s.sc().on_h().space(3), [&](const auto& x) {
        const Scalar c = k.mul(k.mul(sm.n->counit(x[0] / nt), sm.n->counit(x[1] / nt)), sm.t->counit(x[2] % nt));
        return TensorTerms{{unit_vec(nt, x[0] % nt, c), unit_vec(nt, x[1] % nt), unit_vec(nn, x[2] / nt)}};
    });
}

RegElement iota_preimage(const SequenceSetup& s, const RegElement& f, const RegElement& u) {
    const auto& sc = s.sc();
    const auto& sm = s.smash();
    const auto sp = sc.over_t().space(1);
    const std::size_t nn = sm.n->dim();
    const RegElement uinv = conv_inverse(u);
    const RegElement b = pullback_fn(uinv, sp, [&](const auto& x) { return TensorTerms{{unit_vec(nn, x[1], sm.t->counit(x[0]))}}; });
    const RegElement c = pullback_fn(u, sp, [&](const auto& x) { return TensorTerms{{dense(nn, sm.action.act(x[0], x[1]))}}; });
    return on(s.mc().complex().space(1), convolve(convolve(sc.restrict_tn(f), b), c));
}

StableClass extract_stable(const SequenceSetup& s, const RegElement& v) {
    const auto& sc = s.sc();
    const auto& sm = s.smash();
    const Field& k = s.coeff()->k();
    const std::size_t nn = sm.n->dim();
    const RegElement vinv = conv_inverse(v);
    const RegElement b = pullback_fn(vinv, sc.over_t().space(1), [&](const auto& x) {
        TensorTerms terms;
        for (const auto& c : sm.t->coproduct(x[0])) {
            Vec acted = mat_vec(k, sm.embed_n, dense(nn, sm.action.act(c.left, x[1])));
            for (auto& a : acted) a = k.mul(a, c.coeff);
            terms.push_back({std::move(acted), column(sm.embed_t, c.right)});
        }
        return terms;
    });
    return {sc.restrict_nn(v), convolve(sc.restrict_tn(v), b)};
}

// ---------------------------------------------------------------------------
// Trivial actions

Triple triple_decomposition(const SequenceSetup& s, const RegElement& f) {
    const auto& sc = s.sc();
    require(s.smash().action.is_trivial(), ErrorCode::ActionNotTrivial, "the decomposition needs a trivial action");
    require(is_cocycle(sc.on_h(), f).ok, ErrorCode::NotACocycle, "not a 2-cocycle on H");
    const RegElement nt = sc.restrict_nt(conv_inverse(f));
    const std::size_t dn = s.smash().n->dim(), dt = s.smash().t->dim();
    const RegElement swapped = pullback_fn(nt, sc.over_t().space(1), [&](const auto& x) {
        return TensorTerms{{unit_vec(dn, x[1]), unit_vec(dt, x[0])}};
    });
    return {sc.restrict_tt(f), sc.restrict_nn(f), on(s.mc().complex().space(1), convolve(sc.restrict_tn(f), swapped))};
}

TripleCheck check_triple_decomposition(const SequenceSetup& s, const ClassTable& h2, const ClassTable& h2_t,
                                       const ClassTable& h2_n, const PairingGroup& pairings) {
    std::map<std::vector<Scalar>, std::size_t> pairing_index;
    for (std::size_t i = 0; i < pairings.pairings.size(); ++i) pairing_index[pairings.pairings[i].values()] = i;

    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    std::map<std::size_t, Key> of_class;
    TripleCheck r;
    r.well_defined = true;
    for (const auto& z : h2.cocycles()) {
        const Triple tr = triple_decomposition(s, z);
        const auto ct = h2_t.class_of(tr.ftt), cn = h2_n.class_of(tr.fnn);
        const auto cp = pairing_index.find(tr.pairing.values());
        if (!ct || !cn || cp == pairing_index.end()) {
            r.well_defined = false;
            r.detail = "a component left the enumerated groups";
            return r;
        }
        const Key key{*ct, *cn, cp->second};
        const auto [it, fresh] = of_class.emplace(*h2.class_of(z), key);
        if (!fresh && it->second != key) r.well_defined = false;
    }
    std::set<Key> images;
    for (const auto& [cls, key] : of_class) images.insert(key);
    r.injective = r.well_defined && images.size() == of_class.size();
    const std::size_t product = h2_t.class_count() * h2_n.class_count() * pairings.pairings.size();
    r.bijective = r.injective && h2.class_count() == product;
    r.detail = "|H^2| = " + std::to_string(h2.class_count()) + ", |H^2(T)| |H^2(N)| |P| = " + std::to_string(product);
    return r;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace hacoh
