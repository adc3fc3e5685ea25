#include "hacoh/normalize.hpp"

namespace hacoh {

namespace {

Vec scaled(const Field& k, Scalar c, Vec v) {
    for (auto& x : v) x = k.mul(c, x);
    return v;
}

Vec column(const FieldMatrix& m, std::size_t j) {
    Vec v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
    return v;
}

Vec dense(std::size_t n, const SparseVec& s) {
    Vec v(n, 0);
    for (const auto& t : s) v[t.index] = t.coeff;
    return v;
}

CheckItem compare_item(std::string name, const RegElement& lhs, const RegElement& rhs) {
    CheckItem it{std::move(name), true, {}, {}};
    if (!(lhs == rhs)) {
        it.passed = false;
        it.witness = first_difference(lhs, rhs);
    }
    return it;
}

/// Basis helpers for one smash product.
struct Basis {
    const SmashData& s;
    const Field& k;

    Vec nb(std::size_t i) const { return s.n->basis(i); }
    Vec tb(std::size_t j) const { return s.t->basis(j); }
    Vec hb(std::size_t h) const { return s.h->basis(h); }
    Vec nh(std::size_t i) const { return column(s.embed_n, i); }
    Vec th(std::size_t j) const { return column(s.embed_t, j); }
    Vec nt(std::size_t i, std::size_t j) const { return hb(s.index(i, j)); }
    Vec hmul(const Vec& a, const Vec& b) const { return s.h->mul(a, b); }
    Vec tmul(std::size_t a, std::size_t b) const { return s.t->mul(tb(a), tb(b)); }
    /// t(n) in N
    Vec act(std::size_t t, std::size_t n) const { return dense(s.n->dim(), s.action.act(t, n)); }
    Vec embed_n(const Vec& v) const { return mat_vec(k, s.embed_n, v); }
    Scalar en(std::size_t i) const { return s.n->counit(i); }
    Scalar et(std::size_t j) const { return s.t->counit(j); }
};

}  // namespace

// ---------------------------------------------------------------------------
// SmashCochains

SmashCochains::SmashCochains(SmashData smash, AlgebraData::Ptr a) : s_(std::move(smash)), a_(std::move(a)) {
    ch_ = CochainComplex::sweedler(s_.h, a_);
    cn_ = CochainComplex::sweedler(s_.n, a_);
    ct_ = CochainComplex::sweedler(s_.t, a_);
    cg_ = CochainComplex::with_prefix(s_.t, s_.n, a_);
}

HopfData::Ptr SmashCochains::slot_of(char c) const {
    switch (c) {
        case 'N': return s_.n;
        case 'T': return s_.t;
        case 'H': return s_.h;
        default: raise(ErrorCode::ShapeMismatch, std::string("unknown slot letter ") + c);
    }
}

SlotSpace::Ptr SmashCochains::space(const std::string& pattern) const {
    std::vector<HopfData::Ptr> slots;
    for (char c : pattern) slots.push_back(slot_of(c));
    return SlotSpace::make(a_->field(), std::move(slots));
}

RegElement SmashCochains::restrict_nn(const RegElement& f) const {
    const Basis b{s_, a_->k()};
    return pullback_fn(f, cn_->space(2), [&](const auto& x) { return TensorTerms{{b.nh(x[0]), b.nh(x[1])}}; });
}

RegElement SmashCochains::restrict_tt(const RegElement& f) const {
    const Basis b{s_, a_->k()};
    return pullback_fn(f, ct_->space(2), [&](const auto& x) { return TensorTerms{{b.th(x[0]), b.th(x[1])}}; });
}

RegElement SmashCochains::restrict_tn(const RegElement& f) const {
    const Basis b{s_, a_->k()};
    return pullback_fn(f, cg_->space(1), [&](const auto& x) { return TensorTerms{{b.th(x[0]), b.nh(x[1])}}; });
}

RegElement SmashCochains::restrict_nt(const RegElement& f) const {
    const Basis b{s_, a_->k()};
    return pullback_fn(f, space("NT"), [&](const auto& x) { return TensorTerms{{b.nh(x[0]), b.th(x[1])}}; });
}

RegElement SmashCochains::restrict_ttt(const RegElement& f) const {
    const Basis b{s_, a_->k()};
    return pullback_fn(f, ct_->space(3), [&](const auto& x) { return TensorTerms{{b.th(x[0]), b.th(x[1]), b.th(x[2])}}; });
}

// ---------------------------------------------------------------------------
// Normalization through the crossed product

Normalization normalize_cocycle(const SmashCochains& sc, const RegElement& f) {
    const CochainComplex& ch = sc.on_h();
    require(ch.degree(f) == 2, ErrorCode::ShapeMismatch, "normalize_cocycle expects a 2-cochain on H");
    const auto chk = is_cocycle(ch, f);
    if (!chk.ok) raise(ErrorCode::NotACocycle, "input fails the 2-cocycle identity");
    const SmashData& s = sc.smash();
    const HopfData& h = *s.h;
    const AlgebraData& a = *sc.coeff();
    const Field& k = a.k();
    const Basis b{s, k};
    const std::size_t nh = h.dim();

    // make f(1 (x) 1) = 1 first; the crossed product needs a normalized cocycle
    const std::size_t one = h.unit_basis();
    const auto f11inv = a.inverse(f.value(f.space().encode({one, one})));
    if (!f11inv) raise(ErrorCode::NotInvertible, "f(1 (x) 1) is not a unit");
    RegElement w0 = ch.unit(1);
    for (std::size_t x = 0; x < nh; ++x) w0.set(x, a.scale(h.counit(x), *f11inv));
    const RegElement f0 = convolve(f, ch.differential(w0));

    std::vector<Vec> fv(nh * nh);
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j) fv[i * nh + j] = f0.value(f0.space().encode({i, j}));
    const CrossedProduct cp = crossed_product_algebra(a, h, fv);
    const auto& kk = cp.k;
    const auto h1 = ch.space(1), h2 = ch.space(2);

    std::vector<Scalar> chi_v, chip_v;
    for (std::size_t x = 0; x < nh; ++x) {
        const Vec c = cp.section(h.basis(x));
        chi_v.insert(chi_v.end(), c.begin(), c.end());
    }
    for (std::size_t i = 0; i < s.n->dim(); ++i)
        for (std::size_t j = 0; j < s.t->dim(); ++j) {
            const Vec c = kk->mul(cp.section(b.nh(i)), cp.section(b.th(j)));
            chip_v.insert(chip_v.end(), c.begin(), c.end());
        }
    const RegElement chi(h1, kk, std::move(chi_v));
    const RegElement chip(h1, kk, std::move(chip_v));
    const RegElement chip_inv = conv_inverse(chip);

    const RegElement left = pullback_fn(chip, h2, [&](const auto& x) { return TensorTerms{{scaled(k, h.counit(x[1]), b.hb(x[0]))}}; });
    const RegElement right = pullback_fn(chip, h2, [&](const auto& x) { return TensorTerms{{scaled(k, h.counit(x[0]), b.hb(x[1]))}}; });
    const RegElement prod = pullback_fn(chip_inv, h2, [&](const auto& x) { return TensorTerms{{b.hmul(b.hb(x[0]), b.hb(x[1]))}}; });
    const RegElement fk = convolve(convolve(left, right), prod);

    auto project = [&](const RegElement& g, SlotSpace::Ptr space) {
        RegElement out = RegElement::unit(space, sc.coeff());
        for (std::size_t x = 0; x < space->size(); ++x) {
            const auto v = cp.coinvariant_part(g.value(x));
            if (!v) raise(ErrorCode::InvalidWitness, "crossed-product value outside A (x) 1");
            out.set(x, *v);
        }
        return out;
    };
    RegElement fprime = project(fk, h2);
    const RegElement w1 = project(convolve(conv_inverse(chi), chip), h1);

    require(convolve(f0, ch.differential(w1)) == fprime, ErrorCode::InvalidWitness, "normalized cocycle differs from f * delta w");
    const RegElement w = convolve(w0, w1);
    require(convolve(f, ch.differential(w)) == fprime, ErrorCode::InvalidWitness, "composite witness fails");
    require(sc.restrict_nt(fprime).is_unit(), ErrorCode::InvalidWitness, "normalized cocycle is not trivial on N (x) T");
    return {std::move(fprime), w};
}

// ---------------------------------------------------------------------------
// Identities of normalized cocycles

CheckReport check_normalized_identities(const SmashCochains& sc, const RegElement& f) {
    const SmashData& s = sc.smash();
    const Field& k = sc.coeff()->k();
    const Basis b{s, k};
    CheckReport r;

    {  // f(nt (x) h') = sum f(t_1 (x) h'_1) f(n (x) t_2 h'_2)
        const auto sp = sc.space("NTH");
        const auto lhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nt(x[0], x[1]), b.hb(x[2])}}; });
        const auto f1 = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{scaled(k, b.en(x[0]), b.th(x[1])), b.hb(x[2])}}; });
        const auto f2 = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nh(x[0]), b.hmul(b.th(x[1]), b.hb(x[2]))}}; });
        r.items.push_back(compare_item("split_left", lhs, convolve(f1, f2)));
    }
    {  // f(nt (x) t') = eps(n) f(t (x) t')
        const auto sp = sc.space("NTT");
        const auto lhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nt(x[0], x[1]), b.th(x[2])}}; });
        const auto rhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{scaled(k, b.en(x[0]), b.th(x[1])), b.th(x[2])}}; });
        r.items.push_back(compare_item("n_t_on_t", lhs, rhs));
    }
    {  // f(h (x) n't') = sum f(h_1 (x) n'_1) f(h_2 n'_2 (x) t')
        const auto sp = sc.space("HNT");
        const auto lhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.hb(x[0]), b.nt(x[1], x[2])}}; });
        const auto f1 = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.hb(x[0]), scaled(k, b.et(x[2]), b.nh(x[1]))}}; });
        const auto f2 = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.hmul(b.hb(x[0]), b.nh(x[1])), b.th(x[2])}}; });
        r.items.push_back(compare_item("split_right", lhs, convolve(f1, f2)));
    }
    {  // f(n (x) n't') = f(n (x) n') eps(t')
        const auto sp = sc.space("NNT");
        const auto lhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nh(x[0]), b.nt(x[1], x[2])}}; });
        const auto rhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nh(x[0]), scaled(k, b.et(x[2]), b.nh(x[1]))}}; });
        r.items.push_back(compare_item("n_on_n_t", lhs, rhs));
    }
    {  // f(nt (x) n't') = sum f(t_1 (x) t') f(t_2 (x) n'_1) f(n (x) t_3(n'_2))
        const auto sp = sc.space("NTNT");
        const auto lhs = pullback_fn(f, sp, [&](const auto& x) { return TensorTerms{{b.nt(x[0], x[1]), b.nt(x[2], x[3])}}; });
        const auto f1 = pullback_fn(f, sp, [&](const auto& x) {
            return TensorTerms{{scaled(k, k.mul(b.en(x[0]), b.en(x[2])), b.th(x[1])), b.th(x[3])}};
        });
        const auto f2 = pullback_fn(f, sp, [&](const auto& x) {
            return TensorTerms{{scaled(k, b.en(x[0]), b.th(x[1])), scaled(k, b.et(x[3]), b.nh(x[2]))}};
        });
        const auto f3 = pullback_fn(f, sp, [&](const auto& x) {
            return TensorTerms{{b.nh(x[0]), scaled(k, b.et(x[3]), b.embed_n(b.act(x[1], x[2])))}};
        });
        r.items.push_back(compare_item("product", lhs, convolve(convolve(f1, f2), f3)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Assembly from components

RegElement twist(const SmashCochains& sc, const RegElement& fnn) {
    const SmashData& s = sc.smash();
    const Field& k = sc.coeff()->k();
    const Basis b{s, k};
    return pullback_fn(fnn, sc.over_t().space(2), [&](const auto& x) {
        TensorTerms out;
        for (const auto& ct : s.t->coproduct(x[0])) out.push_back({scaled(k, ct.coeff, b.act(ct.left, x[1])), b.act(ct.right, x[2])});
        return out;
    });
}

RegElement stability_defect(const SmashCochains& sc, const RegElement& fnn) {
    const Field& k = sc.coeff()->k();
    const Basis b{sc.smash(), k};
    const auto lifted = pullback_fn(fnn, sc.over_t().space(2), [&](const auto& x) {
        return TensorTerms{{scaled(k, b.et(x[0]), b.nb(x[1])), b.nb(x[2])}};
    });
    return convolve(lifted, twist(sc, conv_inverse(fnn)));
}

RegElement assemble_raw(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn) {
    const Field& k = sc.coeff()->k();
    const Basis b{sc.smash(), k};
    const auto sp = sc.space("NTNT");
    const auto f1 = pullback_fn(ftt, sp, [&](const auto& x) {
        return TensorTerms{{scaled(k, k.mul(b.en(x[0]), b.en(x[2])), b.tb(x[1])), b.tb(x[3])}};
    });
    const auto f2 = pullback_fn(ftn, sp, [&](const auto& x) {
        return TensorTerms{{scaled(k, k.mul(b.en(x[0]), b.et(x[3])), b.tb(x[1])), b.nb(x[2])}};
    });
    const auto f3 = pullback_fn(fnn, sp, [&](const auto& x) {
        return TensorTerms{{scaled(k, b.et(x[3]), b.nb(x[0])), b.act(x[1], x[2])}};
    });
    // N T N T and H H share the row-major index of (n # t, n' # t')
    return RegElement(sc.on_h().space(2), sc.coeff(), convolve(convolve(f1, f2), f3).values());
}

CheckReport check_components(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn) {
    const Field& k = sc.coeff()->k();
    const Basis b{sc.smash(), k};
    CheckReport r;
    require(sc.on_n().degree(fnn) == 2 && sc.on_t().degree(ftt) == 2 && sc.over_t().degree(ftn) == 1,
            ErrorCode::ShapeMismatch, "components must live on N(x)N, T(x)T and T(x)N");

    r.items.push_back(compare_item("trivial_on_nt", sc.restrict_nt(assemble_raw(sc, fnn, ftt, ftn)), RegElement::unit(sc.space("NT"), sc.coeff())));

    auto cocycle_item = [&](std::string name, const CochainComplex& c, const RegElement& f) {
        CheckItem it{std::move(name), true, {}, {}};
        const auto chk = is_cocycle(c, f);
        if (!chk.ok) {
            it.passed = false;
            it.witness = chk.witness;
            it.detail = "not a 2-cocycle";
        } else if (!f.is_normalized(c.active_slots(2))) {
            it.passed = false;
            it.detail = "not normalized";
        } else if (!try_conv_inverse(f)) {
            it.passed = false;
            it.detail = "not invertible";
        }
        return it;
    };
    r.items.push_back(cocycle_item("n_cocycle", sc.on_n(), fnn));
    r.items.push_back(cocycle_item("t_cocycle", sc.on_t(), ftt));

    {  // g(tt' (x) n') = sum g(t'_1 (x) n'_1) g(t (x) t'_2(n'_2))
        const auto sp = sc.space("TTN");
        const auto lhs = pullback_fn(ftn, sp, [&](const auto& x) { return TensorTerms{{b.tmul(x[0], x[1]), b.nb(x[2])}}; });
        const auto g1 = pullback_fn(ftn, sp, [&](const auto& x) { return TensorTerms{{scaled(k, b.et(x[0]), b.tb(x[1])), b.nb(x[2])}}; });
        const auto g2 = pullback_fn(ftn, sp, [&](const auto& x) { return TensorTerms{{b.tb(x[0]), b.act(x[1], x[2])}}; });
        r.items.push_back(compare_item("t_multiplicative", lhs, convolve(g1, g2)));
    }
    if (!try_conv_inverse(ftn) || !try_conv_inverse(fnn)) {
        r.items.push_back({"stability", false, {}, "components not invertible"});
    } else {
        r.items.push_back(compare_item("stability", stability_defect(sc, fnn), sc.over_t().differential(ftn)));
    }
    return r;
}

RegElement assemble_normalized(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn) {
    const CheckReport r = check_components(sc, fnn, ftt, ftn);
    for (const char* name : {"n_cocycle", "t_cocycle", "t_multiplicative", "stability", "trivial_on_nt"}) {
        const CheckItem* it = r.find(name);
        if (it->passed) continue;
        std::string where;
        for (std::size_t v : it->witness) where += (where.empty() ? "" : ",") + std::to_string(v);
        raise(ErrorCode::ComponentConditionFailed,
              "component condition " + std::string(name) + " fails" + (where.empty() ? "" : " at (" + where + ")") +
                  (it->detail.empty() ? "" : ": " + it->detail));
    }
    RegElement f = assemble_raw(sc, fnn, ftt, ftn);
    require(is_cocycle(sc.on_h(), f).ok, ErrorCode::InvalidWitness, "assembled map is not a cocycle");
    require(sc.restrict_nn(f) == fnn && sc.restrict_tt(f) == ftt && sc.restrict_tn(f) == ftn, ErrorCode::InvalidWitness,
            "assembled cocycle does not restrict to its components");
    return f;
}

}  // namespace hacoh
