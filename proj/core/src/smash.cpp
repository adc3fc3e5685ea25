#include "hacoh/smash.hpp"

#include <utility>

namespace hacoh {

namespace {

using Failure = std::optional<std::vector<std::size_t>>;

void axpy(const Field& f, Vec& y, Scalar c, const SparseVec& x) {
    for (const auto& t : x) y[t.index] = f.add(y[t.index], f.mul(c, t.coeff));
}

Vec to_dense(std::size_t n, const SparseVec& x) {
    Vec v(n, 0);
    for (const auto& t : x) v[t.index] = t.coeff;
    return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// ActionData

ActionData ActionData::left(HopfData::Ptr actor, HopfData::Ptr target, std::vector<Scalar> map) {
    require(actor->k().spec() == target->k().spec(), ErrorCode::FieldMismatch, "action between different fields");
    const std::size_t nt = actor->dim(), nn = target->dim();
    require(map.size() == nt * nn * nn, ErrorCode::DimensionMismatch, "action tensor size mismatch");
    ActionData a;
    a.side_ = ActionSide::LeftOnBialgebra;
    a.actor_ = std::move(actor);
    a.target_hopf_ = std::move(target);
    a.target_alg_ = a.target_hopf_->algebra();
    a.map_ = std::move(map);
    a.build();
    return a;
}

ActionData ActionData::trivial_left(HopfData::Ptr actor, HopfData::Ptr target) {
    const std::size_t nt = actor->dim(), nn = target->dim();
    std::vector<Scalar> map(nt * nn * nn, 0);
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t n = 0; n < nn; ++n) map[(t * nn + n) * nn + n] = actor->counit(t);
    return left(std::move(actor), std::move(target), std::move(map));
}

ActionData ActionData::from_group_action(HopfData::Ptr actor, HopfData::Ptr target, const GroupAction& g) {
    const std::size_t nt = actor->dim(), nn = target->dim();
    require(g.actor().order() == nt && g.target().order() == nn, ErrorCode::DimensionMismatch,
            "group action does not match the Hopf algebra dimensions");
    require(extract_group(*actor) == g.actor() && extract_group(*target) == g.target(), ErrorCode::ActionInvalid,
            "group action tables do not match the group-like bases");
    std::vector<Scalar> map(nt * nn * nn, 0);
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t n = 0; n < nn; ++n) map[(t * nn + n) * nn + g.apply(t, n)] = 1;
    return left(std::move(actor), std::move(target), std::move(map));
}

ActionData ActionData::right(HopfData::Ptr actor, AlgebraData::Ptr target, std::vector<Scalar> map) {
    require(actor->k().spec() == target->k().spec(), ErrorCode::FieldMismatch, "action between different fields");
    const std::size_t nh = actor->dim(), na = target->dim();
    require(map.size() == na * nh * na, ErrorCode::DimensionMismatch, "action tensor size mismatch");
    ActionData a;
    a.side_ = ActionSide::RightOnAlgebra;
    a.actor_ = std::move(actor);
    a.target_alg_ = std::move(target);
    a.map_ = std::move(map);
    a.build();
    return a;
}

ActionData ActionData::trivial_right(HopfData::Ptr actor, AlgebraData::Ptr target) {
    const std::size_t nh = actor->dim(), na = target->dim();
    std::vector<Scalar> map(na * nh * na, 0);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t h = 0; h < nh; ++h) map[(a * nh + h) * na + a] = actor->counit(h);
    return right(std::move(actor), std::move(target), std::move(map));
}

void ActionData::build() {
    const std::size_t nt = actor_->dim(), nn = target_dim();
    cache_.assign(nt * nn, {});
    trivial_ = true;
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t n = 0; n < nn; ++n) {
            auto& out = cache_[t * nn + n];
            for (std::size_t k = 0; k < nn; ++k) {
                const Scalar c = side_ == ActionSide::LeftOnBialgebra ? map_[(t * nn + n) * nn + k] : map_[(n * nt + t) * nn + k];
                if (c != 0) out.push_back({static_cast<std::uint32_t>(k), c});
                const Scalar expect = k == n ? actor_->counit(t) : 0;
                if (c != expect) trivial_ = false;
            }
        }
}

const HopfData::Ptr& ActionData::target_hopf() const {
    require(side_ == ActionSide::LeftOnBialgebra, ErrorCode::ActionInvalid, "right actions act on algebras");
    return target_hopf_;
}

Vec ActionData::act_dense(const Vec& t, const Vec& n) const {
    const Field& f = actor_->k();
    Vec out(target_dim(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == 0) continue;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (n[j] != 0) axpy(f, out, f.mul(t[i], n[j]), act(i, j));
    }
    return out;
}

CheckReport verify_action(const ActionData& act) {
    const HopfData& t = *act.actor();
    const AlgebraData& n = *act.target_algebra();
    const Field& f = t.k();
    const std::size_t nt = t.dim(), nn = n.dim();
    CheckReport r;

    Failure unit;
    for (std::size_t x = 0; x < nn && !unit; ++x)
        if (act.act_dense(t.tables().unit, to_dense(nn, {{static_cast<std::uint32_t>(x), 1}})) != to_dense(nn, {{static_cast<std::uint32_t>(x), 1}}))
            unit = {{x}};
    r.add("unit_acts_trivially", unit);

    // left: (tt')(n) = t(t'(n)); right: (a^t)^{t'} = a^{tt'}
    Failure comp;
    for (std::size_t a = 0; a < nt && !comp; ++a)
        for (std::size_t b = 0; b < nt && !comp; ++b)
            for (std::size_t x = 0; x < nn && !comp; ++x) {
                Vec lhs(nn, 0), rhs(nn, 0);
                for (const auto& p : t.product(a, b)) axpy(f, lhs, p.coeff, act.act(p.index, x));
                if (act.side() == ActionSide::LeftOnBialgebra) {
                    for (const auto& y : act.act(b, x)) axpy(f, rhs, y.coeff, act.act(a, y.index));
                } else {
                    for (const auto& y : act.act(a, x)) axpy(f, rhs, y.coeff, act.act(b, y.index));
                }
                if (lhs != rhs) comp = {{a, b, x}};
            }
    r.add("composition", comp);

    // t(n n') = sum t_1(n) t_2(n')
    Failure alg;
    for (std::size_t a = 0; a < nt && !alg; ++a)
        for (std::size_t x = 0; x < nn && !alg; ++x)
            for (std::size_t y = 0; y < nn && !alg; ++y) {
                Vec lhs(nn, 0), rhs(nn, 0);
                for (const auto& p : n.product(x, y)) axpy(f, lhs, p.coeff, act.act(a, p.index));
                for (const auto& c : t.coproduct(a)) {
                    const Vec prod = n.mul(to_dense(nn, act.act(c.left, x)), to_dense(nn, act.act(c.right, y)));
                    for (std::size_t k = 0; k < nn; ++k) rhs[k] = f.add(rhs[k], f.mul(c.coeff, prod[k]));
                }
                if (lhs != rhs) alg = {{a, x, y}};
            }
    r.add("module_algebra", alg);

    Failure unit_pres;
    for (std::size_t a = 0; a < nt && !unit_pres; ++a) {
        Vec ta(nt, 0);
        ta[a] = 1;
        if (act.act_dense(ta, n.one()) != n.scale(t.counit(a), n.one())) unit_pres = {{a}};
    }
    r.add("unit_preserved", unit_pres);

    if (act.side() == ActionSide::LeftOnBialgebra) {
        const HopfData& nh = *act.target_hopf();
        Failure coalg, counit;
        for (std::size_t a = 0; a < nt; ++a)
            for (std::size_t x = 0; x < nn; ++x) {
                const SparseVec& tx = act.act(a, x);
                if (!coalg) {
                    Vec lhs(nn * nn, 0), rhs(nn * nn, 0);
                    for (const auto& y : tx)
                        for (const auto& c : nh.coproduct(y.index)) {
                            auto& s = lhs[c.left * nn + c.right];
                            s = f.add(s, f.mul(y.coeff, c.coeff));
                        }
                    for (const auto& ct : t.coproduct(a))
                        for (const auto& cn : nh.coproduct(x))
                            for (const auto& l : act.act(ct.left, cn.left))
                                for (const auto& rr : act.act(ct.right, cn.right)) {
                                    auto& s = rhs[l.index * nn + rr.index];
                                    s = f.add(s, f.mul(f.mul(ct.coeff, cn.coeff), f.mul(l.coeff, rr.coeff)));
                                }
                    if (lhs != rhs) coalg = {{a, x}};
                }
                if (!counit && nh.counit_of(to_dense(nn, tx)) != f.mul(t.counit(a), nh.counit(x))) counit = {{a, x}};
            }
        r.add("module_coalgebra", coalg);
        r.add("counit_preserved", counit);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Smash product

SmashData smash_product(HopfData::Ptr n, HopfData::Ptr t, const ActionData& act) {
    require(act.side() == ActionSide::LeftOnBialgebra, ErrorCode::ActionInvalid, "smash product needs a left action");
    require(n->k().spec() == t->k().spec(), ErrorCode::FieldMismatch, "smash product of Hopf algebras over different fields");
    require(act.actor()->dim() == t->dim() && act.target_hopf()->dim() == n->dim(), ErrorCode::ActionInvalid,
            "action does not connect the given Hopf algebras");
    const auto report = verify_action(act);
    require(report.ok(), ErrorCode::ActionInvalid, "action axioms fail:\n" + report.to_string());

    const Field& f = n->k();
    const std::size_t nn = n->dim(), nt = t->dim(), dim = nn * nt;
    require(dim <= HopfData::kMaxDim, ErrorCode::DimensionMismatch, "smash product exceeds the supported dimension");
    auto idx = [nt](std::size_t i, std::size_t j) { return i * nt + j; };

    HopfData::Tables tab;
    tab.name = n->name() + "#" + t->name();
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nt; ++j) tab.labels.push_back(n->labels()[i] + "#" + t->labels()[j]);
    tab.mult.assign(dim * dim * dim, 0);
    tab.comult.assign(dim * dim * dim, 0);
    tab.unit.assign(dim, 0);
    tab.counit.assign(dim, 0);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            const std::size_t x = idx(i, j);
            tab.unit[x] = f.mul(n->tables().unit[i], t->tables().unit[j]);
            tab.counit[x] = f.mul(n->counit(i), t->counit(j));
            // (n # t)(n' # t') = sum n t_1(n') # t_2 t'
            for (std::size_t k = 0; k < nn; ++k)
                for (std::size_t l = 0; l < nt; ++l) {
                    const std::size_t y = idx(k, l);
                    for (const auto& c : t->coproduct(j))
                        for (const auto& moved : act.act(c.left, k))
                            for (const auto& pn : n->product(i, moved.index))
                                for (const auto& pt : t->product(c.right, l)) {
                                    auto& s = tab.mult[(x * dim + y) * dim + idx(pn.index, pt.index)];
                                    s = f.add(s, f.mul(f.mul(c.coeff, moved.coeff), f.mul(pn.coeff, pt.coeff)));
                                }
                }
            for (const auto& cn : n->coproduct(i))
                for (const auto& ct : t->coproduct(j)) {
                    auto& s = tab.comult[(x * dim + idx(cn.left, ct.left)) * dim + idx(cn.right, ct.right)];
                    s = f.add(s, f.mul(cn.coeff, ct.coeff));
                }
        }
    auto bialgebra = HopfData::make(n->field(), std::move(tab));
    auto s = antipode_from_bialgebra(*bialgebra);
    require(s.has_value(), ErrorCode::ActionInvalid, "smash product admits no antipode");
    auto h = bialgebra->with_antipode(std::move(s));
    const auto hr = verify_hopf(*h);
    require(hr.ok(), ErrorCode::ActionInvalid, "smash product fails the Hopf axioms:\n" + hr.to_string());

    SmashData out{n, t, act, h, FieldMatrix(dim, nn, 0), FieldMatrix(dim, nt, 0), FieldMatrix(nt, dim, 0), FieldMatrix(nn, dim, 0)};
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            const std::size_t x = idx(i, j);
            out.embed_n(x, i) = t->tables().unit[j];
            out.embed_t(x, j) = n->tables().unit[i];
            out.project_t(j, x) = n->counit(i);
            out.project_n(i, x) = t->counit(j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Crossed product

Vec CrossedProduct::section(const Vec& h) const {
    const Field& f = k->k();
    Vec out(dim_a * dim_h, 0);
    for (std::size_t j = 0; j < dim_h; ++j) {
        if (h[j] == 0) continue;
        for (std::size_t a = 0; a < dim_a; ++a) out[index(a, j)] = f.mul(h[j], a_unit[a]);
    }
    return out;
}

std::vector<Vec> CrossedProduct::coaction(const HopfData& h, std::size_t k_index) const {
    const std::size_t a = k_index / dim_h, j = k_index % dim_h;
    std::vector<Vec> out(dim_h, Vec(dim_a * dim_h, 0));
    for (const auto& c : h.coproduct(j)) out[c.right][index(a, c.left)] = h.k().add(out[c.right][index(a, c.left)], c.coeff);
    return out;
}

std::optional<Vec> CrossedProduct::coinvariant_part(const Vec& x) const {
    const Field& f = k->k();
    std::size_t pivot = 0;
    while (pivot < dim_h && h_unit[pivot] == 0) ++pivot;
    const Scalar inv = f.inv(h_unit[pivot]);
    Vec alpha(dim_a);
    for (std::size_t a = 0; a < dim_a; ++a) alpha[a] = f.mul(x[index(a, pivot)], inv);
    for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t j = 0; j < dim_h; ++j)
            if (x[index(a, j)] != f.mul(alpha[a], h_unit[j])) return std::nullopt;
    return alpha;
}

CrossedProduct crossed_product_algebra(const AlgebraData& a, const HopfData& h, const std::vector<Vec>& f) {
    require(a.k().spec() == h.k().spec(), ErrorCode::FieldMismatch, "crossed product over different fields");
    const std::size_t na = a.dim(), nh = h.dim(), dim = na * nh;
    require(f.size() == nh * nh, ErrorCode::ShapeMismatch, "2-cochain has the wrong number of values");
    for (const auto& v : f) require(v.size() == na, ErrorCode::ShapeMismatch, "2-cochain value has the wrong dimension");
    const Field& k = a.k();

    AlgebraData::Tables tab;
    tab.name = a.name() + "#_f " + h.name();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) tab.labels.push_back(a.labels()[i] + "⊗" + h.labels()[j]);
    tab.mult.assign(dim * dim * dim, 0);
    tab.unit.assign(dim, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nh; ++j) tab.unit[i * nh + j] = k.mul(a.tables().unit[i], h.tables().unit[j]);
    // (a (x) h)(b (x) h') = sum a b f(h_1 (x) h'_1) (x) h_2 h'_2
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            const std::size_t ia = x / nh, ih = x % nh, ib = y / nh, jh = y % nh;
            Vec ab(na, 0);
            for (const auto& p : a.product(ia, ib)) ab[p.index] = p.coeff;
            for (const auto& c1 : h.coproduct(ih))
                for (const auto& c2 : h.coproduct(jh)) {
                    const Vec af = a.mul(ab, f[c1.left * nh + c2.left]);
                    const Scalar c = k.mul(c1.coeff, c2.coeff);
                    for (const auto& ph : h.product(c1.right, c2.right))
                        for (std::size_t r = 0; r < na; ++r) {
                            if (af[r] == 0) continue;
                            auto& s = tab.mult[(x * dim + y) * dim + r * nh + ph.index];
                            s = k.add(s, k.mul(c, k.mul(ph.coeff, af[r])));
                        }
                }
        }
    auto kp = AlgebraData::make(a.field(), std::move(tab));
    const auto report = verify_algebra(*kp);
    if (const auto* assoc = report.find("associativity"); !assoc->passed) {
        std::string w;
        for (auto v : assoc->witness) w += (w.empty() ? "" : ", ") + kp->labels()[v];
        raise(ErrorCode::NotACocycle, "crossed product is not associative at (" + w + ")");
    }
    require(report.find("unit")->passed, ErrorCode::NotNormalized, "1 (x) 1 is not a unit of the crossed product");
    return CrossedProduct{kp, na, nh, a.tables().unit, h.tables().unit};
}

}  // namespace hacoh
