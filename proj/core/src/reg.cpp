#include "hacoh/reg.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>

namespace hacoh {

namespace {

void accumulate(const Field& k, SparseVec& v, std::uint32_t index, Scalar c) {
    if (c == 0) return;
    for (auto& t : v)
        if (t.index == index) {
            t.coeff = k.add(t.coeff, c);
            return;
        }
    v.push_back({index, c});
}

void prune(SparseVec& v) {
    std::erase_if(v, [](const Term& t) { return t.coeff == 0; });
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
}

}  // namespace

// ---------------------------------------------------------------------------
// SlotSpace

SlotSpace::Ptr SlotSpace::make(Field::Ptr field, std::vector<HopfData::Ptr> slots) {
    std::shared_ptr<SlotSpace> s(new SlotSpace());
    for (const auto& h : slots)
        require(h->k().spec() == field->spec(), ErrorCode::FieldMismatch, "slot " + h->name() + " is over another field");
    s->field_ = std::move(field);
    s->slots_ = std::move(slots);
    const std::size_t r = s->slots_.size();
    s->dims_.resize(r);
    s->strides_.resize(r);
    std::size_t size = 1;
    for (std::size_t i = r; i-- > 0;) {
        s->dims_[i] = s->slots_[i]->dim();
        s->strides_[i] = size;
        size *= s->dims_[i];
    }
    s->size_ = size;
    require(size <= (std::size_t{1} << 22), ErrorCode::EnumerationInfeasible, "slot tensor too large");

    const Field& k = *s->field_;
    s->coproducts_.resize(size);
    s->counits_.resize(size);
    s->group_like_.resize(size);
    for (std::size_t x = 0; x < size; ++x) {
        std::vector<Split> acc{{0, 0, k.one()}};
        Scalar eps = k.one();
        bool gl = true;
        for (std::size_t i = 0; i < r; ++i) {
            const HopfData& h = *s->slots_[i];
            const std::size_t xi = (x / s->strides_[i]) % s->dims_[i];
            eps = k.mul(eps, h.counit(xi));
            gl = gl && h.group_like()[xi];
            std::vector<Split> next;
            next.reserve(acc.size() * h.coproduct(xi).size());
            for (const auto& a : acc)
                for (const auto& ct : h.coproduct(xi))
                    next.push_back({static_cast<std::uint32_t>(a.left + ct.left * s->strides_[i]),
                                    static_cast<std::uint32_t>(a.right + ct.right * s->strides_[i]),
                                    k.mul(a.coeff, ct.coeff)});
            acc = std::move(next);
        }
        s->coproducts_[x] = std::move(acc);
        s->counits_[x] = eps;
        s->group_like_[x] = gl;
    }
    return s;
}

std::vector<std::size_t> SlotSpace::decode(std::size_t x) const {
    std::vector<std::size_t> out(arity());
    for (std::size_t i = 0; i < arity(); ++i) out[i] = component(x, i);
    return out;
}

std::size_t SlotSpace::encode(const std::vector<std::size_t>& idx) const {
    require(idx.size() == arity(), ErrorCode::ShapeMismatch, "wrong number of slot indices");
    std::size_t x = 0;
    for (std::size_t i = 0; i < arity(); ++i) {
        require(idx[i] < dims_[i], ErrorCode::ShapeMismatch, "slot index out of range");
        x += idx[i] * strides_[i];
    }
    return x;
}

// ---------------------------------------------------------------------------
// RegElement

RegElement::RegElement(SlotSpace::Ptr space, AlgebraData::Ptr coeff, std::vector<Scalar> values)
    : space_(std::move(space)), coeff_(std::move(coeff)), values_(std::move(values)) {
    require(values_.size() == space_->size() * coeff_->dim(), ErrorCode::ShapeMismatch,
            "expected " + std::to_string(space_->size() * coeff_->dim()) + " coefficients, got " +
                std::to_string(values_.size()));
    require(coeff_->k().spec() == space_->k().spec(), ErrorCode::FieldMismatch, "coefficient algebra over another field");
}

RegElement RegElement::unit(SlotSpace::Ptr space, AlgebraData::Ptr coeff) {
    const std::size_t d = coeff->dim();
    std::vector<Scalar> v(space->size() * d, 0);
    const Field& k = coeff->k();
    const Vec one = coeff->one();
    for (std::size_t x = 0; x < space->size(); ++x) {
        const Scalar e = space->counit(x);
        if (e == 0) continue;
        for (std::size_t i = 0; i < d; ++i) v[x * d + i] = k.mul(e, one[i]);
    }
    return RegElement(std::move(space), std::move(coeff), std::move(v));
}

Vec RegElement::value(std::size_t x) const {
    const std::size_t d = coeff_->dim();
    return Vec(values_.begin() + static_cast<std::ptrdiff_t>(x * d),
               values_.begin() + static_cast<std::ptrdiff_t>((x + 1) * d));
}

void RegElement::set(std::size_t x, const Vec& v) {
    const std::size_t d = coeff_->dim();
    require(v.size() == d && x < space_->size(), ErrorCode::ShapeMismatch, "bad value shape");
    std::copy(v.begin(), v.end(), values_.begin() + static_cast<std::ptrdiff_t>(x * d));
}

bool RegElement::is_unit() const { return *this == unit(space_, coeff_); }

bool RegElement::is_normalized(const std::vector<std::size_t>& slots) const {
    const RegElement u = unit(space_, coeff_);
    const std::size_t d = coeff_->dim();
    for (std::size_t x = 0; x < space_->size(); ++x) {
        bool hit = false;
        for (std::size_t s : slots) {
            const auto ui = space_->slot(s).unit_index();
            if (ui && space_->component(x, s) == *ui) hit = true;
        }
        if (!hit) continue;
        for (std::size_t i = 0; i < d; ++i)
            if (values_[x * d + i] != u.values_[x * d + i]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Convolution

namespace {

void check_compatible(const RegElement& f, const RegElement& g) {
    require(f.space().same_as(g.space()), ErrorCode::ShapeMismatch, "convolution of maps on different tensors");
    require(f.coeff_ptr() == g.coeff_ptr() || f.coeff().tables().mult == g.coeff().tables().mult,
            ErrorCode::ShapeMismatch, "convolution of maps into different algebras");
}

/// Matrix of b -> a b on A.
FieldMatrix left_mult(const AlgebraData& a, const Scalar* av) {
    const Field& k = a.k();
    const std::size_t d = a.dim();
    FieldMatrix m(d, d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (av[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : a.product(i, j)) m(t.index, j) = k.add(m(t.index, j), k.mul(av[i], t.coeff));
    }
    return m;
}

}  // namespace

RegElement convolve(const RegElement& f, const RegElement& g) {
    check_compatible(f, g);
    const SlotSpace& s = f.space();
    const AlgebraData& a = f.coeff();
    const Field& k = a.k();
    const std::size_t d = a.dim();
    const auto& fv = f.values();
    const auto& gv = g.values();
    std::vector<Scalar> out(s.size() * d, 0);
    for (std::size_t x = 0; x < s.size(); ++x) {
        Scalar* o = out.data() + x * d;
        for (const auto& sp : s.coproduct(x)) {
            const Scalar* l = fv.data() + std::size_t{sp.left} * d;
            const Scalar* r = gv.data() + std::size_t{sp.right} * d;
            if (d == 1) {
                o[0] = k.add(o[0], k.mul(sp.coeff, k.mul(l[0], r[0])));
                continue;
            }
            for (std::size_t i = 0; i < d; ++i) {
                if (l[i] == 0) continue;
                const Scalar ci = k.mul(sp.coeff, l[i]);
                for (std::size_t j = 0; j < d; ++j) {
                    if (r[j] == 0) continue;
                    const Scalar cij = k.mul(ci, r[j]);
                    for (const auto& t : a.product(i, j)) o[t.index] = k.add(o[t.index], k.mul(cij, t.coeff));
                }
            }
        }
    }
    return RegElement(f.space_ptr(), f.coeff_ptr(), std::move(out));
}

RegElement convolve_all(const std::vector<RegElement>& factors) {
    require(!factors.empty(), ErrorCode::ShapeMismatch, "empty convolution");
    RegElement acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = convolve(acc, factors[i]);
    return acc;
}

std::optional<RegElement> try_conv_inverse(const RegElement& f) {
    const SlotSpace& s = f.space();
    const AlgebraData& a = f.coeff();
    const Field& k = a.k();
    const std::size_t d = a.dim();
    const std::size_t n = s.size();

    // The system f * g = eta eps splits along the components of x ~ x_(2).
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (const auto& sp : s.coproduct(x)) parent[find(x)] = find(sp.right);

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t x = 0; x < n; ++x) comps[find(x)].push_back(x);

    const Vec one = a.one();
    std::vector<Scalar> g(n * d, 0);
    for (const auto& [root, members] : comps) {
        if (members.size() == 1 && d == 1) {
            const std::size_t x = members[0];
            Scalar coef = 0;
            for (const auto& sp : s.coproduct(x)) coef = k.add(coef, k.mul(sp.coeff, f.values()[sp.left]));
            const Scalar rhs = k.mul(s.counit(x), one[0]);
            if (coef == 0) {
                if (rhs != 0) return std::nullopt;
                continue;
            }
            g[x] = k.div(rhs, coef);
            continue;
        }
        std::map<std::size_t, std::size_t> pos;
        for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = i;
        const std::size_t m = members.size() * d;
        FieldMatrix sys(m, m, 0);
        FieldVector rhs(m, 0);
        for (std::size_t r = 0; r < members.size(); ++r) {
            const std::size_t x = members[r];
            const Scalar e = s.counit(x);
            for (std::size_t i = 0; i < d; ++i) rhs[r * d + i] = k.mul(e, one[i]);
            for (const auto& sp : s.coproduct(x)) {
                const FieldMatrix lm = left_mult(a, f.values().data() + std::size_t{sp.left} * d);
                const std::size_t c = pos.at(sp.right);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        sys(r * d + i, c * d + j) = k.add(sys(r * d + i, c * d + j), k.mul(sp.coeff, lm(i, j)));
            }
        }
        const auto sol = solve_linear(k, sys, rhs);
        if (!sol) return std::nullopt;
        for (std::size_t r = 0; r < members.size(); ++r)
            for (std::size_t i = 0; i < d; ++i) g[members[r] * d + i] = (*sol)[r * d + i];
    }
    RegElement inv(f.space_ptr(), f.coeff_ptr(), std::move(g));
    const RegElement u = RegElement::unit(f.space_ptr(), f.coeff_ptr());
    if (!(convolve(f, inv) == u) || !(convolve(inv, f) == u)) return std::nullopt;
    return inv;
}

RegElement conv_inverse(const RegElement& f) {
    auto inv = try_conv_inverse(f);
    if (!inv) raise(ErrorCode::NotInvertible, "map has no convolution inverse");
    return std::move(*inv);
}

RegElement conv_power(const RegElement& f, std::int64_t e) {
    RegElement base = e < 0 ? conv_inverse(f) : f;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    RegElement acc = RegElement::unit(f.space_ptr(), f.coeff_ptr());
    while (n) {
        if (n & 1) acc = convolve(acc, base);
        n >>= 1;
        if (n) base = convolve(base, base);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Slot maps

Piece Piece::identity(std::size_t in, std::size_t out) {
    return {{in}, {out}, [](const std::vector<std::size_t>& i) {
                return Output{{{static_cast<std::uint32_t>(i[0])}, 1}};
            }};
}

Piece Piece::counit(const HopfData& h, std::size_t in) {
    return {{in}, {}, [&h](const std::vector<std::size_t>& i) {
                const Scalar e = h.counit(i[0]);
                return e == 0 ? Output{} : Output{{{}, e}};
            }};
}

Piece Piece::multiply(const HopfData& h, std::size_t a, std::size_t b, std::size_t out) {
    return {{a, b}, {out}, [&h](const std::vector<std::size_t>& i) {
                Output o;
                for (const auto& t : h.product(i[0], i[1])) o.push_back({{t.index}, t.coeff});
                return o;
            }};
}

Piece Piece::act(const ActionData& action, std::size_t t_in, std::size_t n_in, std::size_t out) {
    require(action.side() == ActionSide::LeftOnBialgebra, ErrorCode::ActionInvalid, "slot maps need a left action");
    return {{t_in, n_in}, {out}, [&action](const std::vector<std::size_t>& i) {
                Output o;
                for (const auto& t : action.act(i[0], i[1])) o.push_back({{t.index}, t.coeff});
                return o;
            }};
}

Piece Piece::linear(const FieldMatrix& m, std::size_t in, std::size_t out) {
    return {{in}, {out}, [m](const std::vector<std::size_t>& i) {
                Output o;
                for (std::size_t r = 0; r < m.rows(); ++r)
                    if (m(r, i[0]) != 0) o.push_back({{static_cast<std::uint32_t>(r)}, m(r, i[0])});
                return o;
            }};
}

SlotMap build_map(SlotSpace::Ptr source, SlotSpace::Ptr target, const std::vector<Piece>& pieces) {
    const Field& k = source->k();
    std::vector<int> written(target->arity(), 0);
    for (const auto& p : pieces) {
        for (std::size_t o : p.outputs) {
            require(o < target->arity(), ErrorCode::ShapeMismatch, "piece writes past the target");
            ++written[o];
        }
        for (std::size_t i : p.inputs) require(i < source->arity(), ErrorCode::ShapeMismatch, "piece reads past the source");
    }
    for (int w : written) require(w == 1, ErrorCode::ShapeMismatch, "every target slot needs exactly one writer");

    SlotMap m{source, target, std::vector<SparseVec>(source->size())};
    std::vector<std::size_t> in;
    for (std::size_t x = 0; x < source->size(); ++x) {
        const auto idx = source->decode(x);
        std::vector<std::pair<std::size_t, Scalar>> acc{{0, k.one()}};
        for (const auto& p : pieces) {
            in.clear();
            for (std::size_t i : p.inputs) in.push_back(idx[i]);
            const auto terms = p.eval(in);
            std::vector<std::pair<std::size_t, Scalar>> next;
            next.reserve(acc.size() * terms.size());
            for (const auto& [y, c] : acc)
                for (const auto& [outs, tc] : terms) {
                    std::size_t yy = y;
                    for (std::size_t j = 0; j < p.outputs.size(); ++j) {
                        std::vector<std::size_t> unitvec(target->arity(), 0);
                        unitvec[p.outputs[j]] = outs[j];
                        yy += target->encode(unitvec);
                    }
                    next.push_back({yy, k.mul(c, tc)});
                }
            acc = std::move(next);
        }
        for (const auto& [y, c] : acc) accumulate(k, m.images[x], static_cast<std::uint32_t>(y), c);
        prune(m.images[x]);
    }
    return m;
}

RegElement pullback(const RegElement& f, const SlotMap& m) {
    require(f.space().same_as(*m.target), ErrorCode::ShapeMismatch, "pullback along a map with another target");
    const Field& k = f.coeff().k();
    const std::size_t d = f.coeff().dim();
    std::vector<Scalar> out(m.source->size() * d, 0);
    for (std::size_t x = 0; x < m.source->size(); ++x)
        for (const auto& t : m.images[x])
            for (std::size_t i = 0; i < d; ++i) {
                const Scalar v = f.values()[std::size_t{t.index} * d + i];
                if (v != 0) out[x * d + i] = k.add(out[x * d + i], k.mul(t.coeff, v));
            }
    return RegElement(m.source, f.coeff_ptr(), std::move(out));
}

RegElement pullback_fn(const RegElement& f, SlotSpace::Ptr source,
                       const std::function<TensorTerms(const std::vector<std::size_t>&)>& phi) {
    const SlotSpace& t = f.space();
    const Field& k = f.coeff().k();
    SlotMap m{source, f.space_ptr(), std::vector<SparseVec>(source->size())};
    for (std::size_t x = 0; x < source->size(); ++x) {
        for (const auto& term : phi(source->decode(x))) {
            require(term.size() == t.arity(), ErrorCode::ShapeMismatch, "tensor term has the wrong number of factors");
            std::vector<std::pair<std::size_t, Scalar>> acc{{0, k.one()}};
            for (std::size_t s = 0; s < t.arity(); ++s) {
                require(term[s].size() == t.slot(s).dim(), ErrorCode::ShapeMismatch, "tensor factor has the wrong length");
                const std::size_t stride = t.stride(s);
                std::vector<std::pair<std::size_t, Scalar>> next;
                for (const auto& [y, c] : acc)
                    for (std::size_t i = 0; i < term[s].size(); ++i)
                        if (term[s][i] != 0) next.push_back({y + i * stride, k.mul(c, term[s][i])});
                acc = std::move(next);
            }
            for (const auto& [y, c] : acc) accumulate(k, m.images[x], static_cast<std::uint32_t>(y), c);
        }
        prune(m.images[x]);
    }
    return pullback(f, m);
}

RegElement act_on_values(const RegElement& f, const ActionData& right, SlotSpace::Ptr space, std::size_t slot) {
    require(right.side() == ActionSide::RightOnAlgebra, ErrorCode::ActionInvalid, "expected a right action on the coefficients");
    require(slot < space->arity() && space->arity() == f.arity() + 1, ErrorCode::ShapeMismatch, "bad action slot");
    require(space->slots()[slot] == right.actor(), ErrorCode::ShapeMismatch, "action slot holds another Hopf algebra");
    for (std::size_t i = 0, j = 0; i < space->arity(); ++i) {
        if (i == slot) continue;
        require(space->slots()[i] == f.space().slots()[j++], ErrorCode::ShapeMismatch, "slot lists differ");
    }
    const Field& k = f.coeff().k();
    const std::size_t d = f.coeff().dim();
    std::vector<Scalar> out(space->size() * d, 0);
    for (std::size_t x = 0; x < space->size(); ++x) {
        auto idx = space->decode(x);
        const std::size_t h = idx[slot];
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(slot));
        const std::size_t y = f.space().encode(idx);
        for (std::size_t a = 0; a < d; ++a) {
            const Scalar v = f.values()[y * d + a];
            if (v == 0) continue;
            for (const auto& t : right.act(h, a)) out[x * d + t.index] = k.add(out[x * d + t.index], k.mul(v, t.coeff));
        }
    }
    return RegElement(std::move(space), f.coeff_ptr(), std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

unsigned worker_count() {
    if (const char* env = std::getenv("HACOH_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CochainGrid::CochainGrid(SlotSpace::Ptr space, AlgebraData::Ptr coeff, const GridSpec& spec)
    : space_(space), coeff_(coeff), base_(RegElement::unit(space, coeff)) {
    std::vector<std::size_t> fixing = spec.normalized_slots;
    if (spec.measuring_slot) fixing.push_back(*spec.measuring_slot);
    std::vector<std::size_t> units;
    for (std::size_t s : fixing) {
        require(s < space->arity(), ErrorCode::ShapeMismatch, "grid slot out of range");
        units.push_back(space->slot(s).unit_basis());
    }

    std::vector<Vec> all, inv;
    if (!coeff->k().is_finite()) {
        // nothing to enumerate; any free entry makes the grid infinite
        for (std::size_t x = 0; x < space->size(); ++x) {
            bool fixed = false;
            for (std::size_t i = 0; i < fixing.size(); ++i)
                if (space->component(x, fixing[i]) == units[i]) fixed = true;
            if (!fixed) free_.push_back(x);
        }
        count_ = free_.empty() ? 1 : std::numeric_limits<std::uint64_t>::max();
        choices_.assign(free_.size(), {});
        return;
    }
    const std::int64_t total = coeff->element_count();
    require(total <= (std::int64_t{1} << 20), ErrorCode::EnumerationInfeasible, "coefficient algebra too large to enumerate");
    for (std::int64_t c = 0; c < total; ++c) {
        Vec v = coeff->decode(c);
        if (coeff->inverse(v)) inv.push_back(v);
        all.push_back(std::move(v));
    }

    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t x = 0; x < space->size(); ++x) {
        bool fixed = false;
        for (std::size_t i = 0; i < fixing.size(); ++i)
            if (space->component(x, fixing[i]) == units[i]) fixed = true;
        if (fixed) continue;
        free_.push_back(x);
        choices_.push_back(spec.units_on_group_like && space->group_like(x) ? inv : all);
        const std::uint64_t c = choices_.back().size();
        count_ = (c == 0 || count_ > cap / c) ? (c == 0 ? 0 : cap) : count_ * c;
        base_.set(x, choices_.back().empty() ? coeff->zero() : choices_.back().front());
    }
}

RegElement CochainGrid::candidate(std::uint64_t index) const {
    RegElement f = base_;
    for (std::size_t i = free_.size(); i-- > 0;) {
        const std::uint64_t c = choices_[i].size();
        f.set(free_[i], choices_[i][index % c]);
        index /= c;
    }
    return f;
}

RegElement CochainGrid::random(std::mt19937_64& rng) const {
    RegElement f = base_;
    for (std::size_t i = 0; i < free_.size(); ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, choices_[i].size() - 1);
        f.set(free_[i], choices_[i][pick(rng)]);
    }
    return f;
}

std::vector<RegElement> enumerate_grid(const CochainGrid& grid, std::uint64_t budget,
                                       const std::function<bool(const RegElement&)>& keep) {
    const std::uint64_t n = grid.count();
    if (n > budget)
        raise(ErrorCode::SearchBudgetExceeded,
              "grid of " + (n == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64") : std::to_string(n)) +
                  " candidates exceeds budget " + std::to_string(budget));
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, n / 64)));
    std::vector<std::vector<RegElement>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
        try {
            const std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
            for (std::uint64_t i = lo; i < hi; ++i) {
                RegElement f = grid.candidate(i);
                if (keep(f)) parts[w].push_back(std::move(f));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<RegElement> out;
    for (auto& p : parts)
        for (auto& f : p) out.push_back(std::move(f));
    return out;
}

}  // namespace hacoh
