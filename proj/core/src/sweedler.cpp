#include "hacoh/sweedler.hpp"

#include <algorithm>

#include "hacoh/bridge.hpp"

namespace hacoh {

// ---------------------------------------------------------------------------
// CochainComplex

CochainComplex::Ptr CochainComplex::make(Layout layout) {
    require(layout.active && layout.coeff, ErrorCode::ShapeMismatch, "complex needs an active Hopf algebra and coefficients");
    require(layout.coeff->is_commutative(), ErrorCode::ValidationError, "coefficient algebra must be commutative");
    switch (layout.last) {
        case LastFactor::Trivial:
            break;
        case LastFactor::Precomposition:
            require(layout.action && layout.action->side() == ActionSide::LeftOnBialgebra && !layout.suffix.empty() &&
                        layout.action->actor() == layout.active && layout.action->target_hopf() == layout.suffix.front(),
                    ErrorCode::ActionInvalid, "precomposition needs a left action of the active algebra on the first suffix slot");
            break;
        case LastFactor::RightAction:
            require(layout.action && layout.action->side() == ActionSide::RightOnAlgebra &&
                        layout.action->actor() == layout.active,
                    ErrorCode::ActionInvalid, "right action must be by the active algebra");
            require(layout.action->target_algebra()->tables().mult == layout.coeff->tables().mult, ErrorCode::ActionInvalid,
                    "right action acts on another algebra");
            break;
    }
    return Ptr(new CochainComplex(std::move(layout)));
}

CochainComplex::Ptr CochainComplex::sweedler(HopfData::Ptr h, AlgebraData::Ptr a, std::optional<ActionData> right) {
    Layout l;
    l.name = "Reg(" + h->name() + ", " + a->name() + ")";
    l.active = std::move(h);
    l.coeff = std::move(a);
    if (right && !right->is_trivial()) {
        l.last = LastFactor::RightAction;
        l.action = std::move(right);
    }
    return make(std::move(l));
}

CochainComplex::Ptr CochainComplex::measuring(HopfData::Ptr t, HopfData::Ptr n, const ActionData& left, AlgebraData::Ptr a) {
    Layout l;
    l.name = "Reg_meas(" + t->name() + ", Hom(" + n->name() + ", " + a->name() + "))";
    l.active = std::move(t);
    l.suffix = {std::move(n)};
    l.coeff = std::move(a);
    l.last = LastFactor::Precomposition;
    l.action = left;
    l.normalize_passive = true;
    return make(std::move(l));
}

CochainComplex::Ptr CochainComplex::with_prefix(HopfData::Ptr prefix, HopfData::Ptr h, AlgebraData::Ptr a) {
    Layout l;
    l.name = "Reg(" + h->name() + ", Hom(" + prefix->name() + ", " + a->name() + "))";
    l.active = std::move(h);
    l.prefix = {std::move(prefix)};
    l.coeff = std::move(a);
    l.normalize_passive = true;
    return make(std::move(l));
}

SlotSpace::Ptr CochainComplex::space(std::size_t q) const {
    std::lock_guard lock(mutex_);
    auto it = spaces_.find(q);
    if (it != spaces_.end()) return it->second;
    std::vector<HopfData::Ptr> slots = layout_.prefix;
    for (std::size_t i = 0; i < q; ++i) slots.push_back(layout_.active);
    slots.insert(slots.end(), layout_.suffix.begin(), layout_.suffix.end());
    auto s = SlotSpace::make(layout_.coeff->field(), std::move(slots));
    spaces_.emplace(q, s);
    return s;
}

std::size_t CochainComplex::degree(const RegElement& f) const {
    const auto& slots = f.space().slots();
    const std::size_t np = layout_.prefix.size(), ns = layout_.suffix.size();
    require(slots.size() >= np + ns, ErrorCode::ShapeMismatch, "cochain has too few slots for " + layout_.name);
    const std::size_t q = slots.size() - np - ns;
    for (std::size_t i = 0; i < np; ++i)
        require(slots[i] == layout_.prefix[i], ErrorCode::ShapeMismatch, "prefix slot mismatch");
    for (std::size_t i = 0; i < q; ++i)
        require(slots[np + i] == layout_.active, ErrorCode::ShapeMismatch, "active slot mismatch");
    for (std::size_t i = 0; i < ns; ++i)
        require(slots[np + q + i] == layout_.suffix[i], ErrorCode::ShapeMismatch, "suffix slot mismatch");
    require(f.coeff().tables().mult == layout_.coeff->tables().mult, ErrorCode::ShapeMismatch, "coefficient algebra mismatch");
    return q;
}

std::vector<std::size_t> CochainComplex::active_slots(std::size_t q) const {
    std::vector<std::size_t> out(q);
    for (std::size_t i = 0; i < q; ++i) out[i] = layout_.prefix.size() + i;
    return out;
}

// Map kinds in degree q (source space(q + 1), target space(q)):
//   0         drop the first active slot through eps
//   i in 1..q multiply active slots i - 1 and i
//   q + 1     last factor (eps on the last active slot, or precomposition)
const SlotMap& CochainComplex::cached_map(std::size_t q, std::size_t which) const {
    {
        std::lock_guard lock(mutex_);
        auto it = maps_.find({q, which});
        if (it != maps_.end()) return *it->second;
    }
    const auto src = space(q + 1), dst = space(q);
    const std::size_t np = layout_.prefix.size(), ns = layout_.suffix.size();
    const HopfData& h = *layout_.active;
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < np; ++i) pieces.push_back(Piece::identity(i, i));
    bool suffix_done = false;
    if (which == 0) {
        pieces.push_back(Piece::counit(h, np));
        for (std::size_t j = 1; j <= q; ++j) pieces.push_back(Piece::identity(np + j, np + j - 1));
    } else if (which <= q) {
        for (std::size_t j = 0; j + 1 < which; ++j) pieces.push_back(Piece::identity(np + j, np + j));
        pieces.push_back(Piece::multiply(h, np + which - 1, np + which, np + which - 1));
        for (std::size_t j = which + 1; j <= q; ++j) pieces.push_back(Piece::identity(np + j, np + j - 1));
    } else {
        for (std::size_t j = 0; j < q; ++j) pieces.push_back(Piece::identity(np + j, np + j));
        if (layout_.last == LastFactor::Precomposition) {
            pieces.push_back(Piece::act(*layout_.action, np + q, np + q + 1, np + q));
            for (std::size_t s = 1; s < ns; ++s) pieces.push_back(Piece::identity(np + q + 1 + s, np + q + s));
            suffix_done = true;
        } else {
            pieces.push_back(Piece::counit(h, np + q));
        }
    }
    if (!suffix_done)
        for (std::size_t s = 0; s < ns; ++s) pieces.push_back(Piece::identity(np + q + 1 + s, np + q + s));
    auto m = std::make_shared<const SlotMap>(build_map(src, dst, pieces));
    std::lock_guard lock(mutex_);
    return *maps_.emplace(std::make_pair(q, which), std::move(m)).first->second;
}

RegElement CochainComplex::drop_first(const RegElement& f) const {
    return pullback(f, cached_map(degree(f), 0));
}

RegElement CochainComplex::face(const RegElement& f, std::size_t i) const {
    const std::size_t q = degree(f);
    require(i >= 1 && i <= q, ErrorCode::ShapeMismatch, "face index out of range");
    return pullback(f, cached_map(q, i));
}

RegElement CochainComplex::last_factor(const RegElement& f) const {
    const std::size_t q = degree(f);
    if (layout_.last == LastFactor::RightAction)
        return act_on_values(f, *layout_.action, space(q + 1), layout_.prefix.size() + q);
    return pullback(f, cached_map(q, q + 1));
}

RegElement CochainComplex::differential(const RegElement& f) const {
    const std::size_t q = degree(f);
    if (q > kMaxDegree) raise(ErrorCode::DegreeUnsupported, "differential implemented for degrees 0..3, got " + std::to_string(q));
    const RegElement finv = conv_inverse(f);
    RegElement acc = drop_first(f);
    for (std::size_t i = 1; i <= q; ++i) acc = convolve(acc, face(i % 2 ? finv : f, i));
    return convolve(acc, last_factor((q + 1) % 2 ? finv : f));
}

CochainGrid CochainComplex::grid(std::size_t q, bool normalized) const {
    GridSpec spec;
    if (normalized) {
        spec.normalized_slots = active_slots(q);
        if (layout_.normalize_passive) {
            for (std::size_t i = 0; i < layout_.prefix.size(); ++i) spec.normalized_slots.push_back(i);
            for (std::size_t i = 0; i < layout_.suffix.size(); ++i)
                spec.normalized_slots.push_back(layout_.prefix.size() + q + i);
        }
    }
    return CochainGrid(space(q), layout_.coeff, spec);
}

// ---------------------------------------------------------------------------
// Cocycle predicates

std::vector<std::size_t> first_difference(const RegElement& a, const RegElement& b) {
    const std::size_t d = a.coeff().dim();
    for (std::size_t x = 0; x < a.space().size(); ++x)
        for (std::size_t i = 0; i < d; ++i)
            if (a.values()[x * d + i] != b.values()[x * d + i]) return a.space().decode(x);
    return {};
}

namespace {

CocycleCheck compare(const RegElement& lhs, const RegElement& rhs) {
    if (lhs == rhs) return {};
    return {false, first_difference(lhs, rhs)};
}

}  // namespace

CocycleCheck delta_is_unit(const CochainComplex& c, const RegElement& f) {
    const auto inv = try_conv_inverse(f);
    if (!inv) return {false, {}};
    const RegElement d = c.differential(f);
    return compare(d, RegElement::unit(d.space_ptr(), d.coeff_ptr()));
}

CocycleCheck is_cocycle(const CochainComplex& c, const RegElement& f) {
    switch (c.degree(f)) {
        case 1:
            return compare(c.face(f, 1), convolve(c.drop_first(f), c.last_factor(f)));
        case 2:
            return compare(convolve(c.last_factor(f), c.face(f, 1)), convolve(c.drop_first(f), c.face(f, 2)));
        default:
            return delta_is_unit(c, f);
    }
}

// ---------------------------------------------------------------------------
// Coboundaries

WitnessSearch coboundary_search(const CochainComplex& c, const RegElement& f, const SearchOptions& opt) {
    const std::size_t q = c.degree(f);
    require(q >= 1, ErrorCode::DegreeUnsupported, "degree-0 cochains are not coboundaries");
    const bool normalized = f.is_normalized(c.active_slots(q));
    const CochainGrid grid = c.grid(q - 1, normalized);
    if (grid.count() > opt.budget)
        raise(ErrorCode::SearchBudgetExceeded, "coboundary search over " + std::to_string(grid.count()) +
                                                   " candidates exceeds budget " + std::to_string(opt.budget));
    WitnessSearch out;
    out.method = "enumeration";
    for (std::uint64_t i = 0; i < grid.count(); ++i) {
        ++out.searched;
        RegElement t = grid.candidate(i);
        if (!try_conv_inverse(t)) continue;
        if (c.differential(t) == f) {
            out.status = WitnessSearch::Status::Found;
            out.witness = std::move(t);
            return out;
        }
    }
    return out;
}

WitnessSearch coboundary_witness(const CochainComplex& c, const RegElement& f, const SearchOptions& opt) {
    if (auto w = bridge_coboundary_witness(c, f)) return std::move(*w);
    return coboundary_search(c, f, opt);
}

// ---------------------------------------------------------------------------
// Class tables

ClassTable::ClassTable(std::vector<RegElement> cocycles, const std::vector<RegElement>& primitives,
                       const std::function<RegElement(const RegElement&)>& delta)
    : cocycles_(std::move(cocycles)) {
    require(!cocycles_.empty(), ErrorCode::NotASubgroup, "empty cocycle list");
    std::map<std::vector<Scalar>, std::size_t> pos;
    for (std::size_t i = 0; i < cocycles_.size(); ++i) pos.emplace(cocycles_[i].values(), i);

    std::map<std::vector<Scalar>, std::size_t> seen;
    for (const auto& t : primitives) {
        RegElement b = delta(t);
        if (seen.count(b.values())) continue;
        require(pos.count(b.values()) > 0, ErrorCode::NotASubgroup, "a coboundary is missing from the cocycle list");
        seen.emplace(b.values(), boundaries_.size());
        boundaries_.push_back(std::move(b));
        primitives_.push_back(t);
    }
    require(!boundaries_.empty(), ErrorCode::NotASubgroup, "no coboundaries supplied");

    for (const auto& z : cocycles_) {
        if (index_.count(z.values())) continue;
        const std::size_t cls = reps_.size();
        reps_.push_back(z);
        for (std::size_t k = 0; k < boundaries_.size(); ++k) {
            RegElement w = convolve(z, boundaries_[k]);
            require(pos.count(w.values()) > 0, ErrorCode::NotASubgroup, "cocycle list not closed under coboundaries");
            index_.emplace(w.values(), std::make_pair(cls, k));
        }
    }
    require(index_.size() == cocycles_.size(), ErrorCode::NotASubgroup, "cosets do not partition the cocycles");

    const std::size_t n = reps_.size();
    const RegElement unit = RegElement::unit(cocycles_.front().space_ptr(), cocycles_.front().coeff_ptr());
    const auto uz = class_of(unit);
    require(uz.has_value(), ErrorCode::NotASubgroup, "unit missing from the cocycle list");
    zero_ = *uz;
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto c = class_of(convolve(reps_[a], reps_[b]));
            require(c.has_value(), ErrorCode::NotASubgroup, "cocycle list not closed under convolution");
            table_[a * n + b] = *c;
        }
    group_.emplace(n, zero_, [table = table_, n](std::size_t a, std::size_t b) { return table[a * n + b]; });
}

std::optional<std::size_t> ClassTable::class_of(const RegElement& z) const {
    auto it = index_.find(z.values());
    if (it == index_.end()) return std::nullopt;
    return it->second.first;
}

RegElement ClassTable::witness(const RegElement& z) const {
    auto it = index_.find(z.values());
    require(it != index_.end(), ErrorCode::InvalidWitness, "cocycle outside the enumerated list");
    return primitives_[it->second.second];
}

// ---------------------------------------------------------------------------
// Brute-force cohomology

CohomologyResult cohomology_bruteforce(const CochainComplex& c, std::size_t q, const SearchOptions& opt,
                                       const std::function<bool(const RegElement&)>& cochain_filter) {
    require(q >= 1 && q <= CochainComplex::kMaxDegree, ErrorCode::DegreeUnsupported,
            "brute-force cohomology in degrees 1..3");
    auto accept = [&](const RegElement& f) { return !cochain_filter || cochain_filter(f); };
    auto z = enumerate_grid(c.grid(q), opt.budget, [&](const RegElement& f) {
        return accept(f) && is_cocycle(c, f).ok && try_conv_inverse(f).has_value();
    });
    auto t = enumerate_grid(c.grid(q - 1), opt.budget,
                            [&](const RegElement& f) { return accept(f) && try_conv_inverse(f).has_value(); });
    auto table = std::make_shared<const ClassTable>(std::move(z), t, [&c](const RegElement& x) { return c.differential(x); });
    CohomologyResult r;
    r.group = table->group();
    for (std::size_t g : table->explicit_group().generators()) r.representatives.push_back(table->representative(g));
    r.method = "bruteforce";
    r.classes = std::move(table);
    return r;
}

CohomologyResult h2_bruteforce(HopfData::Ptr h, AlgebraData::Ptr a, const SearchOptions& opt) {
    const auto c = CochainComplex::sweedler(std::move(h), std::move(a));
    return cohomology_bruteforce(*c, 2, opt);
}

}  // namespace hacoh
