#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hacoh/reg.hpp"

namespace hacoh {

/// How the last factor of the differential acts.
enum class LastFactor {
    Trivial,         // f(x_1..x_q) eps(x_{q+1})
    Precomposition,  // f(x_1..x_q)(x_{q+1}(n)), the first suffix slot is acted on
    RightAction,     // f(x_1..x_q)^{x_{q+1}} for a right action on the coefficients
};

/// Cochains on prefix (x) H^q (x) suffix with values in a commutative algebra A.
/// Prefix and suffix slots are passive; they only take part in the convolution.
class CochainComplex {
public:
    using Ptr = std::shared_ptr<const CochainComplex>;

    struct Layout {
        std::string name;
        HopfData::Ptr active;
        std::vector<HopfData::Ptr> prefix, suffix;
        AlgebraData::Ptr coeff;
        LastFactor last = LastFactor::Trivial;
        std::optional<ActionData> action;
        /// Enumeration grids also fix the unit of every passive slot (measuring unit law, normalized witnesses).
        bool normalize_passive = false;
    };

    static Ptr make(Layout layout);
    /// Reg(H^q, A) with an optional right action of H on A.
    static Ptr sweedler(HopfData::Ptr h, AlgebraData::Ptr a, std::optional<ActionData> right = std::nullopt);
    /// Reg(T^q, Hom(N, A)) as maps T^q (x) N -> A, T acting on Hom(N, A) by precomposition.
    static Ptr measuring(HopfData::Ptr t, HopfData::Ptr n, const ActionData& left, AlgebraData::Ptr a);
    /// Reg(H^q, Hom(P, A)) as maps P (x) H^q -> A for a passive prefix P, trivial action.
    static Ptr with_prefix(HopfData::Ptr prefix, HopfData::Ptr h, AlgebraData::Ptr a);

    static constexpr std::size_t kMaxDegree = 3;

    const Layout& layout() const noexcept { return layout_; }
    const HopfData& active() const noexcept { return *layout_.active; }
    const AlgebraData::Ptr& coeff() const noexcept { return layout_.coeff; }

    SlotSpace::Ptr space(std::size_t q) const;
    RegElement unit(std::size_t q) const { return RegElement::unit(space(q), layout_.coeff); }
    /// Degree of f in this complex; ShapeMismatch when its slots do not fit the layout.
    std::size_t degree(const RegElement& f) const;
    /// Slot positions of the active copies in degree q.
    std::vector<std::size_t> active_slots(std::size_t q) const;

    /// delta^q f: factor 0 is eps (x) f, factors 1..q are f^{(-1)^i} on the faces x_i x_{i+1},
    /// and the last factor carries exponent (-1)^{q+1}. Throws DegreeUnsupported for q > 3.
    RegElement differential(const RegElement& f) const;

    /// The three kinds of factors of delta, without exponents, as maps on degree q + 1.
    RegElement drop_first(const RegElement& f) const;
    RegElement face(const RegElement& f, std::size_t i) const;  // 1 <= i <= q
    RegElement last_factor(const RegElement& f) const;

    /// Candidate grid of normalized degree-q cochains (units on group-like tuples).
    CochainGrid grid(std::size_t q, bool normalized = true) const;

private:
    explicit CochainComplex(Layout layout) : layout_(std::move(layout)) {}
    const SlotMap& cached_map(std::size_t q, std::size_t which) const;

    Layout layout_;
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, SlotSpace::Ptr> spaces_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const SlotMap>> maps_;
};

struct CocycleCheck {
    bool ok = true;
    /// First basis tuple (slot indices) where the identity fails.
    std::vector<std::size_t> witness;
    explicit operator bool() const noexcept { return ok; }
};

/// Degrees 1 and 2: the two-sided cocycle identities checked directly, e.g.
/// f(xy) = f(y_1) f(x)^{y_2} and f(x_1 y_1)^{z_1} f(x_2 y_2 (x) z_2) = f(y_1 (x) z_1) f(x (x) y_2 z_2).
/// Other degrees compare delta f with the unit.
CocycleCheck is_cocycle(const CochainComplex& c, const RegElement& f);
/// Compares delta f with the unit on every basis tuple.
CocycleCheck delta_is_unit(const CochainComplex& c, const RegElement& f);

std::vector<std::size_t> first_difference(const RegElement& a, const RegElement& b);

struct SearchOptions {
    std::uint64_t budget = 6561;
};

struct WitnessSearch {
    enum class Status { Found, NoWitness };
    Status status = Status::NoWitness;
    std::optional<RegElement> witness;
    std::uint64_t searched = 0;
    std::string method;  // "enumeration" or "group_bridge"
    bool found() const noexcept { return status == Status::Found; }
};

/// A t of degree q - 1 with delta t = f. Uses the group-cohomology solver for group algebras
/// with finite unit groups, otherwise complete enumeration. Throws SearchBudgetExceeded.
WitnessSearch coboundary_witness(const CochainComplex& c, const RegElement& f, const SearchOptions& opt = {});
/// Enumeration only.
WitnessSearch coboundary_search(const CochainComplex& c, const RegElement& f, const SearchOptions& opt = {});

/// Classes of an enumerated cocycle group modulo the coboundaries of an enumerated cochain group.
class ClassTable {
public:
    /// `cocycles` must be a subgroup closed under convolution containing every delta(t).
    ClassTable(std::vector<RegElement> cocycles, const std::vector<RegElement>& primitives,
               const std::function<RegElement(const RegElement&)>& delta);

    std::size_t class_count() const noexcept { return reps_.size(); }
    std::size_t cocycle_count() const noexcept { return cocycles_.size(); }
    std::size_t coboundary_count() const noexcept { return boundaries_.size(); }
    const std::vector<RegElement>& cocycles() const noexcept { return cocycles_; }
    const std::vector<RegElement>& coboundaries() const noexcept { return boundaries_; }
    const FiniteAbelianGroup& group() const { return group_->group(); }
    const ExplicitAbelianGroup& explicit_group() const { return *group_; }

    /// Class index of an enumerated cocycle; nullopt for anything outside the list.
    std::optional<std::size_t> class_of(const RegElement& z) const;
    const RegElement& representative(std::size_t cls) const { return reps_[cls]; }
    /// The zero class.
    std::size_t zero_class() const noexcept { return zero_; }
    /// t with z = representative(class_of(z)) * delta t.
    RegElement witness(const RegElement& z) const;
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * reps_.size() + b]; }
    std::vector<std::int64_t> coordinates(std::size_t cls) const { return group_->coordinates(cls); }

private:
    std::vector<RegElement> cocycles_, boundaries_, primitives_;
    std::map<std::vector<Scalar>, std::pair<std::size_t, std::size_t>> index_;  // values -> (class, boundary)
    std::vector<RegElement> reps_;
    std::vector<std::size_t> table_;
    std::size_t zero_ = 0;
    std::optional<ExplicitAbelianGroup> group_;
};

struct CohomologyResult {
    FiniteAbelianGroup group;
    /// Cocycles representing the invariant-factor generators.
    std::vector<RegElement> representatives;
    std::string method;  // "bruteforce" or "group_bridge"
    std::shared_ptr<const ClassTable> classes;
};

/// H^q of an enumerable complex: normalized cocycles modulo coboundaries of normalized cochains.
/// `cochain_filter` restricts both degrees to a subcomplex.
CohomologyResult cohomology_bruteforce(const CochainComplex& c, std::size_t q, const SearchOptions& opt = {},
                                       const std::function<bool(const RegElement&)>& cochain_filter = {});
CohomologyResult h2_bruteforce(HopfData::Ptr h, AlgebraData::Ptr a, const SearchOptions& opt = {});

}  // namespace hacoh
