#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hacoh/group.hpp"
#include "hacoh/linalg.hpp"
#include "hacoh/sweedler.hpp"

namespace hacoh {

/// A finite abelian group M (additive coordinates over its invariant factors) with a right G-action.
class GModule {
public:
    using Elem = std::vector<std::int64_t>;

    /// action[g][j] = coordinates of e_j^g. Throws ActionInvalid unless this is an action by automorphisms.
    static GModule make(FiniteGroup g, FiniteAbelianGroup m, std::vector<std::vector<Elem>> action);
    static GModule trivial(FiniteGroup g, FiniteAbelianGroup m);

    const FiniteGroup& group() const noexcept { return g_; }
    const FiniteAbelianGroup& module() const noexcept { return m_; }
    std::size_t rank() const noexcept { return m_.rank(); }
    bool is_trivial() const;

    Elem zero() const { return Elem(rank(), 0); }
    Elem reduce(Elem a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem scale(std::int64_t k, const Elem& a) const;
    Elem act(const Elem& a, std::size_t g) const;
    /// Integer matrix of e_j -> e_j^g.
    const std::vector<Elem>& action_of(std::size_t g) const { return action_[g]; }

private:
    GModule() = default;
    FiniteGroup g_;
    FiniteAbelianGroup m_;
    std::vector<std::vector<Elem>> action_;
};

/// A map G^q -> M on all tuples, row-major over group indices.
struct Cochain {
    std::size_t q = 0;
    std::vector<GModule::Elem> values;

    bool is_normalized(const FiniteGroup& g) const;
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain constant_zero(const GModule& m, std::size_t q);

/// (dc)(g_1..g_{q+1}) = c(g_2..g_{q+1}) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{q+1} c(g_1..g_q)^{g_{q+1}}.
/// Throws DegreeUnsupported for q > 3.
Cochain bar_differential(const GModule& m, const Cochain& c);

/// H^q via the normalized bar complex presented as integer lattices.
class GroupCohomology {
public:
    GroupCohomology(const GModule& m, std::size_t q);

    const FiniteAbelianGroup& group() const noexcept { return quotient_->group(); }
    std::size_t degree() const noexcept { return q_; }
    /// Normalized cocycles for the invariant-factor generators.
    std::vector<Cochain> representatives() const;
    bool is_cocycle(const Cochain& c) const;
    /// Class coordinates; c must be a normalized cocycle.
    std::vector<std::int64_t> coordinates(const Cochain& c) const;
    Cochain from_coordinates(const std::vector<std::int64_t>& coords) const;
    /// Normalized b with db = c, when c is a normalized coboundary.
    std::optional<Cochain> coboundary_witness(const Cochain& c) const;

private:
    std::vector<BigInt> flatten(const Cochain& c) const;
    Cochain unflatten(const std::vector<BigInt>& x, std::size_t q) const;

    GModule m_;
    std::size_t q_;
    std::vector<std::size_t> tuples_, lower_tuples_;  // normalized tuple indices in degree q and q - 1
    IntMatrix d_lower_;                              // delta^{q-1} on normalized coordinates
    std::optional<LatticeQuotient> quotient_;
};

/// Normalized b with db = c in any degree <= 3, or nullopt.
std::optional<Cochain> bar_coboundary_witness(const GModule& m, const Cochain& c);

/// U(A) as a G-module for a right action of kG on A (trivial when absent).
class UnitDictionary {
public:
    UnitDictionary(HopfData::Ptr kg, AlgebraData::Ptr a, const std::optional<ActionData>& right = std::nullopt);
    UnitDictionary(const UnitDictionary&) = delete;
    UnitDictionary& operator=(const UnitDictionary&) = delete;

    const GModule& module() const noexcept { return *module_; }
    const FiniteGroup& group() const noexcept { return g_; }
    /// Basis index in kG of each group element.
    const std::vector<std::size_t>& basis_of() const noexcept { return basis_of_; }

    GModule::Elem to_module(const Vec& unit) const;
    Vec to_algebra(const GModule::Elem& e) const;

    /// c(g_1..g_q) = f(g_1 (x) .. (x) g_q). Throws NotGroupAlgebra or NotInvertible for non-unit values.
    Cochain to_cochain(const RegElement& f) const;
    RegElement to_reg(const Cochain& c, SlotSpace::Ptr space) const;

private:
    HopfData::Ptr kg_;
    AlgebraData::Ptr a_;
    FiniteGroup g_;
    std::vector<std::size_t> basis_of_, group_of_;
    std::vector<std::int64_t> unit_codes_;
    std::optional<ExplicitAbelianGroup> units_;
    std::map<std::int64_t, std::size_t> unit_index_;
    std::optional<GModule> module_;
};

/// Coboundary witness through the bar complex when c is a pure Sweedler complex of a group algebra
/// over a finite coefficient algebra; nullopt when not applicable.
std::optional<WitnessSearch> bridge_coboundary_witness(const CochainComplex& c, const RegElement& f);

/// H^q(H, A) of a group algebra through the dictionary.
CohomologyResult sweedler_cohomology_via_bridge(const CochainComplex& c, std::size_t q);

/// Classes [f] in H^2(N, M), M a trivial N-module, with f - f o (t x t) = d g_t solvable for every t in T;
/// T acts on N by automorphisms. Witnesses g_t are normalized 1-cochains on N.
struct StablePart {
    std::vector<std::vector<std::int64_t>> classes;        // coordinates in H^2(N, M) of stable classes
    std::vector<std::vector<Cochain>> witnesses;           // per class, per t: a 1-cochain on N
    FiniteAbelianGroup group;                              // the subgroup structure
    FiniteAbelianGroup ambient;                             // H^2(N, M)
};
StablePart stable_part(const FiniteGroup& n, const FiniteGroup& t, const GroupAction& action, const GModule& m);

}  // namespace hacoh
