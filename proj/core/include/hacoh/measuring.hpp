#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hacoh/bridge.hpp"
#include "hacoh/sweedler.hpp"

namespace hacoh {

struct MeasuringCheck {
    bool ok = true;
    std::string law;  // "measuring" or "unit" for the first failure
    /// Failing basis tuple: (t_1..t_q, n, n') for the measuring law, (t_1..t_q) for the unit law.
    std::vector<std::size_t> witness;
    explicit operator bool() const noexcept { return ok; }
};

/// Reg_meas(T^q, Hom(N, A)): cochains T^q (x) N -> A that make T^q measure N to A.
class MeasuringComplex {
public:
    MeasuringComplex(HopfData::Ptr t, HopfData::Ptr n, ActionData left, AlgebraData::Ptr a);
    MeasuringComplex(const MeasuringComplex&) = delete;
    MeasuringComplex& operator=(const MeasuringComplex&) = delete;

    const HopfData::Ptr& t() const noexcept { return t_; }
    const HopfData::Ptr& n() const noexcept { return n_; }
    const ActionData& action() const noexcept { return action_; }
    const AlgebraData::Ptr& coeff() const noexcept { return a_; }
    const CochainComplex& complex() const noexcept { return *c_; }

    /// f(x)(nn') = sum f(x_1)(n) f(x_2)(n') and f(x)(1) = eps(x) 1 on every basis tuple.
    MeasuringCheck is_measuring(const RegElement& f) const;
    /// The differential of the ambient complex; throws NotMeasuring when the input or output fails the laws.
    RegElement differential(const RegElement& f) const;
    /// Degrees 1 and 2 by enumeration, or through the group of algebra maps when T is a group algebra
    /// and the grid exceeds the budget.
    CohomologyResult cohomology(std::size_t q, const SearchOptions& opt = {}) const;

private:
    HopfData::Ptr t_, n_;
    ActionData action_;
    AlgebraData::Ptr a_;
    CochainComplex::Ptr c_;
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::shared_ptr<const SlotMap>> mult_maps_;
};

CohomologyResult h_meas(HopfData::Ptr t, HopfData::Ptr n, const ActionData& left, AlgebraData::Ptr a, std::size_t q,
                        const SearchOptions& opt = {});

/// Alg(N, A) as a group under convolution. Throws EnumerationInfeasible past the budget.
class AlgebraMaps {
public:
    AlgebraMaps(HopfData::Ptr n, AlgebraData::Ptr a, const SearchOptions& opt = {});

    const SlotSpace::Ptr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return maps_.size(); }
    const std::vector<RegElement>& maps() const noexcept { return maps_; }
    const ExplicitAbelianGroup& explicit_group() const { return *group_; }
    const FiniteAbelianGroup& group() const { return group_->group(); }
    std::optional<std::size_t> index_of(const RegElement& phi) const;
    /// Element with the given invariant-factor coordinates.
    const RegElement& from_coordinates(const std::vector<std::int64_t>& c) const { return maps_[group_->element_of(c)]; }

private:
    HopfData::Ptr n_;
    AlgebraData::Ptr a_;
    SlotSpace::Ptr space_;
    std::vector<RegElement> maps_;
    std::map<std::vector<Scalar>, std::size_t> index_;
    std::optional<ExplicitAbelianGroup> group_;
};

/// Cochains of kG with values in Hom(N, A), seen as cochains of G with values in the G-module Alg(N, A)
/// under precomposition, phi^g = phi o g.
class KgSpecialization {
public:
    KgSpecialization(const MeasuringComplex& mc, const SearchOptions& opt = {});
    KgSpecialization(const KgSpecialization&) = delete;
    KgSpecialization& operator=(const KgSpecialization&) = delete;

    const FiniteGroup& group() const noexcept { return g_; }
    const AlgebraMaps& algebra_maps() const noexcept { return alg_; }
    const GModule& module() const noexcept { return *module_; }

    /// c(g_1..g_q) = [f(g_1 (x) .. (x) g_q)(-)]; throws NotMeasuring unless every value is an algebra map.
    Cochain to_cochain(const RegElement& f) const;
    RegElement to_reg(const Cochain& c) const;

    CohomologyResult cohomology(std::size_t q) const;
    /// gcd(|G|, |Alg(N, A)|) = 1, so every positive-degree group vanishes.
    bool uniquely_divisible() const;

private:
    const MeasuringComplex& mc_;
    FiniteGroup g_;
    AlgebraMaps alg_;
    std::optional<GModule> module_;
};

/// Maps T (x) N -> A measuring in both variables, under convolution.
struct PairingGroup {
    std::vector<RegElement> pairings;  // on the measuring space of degree 1, [T, N]
    std::optional<ExplicitAbelianGroup> explicit_group;
    const FiniteAbelianGroup& group() const { return explicit_group->group(); }
};

/// f(tt' (x) n) = sum f(t (x) n_1) f(t' (x) n_2) and f(1 (x) n) = eps(n) 1.
MeasuringCheck measures_in_t(const MeasuringComplex& mc, const RegElement& f);

PairingGroup pairing_group(HopfData::Ptr t, HopfData::Ptr n, AlgebraData::Ptr a, const SearchOptions& opt = {});

}  // namespace hacoh
