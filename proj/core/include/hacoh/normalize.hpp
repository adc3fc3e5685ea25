#pragma once

#include "hacoh/smash.hpp"
#include "hacoh/sweedler.hpp"

namespace hacoh {

/// Cochains on a smash product H = N # T with trivial coefficients, plus the complexes of N, T and H
/// and the restriction maps between them.
class SmashCochains {
public:
    SmashCochains(SmashData smash, AlgebraData::Ptr a);

    const SmashData& smash() const noexcept { return s_; }
    const AlgebraData::Ptr& coeff() const noexcept { return a_; }
    const CochainComplex& on_h() const noexcept { return *ch_; }
    const CochainComplex& on_n() const noexcept { return *cn_; }
    const CochainComplex& on_t() const noexcept { return *ct_; }
    /// Reg(N^q, Hom(T, A)) as maps T (x) N^q -> A, the home of the witnesses g.
    const CochainComplex& over_t() const noexcept { return *cg_; }

    /// Restrictions of a 2-cochain on H to N(x)N, T(x)T, T(x)N and N(x)T.
    RegElement restrict_nn(const RegElement& f) const;
    RegElement restrict_tt(const RegElement& f) const;
    RegElement restrict_tn(const RegElement& f) const;
    RegElement restrict_nt(const RegElement& f) const;
    /// Restriction of a 3-cochain on H to T(x)T(x)T.
    RegElement restrict_ttt(const RegElement& f) const;

    /// Space of an arbitrary tensor of the factors, e.g. {'N','T','H'}.
    SlotSpace::Ptr space(const std::string& pattern) const;

private:
    HopfData::Ptr slot_of(char c) const;

    SmashData s_;
    AlgebraData::Ptr a_;
    CochainComplex::Ptr ch_, cn_, ct_, cg_;
};

struct Normalization {
    RegElement cocycle;  // f', trivial on N (x) T
    RegElement w;        // f' = f * delta w
};

/// Replaces a 2-cocycle on N # T (trivial action) by a cohomologous one trivial on N (x) T, through the
/// crossed product and the section chi'(n # t) = chi(n) chi(t). Throws NotACocycle.
Normalization normalize_cocycle(const SmashCochains& sc, const RegElement& f);

/// The five identities satisfied by a 2-cocycle with f(n (x) t) = eps, each as one check item
/// (split_left, n_t_on_t, split_right, n_on_n_t, product) with a failing basis tuple.
CheckReport check_normalized_identities(const SmashCochains& sc, const RegElement& f);

/// Conditions on components fNN, fTT and g = fTN: n_cocycle, t_cocycle, t_multiplicative (g over a product
/// in T), stability (fNN (fNN^{-1})^t = delta g) and trivial_on_nt, which is checked on the assembled map.
CheckReport check_components(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn);

/// f(nt (x) n't') = sum fTT(t_1 (x) t') fTN(t_2 (x) n'_1) fNN(n (x) t_3(n'_2)), without checks.
RegElement assemble_raw(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn);
/// Checked assembly; throws ComponentConditionFailed naming the first failing condition.
RegElement assemble_normalized(const SmashCochains& sc, const RegElement& fnn, const RegElement& ftt, const RegElement& ftn);

/// The T-twist of a 2-cochain on N: (f^t)(n (x) n') = f(t_1(n) (x) t_2(n')), as a map on T (x) N (x) N.
RegElement twist(const SmashCochains& sc, const RegElement& fnn);
/// f * (f^{-1})^t as a map T (x) N (x) N -> A.
RegElement stability_defect(const SmashCochains& sc, const RegElement& fnn);

}  // namespace hacoh
