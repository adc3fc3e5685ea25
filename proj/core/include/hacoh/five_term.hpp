#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hacoh/measuring.hpp"
#include "hacoh/normalize.hpp"

namespace hacoh {

/// The complexes around a smash product H = N # T with trivial coefficients A.
class SequenceSetup {
public:
    SequenceSetup(SmashData smash, AlgebraData::Ptr a);

    const SmashCochains& sc() const noexcept { return sc_; }
    const MeasuringComplex& mc() const noexcept { return *mc_; }
    const SmashData& smash() const noexcept { return sc_.smash(); }
    const AlgebraData::Ptr& coeff() const noexcept { return sc_.coeff(); }

    /// Space for a slot pattern ('N', 'T', 'H'), compatible with the complexes' own spaces.
    SlotSpace::Ptr space(const std::string& pattern) const { return sc_.space(pattern); }

private:
    SmashCochains sc_;
    std::unique_ptr<MeasuringComplex> mc_;
};

/// t with a = b * delta t when a and b lie in the same class of the table.
std::optional<RegElement> same_class_witness(const ClassTable& table, const RegElement& a, const RegElement& b);

/// a o (pi (x) pi) for the projection pi: n # t -> eps(n) t.
RegElement inflate_from_t(const SmashCochains& sc, const RegElement& a);

struct ReducedH2 {
    CohomologyResult tilde;  // cocycles trivial on N (x) T and T (x) T, modulo coboundaries among them
    CohomologyResult full;   // cocycles trivial on N (x) T, modulo coboundaries among them: all of H^2(H, A)
    CohomologyResult on_t;   // H^2(T, A)
    CohomologyResult on_n;   // H^2(N, A), with its class table
    bool split = false;      // (a, b) -> [inf(a) * b] is a bijection H^2(T) x H~^2 -> H^2(H)
    std::string split_detail;
};

/// Enumerates the normalized cocycles from their components (fNN, fTT, g = fTN). Throws SearchBudgetExceeded.
ReducedH2 tilde_h2(const SequenceSetup& s, const SearchOptions& opt = {});

/// f(t)(n') eps(n) eps(t') on nt (x) n't', without checks.
RegElement iota_raw(const SequenceSetup& s, const RegElement& f);
/// Same, for a measuring 1-cocycle; throws NotACocycle.
RegElement iota(const SequenceSetup& s, const RegElement& f);

/// A 2-cocycle on N with a witness g on T (x) N such that f * (f^{-1})^t = delta' g(t (x) -).
struct StableClass {
    RegElement f;
    RegElement g;
};

bool is_stable_witness(const SequenceSetup& s, const RegElement& fnn, const RegElement& g);
/// (f|N(x)N, f|T(x)N) for f trivial on N (x) T and T (x) T; throws NotNormalized or InvalidWitness.
StableClass res_to_stable(const SequenceSetup& s, const RegElement& f);
/// delta of g in the measuring complex: g(t'_1 (x) n_1) g^{-1}(t_1 t'_2 (x) n_2) g(t_2 (x) t'_3(n_3)).
/// Throws InvalidWitness when g does not witness stability or the result is no measuring cocycle.
RegElement d_map(const SequenceSetup& s, const StableClass& st);
/// f(t (x) t' (x) n'') on nt (x) n't' (x) n''t''; throws NotACocycle unless f is a measuring 2-cocycle.
RegElement j_map(const SequenceSetup& s, const RegElement& f);

/// Preimage under iota of a class in the kernel of res: f'(t)(n') = sum f(t_1 (x) n'_1) u^{-1}(n'_2) u(t_2(n'_3))
/// where f|N(x)N = delta u.
RegElement iota_preimage(const SequenceSetup& s, const RegElement& f, const RegElement& u);
/// From a degree-2 witness v with j(f) = delta v: h = v|N(x)N and u(t (x) n) = sum v(t_1 (x) n_1) v^{-1}(t_2(n_2) (x) t_3).
StableClass extract_stable(const SequenceSetup& s, const RegElement& v);

struct Triple {
    RegElement ftt, fnn;
    RegElement pairing;  // sum f(t_1 (x) n_1) f^{-1}(n_2 (x) t_2) on [T, N]
};

/// Trivial actions only (ActionNotTrivial); f must be a 2-cocycle on H (NotACocycle).
Triple triple_decomposition(const SequenceSetup& s, const RegElement& f);

struct TripleCheck {
    bool well_defined = false;  // constant on classes
    bool injective = false;
    bool bijective = false;     // injective and |H^2| = |H^2(T)| |H^2(N)| |P|
    std::string detail;
};
/// Checks [f] -> ([fTT], [fNN], pairing) on every cocycle of the table.
TripleCheck check_triple_decomposition(const SequenceSetup& s, const ClassTable& h2, const ClassTable& h2_t,
                                       const ClassTable& h2_n, const PairingGroup& pairings);

enum class Verdict { Pass, Fail, Unknown };
std::string_view to_string(Verdict v) noexcept;

/// A set of named elements satisfying the identities of its kind; see recheck_witness.
struct WitnessRecord {
    std::string kind;
    std::map<std::string, RegElement> items;
    std::string note;  // e.g. the certificate behind a claimed absence
};

/// Recomputes the identities claimed by the record. Returns an empty string on success, else the failure.
std::string recheck_witness(const SequenceSetup& s, const WitnessRecord& w);

struct GroupEntry {
    std::string name;
    std::optional<FiniteAbelianGroup> group;  // empty when the computation ran out of budget
    std::string method;
    std::vector<RegElement> generators;
    std::uint64_t cocycles = 0, coboundaries = 0;
};

struct MapEntry {
    std::string name, source, target;
    std::optional<AbelianHom> hom;
    std::vector<RegElement> images;  // representative images of the source generators
};

struct ExactnessVerdict {
    std::string name;
    Verdict verdict = Verdict::Unknown;
    std::string detail;
    std::vector<WitnessRecord> witnesses;
};

struct SequenceReport {
    std::string n, t, action, coeff;
    std::uint64_t budget = 0;
    std::vector<GroupEntry> groups;  // h1_meas, tilde_h2, stable_h2_n, h2_meas, then h2_n, h2_t, h2_h
    std::vector<MapEntry> maps;      // iota, res, d
    std::vector<ExactnessVerdict> verdicts;
    std::vector<ExactnessVerdict> checks;  // composites, witness independence, j into the reduced group

    const GroupEntry* group(const std::string& name) const;
    const ExactnessVerdict* verdict(const std::string& name) const;
    bool passed() const;     // every verdict and check passes
    bool exhausted() const;  // some verdict is unknown
};

SequenceReport verify_sequence(const SequenceSetup& s, const SearchOptions& opt = {});

}  // namespace hacoh
