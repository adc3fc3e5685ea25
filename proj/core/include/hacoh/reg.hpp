#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "hacoh/hopf.hpp"
#include "hacoh/smash.hpp"

namespace hacoh {

/// The tensor product of a list of Hopf algebras, indexed row-major by basis multi-indices.
/// The empty list is the ground field (one index).
class SlotSpace {
public:
    using Ptr = std::shared_ptr<const SlotSpace>;

    struct Split {
        std::uint32_t left, right;
        Scalar coeff;
    };

    /// All slots must be over `field` (FieldMismatch).
    static Ptr make(Field::Ptr field, std::vector<HopfData::Ptr> slots);

    std::size_t arity() const noexcept { return slots_.size(); }
    const std::vector<HopfData::Ptr>& slots() const noexcept { return slots_; }
    const HopfData& slot(std::size_t i) const { return *slots_[i]; }
    std::size_t size() const noexcept { return size_; }
    const Field& k() const noexcept { return *field_; }

    std::vector<std::size_t> decode(std::size_t x) const;
    std::size_t encode(const std::vector<std::size_t>& idx) const;
    std::size_t stride(std::size_t slot) const { return strides_[slot]; }
    std::size_t component(std::size_t x, std::size_t slot) const { return (x / strides_[slot]) % dims_[slot]; }

    /// Joint comultiplication of a basis tensor.
    const std::vector<Split>& coproduct(std::size_t x) const { return coproducts_[x]; }
    Scalar counit(std::size_t x) const { return counits_[x]; }
    bool group_like(std::size_t x) const { return group_like_[x]; }

    bool same_as(const SlotSpace& o) const noexcept { return slots_ == o.slots_; }

private:
    SlotSpace() = default;

    std::vector<HopfData::Ptr> slots_;
    Field::Ptr field_;
    std::vector<std::size_t> dims_, strides_;
    std::size_t size_ = 1;
    std::vector<std::vector<Split>> coproducts_;
    std::vector<Scalar> counits_;
    std::vector<bool> group_like_;
};

/// A linear map from one slot tensor into a commutative algebra A, stored densely:
/// values[x * dim(A) + k] is the e_k-coefficient of f(x).
class RegElement {
public:
    RegElement(SlotSpace::Ptr space, AlgebraData::Ptr coeff, std::vector<Scalar> values);

    /// eta eps: x -> eps(x) 1_A, the convolution unit.
    static RegElement unit(SlotSpace::Ptr space, AlgebraData::Ptr coeff);

    const SlotSpace& space() const noexcept { return *space_; }
    const SlotSpace::Ptr& space_ptr() const noexcept { return space_; }
    const AlgebraData& coeff() const noexcept { return *coeff_; }
    const AlgebraData::Ptr& coeff_ptr() const noexcept { return coeff_; }
    std::size_t arity() const noexcept { return space_->arity(); }

    Vec value(std::size_t x) const;
    void set(std::size_t x, const Vec& v);
    const std::vector<Scalar>& values() const noexcept { return values_; }

    bool is_unit() const;
    /// True when f(x) = eps(x) 1_A whenever one of the listed slots holds the unit basis vector.
    bool is_normalized(const std::vector<std::size_t>& slots) const;

    friend bool operator==(const RegElement& a, const RegElement& b) {
        return a.space_->same_as(*b.space_) && a.values_ == b.values_;
    }
    friend bool operator<(const RegElement& a, const RegElement& b) { return a.values_ < b.values_; }

private:
    SlotSpace::Ptr space_;
    AlgebraData::Ptr coeff_;
    std::vector<Scalar> values_;
};

/// (f * g)(x) = sum f(x_1) g(x_2) over the joint comultiplication. Throws ShapeMismatch.
RegElement convolve(const RegElement& f, const RegElement& g);
/// Solves f * g = eta eps and checks g * f = eta eps. Throws NotInvertible.
RegElement conv_inverse(const RegElement& f);
std::optional<RegElement> try_conv_inverse(const RegElement& f);
/// f^e for e in Z.
RegElement conv_power(const RegElement& f, std::int64_t e);
/// sum of f over a product (convolution of all factors)
RegElement convolve_all(const std::vector<RegElement>& factors);

/// A linear map between slot tensors, basis tensor x -> sum c y.
struct SlotMap {
    SlotSpace::Ptr source, target;
    std::vector<SparseVec> images;
};

/// One tensor factor of a SlotMap: reads some source slots and writes some target slots.
/// `eval` receives the basis indices of the input slots and returns (output indices, coefficient) terms.
struct Piece {
    using Output = std::vector<std::pair<std::vector<std::uint32_t>, Scalar>>;

    std::vector<std::size_t> inputs, outputs;
    std::function<Output(const std::vector<std::size_t>&)> eval;

    static Piece identity(std::size_t in, std::size_t out);
    static Piece counit(const HopfData& h, std::size_t in);
    static Piece multiply(const HopfData& h, std::size_t a, std::size_t b, std::size_t out);
    /// t(n) for a left action; inputs are (t slot, n slot).
    static Piece act(const ActionData& action, std::size_t t_in, std::size_t n_in, std::size_t out);
    /// Matrix m (dim out x dim in) applied to one slot.
    static Piece linear(const FieldMatrix& m, std::size_t in, std::size_t out);
};

/// Builds the map; every target slot must be written by exactly one piece.
SlotMap build_map(SlotSpace::Ptr source, SlotSpace::Ptr target, const std::vector<Piece>& pieces);

/// f o m, a map on m.source.
RegElement pullback(const RegElement& f, const SlotMap& m);

/// f o phi for phi given on basis tuples of `source` as a sum of pure tensors, one vector per slot of f.
using TensorTerms = std::vector<std::vector<Vec>>;
RegElement pullback_fn(const RegElement& f, SlotSpace::Ptr source,
                       const std::function<TensorTerms(const std::vector<std::size_t>&)>& phi);

/// Applies a right action of the Hopf algebra in slot `slot` of f's space to the values:
/// x -> f(x without that slot)^{x_slot}. `f` lives on the space with that slot removed.
RegElement act_on_values(const RegElement& f, const ActionData& right, SlotSpace::Ptr space, std::size_t slot);

/// Constraints that shape the candidate grid of a cochain enumeration.
struct GridSpec {
    /// slots whose unit basis vector forces f = eps(others) 1_A
    std::vector<std::size_t> normalized_slots;
    /// slot whose unit forces f = eps(others) 1_A by a measuring unit law (same effect, kept separate for reporting)
    std::optional<std::size_t> measuring_slot;
    /// restrict group-like entries to units of A (valid whenever invertible maps are sought)
    bool units_on_group_like = true;
};

/// The free entries and their candidate values.
class CochainGrid {
public:
    CochainGrid(SlotSpace::Ptr space, AlgebraData::Ptr coeff, const GridSpec& spec);

    /// Number of candidates, saturating at max().
    std::uint64_t count() const noexcept { return count_; }
    const std::vector<std::size_t>& free_entries() const noexcept { return free_; }
    RegElement candidate(std::uint64_t index) const;
    RegElement base() const { return base_; }
    /// Uniform random candidate.
    RegElement random(std::mt19937_64& rng) const;

private:
    SlotSpace::Ptr space_;
    AlgebraData::Ptr coeff_;
    RegElement base_;
    std::vector<std::size_t> free_;
    std::vector<std::vector<Vec>> choices_;
    std::uint64_t count_ = 1;
};

/// Enumerates the grid in lexicographic order, keeping candidates accepted by `keep`.
/// Throws SearchBudgetExceeded when the grid exceeds `budget`. Work is split across HACOH_THREADS workers;
/// the output order does not depend on the worker count.
std::vector<RegElement> enumerate_grid(const CochainGrid& grid, std::uint64_t budget,
                                       const std::function<bool(const RegElement&)>& keep);

/// Worker count from HACOH_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

}  // namespace hacoh
