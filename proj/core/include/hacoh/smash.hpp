#pragma once

#include <optional>
#include <vector>

#include "hacoh/hopf.hpp"

namespace hacoh {

enum class ActionSide { LeftOnBialgebra, RightOnAlgebra };

/// Either a left action t(n) of a Hopf algebra T on a bialgebra N, or a right action a^h
/// of a Hopf algebra H on an algebra A.
class ActionData {
public:
    /// map[(t * dimN + n) * dimN + k] is the x_k-coefficient of t(x_n).
    static ActionData left(HopfData::Ptr actor, HopfData::Ptr target, std::vector<Scalar> map);
    /// t(n) = eps(t) n.
    static ActionData trivial_left(HopfData::Ptr actor, HopfData::Ptr target);
    /// Linearization of a group action on basis elements; both algebras must carry the group bases.
    static ActionData from_group_action(HopfData::Ptr actor, HopfData::Ptr target, const GroupAction& g);
    /// map[(a * dimH + h) * dimA + k] is the e_k-coefficient of (e_a)^{x_h}.
    static ActionData right(HopfData::Ptr actor, AlgebraData::Ptr target, std::vector<Scalar> map);
    /// a^h = eps(h) a.
    static ActionData trivial_right(HopfData::Ptr actor, AlgebraData::Ptr target);

    ActionSide side() const noexcept { return side_; }
    const HopfData::Ptr& actor() const noexcept { return actor_; }
    /// Left actions only.
    const HopfData::Ptr& target_hopf() const;
    /// Right actions: the algebra acted on; left actions: the underlying algebra of the target.
    const AlgebraData::Ptr& target_algebra() const noexcept { return target_alg_; }
    std::size_t target_dim() const noexcept { return target_alg_->dim(); }
    bool is_trivial() const noexcept { return trivial_; }
    const std::vector<Scalar>& map() const noexcept { return map_; }

    /// Left: t(x_n); right: (e_n)^{x_t}. Indexing is (actor basis, target basis) in both cases.
    const SparseVec& act(std::size_t t, std::size_t n) const { return cache_[t * target_dim() + n]; }
    Vec act_dense(const Vec& t, const Vec& n) const;

private:
    ActionData() = default;
    void build();

    ActionSide side_ = ActionSide::LeftOnBialgebra;
    HopfData::Ptr actor_, target_hopf_;
    AlgebraData::Ptr target_alg_;
    std::vector<Scalar> map_;
    bool trivial_ = false;
    std::vector<SparseVec> cache_;
};

CheckReport verify_action(const ActionData& act);

/// The smash product H = N # T on basis n_i # t_j -> i * dim(T) + j.
struct SmashData {
    HopfData::Ptr n, t;
    ActionData action;
    HopfData::Ptr h;
    FieldMatrix embed_n;    // dim H x dim N, n -> n # 1
    FieldMatrix embed_t;    // dim H x dim T, t -> 1 # t
    FieldMatrix project_t;  // dim T x dim H, n # t -> eps(n) t
    FieldMatrix project_n;  // dim N x dim H, n # t -> n eps(t)

    std::size_t index(std::size_t i, std::size_t j) const { return i * t->dim() + j; }
};

/// Requires a valid left action (ActionInvalid otherwise); the antipode is solved for and the result verified.
SmashData smash_product(HopfData::Ptr n, HopfData::Ptr t, const ActionData& act);

/// The crossed product K = A #_f H on basis a_i (x) h_j -> i * dim(H) + j, for a trivial H-action on A.
struct CrossedProduct {
    AlgebraData::Ptr k;
    std::size_t dim_a = 0, dim_h = 0;
    Vec a_unit, h_unit;

    std::size_t index(std::size_t a, std::size_t h) const { return a * dim_h + h; }
    /// chi(h) = 1 (x) h.
    Vec section(const Vec& h) const;
    /// rho = id (x) Delta: coefficient tensor over (K basis, H basis).
    std::vector<Vec> coaction(const HopfData& h, std::size_t k_index) const;
    /// Projects an element of A (x) 1 to A; nullopt when the element has components off A (x) 1.
    std::optional<Vec> coinvariant_part(const Vec& x) const;
};

/// f[i * dim(H) + j] = f(x_i (x) x_j) in A. Throws NotACocycle (associativity) or NotNormalized (unit law).
CrossedProduct crossed_product_algebra(const AlgebraData& a, const HopfData& h, const std::vector<Vec>& f);

}  // namespace hacoh
