#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hacoh/field.hpp"
#include "hacoh/group.hpp"
#include "hacoh/linalg.hpp"

namespace hacoh {

struct Term {
    std::uint32_t index;
    Scalar coeff;
};
using SparseVec = std::vector<Term>;

struct CoTerm {
    std::uint32_t left, right;
    Scalar coeff;
};

using Vec = std::vector<Scalar>;  // dense coordinates over a basis

/// Result of an axiom suite: one entry per axiom, with a failing basis tuple when violated.
struct CheckItem {
    std::string name;
    bool passed = true;
    std::vector<std::size_t> witness;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckItem> items;

    bool ok() const;
    const CheckItem* find(const std::string& name) const;
    std::string to_string() const;
    void add(std::string name, std::optional<std::vector<std::size_t>> failure, std::string detail = {});
};

/// A finite-dimensional associative unital algebra over one field.
class AlgebraData {
public:
    using Ptr = std::shared_ptr<const AlgebraData>;

    struct Tables {
        std::string name;
        std::vector<std::string> labels;
        std::vector<Scalar> mult;  // mult[(i*n + j)*n + k] = coefficient of x_k in x_i x_j
        Vec unit;
    };

    static Ptr make(Field::Ptr field, Tables tables);
    /// The ground field as a one-dimensional algebra.
    static Ptr ground(Field::Ptr field);

    const Field::Ptr& field() const noexcept { return field_; }
    const Field& k() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return n_; }
    const Tables& tables() const noexcept { return t_; }
    const std::string& name() const noexcept { return t_.name; }
    const std::vector<std::string>& labels() const noexcept { return t_.labels; }
    bool is_commutative() const noexcept { return commutative_; }

    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec scale(Scalar c, const Vec& a) const;
    Vec one() const { return t_.unit; }
    Vec zero() const { return Vec(n_, 0); }
    std::optional<Vec> inverse(const Vec& a) const;

    /// Finite fields only: dense elements <-> integers in [0, q^dim).
    std::int64_t element_count() const;
    std::int64_t encode(const Vec& a) const;
    Vec decode(std::int64_t code) const;
    /// All units, as codes in increasing order; throws EnumerationInfeasible beyond `limit` elements.
    std::vector<std::int64_t> unit_codes(std::int64_t limit = 1 << 20) const;

    std::string format(const Vec& a) const;

private:
    AlgebraData() = default;

    Field::Ptr field_;
    Tables t_;
    std::size_t n_ = 0;
    bool commutative_ = false;
    std::vector<SparseVec> products_;
};

CheckReport verify_algebra(const AlgebraData& a);

/// A finite-dimensional bialgebra (Hopf algebra when an antipode is present) by structure constants.
class HopfData {
public:
    using Ptr = std::shared_ptr<const HopfData>;

    struct Tables {
        std::string name;
        std::vector<std::string> labels;
        std::vector<Scalar> mult;    // x_i x_j = sum_k mult[(i*n + j)*n + k] x_k
        Vec unit;
        std::vector<Scalar> comult;  // Delta x_i = sum_{j,k} comult[(i*n + j)*n + k] x_j (x) x_k
        Vec counit;
        std::optional<FieldMatrix> antipode;  // column i holds S(x_i)
        std::optional<bool> cocommutative_flag, commutative_flag;  // computed when absent
    };

    static constexpr std::size_t kMaxDim = 24;

    /// Checks tensor sizes (DimensionMismatch) and builds sparse caches. Axioms are checked by verify_hopf.
    static Ptr make(Field::Ptr field, Tables tables);

    const Field::Ptr& field() const noexcept { return field_; }
    const Field& k() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return n_; }
    const Tables& tables() const noexcept { return t_; }
    const std::string& name() const noexcept { return t_.name; }
    const std::vector<std::string>& labels() const noexcept { return t_.labels; }

    bool is_cocommutative() const noexcept { return *t_.cocommutative_flag; }
    bool is_commutative() const noexcept { return *t_.commutative_flag; }
    bool has_antipode() const noexcept { return t_.antipode.has_value(); }
    const FieldMatrix& antipode() const;

    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * n_ + j]; }
    const std::vector<CoTerm>& coproduct(std::size_t i) const { return coproducts_[i]; }
    Scalar counit(std::size_t i) const { return t_.counit[i]; }
    const SparseVec& antipode_of(std::size_t i) const;

    /// Index of the unit when it is a basis vector.
    std::optional<std::size_t> unit_index() const noexcept { return unit_index_; }
    /// Same, throwing UnitNotBasis otherwise.
    std::size_t unit_basis() const;
    /// Basis vectors x with Delta x = x (x) x and eps(x) = 1.
    const std::vector<bool>& group_like() const noexcept { return group_like_; }
    bool all_group_like() const;

    Vec mul(const Vec& a, const Vec& b) const;
    Vec basis(std::size_t i) const;
    Vec apply_antipode(const Vec& a) const;
    Scalar counit_of(const Vec& a) const;

    Ptr with_antipode(std::optional<FieldMatrix> s) const;
    /// The underlying algebra.
    AlgebraData::Ptr algebra() const;

private:
    HopfData() = default;

    Field::Ptr field_;
    Tables t_;
    std::size_t n_ = 0;
    std::vector<SparseVec> products_;
    std::vector<std::vector<CoTerm>> coproducts_;
    std::vector<SparseVec> antipode_cols_;
    std::optional<std::size_t> unit_index_;
    std::vector<bool> group_like_;
};

CheckReport verify_hopf(const HopfData& h);

HopfData::Ptr group_algebra(Field::Ptr field, const FiniteGroup& g);
/// k[x]/(x^p) with x primitive; requires char k = p.
HopfData::Ptr primitive_truncated(std::int64_t p, Field::Ptr field);
/// Basis (i, j) -> i * dim(b) + j.
HopfData::Ptr tensor_hopf(const HopfData& a, const HopfData& b);

/// Solves S * id = eta eps and confirms id * S = eta eps; nullopt when no antipode exists.
std::optional<FieldMatrix> antipode_from_bialgebra(const HopfData& b);

/// True when perm (basis i of a -> basis perm[i] of b) carries every structure tensor of a onto b.
bool is_basis_isomorphism(const HopfData& a, const HopfData& b, const std::vector<std::size_t>& perm);
/// Exhaustive search over basis permutations.
std::optional<std::vector<std::size_t>> find_basis_isomorphism(const HopfData& a, const HopfData& b);

/// The group of group-like basis elements when every basis vector is group-like; throws NotGroupAlgebra.
FiniteGroup extract_group(const HopfData& h);

}  // namespace hacoh
