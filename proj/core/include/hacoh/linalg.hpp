#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hacoh/abelian.hpp"
#include "hacoh/field.hpp"

namespace hacoh {

/// Dense matrix over a field, entries stored as raw codes of that field.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, Scalar fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static FieldMatrix identity(const Field& f, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

using FieldVector = std::vector<Scalar>;

FieldVector mat_vec(const Field& f, const FieldMatrix& a, const FieldVector& x);
std::size_t rank(const Field& f, FieldMatrix a);

/// One exact solution of a x = b, or nullopt when the system is inconsistent.
std::optional<FieldVector> solve_linear(const Field& f, const FieldMatrix& a, const FieldVector& b);

/// Basis of the null space {x : a x = 0}; empty iff a is injective.
std::vector<FieldVector> kernel_basis(const Field& f, const FieldMatrix& a);

// ---------------------------------------------------------------------------
// Integer matrices and lattices

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
    /// Matrix whose columns are the given vectors (all of length n).
    static IntMatrix from_columns(std::size_t n, const std::vector<std::vector<BigInt>>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<BigInt> column(std::size_t c) const;
    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<BigInt> operator*(const std::vector<BigInt>& x) const;
    BigInt determinant() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithForm {
    IntMatrix u, d, v;  // u * a * v == d
    IntMatrix u_inv, v_inv;
    std::size_t rank = 0;
    /// Nonzero diagonal entries d_1 | d_2 | ... (positive).
    std::vector<BigInt> diagonal() const;
};

/// Smith normal form by exact gcd pivoting; u, v unimodular.
SmithForm smith_normal_form(const IntMatrix& a);

/// Generators of the integer kernel {x in Z^n : a x = 0}.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a);

/// Some integer x with a x = b, or nullopt.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, const std::vector<BigInt>& b);

/// The finite quotient K / I of two lattices I <= K <= Z^n given by generators.
/// Provides invariant factors, lifted generators and coordinates of elements of K.
class LatticeQuotient {
public:
    LatticeQuotient(std::size_t n, const std::vector<std::vector<BigInt>>& k_gens, const std::vector<std::vector<BigInt>>& i_gens);

    const FiniteAbelianGroup& group() const noexcept { return group_; }
    std::size_t ambient_dim() const noexcept { return n_; }

    /// Representatives in Z^n of the invariant-factor generators.
    const std::vector<std::vector<BigInt>>& generators() const noexcept { return generators_; }
    bool contains(const std::vector<BigInt>& x) const;  // x in K
    /// Coordinates of x in K with respect to generators(), reduced mod the invariant factors.
    std::vector<std::int64_t> coordinates(const std::vector<BigInt>& x) const;
    /// Lift of a coordinate vector.
    std::vector<BigInt> lift(const std::vector<std::int64_t>& coords) const;
    bool is_zero(const std::vector<BigInt>& x) const;

private:
    std::optional<std::vector<BigInt>> k_coordinates(const std::vector<BigInt>& x) const;

    std::size_t n_ = 0;
    IntMatrix k_u_;
    std::vector<BigInt> k_diag_;
    IntMatrix k_basis_;      // n x r
    IntMatrix c_u_, c_uinv_; // quotient SNF transforms (r x r)
    std::vector<BigInt> c_diag_full_;  // length r, zero where free (never, for finite quotients)
    std::vector<std::size_t> torsion_pos_;
    FiniteAbelianGroup group_;
    std::vector<std::vector<BigInt>> generators_;
};

/// Quotient Z/B inside an ambient finite abelian group Z^n / relations.
/// Throws NotASubgroup when B is not contained in Z.
LatticeQuotient subquotient(std::size_t n, const std::vector<std::vector<BigInt>>& ambient_relations,
                            const std::vector<std::vector<BigInt>>& z_gens, const std::vector<std::vector<BigInt>>& b_gens);

/// A finite abelian group known through its elements 0..size-1, an identity and a multiplication.
/// Structure is recovered by greedy generation and an SNF of the relation lattice.
class ExplicitAbelianGroup {
public:
    ExplicitAbelianGroup(std::size_t size, std::size_t identity, std::function<std::size_t(std::size_t, std::size_t)> op);

    std::size_t size() const noexcept { return size_; }
    const FiniteAbelianGroup& group() const noexcept { return quotient_->group(); }
    /// Element indices of the invariant-factor generators.
    const std::vector<std::size_t>& generators() const noexcept { return generators_; }
    std::vector<std::int64_t> coordinates(std::size_t element) const;
    std::size_t element_of(const std::vector<std::int64_t>& coords) const;
    std::size_t multiply(std::size_t a, std::size_t b) const { return op_(a, b); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t power(std::size_t a, std::int64_t e) const;

private:
    std::size_t size_, identity_;
    std::function<std::size_t(std::size_t, std::size_t)> op_;
    std::vector<std::vector<BigInt>> exponents_;  // exponent vector of each element over greedy generators
    std::vector<std::size_t> greedy_;
    std::optional<LatticeQuotient> quotient_;
    std::vector<std::size_t> generators_;
    std::map<std::vector<std::int64_t>, std::size_t> by_coords_;
};

/// A homomorphism of finite abelian groups in invariant-factor coordinates:
/// column j is the image of source generator j.
struct AbelianHom {
    FiniteAbelianGroup source, target;
    std::vector<std::vector<std::int64_t>> matrix;  // target.rank() rows, source.rank() columns

    /// Checks that every source relation d_j e_j maps to zero.
    bool well_defined() const;
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& x) const;
    bool is_zero() const;
};

}  // namespace hacoh
