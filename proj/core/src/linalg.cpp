#include "hacoh/linalg.hpp"

#include <algorithm>

namespace hacoh {

// ---------------------------------------------------------------------------
// Field matrices

FieldMatrix FieldMatrix::identity(const Field& f, std::size_t n) {
    FieldMatrix m(n, n, f.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

FieldVector mat_vec(const Field& f, const FieldMatrix& a, const FieldVector& x) {
    require(a.cols() == x.size(), ErrorCode::DimensionMismatch, "matrix/vector size mismatch");
    FieldVector y(a.rows(), f.zero());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0 && x[c] != 0) y[r] = f.add(y[r], f.mul(a(r, c), x[c]));
    return y;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, FieldMatrix& a, FieldVector* rhs = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
            if (rhs) std::swap((*rhs)[sel], (*rhs)[row]);
        }
        const Scalar inv = f.inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), inv);
        if (rhs) (*rhs)[row] = f.mul((*rhs)[row], inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (a(row, c) != 0) a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
            if (rhs) (*rhs)[r] = f.sub((*rhs)[r], f.mul(factor, (*rhs)[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const Field& f, FieldMatrix a) { return rref(f, a).size(); }

std::optional<FieldVector> solve_linear(const Field& f, const FieldMatrix& a, const FieldVector& b) {
    require(a.rows() == b.size(), ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
    FieldMatrix m = a;
    FieldVector rhs = b;
    const auto pivots = rref(f, m, &rhs);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (rhs[r] != 0) return std::nullopt;
    FieldVector x(a.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
    return x;
}

std::vector<FieldVector> kernel_basis(const Field& f, const FieldMatrix& a) {
    FieldMatrix m = a;
    const auto pivots = rref(f, m);
    std::vector<char> is_pivot(a.cols(), 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        FieldVector v(a.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        require(rows[i].size() == c, ErrorCode::DimensionMismatch, "ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t n, const std::vector<std::vector<BigInt>>& cols) {
    IntMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        require(cols[j].size() == n, ErrorCode::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
    std::vector<BigInt> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    require(cols_ == o.rows_, ErrorCode::DimensionMismatch, "integer matrix product");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) out(i, j) += a * o(k, j);
        }
    return out;
}

std::vector<BigInt> IntMatrix::operator*(const std::vector<BigInt>& x) const {
    require(cols_ == x.size(), ErrorCode::DimensionMismatch, "integer matrix/vector product");
    std::vector<BigInt> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if ((*this)(i, k) != 0 && x[k] != 0) y[i] += (*this)(i, k) * x[k];
    return y;
}

BigInt IntMatrix::determinant() const {
    require(rows_ == cols_, ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    // fraction-free Bareiss elimination
    IntMatrix m = *this;
    const std::size_t n = rows_;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<BigInt> SmithForm::diagonal() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
}

namespace {

struct SmithWork {
    IntMatrix a, u, uinv, v, vinv;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
        for (std::size_t r = 0; r < uinv.rows(); ++r) std::swap(uinv(r, i), uinv(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
    }
    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(j, c) != 0) a(i, c) -= q * a(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            if (u(j, c) != 0) u(i, c) -= q * u(j, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r)
            if (uinv(r, i) != 0) uinv(r, j) += q * uinv(r, i);
    }
    // col_i -= q * col_j
    void col_sub(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, j) != 0) a(r, i) -= q * a(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r)
            if (v(r, j) != 0) v(r, i) -= q * v(r, j);
        for (std::size_t c = 0; c < vinv.cols(); ++c)
            if (vinv(i, c) != 0) vinv(j, c) += q * vinv(i, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
        for (std::size_t r = 0; r < uinv.rows(); ++r) uinv(r, i) = -uinv(r, i);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SmithWork w{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n)};
    IntMatrix& a = w.a;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = m, pj = n;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    BigInt mag = abs(a(i, j));
                    if (pi == m || mag < best) {
                        best = mag;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) goto done;
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                w.row_sub(i, t, a(i, t) / a(t, t));
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                w.col_sub(j, t, a(t, j) / a(t, t));
                clean = clean && a(t, j) == 0;
            }
            if (!clean) continue;
            // enforce d_t | every remaining entry
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        w.row_sub(t, i, BigInt(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) w.negate_row(t);
    }
done:
    SmithForm out;
    out.rank = t;
    out.d = std::move(w.a);
    out.u = std::move(w.u);
    out.u_inv = std::move(w.uinv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.vinv);
    return out;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a) {
    const auto s = smith_normal_form(a);
    std::vector<std::vector<BigInt>> out;
    for (std::size_t j = s.rank; j < a.cols(); ++j) out.push_back(s.v.column(j));
    return out;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, const std::vector<BigInt>& b) {
    require(a.rows() == b.size(), ErrorCode::DimensionMismatch, "integer system right-hand side");
    const auto s = smith_normal_form(a);
    const auto ub = s.u * b;
    std::vector<BigInt> z(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d(i, i) != 0) return std::nullopt;
            z[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * z;
}

// ---------------------------------------------------------------------------
// Lattice quotients

LatticeQuotient::LatticeQuotient(std::size_t n, const std::vector<std::vector<BigInt>>& k_gens,
                                 const std::vector<std::vector<BigInt>>& i_gens)
    : n_(n) {
    const auto sk = smith_normal_form(IntMatrix::from_columns(n, k_gens));
    const std::size_t r = sk.rank;
    k_u_ = sk.u;
    k_diag_ = sk.diagonal();
    k_basis_ = IntMatrix(n, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) k_basis_(i, j) = sk.u_inv(i, j) * k_diag_[j];

    std::vector<std::vector<BigInt>> c_cols;
    for (const auto& g : i_gens) {
        auto y = k_coordinates(g);
        require(y.has_value(), ErrorCode::NotASubgroup, "sublattice generator lies outside the ambient lattice");
        c_cols.push_back(std::move(*y));
    }
    const auto sc = smith_normal_form(IntMatrix::from_columns(r, c_cols));
    require(sc.rank == r, ErrorCode::EnumerationInfeasible, "lattice quotient is infinite");
    c_u_ = sc.u;
    c_uinv_ = sc.u_inv;
    c_diag_full_ = sc.diagonal();
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < r; ++i) {
        if (c_diag_full_[i] != 1) {
            torsion_pos_.push_back(i);
            orders.push_back(static_cast<std::int64_t>(c_diag_full_[i]));
        }
    }
    group_ = FiniteAbelianGroup::from_cyclic_orders(orders);
    // SNF diagonal already forms the divisibility chain, so positions line up with group_ factors
    for (auto pos : torsion_pos_) {
        std::vector<BigInt> y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = c_uinv_(i, pos);
        generators_.push_back(k_basis_ * y);
    }
}

std::optional<std::vector<BigInt>> LatticeQuotient::k_coordinates(const std::vector<BigInt>& x) const {
    require(x.size() == n_, ErrorCode::DimensionMismatch, "lattice element length");
    const auto w = k_u_ * x;
    const std::size_t r = k_diag_.size();
    std::vector<BigInt> y(r);
    for (std::size_t i = 0; i < n_; ++i) {
        if (i < r) {
            if (w[i] % k_diag_[i] != 0) return std::nullopt;
            y[i] = w[i] / k_diag_[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return y;
}

bool LatticeQuotient::contains(const std::vector<BigInt>& x) const { return k_coordinates(x).has_value(); }

std::vector<std::int64_t> LatticeQuotient::coordinates(const std::vector<BigInt>& x) const {
    auto y = k_coordinates(x);
    require(y.has_value(), ErrorCode::NotASubgroup, "element lies outside the ambient lattice");
    const auto z = c_u_ * *y;
    std::vector<std::int64_t> out;
    for (auto pos : torsion_pos_) {
        BigInt v = z[pos] % c_diag_full_[pos];
        if (v < 0) v += c_diag_full_[pos];
        out.push_back(static_cast<std::int64_t>(v));
    }
    return out;
}

std::vector<BigInt> LatticeQuotient::lift(const std::vector<std::int64_t>& coords) const {
    require(coords.size() == generators_.size(), ErrorCode::DimensionMismatch, "coordinate vector length");
    std::vector<BigInt> x(n_);
    for (std::size_t g = 0; g < generators_.size(); ++g)
        for (std::size_t i = 0; i < n_; ++i) x[i] += generators_[g][i] * coords[g];
    return x;
}

bool LatticeQuotient::is_zero(const std::vector<BigInt>& x) const {
    for (auto c : coordinates(x))
        if (c != 0) return false;
    return true;
}

LatticeQuotient subquotient(std::size_t n, const std::vector<std::vector<BigInt>>& ambient_relations,
                            const std::vector<std::vector<BigInt>>& z_gens, const std::vector<std::vector<BigInt>>& b_gens) {
    auto z = z_gens;
    z.insert(z.end(), ambient_relations.begin(), ambient_relations.end());
    auto b = b_gens;
    b.insert(b.end(), ambient_relations.begin(), ambient_relations.end());
    return LatticeQuotient(n, z, b);
}

// ---------------------------------------------------------------------------
// Explicit groups

ExplicitAbelianGroup::ExplicitAbelianGroup(std::size_t size, std::size_t identity,
                                           std::function<std::size_t(std::size_t, std::size_t)> op)
    : size_(size), identity_(identity), op_(std::move(op)) {
    require(identity < size, ErrorCode::ValidationError, "identity index out of range");
    std::vector<char> known(size, 0);
    std::vector<std::vector<BigInt>> exps(size);
    std::vector<std::size_t> members{identity};
    known[identity] = 1;
    std::vector<std::vector<BigInt>> relations;  // padded at the end
    for (std::size_t cand = 0; cand < size; ++cand) {
        if (known[cand]) continue;
        const std::size_t k = greedy_.size();
        greedy_.push_back(cand);
        std::size_t cur = cand;
        std::int64_t order = 1;
        while (!known[cur]) {
            cur = op_(cur, cand);
            ++order;
            require(order <= static_cast<std::int64_t>(size), ErrorCode::NotAGroup, "operation is not a finite group law");
        }
        std::vector<BigInt> rel = exps[cur];
        rel.resize(k + 1);
        for (auto& v : rel) v = -v;
        rel[k] += order;
        relations.push_back(std::move(rel));
        const std::vector<std::size_t> old = members;
        for (std::size_t s : old) {
            std::size_t x = s;
            for (std::int64_t i = 1; i < order; ++i) {
                x = op_(x, cand);
                require(!known[x], ErrorCode::NotAGroup, "inconsistent group law during generation");
                known[x] = 1;
                exps[x] = exps[s];
                exps[x].resize(k + 1);
                exps[x][k] = i;
                members.push_back(x);
            }
        }
    }
    require(members.size() == size, ErrorCode::NotAGroup, "elements are not closed under the group law");
    const std::size_t r = greedy_.size();
    for (auto& e : exps) e.resize(r);
    for (auto& rel : relations) rel.resize(r);
    exponents_ = std::move(exps);
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<BigInt> e(r);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    quotient_.emplace(r, basis, relations);
    for (std::size_t e = 0; e < size; ++e) by_coords_[quotient_->coordinates(exponents_[e])] = e;
    require(by_coords_.size() == size, ErrorCode::NotAGroup, "coordinate map is not injective");
    const std::size_t rank = quotient_->group().rank();
    for (std::size_t i = 0; i < rank; ++i) {
        std::vector<std::int64_t> c(rank, 0);
        c[i] = 1;
        generators_.push_back(by_coords_.at(c));
    }
}

std::vector<std::int64_t> ExplicitAbelianGroup::coordinates(std::size_t element) const {
    return quotient_->coordinates(exponents_.at(element));
}

std::size_t ExplicitAbelianGroup::element_of(const std::vector<std::int64_t>& coords) const {
    const auto& f = quotient_->group().invariant_factors();
    require(coords.size() == f.size(), ErrorCode::DimensionMismatch, "coordinate vector length");
    std::vector<std::int64_t> c(coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ((c[i] % f[i]) + f[i]) % f[i];
    return by_coords_.at(c);
}

std::size_t ExplicitAbelianGroup::power(std::size_t a, std::int64_t e) const {
    const std::int64_t n = static_cast<std::int64_t>(size_);
    e = ((e % n) + n) % n;
    std::size_t r = identity_;
    for (std::int64_t i = 0; i < e; ++i) r = op_(r, a);
    return r;
}

// ---------------------------------------------------------------------------

bool AbelianHom::well_defined() const {
    const auto& src = source.invariant_factors();
    const auto& tgt = target.invariant_factors();
    if (matrix.size() != tgt.size()) return false;
    for (std::size_t j = 0; j < src.size(); ++j)
        for (std::size_t i = 0; i < tgt.size(); ++i) {
            if (matrix[i].size() != src.size()) return false;
            if ((matrix[i][j] * src[j]) % tgt[i] != 0) return false;
        }
    return true;
}

std::vector<std::int64_t> AbelianHom::apply(const std::vector<std::int64_t>& x) const {
    const auto& tgt = target.invariant_factors();
    std::vector<std::int64_t> y(tgt.size(), 0);
    for (std::size_t i = 0; i < tgt.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc = (acc + matrix[i][j] * x[j]) % tgt[i];
        y[i] = (acc + tgt[i]) % tgt[i];
    }
    return y;
}

bool AbelianHom::is_zero() const {
    const auto& tgt = target.invariant_factors();
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (auto v : matrix[i])
            if (v % tgt[i] != 0) return false;
    return true;
}

}  // namespace hacoh
