#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hacoh {

/// A finite group given by its multiplication table over element indices 0..n-1.
class FiniteGroup {
public:
    FiniteGroup() = default;

    /// Validates closure, associativity, identity and inverses; throws NotAGroup with the failing triple.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels = {},
                                  std::string name = {});

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(std::size_t n);  // n <= 5, permutations in lexicographic order
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // (x, y) -> x * b.order() + y

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t power(std::size_t a, std::int64_t e) const;
    std::size_t element_order(std::size_t a) const;
    bool is_abelian() const;

    const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    std::vector<std::string> labels_;
    std::string name_;
};

/// A left action of T on N by group automorphisms: act[t][n] = t(n).
class GroupAction {
public:
    GroupAction() = default;

    /// Checks 1(n) = n, (tt')(n) = t(t'(n)) and t(nn') = t(n)t(n'); throws ActionInvalid.
    static GroupAction make(FiniteGroup t, FiniteGroup n, std::vector<std::vector<std::size_t>> act);
    static GroupAction trivial(FiniteGroup t, FiniteGroup n);
    /// T cyclic with generator index 1 acting through the automorphism `image` of N (t^k acts by image^k).
    static GroupAction cyclic(FiniteGroup t, FiniteGroup n, const std::vector<std::size_t>& image);

    const FiniteGroup& actor() const noexcept { return t_; }
    const FiniteGroup& target() const noexcept { return n_; }
    std::size_t apply(std::size_t t, std::size_t n) const { return act_[t][n]; }
    const std::vector<std::vector<std::size_t>>& table() const noexcept { return act_; }
    bool is_trivial() const;

private:
    FiniteGroup t_, n_;
    std::vector<std::vector<std::size_t>> act_;
};

/// The inversion automorphism n -> n^{-1} of an abelian group.
std::vector<std::size_t> inversion_automorphism(const FiniteGroup& n);

}  // namespace hacoh
