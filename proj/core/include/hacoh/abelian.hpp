#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hacoh {

/// A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_r, each d_i >= 2.
/// The trivial group has no factors.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    /// Accepts any list of positive cyclic orders and reduces it to invariant-factor form.
    static FiniteAbelianGroup from_cyclic_orders(const std::vector<std::int64_t>& orders);
    static FiniteAbelianGroup cyclic(std::int64_t n) { return from_cyclic_orders({n}); }

    const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
    std::int64_t order() const noexcept;
    std::size_t rank() const noexcept { return factors_.size(); }
    bool is_trivial() const noexcept { return factors_.empty(); }

    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<std::int64_t> factors_;
};

}  // namespace hacoh
