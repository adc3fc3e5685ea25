#include "hacoh/group.hpp"

#include <algorithm>
#include <numeric>

#include "hacoh/error.hpp"

namespace hacoh {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table, std::vector<std::string> labels,
                                    std::string name) {
    const std::size_t n = table.size();
    require(n > 0, ErrorCode::NotAGroup, "empty multiplication table");
    for (const auto& row : table) {
        require(row.size() == n, ErrorCode::NotAGroup, "multiplication table is not square");
        for (auto v : row) require(v < n, ErrorCode::NotAGroup, "table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    raise(ErrorCode::NotAGroup, "associativity fails at " + triple(a, b, c));
    std::size_t e = n;
    for (std::size_t a = 0; a < n && e == n; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b) ok = table[a][b] == b && table[b][a] == b;
        if (ok) e = a;
    }
    require(e < n, ErrorCode::NotAGroup, "no identity element");
    FiniteGroup g;
    g.inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e) g.inverse_[a] = b;
        require(g.inverse_[a] < n, ErrorCode::NotAGroup, "element " + std::to_string(a) + " has no inverse");
    }
    if (labels.empty())
        for (std::size_t a = 0; a < n; ++a) labels.push_back(a == e ? "1" : "e" + std::to_string(a));
    require(labels.size() == n, ErrorCode::ValidationError, "label count differs from group order");
    g.table_ = std::move(table);
    g.identity_ = e;
    g.labels_ = std::move(labels);
    g.name_ = name.empty() ? "G" + std::to_string(n) : std::move(name);
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    require(n >= 1, ErrorCode::NotAGroup, "cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    }
    return from_table(std::move(t), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    require(n >= 1 && n <= 5, ErrorCode::ValidationError, "symmetric groups are supported up to degree 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t m = perms.size();
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            // (ab)(i) = a(b(i))
            std::vector<std::size_t> c(n);
            for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
        std::string s;
        for (auto v : perms[a]) s += std::to_string(v + 1);
        labels.push_back(s);
    }
    return from_table(std::move(t), std::move(labels), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < na * nb; ++x) {
        for (std::size_t y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        labels.push_back("(" + a.labels_[x / nb] + "," + b.labels_[x % nb] + ")");
    }
    return from_table(std::move(t), std::move(labels), a.name_ + "x" + b.name_);
}

std::size_t FiniteGroup::power(std::size_t a, std::int64_t e) const {
    if (e < 0) return power(inverse_[a], -e);
    std::size_t r = identity_;
    for (std::int64_t i = 0; i < e; ++i) r = table_[r][a];
    return r;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity_; x = table_[x][a]) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

GroupAction GroupAction::make(FiniteGroup t, FiniteGroup n, std::vector<std::vector<std::size_t>> act) {
    require(act.size() == t.order(), ErrorCode::ActionInvalid, "action table row count differs from |T|");
    for (const auto& row : act) {
        require(row.size() == n.order(), ErrorCode::ActionInvalid, "action table column count differs from |N|");
        for (auto v : row) require(v < n.order(), ErrorCode::ActionInvalid, "action value out of range");
    }
    for (std::size_t x = 0; x < n.order(); ++x)
        require(act[t.identity()][x] == x, ErrorCode::ActionInvalid, "identity of T does not act trivially");
    for (std::size_t a = 0; a < t.order(); ++a)
        for (std::size_t b = 0; b < t.order(); ++b)
            for (std::size_t x = 0; x < n.order(); ++x)
                if (act[t.mul(a, b)][x] != act[a][act[b][x]])
                    raise(ErrorCode::ActionInvalid, "(tt')(n) != t(t'(n)) at " + triple(a, b, x));
    for (std::size_t a = 0; a < t.order(); ++a)
        for (std::size_t x = 0; x < n.order(); ++x)
            for (std::size_t y = 0; y < n.order(); ++y)
                if (act[a][n.mul(x, y)] != n.mul(act[a][x], act[a][y]))
                    raise(ErrorCode::ActionInvalid, "t(nn') != t(n)t(n') at " + triple(a, x, y));
    GroupAction g;
    g.t_ = std::move(t);
    g.n_ = std::move(n);
    g.act_ = std::move(act);
    return g;
}

GroupAction GroupAction::trivial(FiniteGroup t, FiniteGroup n) {
    std::vector<std::size_t> row(n.order());
    std::iota(row.begin(), row.end(), 0);
    std::vector<std::vector<std::size_t>> act(t.order(), row);
    return make(std::move(t), std::move(n), std::move(act));
}

GroupAction GroupAction::cyclic(FiniteGroup t, FiniteGroup n, const std::vector<std::size_t>& image) {
    require(image.size() == n.order(), ErrorCode::ActionInvalid, "automorphism has the wrong length");
    require(t.order() == 1 || t.element_order(1) == t.order(), ErrorCode::ActionInvalid,
            "element 1 does not generate the acting group");
    std::vector<std::vector<std::size_t>> act(t.order(), std::vector<std::size_t>(n.order()));
    std::vector<std::size_t> cur(n.order());
    std::iota(cur.begin(), cur.end(), 0);
    std::size_t g = t.identity();
    for (std::size_t k = 0; k < t.order(); ++k) {
        act[g] = cur;
        for (auto& v : cur) v = image[v];
        if (t.order() > 1) g = t.mul(g, 1);
    }
    return make(std::move(t), std::move(n), std::move(act));
}

bool GroupAction::is_trivial() const {
    for (const auto& row : act_)
        for (std::size_t x = 0; x < row.size(); ++x)
            if (row[x] != x) return false;
    return true;
}

std::vector<std::size_t> inversion_automorphism(const FiniteGroup& n) {
    require(n.is_abelian(), ErrorCode::ActionInvalid, "inversion is an automorphism only of abelian groups");
    std::vector<std::size_t> out(n.order());
    for (std::size_t x = 0; x < n.order(); ++x) out[x] = n.inverse(x);
    return out;
}

}  // namespace hacoh
