#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "homcoh/numeric.hpp"

namespace homcoh {

using Coord = long long;
using Coords = std::vector<Coord>;

enum class GroupKind { GL, Sp4 };

struct GroupTag {
    GroupKind kind = GroupKind::GL;
    int n = 0;  // GL(n); ignored for Sp4 (rank 2)

    static GroupTag gl(int n) { return {GroupKind::GL, n}; }
    static GroupTag sp4() { return {GroupKind::Sp4, 2}; }

    int rank() const { return kind == GroupKind::GL ? n : 2; }

    Coords rho() const {
        Coords r(rank());
        if (kind == GroupKind::GL) {
            for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
        } else {
            r = {2, 1};
        }
        return r;
    }

    long positive_root_count() const {
        return kind == GroupKind::GL ? static_cast<long>(n) * (n - 1) / 2 : 4;
    }

    bool operator==(const GroupTag&) const = default;
    auto operator<=>(const GroupTag&) const = default;
};

struct Weight {
    GroupTag group;
    Coords coords;

    Weight() = default;
    Weight(GroupTag g, Coords c) : group(g), coords(std::move(c)) {
        if (static_cast<int>(coords.size()) != group.rank())
            throw std::invalid_argument("weight length does not match group rank");
    }

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

inline bool is_dominant(const Weight& w) {
    if (w.group.kind == GroupKind::GL)
        return std::is_sorted(w.coords.begin(), w.coords.end(), std::greater<Coord>());
    return w.coords[0] >= w.coords[1] && w.coords[1] >= 0;
}

struct DominantizationResult {
    bool singular = true;
    Weight dominant;  // meaningful only when !singular
    int length = 0;
};

// Signed permutations of two letters; C2 Weyl group, 8 elements.
struct SignedPerm {
    std::array<int, 2> perm{0, 1};
    std::array<int, 2> sign{1, 1};

    std::array<Coord, 2> apply(const std::array<Coord, 2>& v) const {
        return {sign[0] * v[perm[0]], sign[1] * v[perm[1]]};
    }
};

inline const std::vector<std::pair<SignedPerm, int>>& sp4_weyl_group() {
    // Length = number of positive roots of C2 sent negative.
    static const std::vector<std::pair<SignedPerm, int>> table = [] {
        static const std::array<std::array<Coord, 2>, 4> pos = {{{1, -1}, {1, 1}, {2, 0}, {0, 2}}};
        std::vector<std::pair<SignedPerm, int>> t;
        for (int p = 0; p < 2; ++p)
            for (int s0 = 0; s0 < 2; ++s0)
                for (int s1 = 0; s1 < 2; ++s1) {
                    SignedPerm w;
                    w.perm = p ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
                    w.sign = {s0 ? -1 : 1, s1 ? -1 : 1};
                    int len = 0;
                    for (const auto& r : pos) {
                        auto img = w.apply(r);
                        // negative iff -img is a positive root
                        for (const auto& q : pos)
                            if (img[0] == -q[0] && img[1] == -q[1]) {
                                ++len;
                                break;
                            }
                    }
                    t.emplace_back(w, len);
                }
        return t;
    }();
    return table;
}

// sigma~ . w := sigma(w + rho) - rho, reported through the dominant chamber.
inline DominantizationResult tilde_dominantize(const Weight& w) {
    const auto rho = w.group.rho();
    Coords v(w.coords);
    for (size_t i = 0; i < v.size(); ++i) v[i] += rho[i];

    DominantizationResult res;
    if (w.group.kind == GroupKind::GL) {
        Coords sorted = v;
        std::sort(sorted.begin(), sorted.end(), std::greater<Coord>());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1]) return res;  // singular
        int inv = 0;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (v[i] < v[j]) ++inv;
        for (size_t i = 0; i < sorted.size(); ++i) sorted[i] -= rho[i];
        res.singular = false;
        res.dominant = Weight(w.group, sorted);
        res.length = inv;
        return res;
    }

    // Sp4: singular iff some coordinate of v vanishes or |v1| = |v2|;
    // otherwise a unique signed permutation carries v to strictly
    // positive descending form.
    if (v[0] == 0 || v[1] == 0 || std::abs(v[0]) == std::abs(v[1])) return res;
    for (const auto& [elt, len] : sp4_weyl_group()) {
        auto img = elt.apply({v[0], v[1]});
        if (img[0] > img[1] && img[1] > 0) {
            res.singular = false;
            res.dominant = Weight(w.group, {img[0] - rho[0], img[1] - rho[1]});
            res.length = len;
            return res;
        }
    }
    throw std::logic_error("sp4 dominantization: no Weyl element found");  // unreachable
}

inline Int weyl_dim(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dim: weight not dominant");
    const auto& c = lambda.coords;
    if (lambda.group.kind == GroupKind::GL) {
        Int num = 1, den = 1;
        const int n = lambda.group.n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                num *= Int(c[i] - c[j] + j - i);
                den *= Int(j - i);
            }
        return exact_div(num, den);
    }
    const Coord a = c[0], b = c[1];
    return exact_div(Int(a - b + 1) * Int(a + b + 3) * Int(a + 2) * Int(b + 1), Int(6));
}

inline Weight dual_weight(const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("dual_weight: weight not dominant");
    if (lambda.group.kind == GroupKind::Sp4) return lambda;  // self-dual
    Coords d(lambda.coords.rbegin(), lambda.coords.rend());
    for (auto& x : d) x = -x;
    return Weight(lambda.group, d);
}

}  // namespace homcoh
