#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcoh/weyl.hpp"

namespace homcoh {

// Registered spaces. Weight conventions per space are frozen here and pinned
// by calibration tests against known cohomology:
//   Gr24   : GL2xGL2 Levi labels (a1,a2 | b1,b2) in Z^4; Sym^k S(l) = (l, l-k, 0, 0).
//   P3_GL  : Gr(1,4) labels (d | c1,c2,c3); O(d) = (d,0,0,0).
//   LGr    : GL2 labels (a1,a2); Sym^k S(l) = (l, l-k); S* = S(1).
//   P3_Sp  : (d | m), d = O(1)-degree, m = Sp2 weight >= 0; fiber of Y' is (-2|1).
//   CyclicBase(n): P^{n-1} line bundles (d), handled through GL(n).
enum class SpaceId { Gr24, P3_GL, LGr, P3_Sp, Tot_Y, Tot_Yprime, Tot_Cyclic, CyclicBase };

struct Space {
    SpaceId id = SpaceId::LGr;
    int n = 0;  // Tot_Cyclic(n) / CyclicBase(n)

    static Space gr24() { return {SpaceId::Gr24, 0}; }
    static Space p3gl() { return {SpaceId::P3_GL, 0}; }
    static Space lgr() { return {SpaceId::LGr, 0}; }
    static Space p3sp() { return {SpaceId::P3_Sp, 0}; }
    static Space tot_y() { return {SpaceId::Tot_Y, 0}; }
    static Space tot_yprime() { return {SpaceId::Tot_Yprime, 0}; }
    static Space cyclic(int n) {
        if (n < 2) throw std::invalid_argument("Tot_Cyclic requires n >= 2");
        return {SpaceId::Tot_Cyclic, n};
    }
    static Space cyclic_base(int n) { return {SpaceId::CyclicBase, n}; }

    bool is_total() const {
        return id == SpaceId::Tot_Y || id == SpaceId::Tot_Yprime || id == SpaceId::Tot_Cyclic;
    }

    Space base() const {
        switch (id) {
            case SpaceId::Tot_Y: return lgr();
            case SpaceId::Tot_Yprime: return p3sp();
            case SpaceId::Tot_Cyclic: return cyclic_base(n);
            default: throw std::logic_error("base(): not a total space");
        }
    }

    // Space whose label layout this space's classes use.
    Space label_space() const { return is_total() ? base() : *this; }

    int dimension() const {
        switch (id) {
            case SpaceId::Gr24: return 4;
            case SpaceId::P3_GL:
            case SpaceId::LGr:
            case SpaceId::P3_Sp: return 3;
            case SpaceId::Tot_Y:
            case SpaceId::Tot_Yprime: return 5;
            case SpaceId::Tot_Cyclic: return n;
            case SpaceId::CyclicBase: return n - 1;
        }
        return 0;
    }

    GroupTag ambient_group() const {
        switch (label_space().id) {
            case SpaceId::Gr24:
            case SpaceId::P3_GL: return GroupTag::gl(4);
            case SpaceId::LGr:
            case SpaceId::P3_Sp: return GroupTag::sp4();
            case SpaceId::CyclicBase: return GroupTag::gl(n);
            default: throw std::logic_error("ambient_group");
        }
    }

    int label_size() const {
        switch (label_space().id) {
            case SpaceId::Gr24:
            case SpaceId::P3_GL: return 4;
            case SpaceId::LGr:
            case SpaceId::P3_Sp: return 2;
            case SpaceId::CyclicBase: return 1;
            default: throw std::logic_error("label_size");
        }
    }

    // -c is the canonical twist of the compact (label) space: O(-index).
    int fano_index() const {
        switch (label_space().id) {
            case SpaceId::Gr24: return 4;
            case SpaceId::P3_GL: return 4;
            case SpaceId::LGr: return 3;
            case SpaceId::P3_Sp: return 4;
            case SpaceId::CyclicBase: return n;
            default: throw std::logic_error("fano_index");
        }
    }

    std::string name() const {
        switch (id) {
            case SpaceId::Gr24: return "Gr24";
            case SpaceId::P3_GL: return "P3";
            case SpaceId::LGr: return "LGr";
            case SpaceId::P3_Sp: return "P3Sp";
            case SpaceId::Tot_Y: return "Y";
            case SpaceId::Tot_Yprime: return "Y'";
            case SpaceId::Tot_Cyclic: return "Cyclic(" + std::to_string(n) + ")";
            case SpaceId::CyclicBase: return "P" + std::to_string(n - 1);
        }
        return "?";
    }

    bool operator==(const Space&) const = default;
    auto operator<=>(const Space&) const = default;
};

// One irreducible homogeneous bundle class, encoded by its Levi label in the
// per-space layout documented above.
struct IrredClass {
    Space space;
    Coords label;

    IrredClass() = default;
    IrredClass(Space sp, Coords lab) : space(sp), label(std::move(lab)) {
        if (static_cast<int>(label.size()) != sp.label_size())
            throw std::invalid_argument("irreducible label has wrong length for space");
        if (!levi_dominant()) throw std::invalid_argument("irreducible label is not Levi-dominant");
    }

    bool levi_dominant() const {
        switch (space.label_space().id) {
            case SpaceId::Gr24: return label[0] >= label[1] && label[2] >= label[3];
            case SpaceId::P3_GL: return label[1] >= label[2] && label[2] >= label[3];
            case SpaceId::LGr: return label[0] >= label[1];
            case SpaceId::P3_Sp: return label[1] >= 0;
            case SpaceId::CyclicBase: return true;
            default: return false;
        }
    }

    Int rank() const {
        switch (space.label_space().id) {
            case SpaceId::Gr24:
                return Int(label[0] - label[1] + 1) * Int(label[2] - label[3] + 1);
            case SpaceId::P3_GL:
                return weyl_dim(Weight(GroupTag::gl(3), {label[1], label[2], label[3]}));
            case SpaceId::LGr: return Int(label[0] - label[1] + 1);
            case SpaceId::P3_Sp: return Int(label[1] + 1);
            case SpaceId::CyclicBase: return Int(1);
            default: return Int(0);
        }
    }

    bool is_line() const { return rank() == 1; }

    // Full ambient weight fed to the Borel-Bott-Weil engine.
    Weight ambient_weight() const {
        const Space ls = space.label_space();
        switch (ls.id) {
            case SpaceId::Gr24:
            case SpaceId::P3_GL: return Weight(GroupTag::gl(4), label);
            case SpaceId::LGr:
            case SpaceId::P3_Sp: return Weight(GroupTag::sp4(), label);
            case SpaceId::CyclicBase: {
                Coords w(ls.n, 0);
                w[0] = label[0];
                return Weight(GroupTag::gl(ls.n), w);
            }
            default: throw std::logic_error("ambient_weight");
        }
    }

    bool operator==(const IrredClass&) const = default;
    auto operator<=>(const IrredClass&) const = default;
};

// Formal non-negative combination of irreducible classes on one space.
struct BundleClass {
    Space space;
    std::map<IrredClass, long long> terms;  // multiplicities > 0; empty = zero class

    BundleClass() = default;
    explicit BundleClass(Space sp) : space(sp) {}
    BundleClass(Space sp, const IrredClass& c, long long mult = 1) : space(sp) {
        if (c.space != sp) throw std::invalid_argument("irreducible on wrong space");
        if (mult > 0) terms[c] = mult;
    }

    bool is_zero() const { return terms.empty(); }

    Int rank() const {
        Int r = 0;
        for (const auto& [c, m] : terms) r += c.rank() * Int(m);
        return r;
    }

    BundleClass& add(const IrredClass& c, long long mult = 1) {
        if (c.space != space) throw std::invalid_argument("irreducible on wrong space");
        if (mult != 0) {
            auto it = terms.find(c);
            long long v = (it == terms.end() ? 0 : it->second) + mult;
            if (v < 0) throw std::logic_error("negative multiplicity in bundle class");
            if (v == 0)
                terms.erase(c);
            else
                terms[c] = v;
        }
        return *this;
    }

    BundleClass& add(const BundleClass& other, long long mult = 1) {
        if (other.space != space) throw std::invalid_argument("space mismatch");
        for (const auto& [c, m] : other.terms) add(c, m * mult);
        return *this;
    }

    bool operator==(const BundleClass&) const = default;
    auto operator<=>(const BundleClass&) const = default;
};

inline BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
    BundleClass r = a;
    r.add(b);
    return r;
}

// --- named constructors -------------------------------------------------

inline IrredClass line_class(Space sp, Coord k) {
    switch (sp.label_space().id) {
        case SpaceId::Gr24: return IrredClass(sp, {k, k, 0, 0});
        case SpaceId::P3_GL: return IrredClass(sp, {k, 0, 0, 0});
        case SpaceId::LGr: return IrredClass(sp, {k, k});
        case SpaceId::P3_Sp: return IrredClass(sp, {k, 0});
        case SpaceId::CyclicBase: return IrredClass(sp, {k});
        default: throw std::logic_error("line_class");
    }
}

inline BundleClass O(Space sp, Coord k = 0) { return BundleClass(sp, line_class(sp, k)); }

// Sym^m S (k) on Gr24 / LGr (and their total spaces).
inline IrredClass sym_sub_class(Space sp, long m, Coord k) {
    if (m < 0) throw std::invalid_argument("negative symmetric power");
    switch (sp.label_space().id) {
        case SpaceId::Gr24: return IrredClass(sp, {k, k - m, 0, 0});
        case SpaceId::LGr: return IrredClass(sp, {k, k - m});
        default: throw std::invalid_argument("Sym^m S(k) only lives on Gr24/LGr-type spaces");
    }
}

inline BundleClass S_class(Space sp, Coord k = 0) { return BundleClass(sp, sym_sub_class(sp, 1, k)); }

// --- calculus -----------------------------------------------------------

namespace detail {

// Count LR skew tableaux of shape nu/lam with content mu. Cells are filled in
// reverse reading order (rows top to bottom, right to left) so the lattice
// condition can be checked incrementally.
inline long long lr_count(const Coords& nu, const Coords& lam, const Coords& mu) {
    const int rows = static_cast<int>(nu.size());
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(static_cast<size_t>(nu[i]), 0);
    std::vector<long long> used(mu.size() + 1, 0), quota(mu.size() + 1, 0);
    for (size_t i = 0; i < mu.size(); ++i) quota[i + 1] = mu[i];

    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i)
        for (int j = static_cast<int>(nu[i]) - 1; j >= static_cast<int>(lam[i]); --j)
            cells.emplace_back(i, j);

    long long count = 0;
    std::function<void(size_t)> place = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
            if (used[v] >= quota[v]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
            if (j + 1 < static_cast<int>(nu[i]) && t[i][j + 1] != 0 && t[i][j + 1] < v)
                continue;  // rows weakly increase
            if (i > 0 && j >= static_cast<int>(lam[i - 1]) && j < static_cast<int>(nu[i - 1]) &&
                t[i - 1][j] >= v)
                continue;  // columns strictly increase (lam cells act as 0)
            t[i][j] = v;
            ++used[v];
            place(idx + 1);
            --used[v];
            t[i][j] = 0;
        }
    };
    place(0);
    return count;
}

// Littlewood-Richardson product of two weakly decreasing integer labels of
// length `rows`, truncated to at most `rows` rows (GL(rows) block).
inline std::map<Coords, long long> lr_multiply(Coords lam, Coords mu, int rows) {
    const Coord shift_l = lam.back(), shift_m = mu.back();
    for (auto& x : lam) x -= shift_l;
    for (auto& x : mu) x -= shift_m;
    const Coord shift = shift_l + shift_m;

    long long total = 0;
    for (auto x : lam) total += x;
    for (auto x : mu) total += x;
    const Coord width = lam[0] + mu[0];

    std::map<Coords, long long> counts;
    Coords nu(rows, 0);
    std::function<void(int, long long, Coord)> gen = [&](int row, long long placed, Coord maxpart) {
        if (row == rows) {
            if (placed == total) {
                long long c = lr_count(nu, lam, mu);
                if (c > 0) counts[nu] += c;
            }
            return;
        }
        Coord hi = std::min<Coord>(maxpart, lam[row] + (total - placed));
        for (Coord p = hi; p >= lam[row]; --p) {
            nu[row] = p;
            gen(row + 1, placed + p, p);
        }
        nu[row] = lam[row];
    };
    gen(0, 0, width);

    std::map<Coords, long long> out;
    for (auto& [k, v] : counts) {
        Coords kk = k;
        for (auto& x : kk) x += shift;
        out[kk] += v;
    }
    return out;
}

// Sp2 = SL2 Clebsch-Gordan with symplectic contraction.
inline std::vector<Coord> sp2_tensor(Coord m1, Coord m2) {
    std::vector<Coord> out;
    for (Coord j = std::abs(m1 - m2); j <= m1 + m2; j += 2) out.push_back(j);
    return out;
}

}  // namespace detail

// Exact decomposition of a tensor product into irreducibles.
inline BundleClass tensor_decompose(const BundleClass& a, const BundleClass& b) {
    if (a.space != b.space) throw std::invalid_argument("tensor_decompose: mismatched spaces");
    const Space sp = a.space;
    const Space ls = sp.label_space();
    BundleClass out(sp);
    for (const auto& [ca, ma] : a.terms)
        for (const auto& [cb, mb] : b.terms) {
            const long long mult = ma * mb;
            switch (ls.id) {
                case SpaceId::Gr24: {
                    auto sblock = detail::lr_multiply({ca.label[0], ca.label[1]},
                                                      {cb.label[0], cb.label[1]}, 2);
                    auto qblock = detail::lr_multiply({ca.label[2], ca.label[3]},
                                                      {cb.label[2], cb.label[3]}, 2);
                    for (auto& [s, ms] : sblock)
                        for (auto& [q, mq] : qblock)
                            out.add(IrredClass(sp, {s[0], s[1], q[0], q[1]}), mult * ms * mq);
                    break;
                }
                case SpaceId::P3_GL: {
                    auto cblock = detail::lr_multiply({ca.label[1], ca.label[2], ca.label[3]},
                                                      {cb.label[1], cb.label[2], cb.label[3]}, 3);
                    for (auto& [c, mc] : cblock)
                        out.add(IrredClass(sp, {ca.label[0] + cb.label[0], c[0], c[1], c[2]}),
                                mult * mc);
                    break;
                }
                case SpaceId::LGr: {
                    auto block = detail::lr_multiply({ca.label[0], ca.label[1]},
                                                     {cb.label[0], cb.label[1]}, 2);
                    for (auto& [s, ms] : block) out.add(IrredClass(sp, {s[0], s[1]}), mult * ms);
                    break;
                }
                case SpaceId::P3_Sp: {
                    for (Coord m : detail::sp2_tensor(ca.label[1], cb.label[1]))
                        out.add(IrredClass(sp, {ca.label[0] + cb.label[0], m}), mult);
                    break;
                }
                case SpaceId::CyclicBase: {
                    out.add(IrredClass(sp, {ca.label[0] + cb.label[0]}), mult);
                    break;
                }
                default: throw std::logic_error("tensor_decompose");
            }
        }
    return out;
}

inline IrredClass dual_irred(const IrredClass& c) {
    const Space ls = c.space.label_space();
    switch (ls.id) {
        case SpaceId::Gr24:
            return IrredClass(c.space, {-c.label[1], -c.label[0], -c.label[3], -c.label[2]});
        case SpaceId::P3_GL:
            return IrredClass(c.space, {-c.label[0], -c.label[3], -c.label[2], -c.label[1]});
        case SpaceId::LGr: return IrredClass(c.space, {-c.label[1], -c.label[0]});
        case SpaceId::P3_Sp: return IrredClass(c.space, {-c.label[0], c.label[1]});
        case SpaceId::CyclicBase: return IrredClass(c.space, {-c.label[0]});
        default: throw std::logic_error("dual_irred");
    }
}

inline BundleClass dual_class(const BundleClass& e) {
    BundleClass out(e.space);
    for (const auto& [c, m] : e.terms) out.add(dual_irred(c), m);
    return out;
}

// Sym^l for line bundles and (rank-2 standard) x (line) shapes only; anything
// else is outside the supported plethysm fragment and errors loudly.
inline BundleClass sym_power(long l, const BundleClass& e) {
    if (l < 0) throw std::invalid_argument("sym_power: negative exponent");
    const Space sp = e.space;
    if (l == 0) return O(sp, 0);
    if (e.terms.size() != 1 || e.terms.begin()->second != 1)
        throw std::invalid_argument("sym_power: input must be a single irreducible");
    const IrredClass c = e.terms.begin()->first;
    if (c.is_line()) {
        Coords lab = c.label;
        for (auto& x : lab) x *= l;
        return BundleClass(sp, IrredClass(sp, lab));
    }
    const Space ls = sp.label_space();
    switch (ls.id) {
        case SpaceId::Gr24: {
            if (c.label[0] - c.label[1] == 1 && c.label[2] == c.label[3])
                return BundleClass(
                    sp, IrredClass(sp, {l * c.label[0], l * c.label[0] - l, l * c.label[2],
                                        l * c.label[2]}));
            if (c.label[2] - c.label[3] == 1 && c.label[0] == c.label[1])
                return BundleClass(
                    sp, IrredClass(sp, {l * c.label[0], l * c.label[0], l * c.label[2],
                                        l * c.label[2] - l}));
            break;
        }
        case SpaceId::LGr: {
            if (c.label[0] - c.label[1] == 1)
                return BundleClass(sp, IrredClass(sp, {l * c.label[0], l * c.label[0] - l}));
            break;
        }
        case SpaceId::P3_Sp: {
            if (c.label[1] == 1)
                return BundleClass(sp, IrredClass(sp, {l * c.label[0], l}));
            break;
        }
        default: break;
    }
    throw std::invalid_argument("sym_power: unsupported plethysm shape (rank>2 or non-standard)");
}

inline BundleClass wedge_power(long q, const BundleClass& e) {
    if (q < 0) throw std::invalid_argument("wedge_power: negative exponent");
    const Space sp = e.space;
    if (q == 0) return O(sp, 0);
    if (q == 1) return e;
    if (e.terms.size() != 1 || e.terms.begin()->second != 1)
        throw std::invalid_argument("wedge_power: input must be a single irreducible");
    const IrredClass c = e.terms.begin()->first;
    if (c.is_line()) return BundleClass(sp);  // zero class above the rank
    if (c.rank() != 2)
        throw std::invalid_argument("wedge_power: rank > 2 inputs are unsupported");
    if (q > 2) return BundleClass(sp);  // zero class
    // q == 2: determinant line of the rank-2 irreducible
    const Space ls = sp.label_space();
    switch (ls.id) {
        case SpaceId::Gr24: {
            Coord s = c.label[0] + c.label[1], t = c.label[2] + c.label[3];
            return BundleClass(sp, IrredClass(sp, {s, s, t, t}));
        }
        case SpaceId::LGr: {
            Coord s = c.label[0] + c.label[1];
            return BundleClass(sp, IrredClass(sp, {s, s}));
        }
        case SpaceId::P3_Sp: {
            return BundleClass(sp, IrredClass(sp, {2 * c.label[0], 0}));
        }
        default: break;
    }
    throw std::invalid_argument("wedge_power: unsupported space");
}

// Fiber bundle of a total space, as a class on its base.
inline BundleClass fiber_bundle(const Space& sp) {
    switch (sp.id) {
        case SpaceId::Tot_Y: return S_class(Space::lgr(), -1);                       // S(-1)
        case SpaceId::Tot_Yprime: return BundleClass(Space::p3sp(), IrredClass(Space::p3sp(), {-2, 1}));
        case SpaceId::Tot_Cyclic: return O(Space::cyclic_base(sp.n), -sp.n);         // O(-n)
        default: throw std::invalid_argument("fiber_bundle: not a total space");
    }
}

inline BundleClass canonical_class(const Space& sp) {
    if (sp.is_total()) return O(sp.base(), 0);  // Calabi-Yau total spaces
    return O(sp, -sp.fano_index());
}

// Move a class between a total space and its base (labels coincide).
inline BundleClass on_space(const BundleClass& e, const Space& sp) {
    if (e.space.label_space() != sp.label_space())
        throw std::invalid_argument("on_space: incompatible label layouts");
    BundleClass out(sp);
    for (const auto& [c, m] : e.terms) out.add(IrredClass(sp, c.label), m);
    return out;
}

// --- printing -----------------------------------------------------------

inline std::string irred_name(const IrredClass& c) {
    const Space ls = c.space.label_space();
    std::ostringstream os;
    auto line = [&](Coord k) {
        if (ls.id == SpaceId::CyclicBase) {
            os << "L^" << -k;
            return;
        }
        os << "O(" << k << ")";
    };
    switch (ls.id) {
        case SpaceId::Gr24: {
            Coord l = c.label[0];
            long m = c.label[0] - c.label[1];
            if (c.label[2] == 0 && c.label[3] == 0) {
                if (m == 0)
                    line(l);
                else if (m == 1)
                    os << "S(" << l << ")";
                else
                    os << "Sym^" << m << " S (" << l << ")";
            } else {
                os << "E(" << c.label[0] << "," << c.label[1] << "|" << c.label[2] << ","
                   << c.label[3] << ")";
            }
            break;
        }
        case SpaceId::P3_GL: {
            if (c.label[1] == 0 && c.label[2] == 0 && c.label[3] == 0)
                line(c.label[0]);
            else
                os << "E(" << c.label[0] << "|" << c.label[1] << "," << c.label[2] << ","
                   << c.label[3] << ")";
            break;
        }
        case SpaceId::LGr: {
            Coord l = c.label[0];
            long m = c.label[0] - c.label[1];
            if (m == 0)
                line(l);
            else if (m == 1)
                os << "S(" << l << ")";
            else
                os << "Sym^" << m << " S (" << l << ")";
            break;
        }
        case SpaceId::P3_Sp: {
            if (c.label[1] == 0)
                line(c.label[0]);
            else if (c.label[1] == 1 && c.label[0] == -2)
                os << "N";
            else
                os << "E(" << c.label[0] << "|" << c.label[1] << ")";
            break;
        }
        case SpaceId::CyclicBase: line(c.label[0]); break;
        default: os << "?";
    }
    return os.str();
}

inline std::string class_name(const BundleClass& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, m] : e.terms) {
        if (!first) os << "+";
        first = false;
        os << irred_name(c);
        if (m != 1) os << "*" << m;
    }
    return os.str();
}

}  // namespace homcoh
