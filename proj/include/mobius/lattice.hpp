#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mobius/poset.hpp"

namespace mobius {

struct NotALatticeError : std::runtime_error {
    int x, y;  // witness pair without a unique lub or glb
    NotALatticeError(const std::string& msg, int x_, int y_)
        : std::runtime_error(msg), x(x_), y(y_) {}
};

// A poset together with its join/meet tables, bottom and top, and the set of
// join-irreducible elements.  Built by lattice_structure(); immutable.
class LatticeInfo {
public:
    const Poset& poset() const { return base_; }

    int size() const { return base_.size(); }
    int edge_count() const { return base_.edge_count(); }

    int bottom() const { return bottom_; }
    int top() const { return top_; }

    int join(int x, int y) const { return join_[index(x, y)]; }
    int meet(int x, int y) const { return meet_[index(x, y)]; }

    // Elements covering exactly one element, ascending by id.
    const std::vector<int>& join_irreducibles() const { return irreducibles_; }
    int irreducible_count() const { return static_cast<int>(irreducibles_.size()); }

    int height(int x) const { return base_.height(x); }
    bool leq(int x, int y) const { return base_.leq(x, y); }

    std::vector<int> atoms() const { return base_.upper_covers(bottom_); }

    friend LatticeInfo lattice_structure(const Poset& p);

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(x) * base_.size() + y;
    }

    Poset base_;
    int bottom_ = -1, top_ = -1;
    std::vector<int> join_, meet_;
    std::vector<int> irreducibles_;
};

namespace detail {

// upper=true: least element of the common upper bounds of {x, y};
// upper=false: greatest element of the common lower bounds.  The candidate
// is the bound set's extreme in the linear extension order; the set has the
// required extremum iff the candidate bounds every member.  On failure the
// second component counts the extremal bounds found (0 or ≥2).
inline std::pair<std::optional<int>, int> extreme_common_bound(const Poset& p,
                                                               int x, int y,
                                                               bool upper) {
    const BitMatrix& rows = upper ? p.up_rows() : p.down_rows();
    std::vector<int> common;
    for (int z : rows.row_members(x))
        if (rows.test(y, z)) common.push_back(z);

    auto more_extreme = [&](int a, int b) {
        return upper ? p.position(a) < p.position(b)
                     : p.position(a) > p.position(b);
    };
    auto bounds = [&](int a, int b) { return upper ? p.leq(a, b) : p.leq(b, a); };

    std::optional<int> best;
    for (int z : common)
        if (!best || more_extreme(z, *best)) best = z;
    if (best) {
        bool ok = true;
        for (int z : common)
            if (!bounds(*best, z)) { ok = false; break; }
        if (ok) return {best, 1};
    }
    int extremal = 0;
    for (int z : common) {
        bool dominated = false;
        for (int w : common)
            if (w != z && bounds(w, z)) { dominated = true; break; }
        if (!dominated) ++extremal;
    }
    return {std::nullopt, extremal};
}

}  // namespace detail

// Fills join/meet tables by brute-force search over common upper/lower
// bounds; throws NotALatticeError with a witness pair when a pair lacks a
// unique least upper or greatest lower bound.
inline LatticeInfo lattice_structure(const Poset& p) {
    if (p.size() == 0)
        throw NotALatticeError("empty poset has no bottom element", -1, -1);

    const int v = p.size();
    LatticeInfo lat;
    lat.base_ = p;
    lat.join_.assign(static_cast<std::size_t>(v) * v, -1);
    lat.meet_.assign(static_cast<std::size_t>(v) * v, -1);

    for (int x = 0; x < v; ++x) {
        for (int y = x; y < v; ++y) {
            auto [j, extremal] = detail::extreme_common_bound(p, x, y, true);
            if (!j)
                throw NotALatticeError("not a lattice: " + p.name(x) + ", " + p.name(y) +
                                           " have " + std::to_string(extremal) +
                                           " minimal upper bounds",
                                       x, y);
            lat.join_[lat.index(x, y)] = lat.join_[lat.index(y, x)] = *j;
        }
    }
    for (int x = 0; x < v; ++x) {
        for (int y = x; y < v; ++y) {
            auto [m, extremal] = detail::extreme_common_bound(p, x, y, false);
            if (!m)
                throw NotALatticeError("not a lattice: " + p.name(x) + ", " + p.name(y) +
                                           " have " + std::to_string(extremal) +
                                           " maximal lower bounds",
                                       x, y);
            lat.meet_[lat.index(x, y)] = lat.meet_[lat.index(y, x)] = *m;
        }
    }

    lat.bottom_ = 0;
    lat.top_ = 0;
    for (int x = 1; x < v; ++x) {
        lat.bottom_ = lat.meet(lat.bottom_, x);
        lat.top_ = lat.join(lat.top_, x);
    }

    for (int x = 0; x < v; ++x)
        if (p.lower_covers(x).size() == 1) lat.irreducibles_.push_back(x);

    return lat;
}

// Every element is a join of atoms.
inline bool is_atomic(const LatticeInfo& lat) {
    auto atoms = lat.atoms();
    for (int x = 0; x < lat.size(); ++x) {
        int acc = lat.bottom();
        for (int a : atoms)
            if (lat.leq(a, x)) acc = lat.join(acc, a);
        if (acc != x) return false;
    }
    return true;
}

// x ⋗ x∧y implies x∨y ⋗ y, for all pairs.
inline bool is_semimodular(const LatticeInfo& lat) {
    const Poset& p = lat.poset();
    for (int x = 0; x < lat.size(); ++x)
        for (int y = 0; y < lat.size(); ++y) {
            if (!p.covered_by(lat.meet(x, y), x)) continue;
            if (!p.covered_by(y, lat.join(x, y))) return false;
        }
    return true;
}

inline bool is_geometric(const LatticeInfo& lat) {
    return is_atomic(lat) && is_semimodular(lat);
}

// x ∨ i covers x for every element x and join-irreducible i with x ≱ i.
inline bool satisfies_cover_condition(const LatticeInfo& lat) {
    const Poset& p = lat.poset();
    for (int x = 0; x < lat.size(); ++x)
        for (int i : lat.join_irreducibles()) {
            if (p.leq(i, x)) continue;
            if (!p.covered_by(x, lat.join(x, i))) return false;
        }
    return true;
}

// Bijection between names 1..n and join-irreducible elements: elements[k]
// is the element named k+1.
struct JirOrder {
    std::vector<int> elements;

    int element_of(int name) const { return elements[name - 1]; }
    int count() const { return static_cast<int>(elements.size()); }
};

inline void validate_order(const LatticeInfo& lat, const JirOrder& ord) {
    auto sorted = ord.elements;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != lat.join_irreducibles())
        throw std::invalid_argument(
            "order is not a permutation of the join-irreducible elements");
}

// Names of join-irreducibles lying below x, ascending.
inline std::vector<int> spectrum(const LatticeInfo& lat, const JirOrder& ord, int x) {
    std::vector<int> names;
    for (int k = 1; k <= ord.count(); ++k)
        if (lat.leq(ord.element_of(k), x)) names.push_back(k);
    return names;
}

// spectrum(x) restricted to names 1..i; i = 0 gives the empty set.
inline std::vector<int> prefix_spectrum(const LatticeInfo& lat, const JirOrder& ord,
                                        int i, int x) {
    std::vector<int> names;
    for (int k = 1; k <= i; ++k)
        if (lat.leq(ord.element_of(k), x)) names.push_back(k);
    return names;
}

}  // namespace mobius
