#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mobius/bits.hpp"
#include "mobius/labeling.hpp"
#include "mobius/lattice.hpp"
#include "mobius/slp.hpp"

namespace mobius {

// Join-irreducibles by increasing height, ties by ascending id.  In a graded
// lattice height equals rank, which is the ordering that makes the compilers
// below emit exactly e statements on semimodular lattices.
inline JirOrder order_by_height(const LatticeInfo& lat) {
    JirOrder ord{lat.join_irreducibles()};
    std::stable_sort(ord.elements.begin(), ord.elements.end(), [&](int a, int b) {
        return std::pair(lat.height(a), a) < std::pair(lat.height(b), b);
    });
    return ord;
}

inline JirOrder order_by_id(const LatticeInfo& lat) {
    return JirOrder{lat.join_irreducibles()};
}

namespace detail {

// Per-element name sets: bit k-1 of row x is set iff the element named k
// lies below x.
inline BitMatrix spectrum_rows(const LatticeInfo& lat, const JirOrder& ord) {
    BitMatrix rows(lat.size(), ord.count());
    for (int k = 1; k <= ord.count(); ++k)
        for (int x : lat.poset().upset(ord.element_of(k))) rows.set(x, k - 1);
    return rows;
}

}  // namespace detail

// For i = 1..n and each x not above the element named i (ascending id),
// emits add(x ∨ i, x) when x and x ∨ i agree on the names below i.  Computes
// the zeta transform for any lattice under any order of the irreducibles.
inline Slp compile_zeta_bjorklund(const LatticeInfo& lat, const JirOrder& ord) {
    validate_order(lat, ord);
    BitMatrix spectra = detail::spectrum_rows(lat, ord);
    Slp prog(lat.size(), TransformKind::zeta);
    for (int i = 1; i <= ord.count(); ++i) {
        int elem = ord.element_of(i);
        for (int x = 0; x < lat.size(); ++x) {
            if (lat.leq(elem, x)) continue;
            int y = lat.join(x, elem);
            if (spectra.rows_equal_prefix(x, y, i - 1)) prog.push(StmtOp::add, y, x);
        }
    }
    return prog;
}

// Same scan with i = n..1 and x descending, emitting subtractions: the
// emitted program is the reverse of the zeta program statement-for-statement,
// which is exactly its inverse.
inline Slp compile_mobius_bjorklund(const LatticeInfo& lat, const JirOrder& ord) {
    validate_order(lat, ord);
    BitMatrix spectra = detail::spectrum_rows(lat, ord);
    Slp prog(lat.size(), TransformKind::moebius);
    for (int i = ord.count(); i >= 1; --i) {
        int elem = ord.element_of(i);
        for (int x = lat.size() - 1; x >= 0; --x) {
            if (lat.leq(elem, x)) continue;
            int y = lat.join(x, elem);
            if (spectra.rows_equal_prefix(x, y, i - 1)) prog.push(StmtOp::sub, y, x);
        }
    }
    return prog;
}

namespace detail {

inline std::vector<int> edges_by_label(const Poset& p, const EdgeLabeling& lab) {
    if (lab.labels.size() != p.covers().size())
        throw LabelingError("labeling length does not match edge count");
    if (!lab.injective())
        throw LabelingError("edge program needs an injective labeling");
    std::vector<int> order(p.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lab.labels[a] < lab.labels[b]; });
    return order;
}

}  // namespace detail

// One addition per cover edge, in increasing label order; length is e by
// construction.  Computes the zeta transform when the labeling is an
// injective U-labeling.
inline Slp compile_zeta_edges(const Poset& p, const EdgeLabeling& lab) {
    auto order = detail::edges_by_label(p, lab);
    Slp prog(p.size(), TransformKind::zeta);
    for (int idx : order) prog.push(StmtOp::add, p.covers()[idx].second, p.covers()[idx].first);
    return prog;
}

// One subtraction per cover edge, in decreasing label order: the inverse of
// the corresponding edge addition program.
inline Slp compile_mobius_edges(const Poset& p, const EdgeLabeling& lab) {
    auto order = detail::edges_by_label(p, lab);
    Slp prog(p.size(), TransformKind::moebius);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        prog.push(StmtOp::sub, p.covers()[*it].second, p.covers()[*it].first);
    return prog;
}

}  // namespace mobius
