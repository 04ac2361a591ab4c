#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mobius/lattice.hpp"
#include "mobius/poset.hpp"

namespace mobius {

struct LabelingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer labels, index-aligned with the poset's cover sequence.  Labels are
// signed so dual labelings need no re-normalization.
struct EdgeLabeling {
    std::vector<long long> labels;

    bool injective() const {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
};

// λ(s,t) = smallest name i whose element joined with s gives t.  Requires a
// semimodular lattice and an order with name(h) ≤ name(h') whenever h ≤ h'.
inline EdgeLabeling semimodular_labeling(const LatticeInfo& lat, const JirOrder& ord) {
    validate_order(lat, ord);
    if (!is_semimodular(lat))
        throw LabelingError("semimodular labeling needs a semimodular lattice");
    for (int a = 1; a <= ord.count(); ++a)
        for (int b = 1; b <= ord.count(); ++b)
            if (lat.leq(ord.element_of(a), ord.element_of(b)) && a > b)
                throw LabelingError(
                    "order is not compatible with the lattice: element named " +
                    std::to_string(a) + " lies below element named " + std::to_string(b));

    EdgeLabeling lab;
    for (auto [s, t] : lat.poset().covers()) {
        int label = 0;
        for (int i = 1; i <= ord.count(); ++i)
            if (lat.join(s, ord.element_of(i)) == t) {
                label = i;
                break;
            }
        if (label == 0)
            throw LabelingError("no join-irreducible joins " + lat.poset().name(s) +
                                " up to " + lat.poset().name(t));
        lab.labels.push_back(label);
    }
    return lab;
}

// λ*(s,t) = −λ(t,s) on the dual poset; edge j of dual(p) is edge j of p
// reversed, so this is index-aligned negation.
inline EdgeLabeling dual_labeling(const EdgeLabeling& lab, const Poset& p) {
    if (lab.labels.size() != p.covers().size())
        throw LabelingError("labeling length does not match edge count");
    EdgeLabeling out;
    out.labels.reserve(lab.labels.size());
    for (long long v : lab.labels) out.labels.push_back(-v);
    return out;
}

// Counts of rising unrefinable chains per comparable pair, capped at 2.
struct RisingChainReport {
    bool ok = false;                   // every comparable pair has exactly one
    std::pair<int, int> witness{-1, -1};
    int size = 0;
    std::vector<std::uint8_t> counts;  // v×v, row = lower element

    int count(int x, int y) const {
        return counts[static_cast<std::size_t>(x) * size + y];
    }
};

// For each target y, a single sweep over the edges sorted by (label desc,
// source position desc) accumulates chain counts: when edge (x, z) is
// processed, count[z] already covers exactly the chains from z whose first
// label is ≥ λ(x, z), equal labels included (rising = non-decreasing).
// Counts saturate at 2.
inline RisingChainReport is_u_labeling(const Poset& p, const EdgeLabeling& lab) {
    if (lab.labels.size() != p.covers().size())
        throw LabelingError("labeling length does not match edge count");
    const int v = p.size();
    const int e = p.edge_count();

    std::vector<int> edge_order(e);
    std::iota(edge_order.begin(), edge_order.end(), 0);
    std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
        if (lab.labels[a] != lab.labels[b]) return lab.labels[a] > lab.labels[b];
        return p.position(p.covers()[a].first) > p.position(p.covers()[b].first);
    });

    RisingChainReport report;
    report.size = v;
    report.counts.assign(static_cast<std::size_t>(v) * v, 0);

    std::vector<std::uint8_t> count(v);
    for (int y = 0; y < v; ++y) {
        std::fill(count.begin(), count.end(), 0);
        count[y] = 1;  // the empty chain
        for (int idx : edge_order) {
            auto [x, z] = p.covers()[idx];
            int c = count[x] + count[z];
            count[x] = static_cast<std::uint8_t>(std::min(c, 2));
        }
        for (int x = 0; x < v; ++x)
            report.counts[static_cast<std::size_t>(x) * v + y] = count[x];
    }

    report.ok = true;
    for (int x = 0; x < v && report.ok; ++x)
        for (int y = 0; y < v; ++y)
            if (p.leq(x, y) && report.count(x, y) != 1) {
                report.ok = false;
                report.witness = {x, y};
                break;
            }
    return report;
}

// Relabels with 1..e in the order (old label, source position in the fixed
// linear extension, edge index); a U-labeling stays a U-labeling with the
// same rising chains.
inline EdgeLabeling make_injective(const Poset& p, const EdgeLabeling& lab) {
    if (lab.labels.size() != p.covers().size())
        throw LabelingError("labeling length does not match edge count");
    const int e = p.edge_count();
    std::vector<int> edge_order(e);
    std::iota(edge_order.begin(), edge_order.end(), 0);
    std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
        long long la = lab.labels[a], lb = lab.labels[b];
        if (la != lb) return la < lb;
        int pa = p.position(p.covers()[a].first);
        int pb = p.position(p.covers()[b].first);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    EdgeLabeling out;
    out.labels.assign(e, 0);
    for (int rank = 0; rank < e; ++rank) out.labels[edge_order[rank]] = rank + 1;
    return out;
}

// Labeling file: one `label A B VALUE` line per cover edge of the poset.
inline EdgeLabeling parse_labeling(const Poset& p, std::istream& in) {
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < p.edge_count(); ++i) edge_index[p.covers()[i]] = i;
    std::map<std::string, int> ids;
    for (int x = 0; x < p.size(); ++x) ids[p.name(x)] = x;

    EdgeLabeling lab;
    lab.labels.assign(p.edge_count(), 0);
    std::vector<bool> seen(p.edge_count(), false);

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize_line(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 4 || tokens[0] != "label")
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected `label A B VALUE`");
        auto a = ids.find(tokens[1]);
        auto b = ids.find(tokens[2]);
        if (a == ids.end())
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown element: " + tokens[1]);
        if (b == ids.end())
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown element: " + tokens[2]);
        auto edge = edge_index.find({a->second, b->second});
        if (edge == edge_index.end())
            throw ParseError("line " + std::to_string(lineno) + ": " + tokens[1] +
                             " " + tokens[2] + " is not a cover edge");
        long long value = 0;
        try {
            std::size_t pos = 0;
            value = std::stoll(tokens[3], &pos);
            if (pos != tokens[3].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": bad label value: " + tokens[3]);
        }
        if (seen[edge->second])
            throw ParseError("line " + std::to_string(lineno) + ": duplicate label for " +
                             tokens[1] + " " + tokens[2]);
        seen[edge->second] = true;
        lab.labels[edge->second] = value;
    }
    for (int i = 0; i < p.edge_count(); ++i)
        if (!seen[i])
            throw ParseError("missing label for cover edge " +
                             p.name(p.covers()[i].first) + " " +
                             p.name(p.covers()[i].second));
    return lab;
}

inline EdgeLabeling parse_labeling(const Poset& p, std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_labeling(p, in);
}

inline std::string serialize_labeling(const Poset& p, const EdgeLabeling& lab) {
    if (lab.labels.size() != p.covers().size())
        throw LabelingError("labeling length does not match edge count");
    std::ostringstream out;
    for (int i = 0; i < p.edge_count(); ++i)
        out << "label " << p.name(p.covers()[i].first) << " "
            << p.name(p.covers()[i].second) << " " << lab.labels[i] << "\n";
    return out.str();
}

}  // namespace mobius
