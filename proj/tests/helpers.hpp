#pragma once

// Test-side oracles, kept deliberately independent of the library's
// implementation paths: plain definition-following loops and explicit chain
// enumeration, no bitsets, no memoization.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mobius/generators.hpp"
#include "mobius/labeling.hpp"
#include "mobius/lattice.hpp"
#include "mobius/poset.hpp"

namespace testutil {

using mobius::EdgeLabeling;
using mobius::Poset;

inline bool brute_is_partial_order(const Poset& p) {
    const int v = p.size();
    for (int x = 0; x < v; ++x)
        if (!p.leq(x, x)) return false;
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            if (x != y && p.leq(x, y) && p.leq(y, x)) return false;
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            for (int z = 0; z < v; ++z)
                if (p.leq(x, y) && p.leq(y, z) && !p.leq(x, z)) return false;
    return true;
}

// Least upper bound by scanning every element, straight from the definition.
inline std::optional<int> brute_lub(const Poset& p, int x, int y) {
    std::vector<int> uppers;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(y, z)) uppers.push_back(z);
    for (int z : uppers) {
        bool least = true;
        for (int w : uppers)
            if (!p.leq(z, w)) { least = false; break; }
        if (least) return z;
    }
    return std::nullopt;
}

inline std::optional<int> brute_glb(const Poset& p, int x, int y) {
    std::vector<int> lowers;
    for (int z = 0; z < p.size(); ++z)
        if (p.leq(z, x) && p.leq(z, y)) lowers.push_back(z);
    for (int z : lowers) {
        bool greatest = true;
        for (int w : lowers)
            if (!p.leq(w, z)) { greatest = false; break; }
        if (greatest) return z;
    }
    return std::nullopt;
}

// All unrefinable chains from x to y, as edge-index sequences.
inline std::vector<std::vector<int>> all_chains(const Poset& p, int x, int y) {
    std::vector<std::vector<int>> chains;
    std::vector<int> current;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == y) {
            chains.push_back(current);
            return;
        }
        for (int idx = 0; idx < p.edge_count(); ++idx) {
            auto [s, t] = p.covers()[idx];
            if (s != at || !p.leq(t, y)) continue;
            current.push_back(idx);
            self(self, t);
            current.pop_back();
        }
    };
    if (p.leq(x, y)) dfs(dfs, x);
    return chains;
}

inline bool is_rising(const EdgeLabeling& lab, const std::vector<int>& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (lab.labels[chain[i - 1]] > lab.labels[chain[i]]) return false;
    return true;
}

inline int brute_rising_count(const Poset& p, const EdgeLabeling& lab, int x, int y) {
    int count = 0;
    for (const auto& chain : all_chains(p, x, y))
        if (is_rising(lab, chain)) ++count;
    return count;
}

// The four-element diamond a < b, a < c < d used in the labeling examples.
inline Poset diamond() {
    return Poset::from_covers({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Random poset: random upward edges on ids, transitively closed, then
// reduced to covers.  Deterministic in the seed.
inline Poset random_poset(int v, double density, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution flip(density);
    std::vector<std::vector<bool>> rel(v, std::vector<bool>(v, false));
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) rel[x][y] = flip(rng);
    for (int z = 0; z < v; ++z)
        for (int x = 0; x < v; ++x)
            for (int y = 0; y < v; ++y)
                if (rel[x][z] && rel[z][y]) rel[x][y] = true;
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            if (!rel[x][y]) continue;
            bool direct = true;
            for (int z = 0; z < v; ++z)
                if (z != x && z != y && rel[x][z] && rel[z][y]) { direct = false; break; }
            if (direct) covers.emplace_back(x, y);
        }
    std::vector<std::string> names;
    for (int i = 0; i < v; ++i) names.push_back("n" + std::to_string(i));
    return Poset::from_covers(std::move(names), std::move(covers));
}

struct NamedPoset {
    std::string name;
    Poset poset;
};

// The lattice instances exercised across the test suite.
inline std::vector<NamedPoset> lattice_corpus() {
    std::vector<NamedPoset> out;
    for (int v : {1, 2, 3, 5, 16}) out.push_back({"chain" + std::to_string(v), mobius::gen_chain(v)});
    for (int n : {0, 1, 2, 3, 4}) out.push_back({"boolean" + std::to_string(n), mobius::gen_boolean(n)});
    for (long long d : {12, 30, 360}) out.push_back({"divisor" + std::to_string(d), mobius::gen_divisor(d)});
    for (int m : {1, 2, 3, 4}) out.push_back({"partition" + std::to_string(m), mobius::gen_partition(m)});
    out.push_back({"pentagon", mobius::gen_pentagon()});
    out.push_back({"hexagon", mobius::gen_hexagon()});
    out.push_back({"parallel2", mobius::gen_parallel_chains(2)});
    out.push_back({"parallel3", mobius::gen_parallel_chains(3)});
    out.push_back({"figure1", mobius::gen_figure1()});
    out.push_back({"figure1-dual", mobius::dual(mobius::gen_figure1())});
    return out;
}

inline std::vector<std::int64_t> random_vector(int v, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    std::vector<std::int64_t> out(v);
    for (auto& value : out) value = dist(rng);
    return out;
}

}  // namespace testutil
