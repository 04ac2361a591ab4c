#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mobius/poset.hpp"

namespace mobius {

// Total order 0 < 1 < ... < v-1.
inline Poset gen_chain(int v) {
    if (v < 1) throw std::invalid_argument("chain needs at least one element");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < v; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i + 1 < v; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(std::move(names), std::move(covers));
}

// Subset lattice of an n-element set; element ids are the subset masks and
// names their characteristic bit-strings (most significant bit first).
inline Poset gen_boolean(int n) {
    if (n < 0) throw std::invalid_argument("boolean lattice needs n >= 0");
    if (n > 20) throw std::invalid_argument("boolean lattice size guard: n <= 20");
    const std::uint32_t v = std::uint32_t{1} << n;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    for (std::uint32_t mask = 0; mask < v; ++mask) {
        if (n == 0) {
            names.push_back("0");
            continue;
        }
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s[n - 1 - i] = '1';
        names.push_back(std::move(s));
    }
    for (std::uint32_t mask = 0; mask < v; ++mask)
        for (int i = 0; i < n; ++i)
            if (!(mask >> i & 1))
                covers.emplace_back(static_cast<int>(mask),
                                    static_cast<int>(mask | std::uint32_t{1} << i));
    return Poset::from_covers(std::move(names), std::move(covers));
}

// Divisors of N ordered by divisibility; covers are the pairs with a prime
// quotient.
inline Poset gen_divisor(long long n) {
    if (n < 1) throw std::invalid_argument("divisor lattice needs N >= 1");
    std::vector<long long> divisors;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divisors.push_back(d);
        if (d != n / d) divisors.push_back(n / d);
    }
    std::sort(divisors.begin(), divisors.end());

    std::vector<long long> primes;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
            if (primes.empty() || primes.back() != p) primes.push_back(p);
            rest /= p;
        }
    if (rest > 1) primes.push_back(rest);

    std::map<long long, int> id;
    std::vector<std::string> names;
    for (long long d : divisors) {
        id[d] = static_cast<int>(names.size());
        names.push_back(std::to_string(d));
    }
    std::vector<std::pair<int, int>> covers;
    for (long long d : divisors)
        for (long long p : primes)
            if ((n / d) % p == 0) covers.emplace_back(id[d], id[d * p]);
    return Poset::from_covers(std::move(names), std::move(covers));
}

namespace detail {

// Blocks listed by ascending minimum, elements ascending inside each block.
using Partition = std::vector<std::vector<int>>;

inline std::string partition_name(const Partition& blocks) {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i > 0) s += '|';
        for (int x : blocks[i]) s += std::to_string(x);
    }
    return s;
}

inline Partition merge_blocks(const Partition& blocks, std::size_t i, std::size_t j) {
    Partition out;
    std::vector<int> merged = blocks[i];
    merged.insert(merged.end(), blocks[j].begin(), blocks[j].end());
    std::sort(merged.begin(), merged.end());
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (k != i && k != j) out.push_back(blocks[k]);
    out.push_back(std::move(merged));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace detail

// Partitions of {1..m} ordered by refinement, finer below coarser; the
// bottom is the all-singletons partition, so the atoms are the partitions
// with a single 2-element block.
inline Poset gen_partition(int m) {
    if (m < 1) throw std::invalid_argument("partition lattice needs m >= 1");
    if (m > 7) throw std::invalid_argument("partition lattice size guard: m <= 7");

    // enumerate via restricted growth strings
    std::vector<detail::Partition> all;
    std::vector<int> rgs(m, 0);
    auto emit = [&]() {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        detail::Partition part(blocks);
        for (int i = 0; i < m; ++i) part[rgs[i]].push_back(i + 1);
        all.push_back(std::move(part));
    };
    while (true) {
        emit();
        int i = m - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }

    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return detail::partition_name(a) < detail::partition_name(b);
    });

    std::map<std::string, int> id;
    std::vector<std::string> names;
    for (const auto& part : all) {
        std::string name = detail::partition_name(part);
        id[name] = static_cast<int>(names.size());
        names.push_back(std::move(name));
    }
    std::vector<std::pair<int, int>> covers;
    for (const auto& part : all) {
        int from = id[detail::partition_name(part)];
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                covers.emplace_back(
                    from, id[detail::partition_name(detail::merge_blocks(part, i, j))]);
    }
    return Poset::from_covers(std::move(names), std::move(covers));
}

// N5: the standard non-semimodular (and non-graded) lattice.
inline Poset gen_pentagon() {
    return Poset::from_covers({"p", "q", "r", "s", "t"},
                              {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
}

// Two parallel 2-chains between bottom and top.
inline Poset gen_hexagon() {
    return Poset::from_covers({"p", "q", "r", "s", "t", "u"},
                              {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 3}});
}

// k chains of k elements joined below by a common bottom and above by a
// common top: v = k^2 + 2, e = k(k+1).
inline Poset gen_parallel_chains(int k) {
    if (k < 1) throw std::invalid_argument("parallel chains need k >= 1");
    std::vector<std::string> names{"bot"};
    std::vector<std::pair<int, int>> covers;
    auto chain_id = [&](int i, int j) { return 1 + i * k + j; };  // 0-based i, j
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            names.push_back("c" + std::to_string(i + 1) + "." + std::to_string(j + 1));
    names.push_back("top");
    const int top = static_cast<int>(names.size()) - 1;
    for (int i = 0; i < k; ++i) {
        covers.emplace_back(0, chain_id(i, 0));
        for (int j = 0; j + 1 < k; ++j)
            covers.emplace_back(chain_id(i, j), chain_id(i, j + 1));
        covers.emplace_back(chain_id(i, k - 1), top);
    }
    return Poset::from_covers(std::move(names), std::move(covers));
}

// The 7-element, 9-edge semimodular lattice used by the worked transform
// examples; element names match their ids.
inline Poset gen_figure1() {
    return Poset::from_covers(
        {"0", "1", "2", "3", "4", "5", "6"},
        {{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
}

}  // namespace mobius
