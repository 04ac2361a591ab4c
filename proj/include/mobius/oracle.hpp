#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mobius/matrix.hpp"
#include "mobius/poset.hpp"
#include "mobius/slp.hpp"

namespace mobius {

// ζ[x][y] = 1 iff x ≤ y.
inline TransformMatrix zeta_matrix(const Poset& p) {
    TransformMatrix m(p.size(), TransformKind::zeta);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) m.at(x, y) = 1;
    return m;
}

// μ = ζ⁻¹, by back-substitution along the linear extension: for x < y,
// μ(x, y) = −Σ_{x ≤ z < y} μ(x, z).
inline TransformMatrix mobius_matrix(const Poset& p) {
    TransformMatrix m(p.size(), TransformKind::moebius);
    const auto& order = p.linear_extension();
    for (int x = 0; x < p.size(); ++x) {
        m.at(x, x) = 1;
        for (int yi = p.position(x) + 1; yi < p.size(); ++yi) {
            int y = order[yi];
            if (!p.leq(x, y)) continue;
            std::int64_t sum = 0;
            for (int zi = p.position(x); zi < yi; ++zi) {
                int z = order[zi];
                if (p.leq(x, z) && p.leq(z, y)) sum = checked_add(sum, m.at(x, z));
            }
            m.at(x, y) = checked_sub(0, sum);
        }
    }
    return m;
}

// Row vector times matrix: out[y] = Σ_x in[x]·M[x][y].
inline std::vector<std::int64_t> apply(const TransformMatrix& m,
                                       const std::vector<std::int64_t>& input) {
    if (static_cast<int>(input.size()) != m.size)
        throw std::invalid_argument("input width mismatch");
    std::vector<std::int64_t> out(m.size, 0);
    for (int x = 0; x < m.size; ++x) {
        if (input[x] == 0) continue;
        for (int y = 0; y < m.size; ++y)
            out[y] = checked_add(out[y], checked_mul(input[x], m.at(x, y)));
    }
    return out;
}

struct VerifyResult {
    bool ok = false;
    int x = -1, y = -1;  // first mismatching entry
    std::int64_t got = 0, want = 0;
};

// Expands the program to a matrix and compares it entry-by-entry against
// the exact ζ or μ of the poset.
inline VerifyResult verify_slp(const Poset& p, const Slp& prog, TransformKind kind) {
    if (prog.width() != p.size())
        throw std::invalid_argument("program width does not match poset size");
    if (kind == TransformKind::unknown)
        throw std::invalid_argument("verification needs kind zeta or moebius");
    TransformMatrix want = kind == TransformKind::zeta ? zeta_matrix(p) : mobius_matrix(p);
    TransformMatrix got = slp_to_matrix(prog);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (got.at(x, y) != want.at(x, y))
                return {false, x, y, got.at(x, y), want.at(x, y)};
    return {true, -1, -1, 0, 0};
}

}  // namespace mobius
