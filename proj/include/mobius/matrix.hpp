#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

enum class TransformKind { zeta, moebius, unknown };

inline std::string to_string(TransformKind k) {
    switch (k) {
        case TransformKind::zeta: return "zeta";
        case TransformKind::moebius: return "moebius";
        default: return "unknown";
    }
}

// All program evaluation and matrix arithmetic is exact; overflow is an
// error, never a wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Exact integer v×v matrix acting on row vectors from the right.
struct TransformMatrix {
    int size = 0;
    TransformKind kind = TransformKind::unknown;
    std::vector<std::int64_t> entries;  // row-major

    TransformMatrix() = default;
    TransformMatrix(int v, TransformKind k)
        : size(v), kind(k), entries(static_cast<std::size_t>(v) * v, 0) {}

    std::int64_t at(int x, int y) const {
        return entries[static_cast<std::size_t>(x) * size + y];
    }
    std::int64_t& at(int x, int y) {
        return entries[static_cast<std::size_t>(x) * size + y];
    }

    static TransformMatrix identity(int v) {
        TransformMatrix m(v, TransformKind::unknown);
        for (int x = 0; x < v; ++x) m.at(x, x) = 1;
        return m;
    }

    bool same_entries(const TransformMatrix& other) const {
        return size == other.size && entries == other.entries;
    }
};

inline TransformMatrix multiply(const TransformMatrix& a, const TransformMatrix& b) {
    if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
    TransformMatrix c(a.size, TransformKind::unknown);
    for (int x = 0; x < a.size; ++x)
        for (int z = 0; z < a.size; ++z) {
            if (a.at(x, z) == 0) continue;
            for (int y = 0; y < a.size; ++y)
                c.at(x, y) = checked_add(c.at(x, y), checked_mul(a.at(x, z), b.at(z, y)));
        }
    return c;
}

}  // namespace mobius
