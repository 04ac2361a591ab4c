#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mobius {

// Dense boolean matrix with rows packed into 64-bit words.  Backs the order
// relation, the cover relation, and per-element spectrum sets.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows),
          cols_(cols),
          words_(cols > 0 ? (cols + 63) / 64 : 0),
          bits_(static_cast<std::size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool test(int r, int c) const {
        return (word(r, c >> 6) >> (c & 63)) & std::uint64_t{1};
    }

    void set(int r, int c) {
        bits_[index(r, c >> 6)] |= std::uint64_t{1} << (c & 63);
    }

    // row r |= row s
    void or_row_into(int r, int s) {
        for (int w = 0; w < words_; ++w) bits_[index(r, w)] |= word(s, w);
    }

    int popcount_and(int r, int s) const {
        int count = 0;
        for (int w = 0; w < words_; ++w)
            count += std::popcount(word(r, w) & word(s, w));
        return count;
    }

    // |row r of *this ∩ row s of other|; the matrices must share column count.
    int popcount_and_with(int r, const BitMatrix& other, int s) const {
        int count = 0;
        for (int w = 0; w < words_; ++w)
            count += std::popcount(word(r, w) & other.word(s, w));
        return count;
    }

    // row s contains row r as a set
    bool row_subset(int r, int s) const {
        for (int w = 0; w < words_; ++w)
            if (word(r, w) & ~word(s, w)) return false;
        return true;
    }

    // rows agree on columns 0..prefix_bits-1
    bool rows_equal_prefix(int r, int s, int prefix_bits) const {
        int full = prefix_bits >> 6;
        for (int w = 0; w < full; ++w)
            if (word(r, w) != word(s, w)) return false;
        int rem = prefix_bits & 63;
        if (rem != 0) {
            std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
            if ((word(r, full) & mask) != (word(s, full) & mask)) return false;
        }
        return true;
    }

    std::vector<int> row_members(int r) const {
        std::vector<int> out;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = word(r, w);
            while (bits != 0) {
                int b = std::countr_zero(bits);
                out.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        return out;
    }

private:
    std::size_t index(int r, int w) const {
        return static_cast<std::size_t>(r) * words_ + w;
    }
    std::uint64_t word(int r, int w) const { return bits_[index(r, w)]; }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace mobius
