#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stripsym {

// Bit-packed binary vector over GF(2). Bits past size() are kept zero so
// whole-word operations (xor, popcount, equality) never need masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(uint32_t size) : size_(size), words_(word_count(size), 0) {}

    // Parses "0101..." (one char per bit, index 0 first).
    static BitVector from_string(std::string_view bits);

    uint32_t size() const { return size_; }
    bool get(uint32_t i) const;
    void set(uint32_t i, bool value);

    uint32_t popcount() const;
    bool any() const;
    std::string str() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<const uint64_t> words() const { return words_; }

private:
    static uint32_t word_count(uint32_t n) { return (n + 63u) / 64u; }

    uint32_t size_ = 0;
    std::vector<uint64_t> words_;
};

// Row-major bit-packed binary matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(uint32_t rows, uint32_t cols)
        : rows_(rows),
          cols_(cols),
          wpr_((cols + 63u) / 64u),
          words_(size_t(rows) * wpr_, 0) {}

    // Rows as "0101..." strings, all of equal length.
    static BitMatrix from_strings(const std::vector<std::string>& rows);

    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    bool get(uint32_t r, uint32_t c) const;
    void set(uint32_t r, uint32_t c, bool value);

    BitVector row(uint32_t r) const;
    BitVector column(uint32_t c) const;
    std::span<const uint64_t> row_words(uint32_t r) const;

    BitMatrix transposed() const;
    std::string str() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    uint32_t rows_ = 0;
    uint32_t cols_ = 0;
    uint32_t wpr_ = 0;  // words per row
    std::vector<uint64_t> words_;
};

// result[i] = parity of (row i AND v); requires v.size() == m.cols().
BitVector mat_vec(const BitMatrix& m, const BitVector& v);

// GF(2) rank via forward elimination on a copy. Pivots are chosen
// column-major, first nonzero row, so the result is deterministic.
uint32_t gf2_rank(const BitMatrix& m);

// result[i][j] = m[row_perm[i]][col_perm[j]]. Both permutations must be
// bijections on the respective index ranges.
BitMatrix permute(const BitMatrix& m,
                  const std::vector<uint32_t>& row_perm,
                  const std::vector<uint32_t>& col_perm);

bool is_permutation(const std::vector<uint32_t>& p, uint32_t n);
std::vector<uint32_t> invert_permutation(const std::vector<uint32_t>& p);

}  // namespace stripsym
