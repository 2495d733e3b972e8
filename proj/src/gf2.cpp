#include "stripsym/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace stripsym {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(static_cast<uint32_t>(bits.size()));
    for (uint32_t i = 0; i < v.size_; ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

bool BitVector::get(uint32_t i) const {
    if (i >= size_) throw std::out_of_range("BitVector::get: index past length");
    return (words_[i >> 6] >> (i & 63u)) & 1u;
}

void BitVector::set(uint32_t i, bool value) {
    if (i >= size_) throw std::out_of_range("BitVector::set: index past length");
    const uint64_t mask = uint64_t(1) << (i & 63u);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

uint32_t BitVector::popcount() const {
    uint32_t n = 0;
    for (uint64_t w : words_) n += static_cast<uint32_t>(std::popcount(w));
    return n;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) return true;
    }
    return false;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (uint32_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitVector::operator^=: length mismatch");
    }
    for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    const uint32_t r = static_cast<uint32_t>(rows.size());
    const uint32_t c = r ? static_cast<uint32_t>(rows[0].size()) : 0;
    BitMatrix m(r, c);
    for (uint32_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("BitMatrix::from_strings: ragged rows");
        }
        for (uint32_t j = 0; j < c; ++j) {
            if (rows[i][j] == '1') {
                m.set(i, j, true);
            } else if (rows[i][j] != '0') {
                throw std::invalid_argument("BitMatrix::from_strings: expected '0' or '1'");
            }
        }
    }
    return m;
}

bool BitMatrix::get(uint32_t r, uint32_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::get: index out of range");
    return (words_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63u)) & 1u;
}

void BitMatrix::set(uint32_t r, uint32_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("BitMatrix::set: index out of range");
    const uint64_t mask = uint64_t(1) << (c & 63u);
    uint64_t& w = words_[size_t(r) * wpr_ + (c >> 6)];
    if (value) {
        w |= mask;
    } else {
        w &= ~mask;
    }
}

BitVector BitMatrix::row(uint32_t r) const {
    BitVector v(cols_);
    for (uint32_t c = 0; c < cols_; ++c) {
        if (get(r, c)) v.set(c, true);
    }
    return v;
}

BitVector BitMatrix::column(uint32_t c) const {
    BitVector v(rows_);
    for (uint32_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r, true);
    }
    return v;
}

std::span<const uint64_t> BitMatrix::row_words(uint32_t r) const {
    if (r >= rows_) throw std::out_of_range("BitMatrix::row_words: row out of range");
    return {words_.data() + size_t(r) * wpr_, wpr_};
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r, true);
        }
    }
    return t;
}

std::string BitMatrix::str() const {
    std::string s;
    s.reserve(size_t(rows_) * (cols_ + 1));
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("mat_vec: vector length does not match column count");
    }
    BitVector out(m.rows());
    const auto vw = v.words();
    for (uint32_t r = 0; r < m.rows(); ++r) {
        const auto rw = m.row_words(r);
        uint32_t ones = 0;
        for (size_t w = 0; w < rw.size(); ++w) {
            ones += static_cast<uint32_t>(std::popcount(rw[w] & vw[w]));
        }
        if (ones & 1u) out.set(r, true);
    }
    return out;
}

uint32_t gf2_rank(const BitMatrix& m) {
    const uint32_t rows = m.rows();
    const uint32_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Work on a row-wise copy packed into plain word vectors.
    const uint32_t wpr = (cols + 63u) / 64u;
    std::vector<uint64_t> a(size_t(rows) * wpr, 0);
    for (uint32_t r = 0; r < rows; ++r) {
        auto rw = m.row_words(r);
        for (uint32_t w = 0; w < wpr; ++w) a[size_t(r) * wpr + w] = rw[w];
    }
    auto bit = [&](uint32_t r, uint32_t c) -> bool {
        return (a[size_t(r) * wpr + (c >> 6)] >> (c & 63u)) & 1u;
    };

    uint32_t rank = 0;
    for (uint32_t c = 0; c < cols && rank < rows; ++c) {
        uint32_t pivot = rank;
        while (pivot < rows && !bit(pivot, c)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (uint32_t w = 0; w < wpr; ++w) {
                std::swap(a[size_t(pivot) * wpr + w], a[size_t(rank) * wpr + w]);
            }
        }
        for (uint32_t r = rank + 1; r < rows; ++r) {
            if (bit(r, c)) {
                for (uint32_t w = 0; w < wpr; ++w) {
                    a[size_t(r) * wpr + w] ^= a[size_t(rank) * wpr + w];
                }
            }
        }
        ++rank;
    }
    return rank;
}

bool is_permutation(const std::vector<uint32_t>& p, uint32_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (uint32_t v : p) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<uint32_t> invert_permutation(const std::vector<uint32_t>& p) {
    if (!is_permutation(p, static_cast<uint32_t>(p.size()))) {
        throw std::invalid_argument("invert_permutation: not a permutation");
    }
    std::vector<uint32_t> inv(p.size());
    for (uint32_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
    return inv;
}

BitMatrix permute(const BitMatrix& m,
                  const std::vector<uint32_t>& row_perm,
                  const std::vector<uint32_t>& col_perm) {
    if (!is_permutation(row_perm, m.rows()) || !is_permutation(col_perm, m.cols())) {
        throw std::invalid_argument("permute: non-bijective permutation");
    }
    BitMatrix out(m.rows(), m.cols());
    for (uint32_t r = 0; r < m.rows(); ++r) {
        for (uint32_t c = 0; c < m.cols(); ++c) {
            if (m.get(row_perm[r], col_perm[c])) out.set(r, c, true);
        }
    }
    return out;
}

}  // namespace stripsym
