#include <algorithm>
#include <stdexcept>
#include <random>

#include "doctest.h"
#include "stripsym/gf2.hpp"

using namespace stripsym;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, uint32_t rows, uint32_t cols) {
    BitMatrix m(rows, cols);
    for (uint32_t r = 0; r < rows; ++r) {
        for (uint32_t c = 0; c < cols; ++c) m.set(r, c, rng() & 1u);
    }
    return m;
}

BitVector random_vector(std::mt19937_64& rng, uint32_t n) {
    BitVector v(n);
    for (uint32_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
    return v;
}

std::vector<uint32_t> random_permutation(std::mt19937_64& rng, uint32_t n) {
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("BitVector basics") {
    BitVector v = BitVector::from_string("0101");
    CHECK(v.size() == 4);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.str() == "0101");
    CHECK(v.popcount() == 2);
    CHECK_THROWS_AS(v.get(4), std::out_of_range);
    CHECK_THROWS_AS(v.set(100, true), std::out_of_range);

    BitVector self = v;
    self ^= v;
    CHECK(self == BitVector(4));
    CHECK_FALSE(self.any());

    CHECK_THROWS_AS(v ^= BitVector(3), std::invalid_argument);
    CHECK_THROWS(BitVector::from_string("01a"));
}

TEST_CASE("mat_vec") {
    SUBCASE("identity") {
        BitMatrix id = BitMatrix::from_strings({"100", "010", "001"});
        CHECK(mat_vec(id, BitVector::from_string("101")).str() == "101");
    }
    SUBCASE("open chain matrix") {
        BitMatrix h = BitMatrix::from_strings({"110", "011"});
        CHECK(mat_vec(h, BitVector::from_string("010")).str() == "11");
    }
    SUBCASE("zero matrix") {
        BitMatrix z(2, 3);
        CHECK(mat_vec(z, BitVector::from_string("111")).str() == "00");
        CHECK(mat_vec(z, BitVector::from_string("000")).str() == "00");
    }
    SUBCASE("dimension mismatch") {
        BitMatrix h(2, 3);
        CHECK_THROWS_AS(mat_vec(h, BitVector(2)), std::invalid_argument);
    }
    SUBCASE("linearity on random inputs") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 50; ++t) {
            const uint32_t rows = 1 + rng() % 70;
            const uint32_t cols = 1 + rng() % 70;
            const BitMatrix m = random_matrix(rng, rows, cols);
            const BitVector u = random_vector(rng, cols);
            const BitVector v = random_vector(rng, cols);
            CHECK(mat_vec(m, u ^ v) == (mat_vec(m, u) ^ mat_vec(m, v)));
        }
    }
}

TEST_CASE("rank") {
    CHECK(gf2_rank(BitMatrix::from_strings({"100", "010", "001"})) == 3);
    CHECK(gf2_rank(BitMatrix::from_strings({"110", "011"})) == 2);
    CHECK(gf2_rank(BitMatrix(3, 4)) == 0);
    CHECK(gf2_rank(BitMatrix(0, 0)) == 0);

    SUBCASE("invariant under permutations") {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 30; ++t) {
            const uint32_t rows = 1 + rng() % 12;
            const uint32_t cols = 1 + rng() % 12;
            const BitMatrix m = random_matrix(rng, rows, cols);
            const auto rp = random_permutation(rng, rows);
            const auto cp = random_permutation(rng, cols);
            CHECK(gf2_rank(permute(m, rp, cp)) == gf2_rank(m));
            CHECK(gf2_rank(m) <= std::min(rows, cols));
        }
    }
}

TEST_CASE("permute") {
    const BitMatrix chain = BitMatrix::from_strings({"110", "011"});

    SUBCASE("identity permutations") {
        CHECK(permute(chain, {0, 1}, {0, 1, 2}) == chain);
    }
    SUBCASE("swapping the rows of the 2x2 identity gives the anti-diagonal") {
        const BitMatrix id2 = BitMatrix::from_strings({"10", "01"});
        CHECK(permute(id2, {1, 0}, {0, 1}) == BitMatrix::from_strings({"01", "10"}));
    }
    SUBCASE("reversing rows and columns of the chain matrix is a fixed point") {
        CHECK(permute(chain, {1, 0}, {2, 1, 0}) == chain);
    }
    SUBCASE("inverse permutations recover the original") {
        std::mt19937_64 rng(13);
        for (int t = 0; t < 30; ++t) {
            const uint32_t rows = 1 + rng() % 10;
            const uint32_t cols = 1 + rng() % 10;
            const BitMatrix m = random_matrix(rng, rows, cols);
            const auto rp = random_permutation(rng, rows);
            const auto cp = random_permutation(rng, cols);
            CHECK(permute(permute(m, rp, cp), invert_permutation(rp), invert_permutation(cp)) == m);
        }
    }
    SUBCASE("non-bijective permutations are rejected") {
        CHECK_THROWS_AS(permute(chain, {0, 0}, {0, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(permute(chain, {0, 1}, {0, 1, 3}), std::invalid_argument);
        CHECK_THROWS_AS(permute(chain, {0}, {0, 1, 2}), std::invalid_argument);
    }
}

TEST_CASE("transpose and column access") {
    const BitMatrix h = BitMatrix::from_strings({"110", "011"});
    CHECK(h.transposed() == BitMatrix::from_strings({"10", "11", "01"}));
    CHECK(h.column(1).str() == "11");
    CHECK(h.row(0).str() == "110");
}
