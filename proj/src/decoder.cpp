#include "stripsym/decoder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace stripsym {

namespace {

// Weight-ordered search over fault patterns. Columns are re-indexed by
// "rev" position j = cols-1-i so that enumerating the largest chosen rev
// position in ascending order visits patterns in increasing numeric value
// (fault 0 most significant); the first solution found in a weight class is
// therefore the lexicographic minimum of that class.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const BitMatrix& h, const BitVector& s)
        : cols_(h.cols()), words_((h.rows() + 63u) / 64u) {
        col_words_.assign(size_t(cols_) * words_, 0);
        max_col_weight_ = 0;
        for (uint32_t c = 0; c < cols_; ++c) {
            const uint32_t j = cols_ - 1 - c;
            uint32_t w = 0;
            for (uint32_t r = 0; r < h.rows(); ++r) {
                if (h.get(r, c)) {
                    col_words_[size_t(j) * words_ + (r >> 6)] |= uint64_t(1) << (r & 63u);
                    ++w;
                }
            }
            max_col_weight_ = std::max(max_col_weight_, w);
        }
        acc_.assign(words_, 0);
        const auto sw = s.words();
        for (uint32_t w = 0; w < words_ && w < sw.size(); ++w) acc_[w] = sw[w];
    }

    // Returns the chosen rev positions of the minimum-weight solution.
    std::optional<std::vector<uint32_t>> run() {
        for (uint32_t w = 0; w <= cols_; ++w) {
            chosen_.clear();
            if (search(cols_, w)) return chosen_;
        }
        return std::nullopt;
    }

    uint32_t cols() const { return cols_; }

private:
    bool acc_zero() const {
        for (uint64_t w : acc_) {
            if (w) return false;
        }
        return true;
    }

    uint32_t acc_popcount() const {
        uint32_t n = 0;
        for (uint64_t w : acc_) n += static_cast<uint32_t>(std::popcount(w));
        return n;
    }

    void toggle(uint32_t j) {
        const uint64_t* cw = col_words_.data() + size_t(j) * words_;
        for (uint32_t w = 0; w < words_; ++w) acc_[w] ^= cw[w];
    }

    bool search(uint32_t bound, uint32_t left) {
        if (left == 0) return acc_zero();
        if (acc_popcount() > left * max_col_weight_) return false;
        for (uint32_t j = left - 1; j < bound; ++j) {
            toggle(j);
            chosen_.push_back(j);
            if (search(j, left - 1)) return true;
            chosen_.pop_back();
            toggle(j);
        }
        return false;
    }

    uint32_t cols_;
    uint32_t words_;
    uint32_t max_col_weight_ = 0;
    std::vector<uint64_t> col_words_;
    std::vector<uint64_t> acc_;
    std::vector<uint32_t> chosen_;
};

bool syndrome_solvable(const BitMatrix& h, const BitVector& s) {
    BitMatrix aug(h.rows(), h.cols() + 1);
    for (uint32_t r = 0; r < h.rows(); ++r) {
        for (uint32_t c = 0; c < h.cols(); ++c) {
            if (h.get(r, c)) aug.set(r, c, true);
        }
        if (s.get(r)) aug.set(r, h.cols(), true);
    }
    return gf2_rank(aug) == gf2_rank(h);
}

// (weight, bit pattern with column 0 most significant) comparison.
bool pattern_less(const BitVector& a, const BitVector& b) {
    const uint32_t wa = a.popcount();
    const uint32_t wb = b.popcount();
    if (wa != wb) return wa < wb;
    for (uint32_t c = 0; c < a.size(); ++c) {
        const bool ba = a.get(c);
        const bool bb = b.get(c);
        if (ba != bb) return bb;  // a has 0 where b has 1 -> a smaller
    }
    return false;
}

DecodeResult decode_chain(const ChainLayout& lay, uint32_t n_cols, const BitVector& s) {
    const size_t nf = lay.fault_order.size();
    const size_t nd = lay.det_order.size();
    auto sd = [&](size_t k) { return s.get(lay.det_order[k]); };

    auto to_result = [&](const std::vector<uint8_t>& e) {
        DecodeResult r;
        r.correction = BitVector(n_cols);
        for (size_t i = 0; i < nf; ++i) {
            if (e[i]) r.correction.set(lay.fault_order[i], true);
        }
        r.weight = r.correction.popcount();
        return r;
    };

    std::vector<uint8_t> e(nf, 0);
    if (lay.closed) {
        // det k links faults k and k+1 (mod n). Two candidates when the
        // closing constraint holds, none otherwise.
        for (size_t i = 0; i + 1 < nf; ++i) e[i + 1] = e[i] ^ sd(i);
        if ((e[nf - 1] ^ e[0]) != static_cast<uint8_t>(sd(nd - 1))) {
            throw std::runtime_error("ml_chain: syndrome has odd parity on a closed chain");
        }
    } else if (lay.starts_with_det) {
        // Unique solution anchored at the leading weight-1 column.
        e[0] = sd(0);
        for (size_t i = 1; i + (lay.ends_with_det ? 1 : 0) < nd; ++i) e[i] = e[i - 1] ^ sd(i);
        if (lay.ends_with_det && (e[nf - 1] != static_cast<uint8_t>(sd(nd - 1)))) {
            throw std::runtime_error("ml_chain: inconsistent syndrome on detector-terminated chain");
        }
        return to_result(e);
    } else if (lay.ends_with_det) {
        // Mirror case: anchor at the trailing detector and walk back.
        e[nf - 1] = sd(nd - 1);
        for (size_t i = nf - 1; i-- > 0;) e[i] = e[i + 1] ^ sd(i);
        return to_result(e);
    } else {
        // Fault endpoints on both sides: det k links faults k and k+1.
        for (size_t k = 0; k < nd; ++k) e[k + 1] = e[k] ^ sd(k);
    }

    // Two valid assignments differing by the all-ones kernel vector; keep the
    // minimum-weight one, breaking ties toward the smaller bit pattern.
    DecodeResult r0 = to_result(e);
    for (auto& b : e) b ^= 1;
    DecodeResult r1 = to_result(e);
    return pattern_less(r1.correction, r0.correction) ? r1 : r0;
}

std::vector<uint32_t> strip_weights(const DetectorModel& model, const BitVector& correction) {
    std::vector<uint32_t> w(model.n_strips(), 0);
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        if (!correction.get(f)) continue;
        const FaultClass fc = fault_strip(model, f);
        if (fc.kind == FaultClass::kStrip) ++w[fc.strip];
    }
    return w;
}

std::vector<uint8_t> logical_parities_of(const FamilyModel& fm, const BitVector& correction) {
    std::vector<uint8_t> out;
    out.reserve(fm.logical_faults.size());
    for (const auto& faults : fm.logical_faults) {
        uint8_t parity = 0;
        for (uint32_t f : faults) parity ^= correction.get(f) ? 1 : 0;
        out.push_back(parity);
    }
    return out;
}

}  // namespace

DecodeResult ml_exhaustive(const BitMatrix& h, const BitVector& s, const NoiseModel& noise) {
    (void)noise;  // p < 0.5 makes minimum weight the likelihood maximizer
    if (h.cols() > kMaxExhaustiveCols) {
        throw std::invalid_argument("ml_exhaustive: column count exceeds guard limit");
    }
    if (s.size() != h.rows()) {
        throw std::invalid_argument("ml_exhaustive: syndrome length does not match row count");
    }

    DecodeResult r;
    r.correction = BitVector(h.cols());
    if (!s.any()) return r;

    if (!syndrome_solvable(h, s)) {
        throw std::runtime_error("ml_exhaustive: syndrome not in the column space");
    }
    ExhaustiveSearch search(h, s);
    const auto chosen = search.run();
    if (!chosen) throw std::logic_error("ml_exhaustive: solvable syndrome but no pattern found");
    for (uint32_t j : *chosen) r.correction.set(h.cols() - 1 - j, true);
    r.weight = r.correction.popcount();
    return r;
}

std::optional<ChainLayout> extract_chain(const BitMatrix& h) {
    const uint32_t rows = h.rows();
    const uint32_t cols = h.cols();
    if (cols == 0) return std::nullopt;
    if (rows == 0) {
        if (cols != 1) return std::nullopt;
        ChainLayout lay;
        lay.fault_order = {0};
        return lay;
    }

    std::vector<std::vector<uint32_t>> det_adj(rows);
    std::vector<std::vector<uint32_t>> fault_adj(cols);
    for (uint32_t r = 0; r < rows; ++r) {
        for (uint32_t c = 0; c < cols; ++c) {
            if (h.get(r, c)) {
                det_adj[r].push_back(c);
                fault_adj[c].push_back(r);
            }
        }
    }

    uint32_t edges = 0;
    uint32_t odd_faults = 0;
    uint32_t odd_dets = 0;
    for (uint32_t c = 0; c < cols; ++c) {
        const size_t d = fault_adj[c].size();
        if (d == 0 || d > 2) return std::nullopt;
        if (d == 1) ++odd_faults;
        edges += static_cast<uint32_t>(d);
    }
    for (uint32_t r = 0; r < rows; ++r) {
        const size_t d = det_adj[r].size();
        if (d == 0 || d > 2) return std::nullopt;
        if (d == 1) ++odd_dets;
    }

    const uint32_t vertices = rows + cols;
    const bool closed = (odd_faults + odd_dets) == 0;
    if (closed && edges != vertices) return std::nullopt;
    if (!closed && (odd_faults + odd_dets != 2 || edges != vertices - 1)) return std::nullopt;

    ChainLayout lay;
    lay.closed = closed;

    // Pick the walk start: for open paths a degree-1 fault if one exists,
    // else a degree-1 detector; for cycles any fault.
    bool at_det = false;
    uint32_t start = 0;
    if (!closed) {
        if (odd_faults > 0) {
            while (fault_adj[start].size() != 1) ++start;
        } else {
            at_det = true;
            while (det_adj[start].size() != 1) ++start;
        }
    }
    lay.starts_with_det = at_det;

    // Walk the alternating path/cycle. prev always lies on the opposite side
    // of the bipartition from cur, the same side as cur's neighbors.
    bool cur_is_det = at_det;
    uint32_t cur = start;
    bool has_prev = false;
    uint32_t prev = 0;
    bool last_was_det = at_det;
    while (true) {
        if (cur_is_det) {
            lay.det_order.push_back(cur);
        } else {
            lay.fault_order.push_back(cur);
        }
        last_was_det = cur_is_det;
        const auto& adj = cur_is_det ? det_adj[cur] : fault_adj[cur];
        uint32_t next = UINT32_MAX;
        for (uint32_t n : adj) {
            if (!has_prev || n != prev) {
                next = n;
                break;
            }
        }
        if (next == UINT32_MAX) break;  // open end reached
        prev = cur;
        has_prev = true;
        cur = next;
        cur_is_det = !cur_is_det;
        if (closed && !cur_is_det && cur == start) break;  // cycle complete
    }
    lay.ends_with_det = !closed && last_was_det;

    if (lay.fault_order.size() != cols || lay.det_order.size() != rows) {
        return std::nullopt;  // disconnected: more than one component
    }
    return lay;
}

DecodeResult ml_chain(const BitMatrix& h, const BitVector& s) {
    if (s.size() != h.rows()) {
        throw std::invalid_argument("ml_chain: syndrome length does not match row count");
    }
    const auto lay = extract_chain(h);
    if (!lay) throw std::invalid_argument("ml_chain: block is not an open or closed chain");
    return decode_chain(*lay, h.cols(), s);
}

StripwiseDecoder::StripwiseDecoder(const DetectorModel& model)
    : n_det_(model.n_det()),
      n_fault_(model.n_fault()),
      n_strips_(model.n_strips()),
      decomp_(block_decompose(model)) {
    chain_.reserve(decomp_.blocks.size());
    for (const Block& b : decomp_.blocks) chain_.push_back(extract_chain(b.h));
}

DecodeResult StripwiseDecoder::decode(const BitVector& syndrome, const NoiseModel& noise) const {
    if (syndrome.size() != n_det_) {
        throw std::invalid_argument("StripwiseDecoder: syndrome length does not match model");
    }
    DecodeResult out;
    out.correction = BitVector(n_fault_);
    out.per_strip_weights.assign(n_strips_, 0);

    for (size_t k = 0; k < decomp_.blocks.size(); ++k) {
        const Block& b = decomp_.blocks[k];
        BitVector sj(b.h.rows());
        for (uint32_t r = 0; r < b.det_ids.size(); ++r) {
            if (syndrome.get(b.det_ids[r])) sj.set(r, true);
        }
        const DecodeResult rj =
            chain_[k] ? decode_chain(*chain_[k], b.h.cols(), sj) : ml_exhaustive(b.h, sj, noise);
        for (uint32_t c = 0; c < b.fault_ids.size(); ++c) {
            if (rj.correction.get(c)) out.correction.set(b.fault_ids[c], true);
        }
        out.weight += rj.weight;
        out.per_strip_weights[b.strip] = rj.weight;
    }
    return out;
}

DecodeResult decode_monolithic(const DetectorModel& model, const BitVector& s,
                               const NoiseModel& noise) {
    DecodeResult r = ml_exhaustive(incidence_matrix(model), s, noise);
    r.per_strip_weights = strip_weights(model, r.correction);
    return r;
}

DecodeResult decode_stripwise(const DetectorModel& model, const BitVector& s,
                              const NoiseModel& noise) {
    return StripwiseDecoder(model).decode(s, noise);
}

DecodeResult decode_monolithic(const FamilyModel& fm, const BitVector& s, const NoiseModel& noise) {
    DecodeResult r = decode_monolithic(fm.model, s, noise);
    r.logical_parities = logical_parities_of(fm, r.correction);
    return r;
}

DecodeResult decode_stripwise(const FamilyModel& fm, const BitVector& s, const NoiseModel& noise) {
    DecodeResult r = decode_stripwise(fm.model, s, noise);
    r.logical_parities = logical_parities_of(fm, r.correction);
    return r;
}

}  // namespace stripsym
