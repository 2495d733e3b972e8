#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "stripsym/detector_model.hpp"
#include "stripsym/gf2.hpp"

namespace test_helpers {

// Independent decoding oracle: scan every fault pattern, in increasing
// numeric order with fault 0 as the most significant bit, and keep the first
// pattern of minimum weight whose naive per-entry syndrome matches s.
// Deliberately shares no code with the decoders it checks.
inline std::optional<stripsym::BitVector> oracle_min_weight_lex(const stripsym::BitMatrix& h,
                                                                const stripsym::BitVector& s) {
    const uint32_t n = h.cols();
    if (n > 20) throw std::invalid_argument("oracle_min_weight_lex: too many columns");
    uint64_t best_value = 0;
    uint32_t best_weight = UINT32_MAX;
    for (uint64_t v = 0; v < (uint64_t(1) << n); ++v) {
        bool match = true;
        for (uint32_t r = 0; r < h.rows() && match; ++r) {
            uint32_t parity = 0;
            for (uint32_t c = 0; c < n; ++c) {
                const bool bit = (v >> (n - 1 - c)) & 1u;
                if (bit && h.get(r, c)) parity ^= 1u;
            }
            if (parity != (s.get(r) ? 1u : 0u)) match = false;
        }
        if (!match) continue;
        uint32_t weight = 0;
        for (uint32_t c = 0; c < n; ++c) weight += (v >> c) & 1u;
        if (weight < best_weight) {
            best_weight = weight;
            best_value = v;
        }
    }
    if (best_weight == UINT32_MAX) return std::nullopt;
    stripsym::BitVector e(n);
    for (uint32_t c = 0; c < n; ++c) {
        if ((best_value >> (n - 1 - c)) & 1u) e.set(c, true);
    }
    return e;
}

// Enumerates the full column space of h (2^rank syndromes) by Gray-code
// walking over an independent column basis.
inline std::vector<stripsym::BitVector> column_space(const stripsym::BitMatrix& h) {
    using stripsym::BitVector;
    auto leading = [](const BitVector& v) -> uint32_t {
        for (uint32_t i = 0; i < v.size(); ++i) {
            if (v.get(i)) return i;
        }
        return UINT32_MAX;
    };

    std::vector<BitVector> basis;  // original independent columns
    std::vector<std::optional<BitVector>> by_lead(h.rows());
    for (uint32_t c = 0; c < h.cols(); ++c) {
        const BitVector col = h.column(c);
        BitVector cur = col;
        while (cur.any()) {
            const uint32_t lead = leading(cur);
            if (!by_lead[lead]) {
                by_lead[lead] = cur;
                basis.push_back(col);
                break;
            }
            cur ^= *by_lead[lead];  // clears `lead`, may only set later bits
        }
    }

    std::vector<BitVector> space;
    space.reserve(size_t(1) << basis.size());
    BitVector acc(h.rows());
    space.push_back(acc);
    for (uint64_t g = 1; g < (uint64_t(1) << basis.size()); ++g) {
        const uint32_t flip = static_cast<uint32_t>(std::countr_zero(g));
        acc ^= basis[flip];
        space.push_back(acc);
    }
    return space;
}

struct RandomModelOptions {
    bool inject_non_local = false;
    uint32_t max_strips = 5;
    uint32_t max_dets_per_strip = 5;
    uint32_t max_faults = 30;
};

// Random strip-local model whose faults flip 0, 1, or 2 detectors of a
// single strip; optionally one extra fault spanning two strips.
inline stripsym::DetectorModel random_strip_local_model(std::mt19937_64& rng,
                                                        const RandomModelOptions& opt = {}) {
    const uint32_t min_strips = opt.inject_non_local ? 2u : 1u;
    const uint32_t n_strips =
        min_strips + static_cast<uint32_t>(rng() % (opt.max_strips - min_strips + 1));

    std::vector<uint32_t> strip_of_det;
    std::vector<std::vector<uint32_t>> dets_of_strip(n_strips);
    for (uint32_t s = 0; s < n_strips; ++s) {
        const uint32_t n = 1 + static_cast<uint32_t>(rng() % opt.max_dets_per_strip);
        for (uint32_t i = 0; i < n; ++i) {
            dets_of_strip[s].push_back(static_cast<uint32_t>(strip_of_det.size()));
            strip_of_det.push_back(s);
        }
    }
    const uint32_t n_det = static_cast<uint32_t>(strip_of_det.size());

    const uint32_t n_fault = 1 + static_cast<uint32_t>(rng() % opt.max_faults);
    std::vector<std::vector<uint32_t>> supports;
    for (uint32_t f = 0; f < n_fault; ++f) {
        const uint32_t roll = static_cast<uint32_t>(rng() % 10);
        if (roll == 0) {
            supports.push_back({});  // orphan
            continue;
        }
        const uint32_t s = static_cast<uint32_t>(rng() % n_strips);
        const auto& dets = dets_of_strip[s];
        if (roll <= 3 || dets.size() < 2) {
            supports.push_back({dets[rng() % dets.size()]});
        } else {
            uint32_t a = static_cast<uint32_t>(rng() % dets.size());
            uint32_t b = static_cast<uint32_t>(rng() % (dets.size() - 1));
            if (b >= a) ++b;
            supports.push_back({dets[a], dets[b]});
        }
    }
    if (opt.inject_non_local) {
        // two detectors in distinct strips
        const uint32_t s1 = static_cast<uint32_t>(rng() % n_strips);
        uint32_t s2 = static_cast<uint32_t>(rng() % (n_strips - 1));
        if (s2 >= s1) ++s2;
        supports.push_back({dets_of_strip[s1][rng() % dets_of_strip[s1].size()],
                            dets_of_strip[s2][rng() % dets_of_strip[s2].size()]});
    }
    return stripsym::DetectorModel(n_det, std::move(supports), std::move(strip_of_det), n_strips);
}

}  // namespace test_helpers
