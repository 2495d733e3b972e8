#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stripsym/detector_model.hpp"
#include "stripsym/families.hpp"
#include "stripsym/gf2.hpp"

namespace stripsym {

// i.i.d. per-fault flip probability. p < 0.5 strictly, so maximum-likelihood
// decoding coincides with minimum-weight decoding.
struct NoiseModel {
    double p;
    explicit NoiseModel(double p_in) : p(p_in) {
        if (!(p >= 0.0 && p < 0.5)) {
            throw std::invalid_argument("NoiseModel: p must lie in [0, 0.5)");
        }
    }
};

struct DecodeResult {
    BitVector correction;
    uint32_t weight = 0;
    // Correction weight per strip; filled by the model-level decoders.
    std::vector<uint32_t> per_strip_weights;
    // Parity of the correction on each designated logical strip; filled by
    // the FamilyModel overloads.
    std::vector<uint8_t> logical_parities;
};

// Guard against exponential blowup of the exhaustive search.
inline constexpr uint32_t kMaxExhaustiveCols = 25;

// Minimum-weight solution of H e = s, scanning fault patterns by increasing
// weight and, inside the first consistent weight class, by increasing bit
// pattern with fault 0 as the most significant bit. All decoders below share
// this tie-break so degenerate optima resolve identically everywhere.
DecodeResult ml_exhaustive(const BitMatrix& h, const BitVector& s, const NoiseModel& noise);

// A block whose incidence graph is a single path or cycle. fault_order and
// det_order list block columns/rows along the walk; an open path may start
// or end on a detector (a column of weight 1 at that end).
struct ChainLayout {
    bool closed = false;
    std::vector<uint32_t> fault_order;
    std::vector<uint32_t> det_order;
    bool starts_with_det = false;
    bool ends_with_det = false;
};

// Recognizes path/cycle structure; nullopt when the block is not a chain.
std::optional<ChainLayout> extract_chain(const BitMatrix& h);

// Closed-form chain decoder: pairs defects along the line, absorbing into
// the boundary where cheaper. Bit-identical to ml_exhaustive on every input
// where both run. Throws on non-chain blocks.
DecodeResult ml_chain(const BitMatrix& h, const BitVector& s);

// Strip-wise decoder with a precomputed block decomposition; each block is
// decoded by ml_chain when it is a chain and ml_exhaustive otherwise, and
// results are written into fixed per-block slots of the output.
class StripwiseDecoder {
public:
    explicit StripwiseDecoder(const DetectorModel& model);

    DecodeResult decode(const BitVector& syndrome, const NoiseModel& noise) const;
    const BlockDecomposition& decomposition() const { return decomp_; }

private:
    uint32_t n_det_ = 0;
    uint32_t n_fault_ = 0;
    uint32_t n_strips_ = 0;
    BlockDecomposition decomp_;
    std::vector<std::optional<ChainLayout>> chain_;
};

DecodeResult decode_monolithic(const DetectorModel& model, const BitVector& s,
                               const NoiseModel& noise);
DecodeResult decode_stripwise(const DetectorModel& model, const BitVector& s,
                              const NoiseModel& noise);

// FamilyModel overloads also fill logical_parities.
DecodeResult decode_monolithic(const FamilyModel& fm, const BitVector& s, const NoiseModel& noise);
DecodeResult decode_stripwise(const FamilyModel& fm, const BitVector& s, const NoiseModel& noise);

}  // namespace stripsym
