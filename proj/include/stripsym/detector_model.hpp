#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stripsym/gf2.hpp"

namespace stripsym {

// A Z-detector incidence structure: n_det detectors partitioned into strips,
// n_fault elementary faults, and per fault the sorted set of detectors it
// flips. Immutable after construction; all operations below are pure.
class DetectorModel {
public:
    // n_strips == 0 derives the strip count as max referenced index + 1.
    // Supports are sorted on construction; duplicate detector indices,
    // out-of-range detectors, and undersized strip maps are rejected.
    DetectorModel(uint32_t n_det,
                  std::vector<std::vector<uint32_t>> fault_supports,
                  std::vector<uint32_t> strip_of_detector,
                  uint32_t n_strips = 0);

    uint32_t n_det() const { return n_det_; }
    uint32_t n_fault() const { return static_cast<uint32_t>(supports_.size()); }
    uint32_t n_strips() const { return n_strips_; }

    const std::vector<uint32_t>& support(uint32_t fault) const;
    uint32_t strip_of_detector(uint32_t det) const;
    const std::vector<uint32_t>& detector_strips() const { return strip_of_det_; }
    // Detectors of one strip, ascending. Empty strips yield empty lists.
    const std::vector<uint32_t>& detectors_of_strip(uint32_t strip) const;

    // Optional human-readable names; empty vectors mean unlabeled.
    std::vector<std::string> det_labels;
    std::vector<std::string> fault_labels;

private:
    uint32_t n_det_ = 0;
    uint32_t n_strips_ = 0;
    std::vector<std::vector<uint32_t>> supports_;
    std::vector<uint32_t> strip_of_det_;
    std::vector<std::vector<uint32_t>> dets_of_strip_;
};

// Classification of a fault against the strip partition.
struct FaultClass {
    enum Kind { kStrip, kNonLocal, kOrphan };
    Kind kind;
    uint32_t strip;  // valid only when kind == kStrip
};

// One row of the strip-statistics table.
struct StripStats {
    uint32_t m = 0;         // strips with at least one detector
    uint32_t min_dets = 0;  // over nonempty strips (0 when m == 0)
    uint32_t max_dets = 0;
    uint64_t off_block = 0;  // incidence entries outside strip-diagonal blocks
    uint32_t non_local = 0;  // faults whose support spans >= 2 strips
    uint32_t n_det = 0;
    uint32_t n_fault = 0;

    friend bool operator==(const StripStats&, const StripStats&) = default;
};

struct Block {
    uint32_t strip = 0;
    BitMatrix h;                     // detectors of the strip x faults of the strip
    std::vector<uint32_t> det_ids;   // original detector index per block row
    std::vector<uint32_t> fault_ids; // original fault index per block column
};

struct BlockDecomposition {
    // permute(incidence, row_perm, col_perm) is block diagonal with the
    // blocks below on the diagonal and orphan zero-columns at the end.
    std::vector<uint32_t> row_perm;
    std::vector<uint32_t> col_perm;
    std::vector<Block> blocks;            // nonempty strips, ascending strip index
    std::vector<uint32_t> orphan_faults;  // faults with empty support
};

struct SymmetryReport {
    // Route 1: strip-local faults, pair-creating columns, and a verified
    // block-diagonal permutation of the incidence matrix.
    bool condition_block_diagonal = false;
    // Route 2: every strip indicator lies in the left kernel of H_Z and every
    // fault flips 0 or 2 detectors which, when present, share one strip.
    bool condition_one_form = false;
    bool strip_symmetric = false;  // both routes (they must agree)
    bool augmented = false;        // virtual boundary detectors were applied
    std::vector<bool> one_form_per_strip;
    std::vector<uint32_t> non_local_faults;
    std::vector<uint32_t> odd_weight_faults;  // support size not in {0, 2}
};

// H_Z: n_det x n_fault, entry (d, f) = 1 iff d is in the support of f.
BitMatrix incidence_matrix(const DetectorModel& model);

FaultClass fault_strip(const DetectorModel& model, uint32_t fault);

// off_block uses the canonical fault-to-strip assignment: a fault belongs to
// the strip of its lowest-indexed flipped detector; orphans belong to none.
StripStats strip_stats(const DetectorModel& model);

// Requires every fault strip-local; throws naming the first non-local fault.
BlockDecomposition block_decompose(const DetectorModel& model);

// Reassembles the block-diagonal matrix (blocks on the diagonal, orphan
// zero-columns last) in permuted coordinates.
BitMatrix assemble_blocks(const BlockDecomposition& decomp,
                          uint32_t n_det,
                          uint32_t n_fault);

// Entry j is true iff every fault flips an even number of strip-j detectors.
std::vector<bool> check_one_form(const DetectorModel& model);

// Evaluates both characterizations of strip symmetry; throws std::logic_error
// if the two routes disagree (they are provably equivalent).
SymmetryReport check_strip_symmetric(const DetectorModel& model,
                                     bool use_virtual_boundaries);

// For each strip with at least one weight-1 fault, appends one virtual
// detector to that strip and adds it to the support of every weight-1 fault
// there. Original detectors and all other faults are unchanged.
DetectorModel augment_virtual_boundaries(const DetectorModel& model);

// DETMODEL v1 text format: header "DETMODEL v1", then "dets <n>",
// "faults <n>", one "strip <det> <strip>" line per detector and one
// "fault <fault> <det>*" line per fault. '#' starts a comment.
DetectorModel read_detmodel(std::istream& in);
DetectorModel read_detmodel_file(const std::string& path);
void write_detmodel(std::ostream& out,
                    const DetectorModel& model,
                    const std::vector<std::string>& header_comments = {});

}  // namespace stripsym
