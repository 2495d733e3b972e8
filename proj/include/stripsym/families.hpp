#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stripsym/detector_model.hpp"
#include "stripsym/pauli.hpp"

namespace stripsym {

// XZZX / DWCC / X3Z3 are Z-detector shadows of the physical lattices (built
// from Pauli detectors along diagonals, domain lines, and vertical domains);
// DSR / CSR / HCSR are the synthetic chain stacks with matching statistics.
enum class FamilyId { XZZX, DWCC, X3Z3, DSR, CSR, HCSR };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::XZZX, FamilyId::DWCC, FamilyId::X3Z3,
                                            FamilyId::DSR,  FamilyId::CSR,  FamilyId::HCSR};

std::string family_name(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

struct FamilyModel {
    FamilyId family;
    uint32_t L = 0;
    DetectorModel model;
    // One designated maximal-length strip carries the logical-Z parity.
    std::vector<uint32_t> logical_strips;
    std::vector<std::vector<uint32_t>> logical_faults;  // per logical strip
};

// Faults live on an L x L qubit grid, row-major index r*L + c. Strips are
// diagonals c - r = k (XZZX, DSR), columns (DWCC, CSR), or columns with only
// even indices active (X3Z3, HCSR). Consecutive strip qubits are linked by a
// detector; interior faults flip two detectors, strip ends flip one.
FamilyModel build(FamilyId family, uint32_t L);

// true iff the two models' block-shape multisets (rows x cols) and orphan
// fault counts agree.
bool blocks_isomorphic(const FamilyModel& a, const FamilyModel& b);

struct Table1Row {
    FamilyId family;
    uint32_t L;
    StripStats stats;
};

std::vector<Table1Row> table1(const std::vector<FamilyId>& families,
                              const std::vector<uint32_t>& sizes);

// Lattice pieces exposed for the deformation checks: the qubit strip map and
// per-strip link detectors in a chosen Pauli basis ('X' or 'Z').
std::vector<uint32_t> family_qubit_strips(FamilyId family, uint32_t L);
uint32_t family_strip_count(FamilyId family, uint32_t L);
void family_chain_detectors(FamilyId family,
                            uint32_t L,
                            char basis,
                            std::vector<PauliString>& detectors,
                            std::vector<uint32_t>& strip_of_detector);

}  // namespace stripsym
