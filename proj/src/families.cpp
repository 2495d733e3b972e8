#include "stripsym/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stripsym {

namespace {

// Qubits of each diagonal strip c - r = k, k ascending from -(L-1), qubits
// ordered by increasing row.
std::vector<std::vector<uint32_t>> diagonal_strip_qubits(uint32_t L) {
    std::vector<std::vector<uint32_t>> strips(2 * L - 1);
    for (int k = -int(L - 1); k <= int(L - 1); ++k) {
        auto& q = strips[size_t(k + int(L - 1))];
        for (uint32_t r = 0; r < L; ++r) {
            const int c = int(r) + k;
            if (c >= 0 && c < int(L)) q.push_back(r * L + uint32_t(c));
        }
    }
    return strips;
}

// Qubits of each column strip, ordered by increasing row.
std::vector<std::vector<uint32_t>> column_strip_qubits(uint32_t L) {
    std::vector<std::vector<uint32_t>> strips(L);
    for (uint32_t c = 0; c < L; ++c) {
        for (uint32_t r = 0; r < L; ++r) strips[c].push_back(r * L + c);
    }
    return strips;
}

struct StripLayout {
    std::vector<std::vector<uint32_t>> strip_qubits;
    std::vector<bool> active;
    uint32_t logical_strip = 0;
};

StripLayout layout_for(FamilyId family, uint32_t L) {
    StripLayout lay;
    switch (family) {
        case FamilyId::XZZX:
        case FamilyId::DSR:
            lay.strip_qubits = diagonal_strip_qubits(L);
            lay.active.assign(lay.strip_qubits.size(), true);
            lay.logical_strip = L - 1;  // main diagonal
            break;
        case FamilyId::DWCC:
        case FamilyId::CSR:
            lay.strip_qubits = column_strip_qubits(L);
            lay.active.assign(L, true);
            lay.logical_strip = 0;
            break;
        case FamilyId::X3Z3:
        case FamilyId::HCSR:
            lay.strip_qubits = column_strip_qubits(L);
            lay.active.assign(L, false);
            for (uint32_t c = 0; c < L; c += 2) lay.active[c] = true;
            lay.logical_strip = 0;
            break;
    }
    return lay;
}

// Synthetic route: write the chain supports directly. Detector i of an
// active strip sits between strip qubits i and i+1.
DetectorModel build_chain_stack(const StripLayout& lay, uint32_t L) {
    const uint32_t n_fault = L * L;
    const uint32_t n_strips = static_cast<uint32_t>(lay.strip_qubits.size());
    std::vector<std::vector<uint32_t>> supports(n_fault);
    std::vector<uint32_t> det_strips;

    uint32_t det = 0;
    for (uint32_t s = 0; s < n_strips; ++s) {
        if (!lay.active[s]) continue;
        const auto& q = lay.strip_qubits[s];
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            supports[q[i]].push_back(det);
            supports[q[i + 1]].push_back(det);
            det_strips.push_back(s);
            ++det;
        }
    }
    DetectorModel model(det, std::move(supports), std::move(det_strips), n_strips);
    model.fault_labels.reserve(n_fault);
    for (uint32_t r = 0; r < L; ++r) {
        for (uint32_t c = 0; c < L; ++c) {
            model.fault_labels.push_back("q" + std::to_string(r) + "," + std::to_string(c));
        }
    }
    return model;
}

// Physical-shadow route: place link operators along each strip of the
// lattice and derive the incidence from anticommutation with Z faults.
DetectorModel build_pauli_shadow(const StripLayout& lay, uint32_t L) {
    const uint32_t n_qubits = L * L;
    std::vector<PauliString> detectors;
    std::vector<uint32_t> det_strips;
    for (uint32_t s = 0; s < lay.strip_qubits.size(); ++s) {
        if (!lay.active[s]) continue;
        const auto& q = lay.strip_qubits[s];
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            PauliString link(n_qubits);
            link.set_letter(q[i], 'X');
            link.set_letter(q[i + 1], 'X');
            detectors.push_back(std::move(link));
            det_strips.push_back(s);
        }
    }
    std::vector<PauliString> faults;
    faults.reserve(n_qubits);
    for (uint32_t v = 0; v < n_qubits; ++v) faults.push_back(PauliString::single(n_qubits, v, 'Z'));

    DetectorModel model = incidence_from_paulis(detectors, faults, det_strips,
                                                static_cast<uint32_t>(lay.strip_qubits.size()));
    model.fault_labels.reserve(n_qubits);
    for (uint32_t r = 0; r < L; ++r) {
        for (uint32_t c = 0; c < L; ++c) {
            model.fault_labels.push_back("q" + std::to_string(r) + "," + std::to_string(c));
        }
    }
    return model;
}

bool is_synthetic(FamilyId family) {
    return family == FamilyId::DSR || family == FamilyId::CSR || family == FamilyId::HCSR;
}

}  // namespace

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::XZZX: return "XZZX";
        case FamilyId::DWCC: return "DWCC";
        case FamilyId::X3Z3: return "X3Z3";
        case FamilyId::DSR: return "DSR";
        case FamilyId::CSR: return "CSR";
        case FamilyId::HCSR: return "HCSR";
    }
    throw std::logic_error("family_name: bad enum value");
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (FamilyId id : kAllFamilies) {
        if (family_name(id) == name) return id;
    }
    return std::nullopt;
}

FamilyModel build(FamilyId family, uint32_t L) {
    if (L < 2) throw std::invalid_argument("build: L must be at least 2");
    const StripLayout lay = layout_for(family, L);

    FamilyModel fm{family, L,
                   is_synthetic(family) ? build_chain_stack(lay, L) : build_pauli_shadow(lay, L),
                   {},
                   {}};
    fm.logical_strips.push_back(lay.logical_strip);
    fm.logical_faults.push_back(lay.strip_qubits[lay.logical_strip]);
    return fm;
}

bool blocks_isomorphic(const FamilyModel& a, const FamilyModel& b) {
    const BlockDecomposition da = block_decompose(a.model);
    const BlockDecomposition db = block_decompose(b.model);
    if (da.orphan_faults.size() != db.orphan_faults.size()) return false;

    auto shapes = [](const BlockDecomposition& d) {
        std::map<std::pair<uint32_t, uint32_t>, uint32_t> counts;
        for (const Block& blk : d.blocks) ++counts[{blk.h.rows(), blk.h.cols()}];
        return counts;
    };
    return shapes(da) == shapes(db);
}

std::vector<Table1Row> table1(const std::vector<FamilyId>& families,
                              const std::vector<uint32_t>& sizes) {
    std::vector<Table1Row> rows;
    rows.reserve(families.size() * sizes.size());
    for (FamilyId family : families) {
        for (uint32_t L : sizes) {
            rows.push_back({family, L, strip_stats(build(family, L).model)});
        }
    }
    return rows;
}

std::vector<uint32_t> family_qubit_strips(FamilyId family, uint32_t L) {
    if (L < 2) throw std::invalid_argument("family_qubit_strips: L must be at least 2");
    const StripLayout lay = layout_for(family, L);
    std::vector<uint32_t> strip_of_qubit(L * L, 0);
    for (uint32_t s = 0; s < lay.strip_qubits.size(); ++s) {
        for (uint32_t q : lay.strip_qubits[s]) strip_of_qubit[q] = s;
    }
    return strip_of_qubit;
}

uint32_t family_strip_count(FamilyId family, uint32_t L) {
    if (L < 2) throw std::invalid_argument("family_strip_count: L must be at least 2");
    return static_cast<uint32_t>(layout_for(family, L).strip_qubits.size());
}

void family_chain_detectors(FamilyId family,
                            uint32_t L,
                            char basis,
                            std::vector<PauliString>& detectors,
                            std::vector<uint32_t>& strip_of_detector) {
    if (L < 2) throw std::invalid_argument("family_chain_detectors: L must be at least 2");
    if (basis != 'X' && basis != 'Z') {
        throw std::invalid_argument("family_chain_detectors: basis must be 'X' or 'Z'");
    }
    const StripLayout lay = layout_for(family, L);
    const uint32_t n_qubits = L * L;
    detectors.clear();
    strip_of_detector.clear();
    for (uint32_t s = 0; s < lay.strip_qubits.size(); ++s) {
        if (!lay.active[s]) continue;
        const auto& q = lay.strip_qubits[s];
        for (size_t i = 0; i + 1 < q.size(); ++i) {
            PauliString link(n_qubits);
            link.set_letter(q[i], basis);
            link.set_letter(q[i + 1], basis);
            detectors.push_back(std::move(link));
            strip_of_detector.push_back(s);
        }
    }
}

}  // namespace stripsym
