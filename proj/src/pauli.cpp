#include "stripsym/pauli.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace stripsym {

namespace {

void letter_to_bits(char letter, bool& x, bool& z) {
    switch (letter) {
        case 'I': x = false; z = false; return;
        case 'X': x = true;  z = false; return;
        case 'Y': x = true;  z = true;  return;
        case 'Z': x = false; z = true;  return;
        default:
            throw std::invalid_argument(std::string("PauliString: unknown letter '") + letter + "'");
    }
}

char bits_to_letter(bool x, bool z) {
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

}  // namespace

PauliString PauliString::from_string(std::string_view letters) {
    PauliString p(static_cast<uint32_t>(letters.size()));
    for (uint32_t q = 0; q < letters.size(); ++q) p.set_letter(q, letters[q]);
    return p;
}

PauliString PauliString::single(uint32_t n_qubits, uint32_t qubit, char letter) {
    PauliString p(n_qubits);
    p.set_letter(qubit, letter);
    return p;
}

char PauliString::letter(uint32_t qubit) const {
    return bits_to_letter(x_.get(qubit), z_.get(qubit));
}

void PauliString::set_letter(uint32_t qubit, char letter) {
    bool x = false;
    bool z = false;
    letter_to_bits(letter, x, z);
    x_.set(qubit, x);
    z_.set(qubit, z);
}

std::string PauliString::str() const {
    std::string s(n_qubits(), 'I');
    for (uint32_t q = 0; q < n_qubits(); ++q) s[q] = letter(q);
    return s;
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    const auto px = p.xbits().words();
    const auto pz = p.zbits().words();
    const auto qx = q.xbits().words();
    const auto qz = q.zbits().words();
    uint32_t form = 0;
    for (size_t w = 0; w < px.size(); ++w) {
        form += static_cast<uint32_t>(std::popcount(px[w] & qz[w]));
        form += static_cast<uint32_t>(std::popcount(pz[w] & qx[w]));
    }
    return (form & 1u) == 0;
}

uint32_t weight(const PauliString& p) {
    const auto x = p.xbits().words();
    const auto z = p.zbits().words();
    uint32_t n = 0;
    for (size_t w = 0; w < x.size(); ++w) {
        n += static_cast<uint32_t>(std::popcount(x[w] | z[w]));
    }
    return n;
}

std::string clifford_name(Clifford c) {
    switch (c) {
        case Clifford::I: return "I";
        case Clifford::H: return "H";
        case Clifford::HS: return "HS";
    }
    throw std::logic_error("clifford_name: bad enum value");
}

Clifford parse_clifford(std::string_view name) {
    if (name == "I") return Clifford::I;
    if (name == "H") return Clifford::H;
    if (name == "HS") return Clifford::HS;
    throw std::invalid_argument("parse_clifford: unknown Clifford '" + std::string(name) + "'");
}

char clifford_image(Clifford c, char letter) {
    bool x = false;
    bool z = false;
    letter_to_bits(letter, x, z);
    switch (c) {
        case Clifford::I:
            return bits_to_letter(x, z);
        case Clifford::H:  // X <-> Z, Y fixed
            return bits_to_letter(z, x);
        case Clifford::HS:  // X -> Y -> Z -> X
            return bits_to_letter(x != z, x);
    }
    throw std::logic_error("clifford_image: bad enum value");
}

char clifford_preimage_of_z(Clifford c) {
    switch (c) {
        case Clifford::I: return 'Z';
        case Clifford::H: return 'X';
        case Clifford::HS: return 'Y';
    }
    throw std::logic_error("clifford_preimage_of_z: bad enum value");
}

PauliString conjugate(const PauliString& p, const DomainAssignment& assignment) {
    if (assignment.strip_of_qubit.size() < p.n_qubits()) {
        throw std::invalid_argument("conjugate: assignment does not cover all qubits");
    }
    PauliString out(p.n_qubits());
    for (uint32_t q = 0; q < p.n_qubits(); ++q) {
        const uint32_t strip = assignment.strip_of_qubit[q];
        if (strip >= assignment.clifford_of_strip.size()) {
            throw std::invalid_argument("conjugate: strip without a Clifford");
        }
        out.set_letter(q, clifford_image(assignment.clifford_of_strip[strip], p.letter(q)));
    }
    return out;
}

DetectorModel incidence_from_paulis(const std::vector<PauliString>& detectors,
                                    const std::vector<PauliString>& faults,
                                    const std::vector<uint32_t>& strip_of_detector,
                                    uint32_t n_strips) {
    if (strip_of_detector.size() != detectors.size()) {
        throw std::invalid_argument("incidence_from_paulis: strip map size mismatch");
    }
    const uint32_t n = detectors.empty()
                           ? (faults.empty() ? 0 : faults[0].n_qubits())
                           : detectors[0].n_qubits();
    for (const auto& d : detectors) {
        if (d.n_qubits() != n) throw std::invalid_argument("incidence_from_paulis: qubit count mismatch");
    }
    for (const auto& f : faults) {
        if (f.n_qubits() != n) throw std::invalid_argument("incidence_from_paulis: qubit count mismatch");
    }

    std::vector<std::vector<uint32_t>> supports(faults.size());
    for (uint32_t f = 0; f < faults.size(); ++f) {
        for (uint32_t d = 0; d < detectors.size(); ++d) {
            if (!commutes(detectors[d], faults[f])) supports[f].push_back(d);
        }
    }
    return DetectorModel(static_cast<uint32_t>(detectors.size()), std::move(supports),
                         strip_of_detector, n_strips);
}

DeformReport deform_and_check(const std::vector<PauliString>& parent_detectors,
                              const std::vector<uint32_t>& strip_of_detector,
                              const DomainAssignment& assignment) {
    const uint32_t n_qubits = static_cast<uint32_t>(assignment.strip_of_qubit.size());
    const uint32_t n_strips = static_cast<uint32_t>(assignment.clifford_of_strip.size());
    for (uint32_t s : assignment.strip_of_qubit) {
        if (s >= n_strips) throw std::invalid_argument("deform_and_check: qubit strip without a Clifford");
    }
    for (uint32_t s : strip_of_detector) {
        if (s >= n_strips) throw std::invalid_argument("deform_and_check: detector strip without a Clifford");
    }
    for (const auto& d : parent_detectors) {
        if (d.n_qubits() != n_qubits) {
            throw std::invalid_argument("deform_and_check: detector qubit count mismatch");
        }
    }

    DeformReport rep;
    rep.parent_axis_per_strip.resize(n_strips);
    for (uint32_t s = 0; s < n_strips; ++s) {
        rep.parent_axis_per_strip[s] = clifford_preimage_of_z(assignment.clifford_of_strip[s]);
    }

    // Parent faults: per qubit, the dominant-axis Pauli its strip pulls back
    // from Z. Columns are indexed by qubit on both sides of the comparison.
    std::vector<PauliString> parent_faults;
    parent_faults.reserve(n_qubits);
    for (uint32_t v = 0; v < n_qubits; ++v) {
        parent_faults.push_back(PauliString::single(
            n_qubits, v, rep.parent_axis_per_strip[assignment.strip_of_qubit[v]]));
    }
    const DetectorModel parent_model =
        incidence_from_paulis(parent_detectors, parent_faults, strip_of_detector, n_strips);
    rep.parent = check_strip_symmetric(parent_model, true);
    if (!rep.parent.strip_symmetric) {
        throw std::invalid_argument("deform_and_check: parent detector model is not strip-symmetric");
    }

    std::vector<PauliString> deformed_detectors;
    deformed_detectors.reserve(parent_detectors.size());
    for (const auto& d : parent_detectors) deformed_detectors.push_back(conjugate(d, assignment));

    std::vector<PauliString> z_faults;
    z_faults.reserve(n_qubits);
    for (uint32_t v = 0; v < n_qubits; ++v) z_faults.push_back(PauliString::single(n_qubits, v, 'Z'));

    const DetectorModel deformed_model =
        incidence_from_paulis(deformed_detectors, z_faults, strip_of_detector, n_strips);

    rep.incidence_equal = incidence_matrix(deformed_model) == incidence_matrix(parent_model);
    rep.deformed = check_strip_symmetric(deformed_model, true);
    rep.ok = rep.incidence_equal && rep.deformed.strip_symmetric;
    return rep;
}

bool weight_preservation_check(uint32_t trials, uint32_t n_qubits, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (uint32_t t = 0; t < trials; ++t) {
        const uint32_t n = 1 + static_cast<uint32_t>(rng() % n_qubits);
        PauliString p(n);
        PauliString q(n);
        for (uint32_t i = 0; i < n; ++i) {
            p.set_letter(i, "IXYZ"[rng() % 4]);
            q.set_letter(i, "IXYZ"[rng() % 4]);
        }
        DomainAssignment a;
        const uint32_t strips = 1 + static_cast<uint32_t>(rng() % 4);
        a.strip_of_qubit.resize(n);
        for (uint32_t i = 0; i < n; ++i) a.strip_of_qubit[i] = static_cast<uint32_t>(rng() % strips);
        for (uint32_t s = 0; s < strips; ++s) {
            a.clifford_of_strip.push_back(static_cast<Clifford>(rng() % 3));
        }

        const PauliString pc = conjugate(p, a);
        const PauliString qc = conjugate(q, a);
        if (weight(pc) != weight(p)) return false;
        if (commutes(pc, qc) != commutes(p, q)) return false;
    }
    return true;
}

}  // namespace stripsym
