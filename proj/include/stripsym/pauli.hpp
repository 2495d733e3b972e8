#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stripsym/detector_model.hpp"
#include "stripsym/gf2.hpp"

namespace stripsym {

// An n-qubit Pauli operator in symplectic form, phase discarded. Qubit q
// carries X iff xbits[q], Z iff zbits[q], Y iff both.
class PauliString {
public:
    explicit PauliString(uint32_t n_qubits) : x_(n_qubits), z_(n_qubits) {}

    // Parses letters I, X, Y, Z, e.g. "IXZY".
    static PauliString from_string(std::string_view letters);
    // Identity everywhere except `letter` on `qubit`.
    static PauliString single(uint32_t n_qubits, uint32_t qubit, char letter);

    uint32_t n_qubits() const { return x_.size(); }
    char letter(uint32_t qubit) const;
    void set_letter(uint32_t qubit, char letter);
    std::string str() const;

    const BitVector& xbits() const { return x_; }
    const BitVector& zbits() const { return z_; }

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    BitVector x_;
    BitVector z_;
};

// true iff the symplectic form <P.x, Q.z> + <P.z, Q.x> vanishes mod 2.
bool commutes(const PauliString& p, const PauliString& q);

// Number of non-identity tensor factors.
uint32_t weight(const PauliString& p);

// Single-qubit Cliffords acting on Pauli letters up to phase.
// HS denotes conjugation by H*S (S applied first), giving the cycle
// X -> Y -> Z -> X. The opposite order would give the inverse cycle.
enum class Clifford { I, H, HS };

std::string clifford_name(Clifford c);
Clifford parse_clifford(std::string_view name);

// Image of a letter under conjugation, phase discarded.
char clifford_image(Clifford c, char letter);
// The letter mapped to Z by the given Clifford (I -> Z, H -> X, HS -> Y).
char clifford_preimage_of_z(Clifford c);

// One Clifford per strip, applied to every qubit of that strip.
struct DomainAssignment {
    std::vector<uint32_t> strip_of_qubit;
    std::vector<Clifford> clifford_of_strip;
};

// Conjugates qubit-wise through the strip Cliffords; weight is preserved.
PauliString conjugate(const PauliString& p, const DomainAssignment& assignment);

// Builds the detector model whose fault supports are the detectors each
// fault anticommutes with. n_strips == 0 derives the count from the map.
DetectorModel incidence_from_paulis(const std::vector<PauliString>& detectors,
                                    const std::vector<PauliString>& faults,
                                    const std::vector<uint32_t>& strip_of_detector,
                                    uint32_t n_strips = 0);

struct DeformReport {
    std::vector<char> parent_axis_per_strip;  // letter pulled back from Z
    SymmetryReport parent;
    SymmetryReport deformed;
    bool incidence_equal = false;  // deformed incidence == parent incidence
    bool ok = false;               // incidence_equal && deformed.strip_symmetric
};

// Verifies that applying the domain-wise Clifford to the detectors and
// re-deriving incidence against physical Z faults reproduces the parent
// incidence (columns identified qubit-by-qubit) and preserves strip symmetry.
// The parent model pairs each qubit with the single-qubit Pauli its strip
// Clifford maps to Z; virtual boundaries are applied in both symmetry checks.
// Throws if the parent model is not strip-symmetric.
DeformReport deform_and_check(const std::vector<PauliString>& parent_detectors,
                              const std::vector<uint32_t>& strip_of_detector,
                              const DomainAssignment& assignment);

// Samples random Pauli pairs and domain assignments; true iff weight and
// pairwise commutation are invariant under conjugation in every trial.
bool weight_preservation_check(uint32_t trials, uint32_t n_qubits, uint64_t seed);

}  // namespace stripsym
