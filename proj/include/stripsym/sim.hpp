#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stripsym/decoder.hpp"
#include "stripsym/detector_model.hpp"
#include "stripsym/families.hpp"

namespace stripsym {

// Counter-based stream: the state is a hash of (seed, stream, shot) and draws
// are splitmix64 steps, so every shot owns an independent substream and
// results cannot depend on evaluation order or thread count.
class ShotRng {
public:
    ShotRng(uint64_t seed, uint64_t stream, uint64_t shot);
    uint64_t next();
    bool bernoulli(double p);

private:
    uint64_t state_;
};

// Each bit independently 1 with probability p.
BitVector sample_error(uint32_t n_fault, double p, ShotRng& rng);

// Exact ML logical error rate of a length-L repetition chain under i.i.d.
// bit flips: the binomial tail from ceil((L+1)/2) to L, evaluated with a
// term recurrence in extended precision.
double analytic_rep(uint32_t L, double p);

enum class DecoderMode { Monolithic, Stripwise };

struct SimConfig {
    FamilyId family = FamilyId::CSR;
    uint32_t L = 3;
    std::vector<double> p_values;
    uint64_t shots = 0;
    uint64_t seed = 0;
    DecoderMode decoder = DecoderMode::Stripwise;
};

struct SimPoint {
    double p = 0.0;
    uint64_t failures = 0;
    uint64_t shots = 0;
    double estimate = 0.0;
    double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / shots)
    double analytic = 0.0;   // analytic_rep at the logical strip length
};

// Per shot: sample a fault vector, compute its syndrome, decode, and flag a
// failure when the residual parity on the designated logical strip is odd.
std::vector<SimPoint> run_sim(const SimConfig& config);

struct BenchReport {
    double alpha = 0.0;
    std::vector<uint32_t> n_per_strip;  // detectors per nonempty strip
    uint32_t n_total = 0;               // total detectors
    uint32_t m = 0;                     // nonempty strips
    double mono_work = 0.0;             // n_total^alpha
    double strip_work = 0.0;            // sum of n_j^alpha
    double predicted_balanced_speedup = 0.0;  // m^(alpha-1)
    double measured_ratio = 0.0;              // mono_work / strip_work
    std::optional<double> wall_mono_seconds;
    std::optional<double> wall_strip_seconds;
};

// Analytic work ratio for a Theta(n^alpha) decoder split across strips;
// repeats > 0 additionally times a synthetic Theta(n^alpha) workload.
BenchReport bench(const DetectorModel& model, double alpha, uint32_t repeats);

}  // namespace stripsym
