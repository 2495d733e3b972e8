#include "stripsym/sim.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace stripsym {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

ShotRng::ShotRng(uint64_t seed, uint64_t stream, uint64_t shot) {
    state_ = mix64(seed + kGolden);
    state_ = mix64(state_ ^ (stream + kGolden));
    state_ = mix64(state_ ^ (shot + kGolden));
}

uint64_t ShotRng::next() {
    state_ += kGolden;
    return mix64(state_);
}

bool ShotRng::bernoulli(double p) {
    // p < 1 here, so the 2^64-scaled threshold fits a uint64.
    const uint64_t threshold = static_cast<uint64_t>(std::ldexp(p, 64));
    return next() < threshold;
}

BitVector sample_error(uint32_t n_fault, double p, ShotRng& rng) {
    if (!(p >= 0.0 && p < 0.5)) {
        throw std::invalid_argument("sample_error: p must lie in [0, 0.5)");
    }
    const uint64_t threshold = static_cast<uint64_t>(std::ldexp(p, 64));
    BitVector e(n_fault);
    for (uint32_t i = 0; i < n_fault; ++i) {
        if (rng.next() < threshold) e.set(i, true);
    }
    return e;
}

double analytic_rep(uint32_t L, double p) {
    if (L < 1) throw std::invalid_argument("analytic_rep: L must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("analytic_rep: p must lie in [0, 1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;

    const uint32_t w0 = (L + 2) / 2;  // ceil((L + 1) / 2)
    const long double lp = static_cast<long double>(p);
    const long double lq = 1.0L - lp;

    // First term C(L, w0) p^w0 q^(L-w0), then the ratio recurrence; this
    // stays finite for L up to 64 where binomial coefficients overflow.
    long double term = 1.0L;
    for (uint32_t i = 0; i < w0; ++i) {
        term *= static_cast<long double>(L - i) / static_cast<long double>(w0 - i);
    }
    for (uint32_t i = 0; i < w0; ++i) term *= lp;
    for (uint32_t i = 0; i < L - w0; ++i) term *= lq;

    long double sum = term;
    for (uint32_t w = w0; w < L; ++w) {
        term *= static_cast<long double>(L - w) / static_cast<long double>(w + 1);
        term *= lp / lq;
        sum += term;
    }
    if (sum < 0.0L) sum = 0.0L;
    if (sum > 1.0L) sum = 1.0L;
    return static_cast<double>(sum);
}

std::vector<SimPoint> run_sim(const SimConfig& config) {
    if (config.shots < 1) throw std::invalid_argument("run_sim: shots must be at least 1");
    for (double p : config.p_values) {
        if (!(p >= 0.0 && p < 0.5)) {
            throw std::invalid_argument("run_sim: every p must lie in [0, 0.5)");
        }
    }

    const FamilyModel fm = build(config.family, config.L);
    const BitMatrix h = incidence_matrix(fm.model);
    const StripwiseDecoder stripwise(fm.model);

    const std::vector<uint32_t>& logical = fm.logical_faults.at(0);
    const uint32_t logical_len = static_cast<uint32_t>(logical.size());

    std::vector<SimPoint> points;
    points.reserve(config.p_values.size());
    for (size_t ip = 0; ip < config.p_values.size(); ++ip) {
        const double p = config.p_values[ip];
        const NoiseModel point_noise(p);
        uint64_t failures = 0;
        for (uint64_t shot = 0; shot < config.shots; ++shot) {
            ShotRng rng(config.seed, ip, shot);
            const BitVector e = sample_error(fm.model.n_fault(), p, rng);
            const BitVector s = mat_vec(h, e);
            const DecodeResult r = config.decoder == DecoderMode::Stripwise
                                       ? stripwise.decode(s, point_noise)
                                       : ml_exhaustive(h, s, point_noise);
            uint8_t parity = 0;
            for (uint32_t f : logical) {
                parity ^= (r.correction.get(f) != e.get(f)) ? 1 : 0;
            }
            failures += parity;
        }
        SimPoint pt;
        pt.p = p;
        pt.failures = failures;
        pt.shots = config.shots;
        pt.estimate = static_cast<double>(failures) / static_cast<double>(config.shots);
        pt.std_error = std::sqrt(pt.estimate * (1.0 - pt.estimate) /
                                 static_cast<double>(config.shots));
        pt.analytic = analytic_rep(logical_len, p);
        points.push_back(pt);
    }
    return points;
}

namespace {

// n^alpha with exact integer powers when alpha is integral, so balanced
// ratios come out exact in the analytic mode.
double work(uint32_t n, double alpha) {
    if (alpha == std::floor(alpha) && alpha >= 1.0 && alpha <= 8.0) {
        double v = 1.0;
        for (uint32_t i = 0; i < static_cast<uint32_t>(alpha); ++i) v *= n;
        return v;
    }
    return std::pow(static_cast<double>(n), alpha);
}

// Spins a Theta(ops) loop; the volatile sink keeps it from being elided.
double time_workload(double ops, uint32_t repeats) {
    volatile uint64_t sink = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (uint32_t rep = 0; rep < repeats; ++rep) {
        const uint64_t n = static_cast<uint64_t>(ops);
        uint64_t acc = 0;
        for (uint64_t i = 0; i < n; ++i) acc += i * 2654435761u;
        sink = sink + acc;
    }
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

BenchReport bench(const DetectorModel& model, double alpha, uint32_t repeats) {
    if (!(alpha > 1.0)) throw std::invalid_argument("bench: alpha must exceed 1");
    for (uint32_t f = 0; f < model.n_fault(); ++f) {
        if (fault_strip(model, f).kind == FaultClass::kNonLocal) {
            throw std::invalid_argument("bench: model has a non-local fault");
        }
    }

    BenchReport rep;
    rep.alpha = alpha;
    rep.n_total = model.n_det();
    for (uint32_t s = 0; s < model.n_strips(); ++s) {
        const uint32_t n = static_cast<uint32_t>(model.detectors_of_strip(s).size());
        if (n == 0) continue;
        rep.n_per_strip.push_back(n);
        ++rep.m;
        rep.strip_work += work(n, alpha);
    }
    rep.mono_work = work(rep.n_total, alpha);
    rep.predicted_balanced_speedup = std::pow(static_cast<double>(rep.m), alpha - 1.0);
    rep.measured_ratio = rep.strip_work > 0.0 ? rep.mono_work / rep.strip_work : 1.0;

    if (repeats > 0) {
        rep.wall_mono_seconds = time_workload(rep.mono_work, repeats);
        double strip_seconds = 0.0;
        for (uint32_t n : rep.n_per_strip) strip_seconds += time_workload(work(n, alpha), repeats);
        rep.wall_strip_seconds = strip_seconds;
    }
    return rep;
}

}  // namespace stripsym
