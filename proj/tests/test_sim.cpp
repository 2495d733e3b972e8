#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "stripsym/sim.hpp"

using namespace stripsym;

TEST_CASE("sample_error") {
    SUBCASE("p = 0 gives the zero vector") {
        ShotRng rng(1, 0, 0);
        CHECK_FALSE(sample_error(64, 0.0, rng).any());
    }
    SUBCASE("fixed substream reproduces the same vector") {
        ShotRng a(99, 2, 17);
        ShotRng b(99, 2, 17);
        CHECK(sample_error(100, 0.3, a) == sample_error(100, 0.3, b));
        ShotRng c(99, 2, 18);
        CHECK(sample_error(100, 0.3, a) != sample_error(100, 0.3, c));
    }
    SUBCASE("density concentrates near p just below one half") {
        const double p = 0.499;
        const uint32_t n = 1000000;
        ShotRng rng(7, 0, 0);
        const BitVector e = sample_error(n, p, rng);
        const double sigma = std::sqrt(p * (1 - p) * n);
        CHECK(std::abs(double(e.popcount()) - p * n) < 5.0 * sigma);
    }
    SUBCASE("p out of range") {
        ShotRng rng(1, 0, 0);
        CHECK_THROWS_AS(sample_error(4, 0.5, rng), std::invalid_argument);
    }
}

TEST_CASE("analytic_rep") {
    CHECK(analytic_rep(1, 0.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(analytic_rep(3, 0.1) == doctest::Approx(0.028).epsilon(1e-12));
    CHECK(analytic_rep(3, 0.5) == 0.5);
    for (uint32_t L : {1u, 3u, 5u, 7u, 9u, 11u, 13u, 15u}) {
        CHECK(analytic_rep(L, 0.5) == 0.5);  // binomial symmetry at odd L
    }
    for (uint32_t L = 1; L <= 8; ++L) {
        CHECK(analytic_rep(L, 0.0) == 0.0);
        CHECK(analytic_rep(L, 1.0) == 1.0);
    }
    SUBCASE("monotone nondecreasing in p on [0, 0.5]") {
        for (uint32_t L = 1; L <= 6; ++L) {
            double prev = 0.0;
            for (int i = 0; i <= 50; ++i) {
                const double v = analytic_rep(L, 0.01 * i);
                CHECK(v >= prev - 1e-15);
                prev = v;
            }
        }
    }
    SUBCASE("stays finite and sane at L = 64") {
        const double v = analytic_rep(64, 0.3);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
    CHECK_THROWS_AS(analytic_rep(0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(analytic_rep(3, 1.5), std::invalid_argument);
}

TEST_CASE("run_sim") {
    SUBCASE("p = 0 estimates zero exactly") {
        SimConfig cfg;
        cfg.family = FamilyId::CSR;
        cfg.L = 3;
        cfg.p_values = {0.0};
        cfg.shots = 500;
        cfg.seed = 1;
        const auto pts = run_sim(cfg);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].estimate == 0.0);
        CHECK(pts[0].failures == 0);
    }
    SUBCASE("CSR(3) at p = 0.1 agrees with the analytic chain rate") {
        SimConfig cfg;
        cfg.family = FamilyId::CSR;
        cfg.L = 3;
        cfg.p_values = {0.1};
        cfg.shots = 20000;
        cfg.seed = 20240807;
        const auto pts = run_sim(cfg);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].analytic == doctest::Approx(0.028).epsilon(1e-12));
        CHECK(std::abs(pts[0].estimate - pts[0].analytic) <= 5.0 * pts[0].std_error);
    }
    SUBCASE("identical config gives identical results") {
        SimConfig cfg;
        cfg.family = FamilyId::DSR;
        cfg.L = 3;
        cfg.p_values = {0.05, 0.2};
        cfg.shots = 2000;
        cfg.seed = 5;
        const auto a = run_sim(cfg);
        const auto b = run_sim(cfg);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].failures == b[i].failures);
            CHECK(a[i].estimate == b[i].estimate);
        }
    }
    SUBCASE("monolithic and stripwise decoders fail on exactly the same shots") {
        for (FamilyId id : {FamilyId::XZZX, FamilyId::HCSR}) {
            SimConfig cfg;
            cfg.family = id;
            cfg.L = 3;
            cfg.p_values = {0.15};
            cfg.shots = 2000;
            cfg.seed = 99;
            cfg.decoder = DecoderMode::Stripwise;
            const auto strip = run_sim(cfg);
            cfg.decoder = DecoderMode::Monolithic;
            const auto mono = run_sim(cfg);
            CHECK(strip[0].failures == mono[0].failures);
        }
    }
    SUBCASE("invalid configs are rejected") {
        SimConfig cfg;
        cfg.p_values = {0.6};
        cfg.shots = 10;
        CHECK_THROWS_AS(run_sim(cfg), std::invalid_argument);
        cfg.p_values = {0.1};
        cfg.shots = 0;
        CHECK_THROWS_AS(run_sim(cfg), std::invalid_argument);
    }
}

TEST_CASE("bench") {
    SUBCASE("balanced strips hit the predicted speedup exactly") {
        // 4 strips of 4 detectors, no faults needed for the work model.
        std::vector<uint32_t> strips;
        for (uint32_t s = 0; s < 4; ++s) {
            for (int i = 0; i < 4; ++i) strips.push_back(s);
        }
        DetectorModel m(16, {}, strips);
        const BenchReport rep = bench(m, 2.0, 0);
        CHECK(rep.mono_work == 256.0);
        CHECK(rep.strip_work == 64.0);
        CHECK(rep.measured_ratio == 4.0);
        CHECK(rep.predicted_balanced_speedup == 4.0);
    }
    SUBCASE("balanced models for several m and alpha") {
        for (uint32_t m = 2; m <= 8; ++m) {
            for (double alpha : {1.5, 2.0, 3.0}) {
                std::vector<uint32_t> strips;
                for (uint32_t s = 0; s < m; ++s) {
                    for (int i = 0; i < 3; ++i) strips.push_back(s);
                }
                DetectorModel model(3 * m, {}, strips);
                const BenchReport rep = bench(model, alpha, 0);
                CHECK(rep.measured_ratio ==
                      doctest::Approx(rep.predicted_balanced_speedup).epsilon(1e-12));
                if (alpha == 2.0) CHECK(rep.measured_ratio == double(m));
            }
        }
    }
    SUBCASE("DSR(5) work ratio") {
        const FamilyModel fm = build(FamilyId::DSR, 5);
        const BenchReport rep = bench(fm.model, 2.0, 0);
        CHECK(rep.n_total == 16);
        CHECK(rep.m == 7);
        CHECK(rep.n_per_strip == std::vector<uint32_t>{1, 2, 3, 4, 3, 2, 1});
        CHECK(rep.mono_work == 256.0);
        CHECK(rep.strip_work == 44.0);
        CHECK(rep.measured_ratio == doctest::Approx(256.0 / 44.0).epsilon(1e-12));
    }
    SUBCASE("alpha at or below 1 is rejected") {
        DetectorModel m(2, {}, {0, 1});
        CHECK_THROWS_AS(bench(m, 1.0, 0), std::invalid_argument);
        CHECK_THROWS_AS(bench(m, 0.5, 0), std::invalid_argument);
    }
    SUBCASE("non-local model is rejected") {
        DetectorModel m(2, {{0, 1}}, {0, 1});
        CHECK_THROWS_AS(bench(m, 2.0, 0), std::invalid_argument);
    }
    SUBCASE("timing mode fills wall clocks") {
        DetectorModel m(8, {}, {0, 0, 0, 0, 1, 1, 1, 1});
        const BenchReport rep = bench(m, 2.0, 3);
        CHECK(rep.wall_mono_seconds.has_value());
        CHECK(rep.wall_strip_seconds.has_value());
        CHECK(*rep.wall_mono_seconds >= 0.0);
    }
}
