#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "modelset/estimators.hpp"
#include "oracles.hpp"

using namespace modelset;
using profinite::Character;
using profinite::DefaultRule;
using profinite::DifferenceWindow;
using profinite::ProfiniteSpace;
using profinite::ResidueSetWindow;

namespace {

const double kTau = (1.0 + std::sqrt(5.0)) / 2.0;

ArithmeticScheme scheme_p2() { return {ProfiniteSpace({2}, {3})}; }

ArithmeticWindow single_residue_window() {
    ProfiniteSpace sp({2}, {3});
    return DifferenceWindow(ResidueSetWindow(sp, DefaultRule::kCubeFree),
                            ResidueSetWindow(sp, DefaultRule::kSquareFreeIn)); // = {4}
}

} // namespace

TEST_CASE("empirical density examples") {
    ArithmeticConfiguration c = generate(scheme_p2(), single_residue_window(), {0}, 32);
    CHECK(empirical_density(c) == doctest::Approx(8.0 / 65.0).epsilon(1e-15));
    // exact 1/8 per full period
    CHECK(empirical_density(c, /*wraparound=*/true) == doctest::Approx(0.125).epsilon(1e-15));

    ArithmeticWindow full{ResidueSetWindow(ProfiniteSpace({2}, {3}), DefaultRule::kFull)};
    ArithmeticConfiguration lattice = generate(scheme_p2(), full, {0}, 7);
    CHECK(empirical_density(lattice) == doctest::Approx(1.0));
}

TEST_CASE("sieve square-free density approaches 6/pi^2") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow sf{ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn)};
    ArithmeticConfiguration c = generate(s, sf, {0}, 1000000, Mode::kSieve);
    double target = 6.0 / (std::numbers::pi * std::numbers::pi);
    CHECK(std::abs(empirical_density(c) - target) < 1e-3);
}

TEST_CASE("fourier-bohr coefficient examples") {
    ArithmeticConfiguration c = generate(scheme_p2(), single_residue_window(), {0}, 32);

    // trivial character reduces to the density, exactly
    std::complex<double> at_zero = empirical_fb(c, 0, 8);
    CHECK(at_zero.real() == doctest::Approx(empirical_density(c)).epsilon(1e-15));
    CHECK(at_zero.imag() == doctest::Approx(0.0));

    // chi = 1/8 at a box of whole periods: exactly -1/8
    std::complex<double> fb = empirical_fb(c, 1, 8, /*wraparound=*/true);
    CHECK(std::abs(fb - std::complex<double>(-0.125, 0.0)) < 1e-13);

    // irrational frequency decays
    ArithmeticConfiguration big = generate(scheme_p2(), single_residue_window(), {0}, 100000);
    CHECK(std::abs(empirical_fb_probe(big, 1.0 / std::sqrt(2.0))) < 1e-2);
}

TEST_CASE("bulk fourier-bohr matches the single-frequency path") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow w{DifferenceWindow(ResidueSetWindow(s.space, DefaultRule::kCubeFree),
                                        ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn))};
    ArithmeticConfiguration c = generate(s, w, {5}, 432);
    std::vector<long long> nums;
    for (long long j = 0; j < 216; j += 7) nums.push_back(j);
    std::vector<std::complex<double>> bulk = empirical_fb_bulk(c, nums, 216, true);
    for (size_t i = 0; i < nums.size(); ++i)
        CHECK(std::abs(bulk[i] - empirical_fb(c, nums[i], 216, true)) < 1e-13);
}

TEST_CASE("autocorrelation examples") {
    ArithmeticConfiguration c = generate(scheme_p2(), single_residue_window(), {0}, 64);

    AutocorrEstimate raw = empirical_autocorrelation(c, {0, 3, 8, -8, 200});
    CHECK(raw.values[0].second == doctest::Approx(empirical_density(c)).epsilon(1e-15));
    CHECK(raw.values[1].second == doctest::Approx(0.0)); // lag 3: no pairs
    CHECK(raw.values[2].second == doctest::Approx(0.125).epsilon(0.2)); // 1/8 + O(1/n)
    CHECK(raw.values[2].second == raw.values[3].second);  // symmetry
    CHECK(raw.skipped == std::vector<long long>{200});    // beyond the box diameter

    AutocorrEstimate wrapped = empirical_autocorrelation(c, {0, 8, 16}, true);
    CHECK(wrapped.values[1].second == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(wrapped.values[2].second == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("weighted internal averages") {
    // eta = 1 reduces to the density
    ArithmeticConfiguration c = generate(scheme_p2(), single_residue_window(), {0}, 32);
    std::complex<double> trivial = weighted_internal_average(c, Character{{0}});
    CHECK(trivial.real() == doctest::Approx(empirical_density(c)).epsilon(1e-15));

    // square-free truncated window at P={2,3}: the class h_2 = 4 is removed
    ArithmeticScheme s23{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow sf{ResidueSetWindow(s23.space, DefaultRule::kSquareFreeIn)};
    ArithmeticConfiguration csf = generate(s23, sf, {0}, 432);
    CylinderTest h2_is_4{{{2, {4}}}};
    CHECK(weighted_internal_average(csf, h2_is_4, true) == doctest::Approx(0.0));
    CHECK(cylinder_restricted_measure(sf, h2_is_4) == Rational(0));

    // cube-free truncated window at P={2}: the class h_2 = 4 has density 1/8
    ArithmeticScheme s2 = scheme_p2();
    ArithmeticWindow cf{ResidueSetWindow(s2.space, DefaultRule::kCubeFree)};
    ArithmeticConfiguration ccf = generate(s2, cf, {0}, 32);
    CHECK(weighted_internal_average(ccf, h2_is_4, true) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(cylinder_restricted_measure(cf, h2_is_4) == Rational(1, 8));
}

TEST_CASE("fb modulus is shift invariant, phase rotates") {
    ArithmeticScheme s = scheme_p2();
    ArithmeticWindow w = single_residue_window();
    ArithmeticConfiguration c = generate(s, w, {0}, 64);
    ArithmeticConfiguration moved = shift(c, 3);
    for (long long j : {1LL, 2LL, 5LL}) {
        std::complex<double> a = empirical_fb(c, j, 8, true);
        std::complex<double> b = empirical_fb(moved, j, 8, true);
        CHECK(std::abs(std::abs(a) - std::abs(b)) < 1e-13);
        // phase factor conj(chi(g)) = exp(-2 pi i j g / 8)
        std::complex<double> rot = std::polar(1.0, -2.0 * std::numbers::pi * 3.0 * j / 8.0);
        CHECK(std::abs(b - rot * a) < 1e-13);
    }
}

TEST_CASE("genericity verdicts are exact on whole periods") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow w{DifferenceWindow(ResidueSetWindow(s.space, DefaultRule::kCubeFree),
                                        ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn))};
    GenericityOptions opts;
    opts.wraparound = true;
    opts.lags = {0, 1, 8, 27, 216};
    std::vector<Verdict> vs =
        genericity_verdicts(s, w, {0}, {216, 432}, Mode::kTruncated, opts);
    CHECK(vs.size() == 2 * (1 + 5 + 216));
    for (const Verdict& v : vs) {
        CHECK(v.tolerance == kExactTolerance);
        CHECK(v.pass);
    }
}

TEST_CASE("genericity verdicts are trivial for the full window") {
    // the full window cuts nothing: the sample is the integer lattice comb
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow full{ResidueSetWindow(s.space, DefaultRule::kFull)};
    GenericityOptions opts;
    opts.wraparound = true;
    opts.lags = {0, 1, 5};
    opts.freq_max_denominator = 6;
    std::vector<Verdict> vs = genericity_verdicts(s, full, {0}, {216}, Mode::kTruncated, opts);
    for (const Verdict& v : vs) CHECK(v.pass);
    CHECK(vs.front().empirical.real() == doctest::Approx(1.0)); // density of Z
}

TEST_CASE("genericity verdicts for a sieve run") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow sf{ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn)};
    GenericityOptions opts;
    opts.lags = {0, 1, 4};
    opts.freq_max_denominator = 4;
    std::vector<Verdict> vs = genericity_verdicts(s, sf, {0}, {100000}, Mode::kSieve, opts);
    for (const Verdict& v : vs) {
        CHECK(v.tolerance == stat_tolerance(200001.0));
        CHECK(v.pass);
    }
}

TEST_CASE("euclidean weighted internal averages") {
    EuclideanScheme f{1.0, 1.0, kTau, 1.0 - kTau};
    euclid::IntervalUnionWindow w({{-1.0, kTau - 1.0}});
    EuclideanConfiguration c = generate(f, w, {0.0, 0.0}, 5000.0);

    // indicator of a subinterval: target dens * |W intersect I|
    euclid::Interval sub{-0.5, 0.25};
    double avg = weighted_internal_average(c, sub);
    CHECK(std::abs(avg - f.density() * 0.75) < 5e-3);

    // trigonometric test function: target dens * conj(1_W-check(freq))
    std::complex<double> trig = weighted_internal_average(c, 0.75);
    std::complex<double> target =
        f.density() * std::conj(euclid::fourier_coefficient(w, 0.75));
    CHECK(std::abs(trig - target) < 5e-3);
}

TEST_CASE("internal shift keeps the per-period density") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow w{DifferenceWindow(ResidueSetWindow(s.space, DefaultRule::kCubeFree),
                                        ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn))};
    ArithmeticConfiguration c = generate(s, w, {0}, 216);
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> dd(0, 215);
    for (int t = 0; t < 8; ++t) {
        ArithmeticConfiguration moved = internal_shift(c, dd(rng));
        CHECK(empirical_density(moved, true) ==
              doctest::Approx(empirical_density(c, true)).epsilon(1e-15));
    }
}

TEST_CASE("euclidean genericity verdicts") {
    EuclideanScheme f{1.0, 1.0, kTau, 1.0 - kTau};
    euclid::IntervalUnionWindow w({{-1.0, kTau - 1.0}});
    std::vector<Verdict> vs = genericity_verdicts(f, w, {0.0, 0.0}, {3000.0}, 1.5, 3.0);
    CHECK(!vs.empty());
    for (const Verdict& v : vs) {
        CHECK(v.tolerance == stat_tolerance(6000.0));
        CHECK(v.pass);
    }
}

TEST_CASE("euclidean estimators and density bounds") {
    EuclideanScheme f{1.0, 1.0, kTau, 1.0 - kTau};
    euclid::IntervalUnionWindow w({{-1.0, kTau - 1.0}});
    EuclideanConfiguration c = generate(f, w, {0.0, 0.0}, 2000.0);

    double dens = f.density() * euclid::measure(w); // tau/sqrt(5)
    CHECK(std::abs(empirical_density(c) - dens) < 1e-2);

    // point frequencies always lie between dens * m(interior) and
    // dens * m(closure), up to the boundary term
    double eps = 2.0 / c.box_size();
    CHECK(empirical_density(c) >= f.density() * euclid::measure_interior(w) - eps);
    CHECK(empirical_density(c) <= f.density() * euclid::measure_closure(w) + eps);

    // fb at chi = 0 equals the density exactly
    CHECK(empirical_fb(c, 0.0).real() == doctest::Approx(empirical_density(c)).epsilon(1e-15));

    // autocorrelation at lag 0 equals the density exactly
    EuclideanAutocorrEstimate ac = empirical_autocorrelation(c, {0.0, 1.0});
    CHECK(ac.values[0].second == doctest::Approx(empirical_density(c)).epsilon(1e-15));
    CHECK(ac.values[1].second > 0.0);
}
