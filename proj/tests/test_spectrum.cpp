#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "modelset/estimators.hpp"
#include "modelset/spectrum.hpp"
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

TEST_CASE("theoretical autocorrelation examples") {
    ArithmeticScheme s = scheme_p2();
    ArithmeticWindow w = single_residue_window();
    ArithmeticAutocorrelation table = theoretical_autocorrelation(s, w, {0, 3, 8, 16, 21});
    CHECK(table.values[0] == Rational(1, 8)); // lag 0 = m_H(W')
    CHECK(table.values[1] == Rational(0));
    CHECK(table.values[2] == Rational(1, 8));
    CHECK(table.values[3] == Rational(1, 8));
    CHECK(table.values[4] == Rational(0));

    ArithmeticWindow cf{ResidueSetWindow(s.space, DefaultRule::kCubeFree)};
    CHECK(theoretical_autocorrelation(s, cf, {0}).values[0] == Rational(7, 8));
}

TEST_CASE("theoretical diffraction of the single-residue window") {
    ArithmeticScheme s = scheme_p2();
    ArithmeticWindow w = single_residue_window();
    ArithmeticSpectrum spec = theoretical_diffraction(s, w, {0});
    REQUIRE(spec.peaks.size() == 8);
    for (const auto& p : spec.peaks) {
        CHECK(p.intensity == doctest::Approx(1.0 / 64.0).epsilon(1e-12));
        CHECK(p.cls == PeakClass::kBragg);
        CHECK(std::abs(std::norm(p.fb) - p.intensity) < 1e-14);
    }
    // central peak intensity is the squared density
    double dens_sq = std::pow((s.density() * window_measure(w)).to_double(), 2);
    CHECK(spec.peaks[0].intensity == doctest::Approx(dens_sq).epsilon(1e-12));
}

TEST_CASE("theoretical fb examples and phase behaviour") {
    ArithmeticScheme s = scheme_p2();
    ArithmeticWindow w = single_residue_window();

    FbValue at_zero = theoretical_fb(s, w, {0}, 0, 1);
    CHECK(!at_zero.off_lattice);
    CHECK(std::abs(at_zero.value - std::complex<double>(0.125, 0.0)) < 1e-13);

    FbValue at_eighth = theoretical_fb(s, w, {0}, 1, 8);
    CHECK(std::abs(at_eighth.value - std::complex<double>(-0.125, 0.0)) < 1e-13);

    // shifting the torus point by d with eta(d) = -1 flips the phase only
    FbValue shifted = theoretical_fb(s, w, {4}, 1, 8);
    CHECK(std::abs(shifted.value - std::complex<double>(0.125, 0.0)) < 1e-13);

    // off-lattice frequencies carry no coefficient
    CHECK(theoretical_fb(s, w, {0}, 1, 5).off_lattice);

    // the theoretical value matches the exact empirical run
    ArithmeticConfiguration c = generate(s, w, {3}, 32);
    for (long long j = 0; j < 8; ++j) {
        ArithmeticChar ch = annihilator_char(s, j);
        CHECK(std::abs(empirical_fb(c, j, 8, true) - theoretical_fb(s, w, {3}, ch)) < 1e-13);
    }
}

TEST_CASE("period extinctions match the eigenvalue group complement") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    std::map<long long, std::vector<long long>> full2{{2, {0, 1, 2, 3, 4, 5, 6, 7}}};
    ArithmeticWindow w{ResidueSetWindow(s.space, DefaultRule::kCubeFree, full2)};

    profinite::PeriodGroup periods = window_period_group(w);
    CHECK(periods.divisors == std::vector<long long>{1, 27});

    ArithmeticSpectrum spec = theoretical_diffraction(s, w, {0});
    std::vector<long long> eigen;
    for (const auto& ch : eigenvalue_group(s, periods)) eigen.push_back(ch.j);
    for (const auto& p : spec.peaks) {
        bool in_group = std::binary_search(eigen.begin(), eigen.end(), p.ch.j);
        CHECK(in_group == (p.cls != PeakClass::kPeriodExtinction));
        if (!in_group) CHECK(p.intensity < 1e-12);
        CHECK(in_group == (p.ch.j % 8 == 0));
    }
}

TEST_CASE("accidental extinction classification against a direct dft") {
    // W = {0,1,4,5} in Z/8: direct 8-point transform of the indicator
    ArithmeticScheme s = scheme_p2();
    std::vector<long long> set{0, 1, 4, 5};
    ArithmeticWindow w{
        ResidueSetWindow(s.space, DefaultRule::kCubeFree, {{2, set}})};

    // oracle: |sum_{r in W} exp(-2 pi i j r / 8)| per frequency
    std::vector<double> dft_abs(8);
    for (long long j = 0; j < 8; ++j) dft_abs[size_t(j)] = std::abs(oracle::fourier(set, 8, j));

    // zeros at all odd j (forced by the period 4) and at j = 4 (accidental)
    for (long long j : {1, 3, 5, 7}) CHECK(dft_abs[size_t(j)] < 1e-14);
    CHECK(dft_abs[4] < 1e-14);
    for (long long j : {0, 2, 6}) CHECK(dft_abs[size_t(j)] > 1e-3);

    profinite::PeriodGroup periods = window_period_group(w);
    CHECK(periods.divisors == std::vector<long long>{4});

    std::vector<std::pair<ArithmeticChar, PeakClass>> report = extinction_report(s, w);
    REQUIRE(report.size() == 8);
    for (const auto& [ch, cls] : report) {
        if (ch.j % 2 == 1)
            CHECK(cls == PeakClass::kPeriodExtinction);
        else if (ch.j == 4)
            CHECK(cls == PeakClass::kAccidentalExtinction);
        else
            CHECK(cls == PeakClass::kBragg);
    }
}

TEST_CASE("plancherel and wiener consistency") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ArithmeticWindow w{DifferenceWindow(ResidueSetWindow(s.space, DefaultRule::kCubeFree),
                                        ResidueSetWindow(s.space, DefaultRule::kSquareFreeIn))};
    ArithmeticSpectrum spec = theoretical_diffraction(s, w, {0});
    double total = 0.0;
    for (const auto& p : spec.peaks) total += p.intensity;
    double expect = std::pow(s.density().to_double(), 2) * window_measure(w).to_double();
    CHECK(std::abs(total - expect) < 1e-12);

    for (long long h : {0LL, 1LL, 8LL, 36LL, 100LL}) {
        std::complex<double> rebuilt = wiener_reconstruction(spec, h);
        double target = window_covariogram(w, s.star_map(h)).to_double();
        CHECK(std::abs(rebuilt - std::complex<double>(target, 0.0)) < 1e-12);
    }
}

TEST_CASE("difference window spectrum equals the fb difference") {
    ArithmeticScheme s{ProfiniteSpace({2, 3}, {3, 3})};
    ResidueSetWindow outer(s.space, DefaultRule::kCubeFree);
    ResidueSetWindow inner(s.space, DefaultRule::kSquareFreeIn);
    ArithmeticWindow diff{DifferenceWindow(outer, inner)};
    ArithmeticTorusPoint x{7};

    ArithmeticSpectrum spec = theoretical_diffraction(s, diff, x);
    for (const auto& p : spec.peaks) {
        std::complex<double> a_w = theoretical_fb(s, ArithmeticWindow{outer}, x, p.ch);
        std::complex<double> a_v = theoretical_fb(s, ArithmeticWindow{inner}, x, p.ch);
        CHECK(std::abs(p.fb - (a_w - a_v)) < 1e-12);
        CHECK(std::abs(p.intensity - std::norm(a_w - a_v)) < 1e-12);
    }
}

TEST_CASE("consistent phase check") {
    ArithmeticScheme s = scheme_p2();
    ArithmeticWindow w = single_residue_window();
    ArithmeticSpectrum spec = theoretical_diffraction(s, w, {0});

    ArithmeticConfiguration c = generate(s, w, {0}, 32);
    std::vector<long long> nums;
    for (const auto& p : spec.peaks) nums.push_back(p.ch.j);
    std::vector<std::complex<double>> emp = empirical_fb_bulk(c, nums, 8, true);

    std::vector<Verdict> vs = consistent_phase_check(spec, emp, 32, kExactTolerance);
    CHECK(all_pass(vs));

    // a deliberately wrong torus point still passes: |phase| = 1
    ArithmeticConfiguration c_moved = generate(s, w, {4}, 32);
    std::vector<std::complex<double>> emp_moved = empirical_fb_bulk(c_moved, nums, 8, true);
    CHECK(all_pass(consistent_phase_check(spec, emp_moved, 32, kExactTolerance)));

    // off-lattice probes vanish
    std::vector<double> probes{1.0 / std::sqrt(2.0), std::exp(1.0) / 10.0, 0.4142135};
    ArithmeticConfiguration big = generate(s, w, {0}, 100000);
    std::vector<std::complex<double>> probe_vals;
    for (double a : probes) probe_vals.push_back(empirical_fb_probe(big, a));
    CHECK(all_pass(besicovitch_probe_verdicts(probes, probe_vals, 100000, 1e-2)));
}

TEST_CASE("sieve targets reproduce the classical densities") {
    ProfiniteSpace sp({2, 3}, {3, 3});
    ArithmeticScheme s{sp};
    SieveTailModel tail = make_sieve_tail(sp, 100000);

    ArithmeticWindow sf{ResidueSetWindow(sp, DefaultRule::kSquareFreeIn)};
    ArithmeticWindow cf{ResidueSetWindow(sp, DefaultRule::kCubeFree)};
    ArithmeticWindow diff{DifferenceWindow(ResidueSetWindow(sp, DefaultRule::kCubeFree),
                                           ResidueSetWindow(sp, DefaultRule::kSquareFreeIn))};

    double inv_zeta2 = 6.0 / (std::numbers::pi * std::numbers::pi);
    double inv_zeta3 = 1.0 / 1.2020569031595942854;
    CHECK(std::abs(sieve_measure(sf, tail) - inv_zeta2) < 1e-6);
    CHECK(std::abs(sieve_measure(cf, tail) - inv_zeta3) < 1e-6);
    CHECK(std::abs(sieve_measure(diff, tail) - (inv_zeta3 - inv_zeta2)) < 1e-6);

    // transform at the trivial character equals the measure
    Character trivial{{0, 0}};
    CHECK(std::abs(sieve_fourier(diff, trivial, tail) - sieve_measure(diff, tail)) < 1e-12);

    // covariogram at lag 0 equals the measure; symmetry in the lag
    CHECK(std::abs(sieve_covariogram(diff, 0, tail, s) - sieve_measure(diff, tail)) < 1e-12);
    CHECK(std::abs(sieve_covariogram(diff, 36, tail, s) - sieve_covariogram(diff, -36, tail, s)) <
          1e-12);
    CHECK(sieve_covariogram(diff, 5, tail, s) >= -1e-15);
    CHECK(sieve_covariogram(diff, 5, tail, s) <= sieve_measure(diff, tail) + 1e-12);
}

TEST_CASE("sieve autocorrelation target matches a large sieve run") {
    ProfiniteSpace sp({2, 3}, {3, 3});
    ArithmeticScheme s{sp};
    ArithmeticWindow diff{DifferenceWindow(ResidueSetWindow(sp, DefaultRule::kCubeFree),
                                           ResidueSetWindow(sp, DefaultRule::kSquareFreeIn))};
    SieveTailModel tail = make_sieve_tail(sp, 100000);
    ArithmeticConfiguration c = generate(s, diff, {0}, 500000, Mode::kSieve);
    AutocorrEstimate ac = empirical_autocorrelation(c, {0, 4, 9, 36});
    for (auto& [lag, value] : ac.values)
        CHECK(std::abs(value - sieve_covariogram(diff, lag, tail, s)) < 5e-3);
}

TEST_CASE("euclidean theoretical autocorrelation and diffraction") {
    EuclideanScheme f{1.0, 1.0, kTau, 1.0 - kTau};
    euclid::IntervalUnionWindow w({{-1.0, kTau - 1.0}});
    EuclideanTorusPoint x{0.0, 0.0};

    EuclideanAutocorrelation table = theoretical_autocorrelation(f, w, 6.0);
    REQUIRE(!table.lags.empty());
    double dens = f.density();
    bool saw_zero = false;
    for (size_t i = 0; i < table.lags.size(); ++i) {
        if (std::abs(table.lags[i]) < 1e-12) {
            saw_zero = true;
            CHECK(table.values[i] == doctest::Approx(dens * kTau).epsilon(1e-12));
        }
        CHECK(table.values[i] >= 0.0);
        CHECK(table.values[i] <= dens * kTau + 1e-12);
    }
    CHECK(saw_zero);

    // the value at every lattice G-part is dens * tent(h), with the tent of
    // width tau coming from the interval window of length tau
    auto table_value = [&](double g) -> double {
        for (size_t i = 0; i < table.lags.size(); ++i)
            if (std::abs(table.lags[i] - g) < 1e-9) return table.values[i];
        return -1.0;
    };
    int checked = 0;
    for (long long a = -6; a <= 6; ++a) {
        for (long long b = -4; b <= 4; ++b) {
            double g = f.g_part(a, b), h = f.star_map(a, b);
            double tent = std::max(0.0, kTau - std::abs(h));
            if (std::abs(g) > 6.0 || tent <= 1e-9) continue;
            CHECK(table_value(g) == doctest::Approx(dens * tent).epsilon(1e-9));
            ++checked;
        }
    }
    CHECK(checked >= 8);

    EuclideanSpectrum spec = theoretical_diffraction(f, w, x, 3.0, 5.0);
    REQUIRE(spec.peaks.size() > 10);
    CHECK(spec.plancherel_residual >= 0.0);
    for (const auto& p : spec.peaks) {
        CHECK(p.intensity >= 0.0);
        CHECK(std::abs(std::norm(p.fb) - p.intensity) < 1e-12);
        if (std::abs(p.ch.chi) < 1e-12)
            CHECK(p.intensity == doctest::Approx(std::pow(dens * kTau, 2)).epsilon(1e-12));
    }
}
