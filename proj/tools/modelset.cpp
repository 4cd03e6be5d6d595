// Command-line front end: descriptor-driven construction of weak model
// sets, empirical estimators, exact/untruncated spectra, and the
// compare/genericity verdict pipelines.
//
// Exit codes: 0 success, 1 usage error, 2 descriptor validation failure,
// 3 at least one verdict failed (compare and genericity only).

#include <complex>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "modelset/descriptor.hpp"
#include "modelset/estimators.hpp"
#include "modelset/io.hpp"
#include "modelset/spectrum.hpp"

namespace fs = std::filesystem;
using namespace modelset;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Options {
    std::string descriptor_path;
    std::string out = ".";
    long long n = 0;          // 0 = use the descriptor's value
    std::string mode;         // empty = use the descriptor's value
    bool wraparound = false;
    double freq_bound = -1.0; // arithmetic: max reduced denominator; euclidean: |chi| bound
    std::vector<double> probes;
    std::vector<long long> lags;
};

struct LoadedRun {
    SchemeDescriptor descriptor;
    RunSetup setup;
};

LoadedRun load(const Options& opt) {
    SchemeDescriptor d = parse_descriptor_file(opt.descriptor_path);
    RunSetup setup = build_setup(d);
    if (auto* a = std::get_if<ArithmeticSetup>(&setup)) {
        if (opt.n > 0) a->n = opt.n;
        if (!opt.mode.empty()) {
            if (opt.mode == "truncated")
                a->mode = Mode::kTruncated;
            else if (opt.mode == "sieve")
                a->mode = Mode::kSieve;
            else
                throw ValidationError("--mode: expected truncated|sieve");
        }
        if (!opt.probes.empty()) a->probes = opt.probes;
        if (opt.freq_bound >= 0.0) a->freq_max_denominator = (long long)opt.freq_bound;
    } else {
        auto& e = std::get<EuclideanSetup>(setup);
        if (opt.n > 0) e.n = double(opt.n);
        if (opt.freq_bound >= 0.0) e.chi_bound = opt.freq_bound;
        if (!opt.probes.empty()) e.probes = opt.probes;
    }
    return {std::move(d), std::move(setup)};
}

std::vector<io::ManifestEntry> tolerance_entries(const RunSetup& setup, bool wraparound) {
    std::vector<io::ManifestEntry> out;
    if (auto* a = std::get_if<ArithmeticSetup>(&setup)) {
        out.push_back({"tolerance.exact", io::fmt(a->tol_exact)});
        out.push_back({"tolerance.stat",
                       io::fmt(a->tol_stat > 0.0
                                   ? a->tol_stat
                                   : stat_tolerance(double(wraparound ? 2 * a->n : 2 * a->n + 1)))});
    } else {
        const auto& e = std::get<EuclideanSetup>(setup);
        out.push_back({"tolerance.stat",
                       io::fmt(e.tol_stat > 0.0 ? e.tol_stat : stat_tolerance(2 * e.n))});
    }
    return out;
}

void write_manifest_file(const Options& opt, const std::string& subcommand,
                         const LoadedRun& run, const std::vector<io::ManifestEntry>& extra) {
    std::vector<io::ManifestEntry> entries;
    entries.push_back({"run.subcommand", subcommand});
    entries.push_back({"run.wraparound", opt.wraparound ? "true" : "false"});
    for (const auto& e : extra) entries.push_back(e);
    std::ostringstream out;
    io::write_manifest(out, kToolVersion, run.descriptor, entries);
    io::write_file((fs::path(opt.out) / "manifest.txt").string(), out.str());
}

void ensure_out_dir(const Options& opt) { fs::create_directories(opt.out); }

// ---------------------------------------------------------------------------
// Arithmetic pipelines

double arithmetic_tolerance(const ArithmeticSetup& a, bool wraparound) {
    bool exact = a.mode == Mode::kTruncated && wraparound &&
                 (2 * a.n) % a.scheme.space.modulus() == 0;
    if (exact) return a.tol_exact;
    if (a.tol_stat > 0.0) return a.tol_stat;
    return stat_tolerance(double(wraparound ? 2 * a.n : 2 * a.n + 1));
}

std::vector<Verdict> arithmetic_density_verdict(const ArithmeticSetup& a,
                                                const ArithmeticConfiguration& c,
                                                bool wraparound, double tol) {
    double target = a.mode == Mode::kTruncated
                        ? (a.scheme.density() * window_measure(a.window)).to_double()
                        : a.scheme.density().to_double() *
                              sieve_measure(a.window, make_sieve_tail(a.scheme.space));
    return {make_verdict("UNIFORM_DIST", a.n, "density", empirical_density(c, wraparound),
                         target, tol)};
}

std::vector<Verdict> arithmetic_autocorr_verdicts(const ArithmeticSetup& a,
                                                  const ArithmeticConfiguration& c,
                                                  const std::vector<long long>& lags,
                                                  bool wraparound, double tol) {
    std::vector<Verdict> out;
    AutocorrEstimate est = empirical_autocorrelation(c, lags, wraparound);
    SieveTailModel tail;
    if (a.mode == Mode::kSieve) tail = make_sieve_tail(a.scheme.space);
    for (auto& [lag, value] : est.values) {
        double target =
            a.mode == Mode::kTruncated
                ? (a.scheme.density() * window_covariogram(a.window, a.scheme.star_map(lag)))
                      .to_double()
                : a.scheme.density().to_double() * sieve_covariogram(a.window, lag, tail, a.scheme);
        out.push_back(make_verdict("GENERIC_2_G", a.n, "lag " + std::to_string(lag), value,
                                   target, tol));
    }
    for (long long lag : est.skipped)
        std::cerr << "warning: lag " << lag << " exceeds the box diameter, excluded\n";
    return out;
}

std::vector<Verdict> arithmetic_fb_verdicts(const ArithmeticSetup& a,
                                            const ArithmeticConfiguration& c, bool wraparound,
                                            double tol) {
    std::vector<ArithmeticChar> freqs =
        annihilator_frequencies(a.scheme, a.freq_max_denominator);
    std::vector<long long> nums;
    nums.reserve(freqs.size());
    for (const auto& ch : freqs) nums.push_back(ch.j);
    std::vector<std::complex<double>> emp =
        empirical_fb_bulk(c, nums, a.scheme.space.modulus(), wraparound);
    SieveTailModel tail;
    if (a.mode == Mode::kSieve) tail = make_sieve_tail(a.scheme.space);
    std::vector<Verdict> out;
    for (size_t i = 0; i < freqs.size(); ++i) {
        std::complex<double> target = a.mode == Mode::kTruncated
                                          ? theoretical_fb(a.scheme, a.window, a.torus, freqs[i])
                                          : sieve_fb(a.scheme, a.window, freqs[i], tail);
        out.push_back(make_verdict("GENERIC_1_GH", a.n,
                                   std::to_string(freqs[i].j) + "/" +
                                       std::to_string(freqs[i].den),
                                   emp[i], target, tol));
    }
    return out;
}

std::vector<Verdict> arithmetic_probe_verdicts(const ArithmeticSetup& a,
                                               const ArithmeticConfiguration& c,
                                               bool wraparound) {
    std::vector<std::complex<double>> vals;
    for (double p : a.probes) vals.push_back(empirical_fb_probe(c, p, wraparound));
    double tol = a.tol_stat > 0.0 ? a.tol_stat : stat_tolerance(double(2 * a.n + 1));
    return besicovitch_probe_verdicts(a.probes, vals, a.n, tol);
}

long long spectrum_cap(const ArithmeticSetup& a) {
    if (a.freq_max_denominator > 0) return a.freq_max_denominator;
    if (a.scheme.space.modulus() > 1000000)
        throw ValidationError(
            "modulus too large for an exhaustive frequency list; set freq.max_denominator "
            "in the descriptor or pass --freq-bound");
    return 0;
}

int cmd_generate(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::ostringstream pts;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        ArithmeticConfiguration c = generate(a->scheme, a->window, a->torus, a->n, a->mode);
        io::write_points(pts, c);
        write_manifest_file(opt, "generate", run,
                            {{"run.n", std::to_string(a->n)},
                             {"run.mode", mode_name(a->mode)},
                             {"run.points", std::to_string(c.points.size())}});
        std::cout << c.points.size() << " points\n";
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanConfiguration c = generate(e.scheme, e.window, e.torus, e.n);
        io::write_points(pts, c);
        write_manifest_file(opt, "generate", run,
                            {{"run.n", io::fmt(e.n)},
                             {"run.points", std::to_string(c.points.size())}});
        std::cout << c.points.size() << " points\n";
    }
    io::write_file((fs::path(opt.out) / "points.txt").string(), pts.str());
    return 0;
}

int write_verdicts_and_report(const Options& opt, const std::string& file,
                              const std::vector<Verdict>& verdicts, bool gate_exit) {
    std::ostringstream csv;
    io::write_verdict_csv(csv, verdicts);
    io::write_file((fs::path(opt.out) / file).string(), csv.str());
    size_t failed = 0;
    for (const auto& v : verdicts)
        if (!v.pass) ++failed;
    std::cout << verdicts.size() << " verdicts, " << failed << " failed\n";
    if (gate_exit && failed > 0) return 3;
    return 0;
}

int cmd_density(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::vector<Verdict> verdicts;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        ArithmeticConfiguration c = generate(a->scheme, a->window, a->torus, a->n, a->mode);
        verdicts = arithmetic_density_verdict(*a, c, opt.wraparound,
                                              arithmetic_tolerance(*a, opt.wraparound));
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanConfiguration c = generate(e.scheme, e.window, e.torus, e.n);
        double tol = e.tol_stat > 0.0 ? e.tol_stat : stat_tolerance(2 * e.n);
        verdicts = {make_verdict("UNIFORM_DIST", (long long)e.n, "density",
                                 empirical_density(c),
                                 e.scheme.density() * euclid::measure(e.window), tol)};
    }
    write_manifest_file(opt, "density", run, tolerance_entries(run.setup, opt.wraparound));
    return write_verdicts_and_report(opt, "density.csv", verdicts, false);
}

int cmd_autocorr(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::vector<Verdict> verdicts;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        std::vector<long long> lags = opt.lags;
        if (lags.empty())
            for (long long k = 0; k <= std::min<long long>(32, a->n); ++k) lags.push_back(k);
        ArithmeticConfiguration c = generate(a->scheme, a->window, a->torus, a->n, a->mode);
        verdicts = arithmetic_autocorr_verdicts(*a, c, lags, opt.wraparound,
                                                arithmetic_tolerance(*a, opt.wraparound));
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanConfiguration c = generate(e.scheme, e.window, e.torus, e.n);
        EuclideanAutocorrelation table =
            theoretical_autocorrelation(e.scheme, e.window, std::min(e.n / 4.0, 20.0));
        EuclideanAutocorrEstimate est = empirical_autocorrelation(c, table.lags);
        double tol = e.tol_stat > 0.0 ? e.tol_stat : stat_tolerance(2 * e.n);
        for (size_t i = 0; i < est.values.size(); ++i)
            verdicts.push_back(make_verdict("GENERIC_2_G", (long long)e.n,
                                            "lag " + io::fmt(est.values[i].first),
                                            est.values[i].second, table.values[i], tol));
    }
    write_manifest_file(opt, "autocorr", run, tolerance_entries(run.setup, opt.wraparound));
    return write_verdicts_and_report(opt, "autocorr.csv", verdicts, false);
}

int cmd_diffract(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::ostringstream csv;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        ArithmeticSpectrum spec =
            theoretical_diffraction(a->scheme, a->window, a->torus, spectrum_cap(*a));
        io::write_spectrum_csv(csv, spec);
        size_t period_ext = 0, accidental_ext = 0;
        for (const auto& p : spec.peaks) {
            if (p.cls == PeakClass::kPeriodExtinction) ++period_ext;
            if (p.cls == PeakClass::kAccidentalExtinction) ++accidental_ext;
        }
        write_manifest_file(
            opt, "diffract", run,
            {{"run.frequencies", std::to_string(spec.peaks.size())},
             {"run.extinctions.period", std::to_string(period_ext)},
             {"run.extinctions.accidental", std::to_string(accidental_ext)},
             {"run.extinctions.eigenfunctions",
              "constructible as products of Bragg-position eigenfunctions; not materialized"}});
        std::cout << spec.peaks.size() << " frequencies\n";
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanSpectrum spec =
            theoretical_diffraction(e.scheme, e.window, e.torus, e.chi_bound, e.eta_bound);
        io::write_spectrum_csv(csv, spec);
        write_manifest_file(opt, "diffract", run,
                            {{"run.frequencies", std::to_string(spec.peaks.size())},
                             {"run.plancherel_residual", io::fmt(spec.plancherel_residual)}});
        std::cout << spec.peaks.size() << " frequencies\n";
    }
    io::write_file((fs::path(opt.out) / "spectrum.csv").string(), csv.str());
    return 0;
}

int cmd_fourier_bohr(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::vector<Verdict> verdicts;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        a->freq_max_denominator = spectrum_cap(*a);
        ArithmeticConfiguration c = generate(a->scheme, a->window, a->torus, a->n, a->mode);
        double tol = arithmetic_tolerance(*a, opt.wraparound);
        verdicts = arithmetic_fb_verdicts(*a, c, opt.wraparound, tol);
        std::vector<Verdict> probes = arithmetic_probe_verdicts(*a, c, opt.wraparound);
        verdicts.insert(verdicts.end(), probes.begin(), probes.end());
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanConfiguration c = generate(e.scheme, e.window, e.torus, e.n);
        double tol = e.tol_stat > 0.0 ? e.tol_stat : stat_tolerance(2 * e.n);
        for (const EuclideanChar& ch :
             annihilator_frequencies(e.scheme, e.chi_bound, e.eta_bound))
            verdicts.push_back(make_verdict("GENERIC_1_GH", (long long)e.n, io::fmt(ch.chi),
                                            empirical_fb(c, ch.chi),
                                            theoretical_fb(e.scheme, e.window, e.torus, ch),
                                            tol));
        std::vector<std::complex<double>> probe_vals;
        for (double p : e.probes) probe_vals.push_back(empirical_fb(c, p));
        std::vector<Verdict> probe_vs =
            besicovitch_probe_verdicts(e.probes, probe_vals, (long long)e.n, tol);
        verdicts.insert(verdicts.end(), probe_vs.begin(), probe_vs.end());
    }
    write_manifest_file(opt, "fourier-bohr", run, tolerance_entries(run.setup, opt.wraparound));
    return write_verdicts_and_report(opt, "fourier_bohr.csv", verdicts, false);
}

int cmd_periods(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::ostringstream out;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        profinite::PeriodGroup periods = window_period_group(a->window);
        out << "window.measure = " << window_measure(a->window).str() << "\n";
        out << "period.group = " << periods.str() << "\n";
        out << "period.group.order = " << periods.order() << "\n";
        std::visit([&](const auto& w) { (void)profinite::w_inv(w); }, a->window);
        out << "w_inv.identity = confirmed\n";
        out << "eigenvalue.group.size = "
            << eigenvalue_group(a->scheme, periods, spectrum_cap(*a)).size() << "\n";
        out << "uniform.discreteness.radius = "
            << uniform_discreteness_radius(a->scheme, a->window) << "\n";
        if (auto* dw = std::get_if<profinite::DifferenceWindow>(&a->window)) {
            profinite::ThinnessVerdict tv = profinite::is_haar_thin(dw->inner(), dw->outer());
            out << "thinness = "
                << (tv.verdict == profinite::Thinness::kTrue
                        ? "TRUE"
                        : tv.verdict == profinite::Thinness::kFalse ? "FALSE" : "UNDECIDED")
                << "\n";
            if (tv.witness_prime) out << "thinness.witness = " << *tv.witness_prime << "\n";
            if (!tv.note.empty()) out << "thinness.note = " << tv.note << "\n";
        }
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        out << "window.measure = " << io::fmt(euclid::measure(e.window)) << "\n";
        out << "period.group = {0}\n";
        out << "uniform.discreteness.radius = "
            << io::fmt(uniform_discreteness_radius(e.scheme, e.window)) << "\n";
    }
    io::write_file((fs::path(opt.out) / "periods.txt").string(), out.str());
    write_manifest_file(opt, "periods", run, {});
    std::cout << out.str();
    return 0;
}

int cmd_genericity(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::vector<Verdict> verdicts;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        std::vector<long long> schedule = a->n_schedule;
        if (schedule.empty()) schedule = {a->n};
        GenericityOptions gopts;
        gopts.lags = opt.lags;
        gopts.freq_max_denominator = spectrum_cap(*a);
        gopts.wraparound = opt.wraparound;
        gopts.tolerance_override = a->tol_stat;
        verdicts = genericity_verdicts(a->scheme, a->window, a->torus, schedule, a->mode, gopts);
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        verdicts = genericity_verdicts(e.scheme, e.window, e.torus, {e.n}, e.chi_bound,
                                       e.eta_bound, e.tol_stat);
    }
    write_manifest_file(opt, "genericity", run, tolerance_entries(run.setup, opt.wraparound));
    return write_verdicts_and_report(opt, "genericity.csv", verdicts, true);
}

int cmd_compare(const Options& opt, LoadedRun& run) {
    ensure_out_dir(opt);
    std::vector<Verdict> verdicts;
    std::ostringstream spectrum_csv;
    if (auto* a = std::get_if<ArithmeticSetup>(&run.setup)) {
        a->freq_max_denominator = spectrum_cap(*a);
        ArithmeticConfiguration c = generate(a->scheme, a->window, a->torus, a->n, a->mode);
        double tol = arithmetic_tolerance(*a, opt.wraparound);

        verdicts = arithmetic_density_verdict(*a, c, opt.wraparound, tol);
        std::vector<long long> lags = opt.lags;
        if (lags.empty())
            for (long long k = 0; k <= std::min<long long>(32, a->n); ++k) lags.push_back(k);
        std::vector<Verdict> ac =
            arithmetic_autocorr_verdicts(*a, c, lags, opt.wraparound, tol);
        verdicts.insert(verdicts.end(), ac.begin(), ac.end());
        std::vector<Verdict> fb = arithmetic_fb_verdicts(*a, c, opt.wraparound, tol);
        verdicts.insert(verdicts.end(), fb.begin(), fb.end());

        ArithmeticSpectrum spec =
            theoretical_diffraction(a->scheme, a->window, a->torus, a->freq_max_denominator);
        std::vector<long long> nums;
        for (const auto& p : spec.peaks) nums.push_back(p.ch.j);
        std::vector<std::complex<double>> emp =
            empirical_fb_bulk(c, nums, a->scheme.space.modulus(), opt.wraparound);
        double phase_tol = a->mode == Mode::kTruncated ? tol
                                                       : (a->tol_stat > 0.0 ? a->tol_stat
                                                                            : 1e-2);
        std::vector<Verdict> phase = consistent_phase_check(spec, emp, a->n, phase_tol);
        verdicts.insert(verdicts.end(), phase.begin(), phase.end());
        std::vector<Verdict> probes = arithmetic_probe_verdicts(*a, c, opt.wraparound);
        verdicts.insert(verdicts.end(), probes.begin(), probes.end());
        io::write_spectrum_csv(spectrum_csv, spec);
    } else {
        auto& e = std::get<EuclideanSetup>(run.setup);
        EuclideanConfiguration c = generate(e.scheme, e.window, e.torus, e.n);
        double tol = e.tol_stat > 0.0 ? e.tol_stat : stat_tolerance(2 * e.n);
        verdicts = {make_verdict("UNIFORM_DIST", (long long)e.n, "density",
                                 empirical_density(c),
                                 e.scheme.density() * euclid::measure(e.window), tol)};
        EuclideanSpectrum spec =
            theoretical_diffraction(e.scheme, e.window, e.torus, e.chi_bound, e.eta_bound);
        std::vector<std::complex<double>> emp;
        for (const auto& p : spec.peaks) emp.push_back(empirical_fb(c, p.ch.chi));
        std::vector<Verdict> phase = consistent_phase_check(spec, emp, (long long)e.n, tol);
        verdicts.insert(verdicts.end(), phase.begin(), phase.end());
        std::vector<std::complex<double>> probe_vals;
        for (double p : e.probes) probe_vals.push_back(empirical_fb(c, p));
        std::vector<Verdict> probe_vs =
            besicovitch_probe_verdicts(e.probes, probe_vals, (long long)e.n, tol);
        verdicts.insert(verdicts.end(), probe_vs.begin(), probe_vs.end());
        io::write_spectrum_csv(spectrum_csv, spec);
    }
    io::write_file((fs::path(opt.out) / "spectrum.csv").string(), spectrum_csv.str());
    write_manifest_file(opt, "compare", run, tolerance_entries(run.setup, opt.wraparound));
    return write_verdicts_and_report(opt, "verdicts.csv", verdicts, true);
}

int cmd_validate(const Options& opt, LoadedRun& run) {
    if (auto* e = std::get_if<EuclideanSetup>(&run.setup))
        for (const std::string& w : e->warnings) std::cerr << "warning: " << w << "\n";
    std::cout << opt.descriptor_path << ": ok\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak model sets from cut-and-project schemes: construction, "
                 "estimators, and diffraction"};
    app.set_version_flag("--version", std::string("modelset ") + kToolVersion);
    app.require_subcommand(1);

    Options opt;
    std::string active;
    for (const char* name : {"validate", "generate", "density", "autocorr", "diffract",
                             "fourier-bohr", "periods", "genericity", "compare"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("descriptor", opt.descriptor_path, "scheme descriptor file")
            ->required();
        sub->add_option("--out", opt.out, "output directory");
        sub->add_option("--n", opt.n, "box radius override");
        sub->add_option("--mode", opt.mode, "truncated|sieve override");
        sub->add_flag("--wraparound", opt.wraparound,
                      "half-open box with periodic pairing (truncated mode)");
        sub->add_option("--freq-bound", opt.freq_bound,
                        "arithmetic: max reduced denominator; euclidean: |chi| bound");
        sub->add_option("--probes", opt.probes, "off-lattice probe frequencies");
        sub->add_option("--lags", opt.lags, "autocorrelation lags");
        sub->callback([&active, name] { active = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        LoadedRun run = load(opt);
        if (active == "validate") return cmd_validate(opt, run);
        if (active == "generate") return cmd_generate(opt, run);
        if (active == "density") return cmd_density(opt, run);
        if (active == "autocorr") return cmd_autocorr(opt, run);
        if (active == "diffract") return cmd_diffract(opt, run);
        if (active == "fourier-bohr") return cmd_fourier_bohr(opt, run);
        if (active == "periods") return cmd_periods(opt, run);
        if (active == "genericity") return cmd_genericity(opt, run);
        if (active == "compare") return cmd_compare(opt, run);
        std::cerr << "unknown subcommand\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyWindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
