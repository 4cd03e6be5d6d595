#pragma once

// CSV and manifest emission. Output is deterministic: fixed row order from
// the callers, fixed "%.15g" float formatting, no timestamps.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "modelset/configuration.hpp"
#include "modelset/descriptor.hpp"
#include "modelset/spectrum.hpp"
#include "modelset/verdict.hpp"

namespace modelset::io {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline void write_verdict_csv(std::ostream& out, const std::vector<Verdict>& verdicts) {
    out << "n,kind,frequency_or_lag,empirical_re,empirical_im,theoretical_re,theoretical_im,"
           "abs_error,tolerance,pass\n";
    for (const Verdict& v : verdicts) {
        out << v.n << ',' << v.kind << ',' << v.frequency_or_lag << ',' << fmt(v.empirical.real())
            << ',' << fmt(v.empirical.imag()) << ',' << fmt(v.theoretical.real()) << ','
            << fmt(v.theoretical.imag()) << ',' << fmt(v.abs_error) << ',' << fmt(v.tolerance)
            << ',' << (v.pass ? "true" : "false") << '\n';
    }
}

inline void write_spectrum_csv(std::ostream& out, const ArithmeticSpectrum& spec) {
    out << "chi_num,chi_den,intensity,fb_re,fb_im,class\n";
    for (const ArithmeticPeak& p : spec.peaks) {
        out << p.ch.j << ',' << p.ch.den << ',' << fmt(p.intensity) << ',' << fmt(p.fb.real())
            << ',' << fmt(p.fb.imag()) << ',' << peak_class_name(p.cls) << '\n';
    }
}

inline void write_spectrum_csv(std::ostream& out, const EuclideanSpectrum& spec) {
    out << "chi_real,eta_real,intensity,fb_re,fb_im,class\n";
    for (const EuclideanPeak& p : spec.peaks) {
        out << fmt(p.ch.chi) << ',' << fmt(p.ch.eta) << ',' << fmt(p.intensity) << ','
            << fmt(p.fb.real()) << ',' << fmt(p.fb.imag()) << ',' << peak_class_name(p.cls)
            << '\n';
    }
}

/// One point per line: G-coordinate, then the internal coordinate.
inline void write_points(std::ostream& out, const ArithmeticConfiguration& c) {
    for (size_t i = 0; i < c.points.size(); ++i)
        out << c.points[i] << ' ' << c.internal[i] << '\n';
}

inline void write_points(std::ostream& out, const EuclideanConfiguration& c) {
    for (size_t i = 0; i < c.points.size(); ++i)
        out << fmt(c.points[i]) << ' ' << fmt(c.internal[i]) << '\n';
}

struct ManifestEntry {
    std::string key;
    std::string value;
};

/// Run manifest: tool version, the flags in force, tolerances, and a full
/// echo of the descriptor.
inline void write_manifest(std::ostream& out, const std::string& tool_version,
                           const SchemeDescriptor& descriptor,
                           const std::vector<ManifestEntry>& entries) {
    out << "manifest = " << kDescriptorSchema << "\n";
    out << "tool.version = " << tool_version << "\n";
    for (const ManifestEntry& e : entries) out << e.key << " = " << e.value << "\n";
    out << "descriptor.path = " << descriptor.source_name << "\n";
    out << "descriptor.echo.begin\n";
    for (const std::string& line : descriptor.raw_lines) out << "  " << line << "\n";
    out << "descriptor.echo.end\n";
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace modelset::io
