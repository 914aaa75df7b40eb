#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgraph/catalog.hpp"
#include "qgraph/composer.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/solver.hpp"
#include "qgraph/spectra.hpp"
#include "qgraph/spectra_io.hpp"

using namespace qgraph;

namespace {

constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kFourPi = 2.0 * kTwoPi;

// Everything runs against dimensionless kl; one period of every unit-length
// graph is 2*pi and composites stay 2*pi-periodic, so two periods bound any
// useful window. Small slack absorbs decimal-rounded bounds like 12.5664.
void check_krange(double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= kFourPi + 1e-4))
        throw std::invalid_argument("k-range must satisfy 0 <= lo < hi <= 4*pi");
}

// |T(k)|^2 with the k = 0 coupling singularity stepped off by one nudge,
// matching the sweep convention. The graph must outlive the evaluator.
std::function<double(double)> t2_evaluator(const ScatteringGraph& g) {
    return [&g](double k) {
        try {
            return coefficient(transmission(g, k));
        } catch (const std::domain_error&) {
            return coefficient(transmission(g, k + 1e-9));
        }
    };
}

// All output is assembled in memory first, then lands via temp file + rename:
// a failed run never leaves a partial or truncated file behind.
void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp(path + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
        f.flush();
        if (!f) {
            std::error_code ignore;
            fs::remove(tmp, ignore);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw std::runtime_error("cannot move output into place: " + path);
    }
}

// Right-aligned fixed-width columns for --format text; the comment lines are
// carried over verbatim so crossings survive both formats.
std::string render_columns(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows,
                           const std::vector<std::string>& comments = {}) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::string out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += std::string(width[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    for (const auto& line : comments) out += line + '\n';
    return out;
}

void run_list(const std::string& format, const std::string& out_path) {
    std::string out;
    if (format == "csv") out += "name,vertices,edges\n";
    for (const auto& name : catalog_names()) {
        const ScatteringGraph g = build_named(name);
        char buf[96];
        std::snprintf(buf, sizeof(buf), format == "csv" ? "%s,%d,%d\n" : "%s %d %d\n",
                      name.c_str(), g.vertex_count(), g.edge_count());
        out += buf;
    }
    write_output(out, out_path);
}

// The graph-definition document plus a "transmission" annotation holding the
// canonical closed form. Readers ignore unknown keys, so the output feeds
// straight back in as @file and round-trips byte for byte.
void run_show(const std::string& source, const std::string& out_path) {
    const ScatteringGraph g = build_circuit(source);
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(graph_to_json(g));
    doc["transmission"] = transmission_rational(g).to_string();
    write_output(doc.dump(2) + "\n", out_path);
}

void run_sweep(const std::string& source, double lo, double hi, int samples,
               bool adaptive, int jobs, const std::string& format,
               const std::string& out_path) {
    check_krange(lo, hi);
    const ScatteringGraph g = build_circuit(source);
    SweepOptions opts;
    opts.adaptive = adaptive;
    opts.jobs = jobs;
    const Spectrum s = sweep(g, lo, hi, samples, opts);
    if (format == "csv") {
        write_output(spectrum_csv(s), out_path);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(s.samples.size());
    for (const auto& p : s.samples) rows.push_back({format_value(p.kl), format_value(p.t2)});
    write_output(render_columns({"kl", "t2"}, rows), out_path);
}

void run_compare(const std::string& source_a, const std::string& source_b,
                 double lo, double hi, int samples, const std::string& format,
                 const std::string& out_path) {
    check_krange(lo, hi);
    const ScatteringGraph ga = build_circuit(source_a);
    const ScatteringGraph gb = build_circuit(source_b);
    const Spectrum sa = sweep(ga, lo, hi, samples);
    const Spectrum sb = sweep(gb, lo, hi, samples);
    const std::vector<DifferencePoint> d = difference(sa, sb);
    const auto t2a = t2_evaluator(ga);
    const auto t2b = t2_evaluator(gb);
    const std::vector<double> crossings =
        zero_crossings(d, [&](double k) { return t2a(k) - t2b(k); });
    if (format == "csv") {
        write_output(difference_csv(d, crossings), out_path);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(d.size());
    for (const auto& p : d) rows.push_back({format_value(p.kl), format_value(p.delta)});
    std::vector<std::string> comments;
    for (double c : crossings) comments.push_back("# crossing," + format_value(c));
    write_output(render_columns({"kl", "delta"}, rows, comments), out_path);
}

void run_bands(const std::string& source, double lo, double hi, int samples,
               double tau, bool adaptive, const std::string& format,
               const std::string& out_path) {
    check_krange(lo, hi);
    const ScatteringGraph g = build_circuit(source);
    SweepOptions opts;
    opts.adaptive = adaptive;
    const Spectrum s = sweep(g, lo, hi, samples, opts);
    const std::vector<Band> bands = suppression_bands(s, tau, t2_evaluator(g));
    if (format == "csv") {
        write_output(bands_csv(bands), out_path);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(bands.size());
    for (const auto& b : bands)
        rows.push_back({format_value(b.lo), format_value(b.hi),
                        format_value(b.max_t2_inside), format_value(b.threshold)});
    write_output(render_columns({"lo", "hi", "max_t2_inside", "threshold"}, rows), out_path);
}

void run_poles(const std::string& source, double lo, double hi, double im_max,
               const std::string& format, const std::string& out_path) {
    check_krange(lo, hi);
    const ScatteringGraph g = build_circuit(source);
    const std::vector<Resonance> poles = find_poles(g, {lo, hi, im_max});
    if (format == "csv") {
        write_output(poles_csv(poles), out_path);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    rows.reserve(poles.size());
    for (const auto& p : poles)
        rows.push_back({format_value(p.kl.real()), format_value(p.kl.imag()),
                        format_value(p.width), format_value(p.residual)});
    write_output(render_columns({"re_kl", "im_kl", "width", "residual"}, rows), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scattering spectra of metric graphs"};
    app.require_subcommand(1);

    const int default_jobs =
        std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
    const char* source_help = "catalog name, circuit expression like S(Q,X,Q), or @file";

    std::string source, source_b, out_path;
    std::string format = "csv";
    std::vector<double> range{0.0, kTwoPi};
    int samples = 2001;
    bool adaptive = false;
    int jobs = default_jobs;
    double tau = 1e-2;
    double im_max = 10.0;

    // Positional range/samples on sweep, kept separate from the flags so a
    // mixed invocation is rejected instead of silently preferring one.
    double pos_lo = 0.0, pos_hi = 0.0;
    int pos_n = 0;

    CLI::App* c_list = app.add_subcommand("list", "built-in graphs with vertex and edge counts");
    c_list->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
    c_list->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* c_show = app.add_subcommand("show", "graph document with the exact transmission");
    c_show->add_option("source", source, source_help)->required();
    c_show->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* c_sweep = app.add_subcommand("sweep", "sample |T|^2 over a k-range");
    c_sweep->add_option("source", source, source_help)->required();
    c_sweep->add_option("lo", pos_lo, "range start");
    c_sweep->add_option("hi", pos_hi, "range end");
    c_sweep->add_option("n", pos_n, "base sample count");
    c_sweep->add_option("--range", range, "k-range, within [0, 4*pi]")->expected(2);
    c_sweep->add_option("--samples", samples, "base sample count")->check(CLI::Range(2, 100000000));
    c_sweep->add_flag("--adaptive", adaptive, "refine jumps and resonance neighborhoods");
    c_sweep->add_option("--jobs", jobs, "evaluation threads")->check(CLI::PositiveNumber);
    c_sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
    c_sweep->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* c_compare = app.add_subcommand("compare", "pointwise |T|^2 difference of two graphs");
    c_compare->add_option("a", source, source_help)->required();
    c_compare->add_option("b", source_b, source_help)->required();
    c_compare->add_option("--range", range, "k-range, within [0, 4*pi]")->expected(2);
    c_compare->add_option("--samples", samples, "grid sample count")->check(CLI::Range(2, 100000000));
    c_compare->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
    c_compare->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* c_bands = app.add_subcommand("bands", "maximal intervals with |T|^2 <= tau");
    c_bands->add_option("source", source, source_help)->required();
    c_bands->add_option("--range", range, "k-range, within [0, 4*pi]")->expected(2);
    c_bands->add_option("--samples", samples, "base sample count")->check(CLI::Range(2, 100000000));
    c_bands->add_option("--tau", tau, "suppression threshold")->check(CLI::PositiveNumber);
    c_bands->add_flag("--adaptive", adaptive, "refine jumps and resonance neighborhoods");
    c_bands->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
    c_bands->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* c_poles = app.add_subcommand("poles", "resonance poles in a complex strip");
    c_poles->add_option("source", source, source_help)->required();
    c_poles->add_option("--range", range, "strip Re(kl) range, within [0, 4*pi]")->expected(2);
    c_poles->add_option("--im-max", im_max, "strip depth |Im(kl)| cap")->check(CLI::PositiveNumber);
    c_poles->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));
    c_poles->add_option("--out", out_path, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*c_list) {
            // Plain "name vertices edges" lines unless csv is asked for.
            if (c_list->count("--format") == 0) format = "text";
            run_list(format, out_path);
        } else if (*c_show) {
            run_show(source, out_path);
        } else if (*c_sweep) {
            const bool flags_given = c_sweep->count("--range") || c_sweep->count("--samples");
            const std::size_t pos_given = c_sweep->count("lo") + c_sweep->count("hi") + c_sweep->count("n");
            if (pos_given && flags_given)
                throw std::invalid_argument("give the range as positionals or flags, not both");
            if (pos_given) {
                if (c_sweep->count("hi") == 0)
                    throw std::invalid_argument("positional range needs both lo and hi");
                range = {pos_lo, pos_hi};
                if (c_sweep->count("n")) {
                    if (pos_n < 2) throw std::invalid_argument("sample count must be at least 2");
                    samples = pos_n;
                }
            }
            run_sweep(source, range[0], range[1], samples, adaptive, jobs, format, out_path);
        } else if (*c_compare) {
            run_compare(source, source_b, range[0], range[1], samples, format, out_path);
        } else if (*c_bands) {
            run_bands(source, range[0], range[1], samples, tau, adaptive, format, out_path);
        } else if (*c_poles) {
            run_poles(source, range[0], range[1], im_max, format, out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "qg: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
