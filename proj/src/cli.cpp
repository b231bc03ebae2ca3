#include "areaenum/cli.hpp"

#include "areaenum/combinatorics.hpp"
#include "areaenum/oracle.hpp"
#include "areaenum/spectral.hpp"
#include "areaenum/square_enum.hpp"
#include "areaenum/triangular.hpp"
#include "areaenum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace areaenum {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    int workers = 1;
    bool force = false;
    std::string out_path;

    int n = 0;
    long area = 0;
    int g = 2;
    int p = 0;
    int q = 0;
    std::string check;
    std::string suite;
};

/// Fixed-width float text so CSV bytes never depend on locale or platform.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json make_meta(const Options& opt, int n, const char* lattice,
                       ordered_json extra_flags) {
    // Worker count is deliberately absent: reports must be byte-identical
    // across worker counts, and the counts themselves never depend on it.
    ordered_json flags;
    flags["format"] = opt.format;
    flags["force"] = opt.force;
    for (auto& [key, value] : extra_flags.items()) flags[key] = value;
    ordered_json meta;
    meta["n"] = n;
    if (lattice)
        meta["lattice"] = lattice;
    else
        meta["lattice"] = nullptr;
    meta["flags"] = std::move(flags);
    meta["version"] = kCliVersion;
    return meta;
}

ordered_json distribution_json(const AreaDistribution& dist) {
    ordered_json rows = ordered_json::array();
    for (const auto& [area, count] : dist.counts) {
        ordered_json row;
        row["area"] = area;
        row["count"] = count.str();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string distribution_csv(const AreaDistribution& dist) {
    std::ostringstream os;
    os << "area,count\n";
    for (const auto& [area, count] : dist.counts) os << area << "," << count.str() << "\n";
    return os.str();
}

/// Routes the rendered report to --out or the primary stream.
void emit(const Options& opt, std::ostream& out, std::ostream& err, const std::string& text) {
    if (opt.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    file << text;
    err << "wrote " << opt.out_path << "\n";
}

void emit_report(const Options& opt, std::ostream& out, std::ostream& err,
                 const ordered_json& doc, const std::string& csv) {
    emit(opt, out, err, opt.format == "json" ? doc.dump(2) + "\n" : csv);
}

void require_cap(bool within, const std::string& what) {
    if (!within)
        throw std::invalid_argument(what + " (pass --force to override the default cap)");
}

// -------------------------------------------------------------------------
// Subcommand handlers.  Each returns the process exit code.

int cmd_enumerate_square(const Options& opt, bool has_area, std::ostream& out,
                         std::ostream& err) {
    if (!opt.force) require_cap(opt.n <= 24, "enumerate-square caps at --n 24");
    AreaDistribution dist;
    if (has_area) {
        dist.n_steps = opt.n;
        dist.counts[opt.area] = count_closed_paths_square(opt.n, opt.area, opt.workers);
    } else {
        dist = area_distribution_square(opt.n, opt.workers);
    }
    ordered_json extra;
    if (has_area) extra["area"] = opt.area;
    ordered_json doc;
    doc["meta"] = make_meta(opt, opt.n, "square", extra);
    doc["distribution"] = distribution_json(dist);
    emit_report(opt, out, err, doc, distribution_csv(dist));
    return 0;
}

int cmd_oracle_square(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.force) require_cap(opt.n <= 30, "oracle-square caps at --n 30");
    const auto dist = brute_force_distribution_square_bigint(opt.n);
    ordered_json doc;
    doc["meta"] = make_meta(opt, opt.n, "square", {});
    doc["distribution"] = distribution_json(dist);
    emit_report(opt, out, err, doc, distribution_csv(dist));
    return 0;
}

int cmd_enumerate_triangular(const Options& opt, std::ostream& out, std::ostream& err) {
    if (!opt.force) require_cap(opt.n <= 15, "enumerate-triangular caps at --n 15");
    const auto dist = triangular_distribution(opt.n);
    ordered_json doc;
    doc["meta"] = make_meta(opt, opt.n, "triangular", {});
    doc["distribution"] = distribution_json(dist);
    emit_report(opt, out, err, doc, distribution_csv(dist));
    return 0;
}

int cmd_compositions(const Options& opt, std::ostream& out, std::ostream& err) {
    const GCompositionRange range(opt.n, opt.g);
    if (!opt.force)
        require_cap(range.size() <= (std::uint64_t{1} << 20),
                    "compositions caps at 2^20 items");
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "parts\n";
    for (const auto& parts : range) {
        rows.push_back(parts);
        for (std::size_t i = 0; i < parts.size(); ++i)
            csv << (i ? " " : "") << parts[i];
        csv << "\n";
    }
    ordered_json extra;
    extra["g"] = opt.g;
    ordered_json doc;
    doc["meta"] = make_meta(opt, opt.n, nullptr, extra);
    doc["compositions"] = std::move(rows);
    emit_report(opt, out, err, doc, csv.str());
    return 0;
}

int cmd_spectral(const Options& opt, bool has_n, std::ostream& out, std::ostream& err) {
    const RationalFlux flux(opt.p, opt.q);
    const char* lattice = opt.g == 2 ? "square" : "triangular";
    const std::vector<double> s =
        opt.g == 2 ? hofstadter_s_table(flux) : triangular_s_table(flux);

    ordered_json extra;
    extra["p"] = opt.p;
    extra["q"] = opt.q;
    extra["g"] = opt.g;
    extra["check"] = opt.check;

    ordered_json doc;
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;

    if (opt.check == "kreft") {
        const int n_max = has_n ? opt.n : 6;
        csv << "n,Z\n";
        for (int n = 0; n <= n_max; ++n) {
            const double z = general_Z(n, s, opt.g);
            ordered_json row;
            row["n"] = n;
            row["Z"] = z;
            rows.push_back(std::move(row));
            csv << n << "," << fmt_double(z) << "\n";
        }
        doc["meta"] = make_meta(opt, n_max, lattice, extra);
        doc["kreft"] = std::move(rows);
    } else if (opt.check == "cluster") {
        const int n_max = has_n ? opt.n : 5;
        std::vector<double> Z(static_cast<std::size_t>(n_max));
        for (int m = 1; m <= n_max; ++m)
            Z[static_cast<std::size_t>(m - 1)] = general_Z(m, s, opt.g);
        const auto b_log = cluster_from_logseries(Z);
        csv << "n,b_compositions,b_logseries,gap\n";
        for (int n = 1; n <= n_max; ++n) {
            const double direct = cluster_b_compositions(n, s, opt.g);
            const double via_log = b_log[static_cast<std::size_t>(n - 1)];
            const double gap = std::abs(direct - via_log);
            ordered_json row;
            row["n"] = n;
            row["b_compositions"] = direct;
            row["b_logseries"] = via_log;
            row["gap"] = gap;
            rows.push_back(std::move(row));
            csv << n << "," << fmt_double(direct) << "," << fmt_double(via_log) << ","
                << fmt_double(gap) << "\n";
        }
        doc["meta"] = make_meta(opt, n_max, lattice, extra);
        doc["cluster"] = std::move(rows);
    } else if (opt.check == "trace") {
        if (opt.g != 2)
            throw std::invalid_argument("spectral --check trace supports --g 2 only");
        const int n_limit = (opt.q - 1) / 2;
        const int n_max = has_n ? std::min(opt.n, n_limit) : n_limit;
        if (n_max < 1)
            throw std::invalid_argument("spectral --check trace needs q >= 3 for one order");
        csv << "n,trace_re,trace_im,predicted,gap\n";
        for (int n = 1; n <= n_max; ++n) {
            const auto r = trace_identity_check(flux, n);
            ordered_json row;
            row["n"] = n;
            row["trace_re"] = r.trace.real();
            row["trace_im"] = r.trace.imag();
            row["predicted"] = r.predicted;
            row["gap"] = r.gap;
            rows.push_back(std::move(row));
            csv << n << "," << fmt_double(r.trace.real()) << "," << fmt_double(r.trace.imag())
                << "," << fmt_double(r.predicted) << "," << fmt_double(r.gap) << "\n";
        }
        doc["meta"] = make_meta(opt, n_max, lattice, extra);
        doc["trace"] = std::move(rows);
    } else {  // secular
        if (opt.g == 3 && opt.q % 2 == 0)
            throw std::invalid_argument("spectral --check secular with --g 3 needs odd q");
        const auto bands =
            opt.g == 2 ? BandedSpectral::hofstadter(flux) : BandedSpectral::triangular(flux);
        const std::vector<std::complex<double>> samples = {
            {0.25, -0.15}, {-0.3, 0.2}, {0.1, 0.4}};
        csv << "z_re,z_im,residual\n";
        for (const auto z : samples) {
            const std::complex<double> det = secular_matrix(bands, z).determinant();
            detail::Accumulator<std::complex<double>> series;
            for (int m = 0; opt.g * m <= opt.q; ++m)
                series.add((m % 2 ? -1.0 : 1.0) * general_Z(m, s, opt.g) *
                           std::pow(z, opt.g * m));
            // The unit lower band of the three-band family survives a full
            // wrap around the cycle, adding exactly -z^q at odd q.
            if (opt.g == 3) series.add(-std::pow(z, opt.q));
            const double residual = std::abs(det - series.value());
            ordered_json row;
            row["z_re"] = z.real();
            row["z_im"] = z.imag();
            row["residual"] = residual;
            rows.push_back(std::move(row));
            csv << fmt_double(z.real()) << "," << fmt_double(z.imag()) << ","
                << fmt_double(residual) << "\n";
        }
        doc["meta"] = make_meta(opt, has_n ? opt.n : 0, lattice, extra);
        doc["secular"] = std::move(rows);
    }
    emit_report(opt, out, err, doc, csv.str());
    return 0;
}

int cmd_levy(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto table = levy_comparison(opt.n);
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "area,scaled,levy,abs_error\n";
    for (const auto& r : table) {
        ordered_json row;
        row["area"] = r.area;
        row["scaled"] = r.scaled;
        row["levy"] = r.levy;
        row["abs_error"] = r.abs_error;
        rows.push_back(std::move(row));
        csv << r.area << "," << fmt_double(r.scaled) << "," << fmt_double(r.levy) << ","
            << fmt_double(r.abs_error) << "\n";
    }
    ordered_json doc;
    doc["meta"] = make_meta(opt, opt.n, "square", {});
    doc["levy"] = std::move(rows);
    emit_report(opt, out, err, doc, csv.str());
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    std::vector<SuiteResult> results;
    if (opt.suite.empty())
        results = run_all_verify_suites(opt.workers);
    else
        results.push_back(run_verify_suite(opt.suite, opt.workers));

    bool all_ok = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream csv;
    csv << "suite,passed\n";
    for (const auto& r : results) {
        all_ok = all_ok && r.passed;
        err << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << fmt_double(r.seconds)
            << " s): " << r.detail << "\n";
        ordered_json row;
        row["suite"] = r.name;
        row["passed"] = r.passed;
        row["detail"] = r.detail;
        rows.push_back(std::move(row));
        csv << r.name << "," << (r.passed ? "true" : "false") << "\n";
    }
    ordered_json extra;
    if (!opt.suite.empty()) extra["suite"] = opt.suite;
    ordered_json doc;
    doc["meta"] = make_meta(opt, 0, nullptr, extra);
    doc["results"] = std::move(rows);
    emit_report(opt, out, err, doc, csv.str());
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact algebraic-area enumeration for closed lattice walks"};
    app.name("area-enum");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kCliVersion);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", opt.workers, "worker threads for the enumeration engines")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--force", opt.force, "override the default resource caps");
    app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");

    auto* enum_square =
        app.add_subcommand("enumerate-square", "count closed square-lattice walks by area");
    enum_square->fallthrough();
    enum_square->add_option("--n", opt.n, "walk length")->required();
    auto* area_opt = enum_square->add_option("--area", opt.area, "restrict to one area");

    auto* oracle_square =
        app.add_subcommand("oracle-square", "same distribution from the walk oracle");
    oracle_square->fallthrough();
    oracle_square->add_option("--n", opt.n, "walk length")->required();

    auto* enum_tri = app.add_subcommand("enumerate-triangular",
                                        "count closed chiral triangular walks by area");
    enum_tri->fallthrough();
    enum_tri->add_option("--n", opt.n, "walk length")->required();

    auto* compositions =
        app.add_subcommand("compositions", "list the compositions driving the counting formula");
    compositions->fallthrough();
    compositions->add_option("--n", opt.n, "composition total")->required();
    compositions->add_option("--g", opt.g, "exclusion order")->check(CLI::Range(2, 8));

    auto* spectral = app.add_subcommand("spectral", "band-spectrum identities at rational flux");
    spectral->fallthrough();
    spectral->add_option("--p", opt.p, "flux numerator")->required();
    spectral->add_option("--q", opt.q, "flux denominator")->required();
    spectral->add_option("--check", opt.check, "which identity to evaluate")
        ->required()
        ->check(CLI::IsMember({"kreft", "cluster", "trace", "secular"}));
    spectral->add_option("--g", opt.g, "band family: 2 square, 3 triangular")
        ->check(CLI::IsMember({2, 3}));
    auto* spectral_n = spectral->add_option("--n", opt.n, "highest order to report");

    auto* levy = app.add_subcommand("levy", "scaled distribution against the continuum law");
    levy->fallthrough();
    levy->add_option("--n", opt.n, "walk length")->required();

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->fallthrough();
    verify->add_option("--suite", opt.suite, "run a single suite by name");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("area-enum");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kCliVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'area-enum --help' for the command list\n";
        return 64;
    }

    try {
        if (enum_square->parsed()) return cmd_enumerate_square(opt, area_opt->count() > 0, out, err);
        if (oracle_square->parsed()) return cmd_oracle_square(opt, out, err);
        if (enum_tri->parsed()) return cmd_enumerate_triangular(opt, out, err);
        if (compositions->parsed()) return cmd_compositions(opt, out, err);
        if (spectral->parsed()) return cmd_spectral(opt, spectral_n->count() > 0, out, err);
        if (levy->parsed()) return cmd_levy(opt, out, err);
        return cmd_verify(opt, out, err);
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace areaenum
