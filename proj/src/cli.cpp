#include "mahlersep/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mahlersep/bounds.hpp"
#include "mahlersep/families.hpp"
#include "mahlersep/io.hpp"
#include "mahlersep/rootfind.hpp"
#include "mahlersep/sweep.hpp"

namespace msep::cli {

namespace {

using json = nlohmann::json;

struct AnalyzeOptions {
    std::string input_path;
    std::string coeffs;
    std::string roots;
    int precision = 16;
    int max_iterations = 200;
    std::string format = "json";
};

struct FamilyOptions {
    std::string kind;
    int n = 0;
    double t = 1.0;
    std::string format = "json";
};

struct SweepOptions {
    std::string kind = "int_coeff";
    int degree_min = 2;
    int degree_max = 12;
    int n = 0;
    int height = 10;
    double radius = 5.0;
    int count = 1000;
    std::uint64_t seed = 42;
    std::string out;
    std::string summary;
    int threads = 0;
    int precision = 16;
    std::string format = "json";
};

struct LemmaOptions {
    int n_max = 400;
    std::string format = "csv";
};

struct WindowOptions {
    int n = 2;
    double mu = 1.2;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err)
{
    const int sources = !opt.input_path.empty() + !opt.coeffs.empty() + !opt.roots.empty();
    if (sources != 1) {
        err << "analyze: give exactly one of --input, --coeffs, --roots\n";
        return invalid_input;
    }

    AnalysisInput input;
    try {
        if (!opt.input_path.empty())
            input = input_from_json(read_json_file(opt.input_path));
        else if (!opt.coeffs.empty())
            input.polynomial = polynomial_from_json(json::parse(opt.coeffs));
        else
            input.roots = roots_from_json(json::parse(opt.roots));
    } catch (const std::exception& e) {
        err << "analyze: invalid input: " << e.what() << '\n';
        return invalid_input;
    }

    const Polynomial* poly = input.polynomial ? &*input.polynomial : nullptr;
    RootSet rs;
    if (poly != nullptr) {
        if (poly->is_exact() && discriminant_exact(*poly) == 0) {
            err << "analyze: polynomial has a repeated root (discriminant is zero)\n";
            return non_separable;
        }
        SolverConfig cfg;
        cfg.precision_digits = opt.precision;
        cfg.max_iterations = opt.max_iterations;
        try {
            rs = find_roots(*poly, cfg);
        } catch (const SolverFailure& e) {
            err << "analyze: root finder failed: " << e.what() << '\n';
            return solver_failure;
        } catch (const std::invalid_argument& e) {
            err << "analyze: " << e.what() << '\n';
            return invalid_input;
        }
    } else {
        rs = *input.roots;
    }

    if (rs.size() < 2) {
        err << "analyze: bounds need degree at least 2\n";
        return invalid_input;
    }
    const SeparabilityCertificate cert = certify_separable(rs);
    if (!cert.separable) {
        err << "analyze: roots are not separable (minimum distance " << format_number(cert.min_distance) << ")\n";
        return non_separable;
    }

    BoundReport report;
    try {
        report = check_all(rs, poly);
    } catch (const SignatureError& e) {
        err << "analyze: " << e.what() << '\n';
        return solver_failure;
    }

    if (opt.format == "csv") {
        write_csv_header(out);
        write_csv_row(out, SweepRow{0, 0, report,
                                    report.measured.sep.value() * std::sqrt(static_cast<double>(report.n))
                                        / std::exp(report.measured.log_mahler / (report.n - 1))});
    } else {
        json j = to_json(report);
        json roots = json::array();
        for (std::size_t i = 0; i < rs.size(); ++i)
            roots.push_back(json::array({rs.roots[i].real(), rs.roots[i].imag()}));
        j["roots"] = std::move(roots);
        write_json(out, j);
        out << '\n';
    }
    if (!report.all_satisfied()) {
        err << "analyze: BOUND VIOLATION\n";
        return bound_violation;
    }
    return ok;
}

int cmd_family(FamilyOptions opt, std::ostream& out, std::ostream& err)
{
    FamilySpec spec;
    try {
        spec.kind = family_kind_from_string(opt.kind);
        if (opt.n == 0)
            opt.n = spec.kind == FamilyKind::quartic ? 4 : spec.kind == FamilyKind::cubic_extremal ? 3 : 0;
        spec.n = opt.n;
        spec.scale = opt.t;
        const FamilyInstance family = build_family(spec);
        const SharpnessRecord record = sharpness_ratio(family);
        if (opt.format == "csv") {
            out << "re,im\n";
            for (const auto& r : family.roots.roots)
                out << format_number(r.real()) << ',' << format_number(r.imag()) << '\n';
        } else {
            write_json(out, to_json(family, record));
            out << '\n';
        }
    } catch (const std::invalid_argument& e) {
        err << "family: " << e.what() << '\n';
        return invalid_input;
    }
    return ok;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err)
{
    EnsembleSpec spec;
    try {
        spec.kind = ensemble_kind_from_string(opt.kind);
        spec.degree_min = opt.n > 0 ? opt.n : opt.degree_min;
        spec.degree_max = opt.n > 0 ? opt.n : opt.degree_max;
        spec.height = opt.height;
        spec.radius = opt.radius;
        spec.count = opt.count;
        spec.seed = opt.seed;
        spec.solver.precision_digits = opt.precision;
        spec.validate();
    } catch (const std::invalid_argument& e) {
        err << "sweep: " << e.what() << '\n';
        return invalid_input;
    }

    std::ofstream csv(opt.out, std::ios::binary);
    if (!csv) {
        err << "sweep: cannot write " << opt.out << '\n';
        return invalid_input;
    }
    const SweepResult result = run_sweep(spec, resolve_workers(opt.threads));
    write_csv(csv, result);
    csv.close();

    const json summary = summary_json(result);
    const std::string summary_path = opt.summary.empty() ? opt.out + ".summary.json" : opt.summary;
    std::ofstream sj(summary_path);
    if (!sj) {
        err << "sweep: cannot write " << summary_path << '\n';
        return invalid_input;
    }
    write_json(sj, summary);
    sj << '\n';

    if (opt.format == "csv") {
        out << "n,rows,max_ratio,ratio_cap\n";
        for (const auto& [n, d] : result.summary.per_degree)
            out << n << ',' << d.rows << ',' << format_number(d.max_ratio) << ',' << format_number(d.ratio_cap) << '\n';
    } else {
        write_json(out, summary);
        out << '\n';
    }
    if (result.summary.violations > 0) {
        err << "sweep: " << result.summary.violations << " BOUND VIOLATIONS\n";
        return bound_violation;
    }
    return ok;
}

int cmd_lemmas(const LemmaOptions& opt, std::ostream& out, std::ostream& err)
{
    if (opt.n_max < 3) {
        err << "lemmas: --n-max must be at least 3\n";
        return invalid_input;
    }
    struct Row {
        std::string check;
        int k;
        InequalityCheck result;
    };
    std::vector<Row> rows;
    for (int n = 3; n <= opt.n_max; ++n)
        rows.push_back({"central_binomial", n, central_binomial_check(n)});
    for (int l = 1; 2 * l <= opt.n_max; ++l)
        rows.push_back({"central_binomial_even", l, central_binomial_even_check(l)});
    for (int m = 1; m <= std::min(opt.n_max, 170); ++m)
        rows.push_back({"wendel", m, wendel_check(m)});
    for (int n = 1; n <= opt.n_max; ++n)
        rows.push_back({"robbins", n, robbins_check(n)});

    int failures = 0;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = to_json(r.result);
            j["check"] = r.check;
            j["k"] = r.k;
            arr.push_back(std::move(j));
        }
        write_json(out, arr);
        out << '\n';
    } else {
        out << "check,k,lhs,rhs,log_lhs,log_rhs,ok\n";
        for (const auto& r : rows)
            out << r.check << ',' << r.k << ',' << format_number(r.result.lhs) << ',' << format_number(r.result.rhs)
                << ',' << format_number(r.result.log_lhs) << ',' << format_number(r.result.log_rhs) << ','
                << (r.result.ok ? "ok" : "FAIL") << '\n';
    }
    for (const auto& r : rows)
        failures += r.result.ok ? 0 : 1;
    if (failures > 0) {
        err << "lemmas: " << failures << " checks FAILED\n";
        return bound_violation;
    }
    return ok;
}

int cmd_window(const WindowOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        write_json(out, to_json(lehmer_window(opt.n, opt.mu)));
        out << '\n';
    } catch (const std::invalid_argument& e) {
        err << "window: " << e.what() << '\n';
        return invalid_input;
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Root separation, Mahler measure, and discriminant bounds for polynomials", "mahler-sep"};
    app.require_subcommand(1);

    AnalyzeOptions analyze_opt;
    auto* analyze = app.add_subcommand("analyze", "Measure a polynomial and check every applicable bound");
    analyze->add_option("--input", analyze_opt.input_path, "JSON file with {\"coeffs\": [...]} or {\"roots\": [...]}");
    analyze->add_option("--coeffs", analyze_opt.coeffs, "JSON coefficient array, constant term first");
    analyze->add_option("--roots", analyze_opt.roots, "JSON root array of [re, im] pairs");
    analyze->add_option("--precision", analyze_opt.precision, "Significant digits for the root finder")
        ->check(CLI::Range(1, 100));
    analyze->add_option("--max-iterations", analyze_opt.max_iterations, "Root finder iteration cap")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--format", analyze_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    FamilyOptions family_opt;
    auto* family = app.add_subcommand("family", "Emit a member of an extremal family with its sharpness ratio");
    family->add_option("--kind", family_opt.kind, "gaussian | conjugate_closed | arithmetic_progression | quartic | cubic_extremal")
        ->required();
    family->add_option("--n", family_opt.n, "Degree");
    family->add_option("--t", family_opt.t, "Scale parameter t (or step r)");
    family->add_option("--format", family_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Run a randomized ensemble through every bound");
    sweep->add_option("--kind", sweep_opt.kind, "int_coeff | disk_roots | real_roots");
    sweep->add_option("--degree-min", sweep_opt.degree_min, "Smallest degree");
    sweep->add_option("--degree-max", sweep_opt.degree_max, "Largest degree");
    sweep->add_option("--n", sweep_opt.n, "Single degree (overrides the range)");
    sweep->add_option("--height", sweep_opt.height, "Coefficient bound for int_coeff");
    sweep->add_option("--radius", sweep_opt.radius, "Root radius for disk_roots / real_roots");
    sweep->add_option("--count", sweep_opt.count, "Samples per degree");
    sweep->add_option("--seed", sweep_opt.seed, "64-bit seed");
    sweep->add_option("--out", sweep_opt.out, "CSV output path")->required();
    sweep->add_option("--summary", sweep_opt.summary, "Summary JSON path (default: <out>.summary.json)");
    sweep->add_option("--threads", sweep_opt.threads, "Worker count (0: all cores; capped by MAHLER_SEP_THREADS)");
    sweep->add_option("--precision", sweep_opt.precision, "Significant digits for the root finder")
        ->check(CLI::Range(1, 100));
    sweep->add_option("--format", sweep_opt.format, "Summary format on stdout")->check(CLI::IsMember({"json", "csv"}));

    LemmaOptions lemma_opt;
    auto* lemmas = app.add_subcommand("lemmas", "Check the binomial, Wendel, and Robbins inequalities");
    lemmas->add_option("--n-max", lemma_opt.n_max, "Largest n");
    lemmas->add_option("--format", lemma_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    WindowOptions window_opt;
    auto* window = app.add_subcommand("window", "Separation window left open by Lehmer's conjecture");
    window->add_option("--n", window_opt.n, "Degree")->required();
    window->add_option("--mu", window_opt.mu, "Candidate Mahler measure bound mu > 1")->required();

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid_input;
    }

    try {
        if (*analyze)
            return cmd_analyze(analyze_opt, out, err);
        if (*family)
            return cmd_family(family_opt, out, err);
        if (*sweep)
            return cmd_sweep(sweep_opt, out, err);
        if (*lemmas)
            return cmd_lemmas(lemma_opt, out, err);
        if (*window)
            return cmd_window(window_opt, out, err);
    } catch (const std::exception& e) {
        err << "mahler-sep: " << e.what() << '\n';
        return invalid_input;
    }
    return invalid_input;
}

}  // namespace msep::cli
