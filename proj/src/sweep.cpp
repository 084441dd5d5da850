#include "mahlersep/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "mahlersep/io.hpp"

namespace msep {

namespace {

enum class OutcomeKind { row, rejected, solver_failure };

struct Outcome {
    OutcomeKind kind = OutcomeKind::rejected;
    SweepRow row;
};

std::mt19937_64 sample_stream(std::uint64_t seed, int cell, int index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(cell), static_cast<std::uint32_t>(index)};
    return std::mt19937_64(seq);
}

std::optional<RootSet> sample_disk(std::mt19937_64& rng, int n, double radius)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double rho = radius * std::sqrt(unit(rng));
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        roots.push_back(std::polar(rho, theta));
    }
    return RootSet::exact(std::move(roots));
}

std::optional<RootSet> sample_real(std::mt19937_64& rng, int n, double radius)
{
    constexpr int max_draws = 1000;
    std::uniform_real_distribution<double> line(-radius, radius);
    const double too_close = separability_threshold * std::max(1.0, radius);
    std::vector<Complex> roots;
    roots.reserve(n);
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int draw = 0; draw < max_draws && !placed; ++draw) {
            const double x = line(rng);
            placed = std::none_of(roots.begin(), roots.end(),
                                  [&](Complex r) { return std::abs(r.real() - x) <= too_close; });
            if (placed)
                roots.emplace_back(x, 0.0);
        }
        if (!placed)
            return std::nullopt;
    }
    return RootSet::exact(std::move(roots));
}

double normalized_ratio(const BoundReport& report)
{
    const double n = report.n;
    return report.measured.sep.value() * std::sqrt(n) / std::exp(report.measured.log_mahler / (n - 1));
}

Outcome process(const EnsembleSpec& spec, int cell, int index)
{
    const int n = spec.degree_min + cell;
    auto rng = sample_stream(spec.seed, cell, index);
    Outcome out;
    out.row.cell = cell;
    out.row.index = index;

    if (spec.kind == EnsembleKind::int_coeff) {
        std::uniform_int_distribution<int> coeff(-spec.height, spec.height);
        std::vector<mpz_class> c(n + 1);
        for (int i = 0; i < n; ++i)
            c[i] = coeff(rng);
        c[n] = 1;
        const Polynomial p = Polynomial::from_integer_coefficients(c);
        if (discriminant_exact(p) == 0)
            return out;
        RootSet rs;
        try {
            rs = find_roots(p, spec.solver);
        } catch (const SolverFailure&) {
            out.kind = OutcomeKind::solver_failure;
            return out;
        }
        if (!certify_separable(rs).separable)
            return out;
        out.row.report = check_all(rs, &p);
    } else {
        const auto rs = spec.kind == EnsembleKind::disk_roots ? sample_disk(rng, n, spec.radius)
                                                              : sample_real(rng, n, spec.radius);
        if (!rs || !certify_separable(*rs).separable)
            return out;
        out.row.report = check_all(*rs, nullptr);
    }
    out.row.ratio = normalized_ratio(out.row.report);
    out.kind = OutcomeKind::row;
    return out;
}

std::string optional_cell(const std::optional<double>& v)
{
    return v ? format_number(*v) : std::string();
}

}  // namespace

void EnsembleSpec::validate() const
{
    if (degree_min < 2 || degree_max < degree_min)
        throw std::invalid_argument("ensemble degrees must satisfy 2 <= degree_min <= degree_max");
    if (count < 1)
        throw std::invalid_argument("ensemble count must be at least 1");
    if (kind == EnsembleKind::int_coeff && height < 1)
        throw std::invalid_argument("ensemble height must be at least 1");
    if (kind != EnsembleKind::int_coeff && !(radius > 0.0 && std::isfinite(radius)))
        throw std::invalid_argument("ensemble radius must be positive");
    solver.validate();
}

int resolve_workers(int requested)
{
    int workers = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(workers, 1);
    if (const char* cap = std::getenv("MAHLER_SEP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && v > 0)
            workers = std::min<long>(workers, v);
    }
    return workers;
}

SweepResult run_sweep(const EnsembleSpec& spec, int workers)
{
    spec.validate();
    const int cells = spec.degree_max - spec.degree_min + 1;
    const std::size_t total = static_cast<std::size_t>(cells) * static_cast<std::size_t>(spec.count);
    std::vector<Outcome> outcomes(total);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < total; i = next++)
            outcomes[i] = process(spec, static_cast<int>(i / spec.count), static_cast<int>(i % spec.count));
    };
    const int threads = std::clamp<int>(workers, 1, static_cast<int>(std::max<std::size_t>(total, 1)));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }

    SweepResult result;
    result.spec = spec;
    SweepSummary& s = result.summary;
    s.samples = static_cast<int>(total);
    for (int cell = 0; cell < cells; ++cell) {
        const int n = spec.degree_min + cell;
        s.per_degree[n] = {n, 0, 0.0, std::min(2.0, 34.0 / std::sqrt(n)) * std::sqrt(n)};
    }
    for (auto& o : outcomes) {
        switch (o.kind) {
        case OutcomeKind::rejected:
            ++s.rejected;
            continue;
        case OutcomeKind::solver_failure:
            ++s.solver_failures;
            continue;
        case OutcomeKind::row:
            break;
        }
        DegreeSummary& d = s.per_degree[o.row.report.n];
        ++d.rows;
        d.max_ratio = std::max(d.max_ratio, o.row.ratio);
        if (!o.row.report.all_satisfied())
            ++s.violations;
        for (const auto& e : o.row.report.entries)
            if (e.bound_id.starts_with("packing") && !e.satisfied) {
                ++s.packing_failures;
                break;
            }
        result.rows.push_back(std::move(o.row));
    }
    s.rows = static_cast<int>(result.rows.size());
    return result;
}

const std::vector<std::string>& sweep_bound_ids()
{
    static const std::vector<std::string> ids{
        "mahler_lower", "mahler_lower_integer", "trivial_upper", "discriminant_upper",
        "main_upper", "improved_upper", "packing_r",
        "packing_2r", "packing_4r", "packing_8r", "packing_max"};
    return ids;
}

void write_csv_header(std::ostream& out)
{
    out << "# mahler-sep sweep v1\n";
    out << "cell,index,n,t,s,sep,abs_sep,mahler,disc_abs";
    for (const auto& id : sweep_bound_ids())
        out << ',' << id << "_value," << id << "_margin," << id << "_pass";
    out << ",all_pass,ratio\n";
}

void write_csv_row(std::ostream& out, const SweepRow& row)
{
    const BoundReport& r = row.report;
    const MeasureReport& m = r.measured;
    out << row.cell << ',' << row.index << ',' << r.n << ',';
    if (m.signature)
        out << m.signature->t << ',' << m.signature->s;
    else
        out << ',';
    out << ',' << optional_cell(m.sep) << ',' << optional_cell(m.abs_sep) << ',' << format_number(m.mahler) << ','
        << format_number(std::abs(m.disc));
    for (const auto& id : sweep_bound_ids()) {
        const BoundEntry* e = r.find(id);
        if (e == nullptr || !e->applicable) {
            out << ",,,";
            continue;
        }
        out << ',' << format_number(e->value) << ',' << format_number(e->margin) << ',' << (e->satisfied ? 1 : 0);
    }
    out << ',' << (r.all_satisfied() ? 1 : 0) << ',' << format_number(row.ratio) << '\n';
}

void write_csv(std::ostream& out, const SweepResult& result)
{
    write_csv_header(out);
    for (const auto& row : result.rows)
        write_csv_row(out, row);
}

nlohmann::json summary_json(const SweepResult& result)
{
    const SweepSummary& s = result.summary;
    const EnsembleSpec& spec = result.spec;
    nlohmann::json out;
    out["spec"] = {{"kind", to_string(spec.kind)},
                   {"degree_min", spec.degree_min},
                   {"degree_max", spec.degree_max},
                   {"height", spec.height},
                   {"radius", spec.radius},
                   {"count", spec.count},
                   {"seed", spec.seed}};
    out["samples"] = s.samples;
    out["rows"] = s.rows;
    out["rejected"] = s.rejected;
    out["solver_failures"] = s.solver_failures;
    out["violations"] = s.violations;
    out["packing_failures"] = s.packing_failures;
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& [n, d] : s.per_degree)
        degrees.push_back({{"n", n}, {"rows", d.rows}, {"max_ratio", d.max_ratio}, {"ratio_cap", d.ratio_cap}});
    out["per_degree"] = std::move(degrees);
    return out;
}

std::string to_string(EnsembleKind kind)
{
    switch (kind) {
    case EnsembleKind::int_coeff:
        return "int_coeff";
    case EnsembleKind::disk_roots:
        return "disk_roots";
    case EnsembleKind::real_roots:
        return "real_roots";
    }
    return "unknown";
}

EnsembleKind ensemble_kind_from_string(const std::string& name)
{
    for (auto kind : {EnsembleKind::int_coeff, EnsembleKind::disk_roots, EnsembleKind::real_roots})
        if (to_string(kind) == name)
            return kind;
    throw std::invalid_argument("unknown ensemble kind '" + name + "'");
}

}  // namespace msep
