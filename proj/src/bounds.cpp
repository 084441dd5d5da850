#include "mahlersep/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mahlersep/rootfind.hpp"

namespace msep {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double totally_real_constant = 6.33;
constexpr double tie_tol = 1e-9;

void require_degree(int n)
{
    if (n < 2)
        throw std::invalid_argument("bounds need degree n >= 2");
}

double log_checked_mahler(double mahler)
{
    if (!(mahler >= 1.0))
        throw std::invalid_argument("Mahler measure must be at least 1");
    return std::log(mahler);
}

double main_constant(int n)
{
    return std::min(2.0, 34.0 / std::sqrt(static_cast<double>(n)));
}

double main_upper_log(int n, double log_mahler, ExponentCase c)
{
    const double exponent = c == ExponentCase::general ? 1.0 / (n - 1) : 1.0 / n;
    return main_constant(n) * std::exp(exponent * log_mahler);
}

std::optional<double> improved_upper_log(Signature sig, int n, double log_mahler)
{
    require_degree(n);
    if (sig.t < 0 || sig.s < 0 || sig.degree() != n)
        throw std::invalid_argument("signature (" + std::to_string(sig.t) + "," + std::to_string(sig.s)
                                    + ") is inconsistent with degree " + std::to_string(n));
    if (sig == Signature{1, 1})
        return std::sqrt(3.0) * std::exp(log_mahler / 2.0);
    if (sig == Signature{0, 2})
        return std::sqrt(2.0) * std::exp(log_mahler / 4.0);
    if (sig.s == 0) {
        if (n >= 4)
            return totally_real_constant / n * std::exp(log_mahler / (n - 1));
        return main_upper_log(n, log_mahler, ExponentCase::general);
    }
    return std::nullopt;
}

InequalityCheck make_check(double log_lhs, double log_rhs, bool ok)
{
    return {std::exp(log_lhs), std::exp(log_rhs), log_lhs, log_rhs, ok};
}

double log_factorial(unsigned long n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return log_abs(f);
}

double log_binomial(unsigned long n, unsigned long k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return log_abs(b);
}

}  // namespace

bool BoundReport::all_satisfied() const
{
    return std::all_of(entries.begin(), entries.end(),
                       [](const BoundEntry& e) { return !e.applicable || e.satisfied; });
}

const BoundEntry* BoundReport::find(const std::string& bound_id) const
{
    for (const auto& e : entries)
        if (e.bound_id == bound_id)
            return &e;
    return nullptr;
}

std::optional<double> mahler_lower_bound_log(int n, double log_mahler, double log_abs_disc, bool integer_case)
{
    require_degree(n);
    if (!integer_case && log_abs_disc == -std::numeric_limits<double>::infinity())
        return std::nullopt;
    const double log_d = integer_case ? 0.0 : log_abs_disc;
    const double log_value = 0.5 * (std::log(3.0) + log_d) - 0.5 * (n + 2) * std::log(static_cast<double>(n))
                             - (n - 1) * log_mahler;
    return std::exp(log_value);
}

std::optional<double> mahler_lower_bound(int n, double mahler, double abs_disc, bool integer_case)
{
    if (abs_disc < 0.0)
        throw std::invalid_argument("|D| must be non-negative");
    const double log_d = abs_disc == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(abs_disc);
    return mahler_lower_bound_log(n, log_checked_mahler(mahler), log_d, integer_case);
}

double trivial_upper(double mahler)
{
    log_checked_mahler(mahler);
    return 2.0 * mahler;
}

double discriminant_upper(int n, double mahler)
{
    require_degree(n);
    const double log_m = log_checked_mahler(mahler);
    return std::exp(std::log(static_cast<double>(n)) / (n - 1) + 2.0 * log_m / n);
}

double main_upper(int n, double mahler, ExponentCase exponent_case)
{
    require_degree(n);
    return main_upper_log(n, log_checked_mahler(mahler), exponent_case);
}

ExponentCase applicable_exponent_case(const RootSet& rs)
{
    if (rs.roots.empty())
        return ExponentCase::general;
    double smallest = std::numeric_limits<double>::infinity();
    for (const auto& r : rs.roots)
        smallest = std::min(smallest, std::abs(r));
    for (const auto& r : rs.roots) {
        const double mod = std::abs(r);
        const double scale = tie_tol * std::max(1.0, mod);
        if (mod - smallest <= scale && std::abs(r.imag()) > scale)
            return ExponentCase::nonreal_min;
    }
    return ExponentCase::general;
}

std::optional<double> improved_upper(Signature sig, int n, double mahler)
{
    return improved_upper_log(sig, n, log_checked_mahler(mahler));
}

LehmerWindow lehmer_window(int n, double mu)
{
    require_degree(n);
    if (!(mu > 1.0))
        throw std::invalid_argument("Lehmer window needs mu > 1");
    LehmerWindow w;
    w.n = n;
    w.mu = mu;
    const double log_mu = std::log(mu);
    w.lo = std::exp(0.5 * std::log(3.0) - 0.5 * (n + 2) * std::log(static_cast<double>(n)) - (n - 1) * log_mu);
    w.hi = main_upper_log(n, log_mu, ExponentCase::general);
    return w;
}

PackingCheck packing_check(const RootSet& rs, double radius)
{
    if (!(radius >= 0.0))
        throw std::invalid_argument("packing radius must be non-negative");
    const SeparabilityCertificate cert = certify_separable(rs);
    if (!cert.separable || rs.size() < 2)
        throw NonSeparableError("packing check needs a separable root set with at least two roots");
    const double r = cert.min_distance / 2.0;

    PackingCheck pc;
    pc.radius = radius;
    for (const auto& root : rs.roots) {
        const double mod = std::abs(root);
        pc.count += mod < radius ? 1 : 0;
        pc.count_closed += mod <= radius ? 1 : 0;
    }
    pc.bound = (radius / r + 1.0) * (radius / r + 1.0);
    // The closed-ball count only follows from the volume argument for R > 0.
    pc.ok = pc.count < pc.bound && (radius == 0.0 || pc.count_closed < pc.bound);
    return pc;
}

InequalityCheck central_binomial_check(int n)
{
    if (n < 3)
        throw std::invalid_argument("central binomial check needs n >= 3");
    const double log_lhs = log_binomial(n, n / 2);
    const double log_rhs = (n + 1) * std::log(2.0) - 0.5 * std::log(std::numbers::pi * (2.0 * n + 1.0));
    return make_check(log_lhs, log_rhs, log_lhs <= log_rhs);
}

InequalityCheck central_binomial_even_check(int l)
{
    if (l < 1)
        throw std::invalid_argument("even central binomial check needs l >= 1");
    const double log_lhs = log_binomial(2 * l, l);
    const double log_rhs = 2 * l * std::log(2.0) - 0.5 * std::log(std::numbers::pi * (l + 0.25));
    return make_check(log_lhs, log_rhs, log_lhs <= log_rhs);
}

InequalityCheck wendel_check(int m)
{
    if (m < 1)
        throw std::invalid_argument("Wendel check needs m >= 1");
    // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
    const double log_fact_m = log_factorial(m);
    const double log_lhs = log_factorial(2 * m) + 0.5 * std::log(std::numbers::pi) - m * std::log(4.0) - log_fact_m;
    const double log_rhs = log_fact_m - 0.5 * std::log(m + 0.5);
    return make_check(log_lhs, log_rhs, log_lhs > log_rhs);
}

InequalityCheck robbins_check(int n)
{
    if (n < 1)
        throw std::invalid_argument("Robbins check needs n >= 1");
    const double log_lhs = log_factorial(n);
    const double dn = n;
    const double log_rhs = 0.5 * std::log(2.0 * std::numbers::pi * dn) + dn * (std::log(dn) - 1.0) + 1.0 / (12.0 * dn + 1.0);
    return make_check(log_lhs, log_rhs, log_lhs > log_rhs);
}

BoundReport check_all(const RootSet& rs, const Polynomial* p)
{
    const int n = static_cast<int>(rs.size());
    require_degree(n);
    if (!certify_separable(rs).separable)
        throw NonSeparableError("root set is not separable");

    BoundReport report;
    report.n = n;
    report.measured = measure(rs, p);
    const MeasureReport& m = report.measured;
    const double sep = m.sep.value();
    const double slack = bound_slack * std::max(1.0, sep);
    const double log_m = m.log_mahler;

    auto add = [&](std::string id, Side side, std::optional<double> value, double measured) {
        BoundEntry e;
        e.bound_id = std::move(id);
        e.side = side;
        e.applicable = value.has_value();
        e.value = value.value_or(nan);
        if (e.applicable) {
            e.margin = side == Side::upper ? e.value - measured : measured - e.value;
            e.satisfied = e.margin >= -slack;
        } else {
            e.margin = nan;
        }
        report.entries.push_back(std::move(e));
    };

    add("mahler_lower", Side::lower, mahler_lower_bound_log(n, log_m, m.log_abs_disc, false), sep);
    if (p != nullptr && p->is_exact())
        add("mahler_lower_integer", Side::lower, mahler_lower_bound_log(n, log_m, 0.0, true), sep);
    add("trivial_upper", Side::upper, 2.0 * std::exp(log_m), sep);
    add("discriminant_upper", Side::upper,
        std::exp(std::log(static_cast<double>(n)) / (n - 1) + 2.0 * log_m / n), sep);

    const ExponentCase exponent_case = m.signature ? applicable_exponent_case(rs) : ExponentCase::general;
    add("main_upper", Side::upper, main_upper_log(n, log_m, exponent_case), sep);
    report.entries.back().detail = to_string(exponent_case);

    std::optional<double> improved;
    if (m.signature)
        improved = improved_upper_log(*m.signature, n, log_m);
    add("improved_upper", Side::upper, improved, sep);
    if (m.signature)
        report.entries.back().detail =
            "(" + std::to_string(m.signature->t) + "," + std::to_string(m.signature->s) + ")";

    double largest = 0.0;
    for (const auto& root : rs.roots)
        largest = std::max(largest, std::abs(root));
    const double r = sep / 2.0;
    const std::pair<const char*, double> grid[] = {
        {"packing_r", r}, {"packing_2r", 2 * r}, {"packing_4r", 4 * r}, {"packing_8r", 8 * r}, {"packing_max", largest}};
    for (const auto& [id, radius] : grid) {
        const PackingCheck pc = packing_check(rs, radius);
        BoundEntry e;
        e.bound_id = id;
        e.side = Side::upper;
        e.value = pc.bound;
        e.margin = pc.bound - pc.count_closed;
        e.satisfied = pc.ok;
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string to_string(Side side)
{
    return side == Side::lower ? "lower" : "upper";
}

std::string to_string(ExponentCase c)
{
    return c == ExponentCase::general ? "general" : "nonreal_min";
}

}  // namespace msep
