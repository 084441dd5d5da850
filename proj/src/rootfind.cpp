#include "mahlersep/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>

#include <boost/multiprecision/cpp_complex.hpp>

namespace msep {

namespace {

namespace mp = boost::multiprecision;

constexpr double initial_angle_offset = 0.4;
constexpr double degenerate_derivative = 1e-12;

template <class R>
R real_from_mpz(const mpz_class& v)
{
    if constexpr (std::is_same_v<R, double>)
        return to_double(v);
    else if constexpr (std::is_same_v<R, long double>)
        return std::stold(v.get_str());
    else
        return R(v.get_str());
}

template <class C>
bool isfinite_c(const C& z)
{
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(z.real()) && isfinite(z.imag());
}

template <class C, class R>
struct Workspace {
    std::vector<C> coeffs;
    std::vector<C> dcoeffs;
    std::vector<R> abs_coeffs;
    std::vector<R> abs_dcoeffs;

    explicit Workspace(const Polynomial& p)
    {
        const int n = p.degree();
        coeffs.reserve(n + 1);
        if (p.is_exact()) {
            for (const auto& c : p.exact_coeffs())
                coeffs.emplace_back(real_from_mpz<R>(c), R(0));
        } else {
            for (const auto& c : p.coeffs())
                coeffs.emplace_back(R(c.real()), R(c.imag()));
        }
        for (int i = 1; i <= n; ++i)
            dcoeffs.push_back(coeffs[i] * C(R(i), R(0)));
        using std::abs;
        for (const auto& c : coeffs)
            abs_coeffs.push_back(abs(c));
        for (const auto& c : dcoeffs)
            abs_dcoeffs.push_back(abs(c));
    }

    // Scale-free view of p near z. For |z| > 1 everything goes through the
    // reversed polynomial q(w) = w^n p(1/w), so nothing overflows.
    struct Local {
        C newton;            // p(z) / p'(z)
        R value_ratio;       // |p(z)| / sum |c_i| |z|^i
        R slope_ratio;       // |p'(z)| / sum i |c_i| |z|^(i-1)
        R log_abs_value;     // log |p(z)|
        R root_radius;       // |p(z)|^(1/n)
        bool zero_value;
    };

    Local local(const C& z) const
    {
        using std::abs;
        using std::log;
        using std::pow;
        const int n = static_cast<int>(coeffs.size()) - 1;
        const R az = abs(z);
        Local out;
        C value, slope;
        R value_scale(0), slope_scale(0);
        if (az <= R(1)) {
            value = coeffs.back();
            slope = C(R(0), R(0));
            for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
                slope = slope * z + value;
                value = value * z + coeffs[i];
            }
            value_scale = abs_horner(abs_coeffs, az);
            slope_scale = abs_horner(abs_dcoeffs, az);
            out.newton = value / slope;
            out.log_abs_value = log(abs(value));
            out.root_radius = pow(abs(value), R(1) / R(n));
        } else {
            const C w = C(R(1), R(0)) / z;
            const R aw = R(1) / az;
            C q = coeffs[0], dq(R(0), R(0));
            R qa = abs_coeffs[0], qb(R(0));
            for (int i = 1; i <= n; ++i) {
                dq = dq * w + q;
                q = q * w + coeffs[i];
                qa = qa * aw + abs_coeffs[i];
            }
            for (int i = 1; i <= n; ++i)
                qb = qb * aw + R(i) * abs_coeffs[i];
            value = q;
            slope = C(R(n), R(0)) * q - w * dq;
            value_scale = qa;
            slope_scale = qb;
            out.newton = z * q / slope;
            out.log_abs_value = R(n) * log(az) + log(abs(q));
            out.root_radius = az * pow(abs(q), R(1) / R(n));
        }
        out.zero_value = value == C(R(0), R(0));
        out.value_ratio = value_scale > R(0) ? abs(value) / value_scale : R(0);
        out.slope_ratio = slope_scale > R(0) ? abs(slope) / slope_scale : R(0);
        return out;
    }

    static R abs_horner(const std::vector<R>& a, const R& x)
    {
        R acc(0);
        for (std::size_t i = a.size(); i-- > 0;)
            acc = acc * x + a[i];
        return acc;
    }
};

template <class C, class R>
R relative_tolerance(const SolverConfig& cfg)
{
    if (cfg.precision_digits <= 16)
        return R(cfg.convergence_tol);
    using std::pow;
    const R digits_tol = pow(R(10), R(3 - cfg.precision_digits));
    return std::min(R(cfg.convergence_tol), digits_tol);
}

template <class C, class R>
RootSet finish(const Workspace<C, R>& ws, const std::vector<C>& z)
{
    using std::abs;
    using std::pow;
    const int n = static_cast<int>(z.size());
    const bool extended = !std::is_same_v<R, double>;

    RootSet rs;
    rs.source = RootSource::computed;
    rs.roots.reserve(n);
    std::vector<bool> degenerate(n, false);
    std::vector<double> newton(n, 0.0);
    std::vector<double> root_bound(n, 0.0);

    for (int k = 0; k < n; ++k) {
        const auto here = ws.local(z[k]);
        rs.roots.emplace_back(static_cast<double>(z[k].real()), static_cast<double>(z[k].imag()));
        if (!here.zero_value && here.slope_ratio > R(degenerate_derivative))
            newton[k] = static_cast<double>(abs(here.newton));
        else
            degenerate[k] = !here.zero_value;
        // Monic p has a root within |p(z)|^(1/n) of z.
        root_bound[k] = static_cast<double>(here.root_radius);
        if (extended)
            newton[k] += std::abs(rs.roots.back()) * std::numeric_limits<double>::epsilon();
    }

    rs.residual_bound.assign(n, 0.0);
    for (int k = 0; k < n; ++k) {
        if (!degenerate[k]) {
            rs.residual_bound[k] = newton[k];
            continue;
        }
        // Cluster of degenerate roots linked to k within 1e-3 relative.
        std::vector<int> cluster{k};
        std::vector<bool> in(n, false);
        in[k] = true;
        for (std::size_t c = 0; c < cluster.size(); ++c) {
            const Complex here = rs.roots[cluster[c]];
            for (int j = 0; j < n; ++j) {
                if (in[j] || !degenerate[j])
                    continue;
                if (std::abs(rs.roots[j] - here) <= 1e-3 * std::max(1.0, std::abs(here))) {
                    in[j] = true;
                    cluster.push_back(j);
                }
            }
        }
        double diameter = 0.0;
        for (int a : cluster)
            for (int b : cluster)
                diameter = std::max(diameter, std::abs(rs.roots[a] - rs.roots[b]));
        rs.residual_bound[k] = std::max(diameter, root_bound[k]);
    }
    return rs;
}

template <class C, class R>
RootSet aberth(const Polynomial& p, const SolverConfig& cfg)
{
    using std::abs;
    using std::cos;
    using std::sin;

    const int n = p.degree();
    const Workspace<C, R> ws(p);
    const R tol = relative_tolerance<C, R>(cfg);
    const R eps = std::numeric_limits<R>::epsilon();
    const R noise_factor = R(4 * n) * eps;

    std::vector<C> z(n);
    const R radius = R(1) + R(height(p));
    const R two_pi = R(2) * boost::math::constants::pi<R>();
    for (int k = 0; k < n; ++k) {
        const R theta = two_pi * R(k) / R(n) + R(initial_angle_offset);
        z[k] = C(radius * cos(theta), radius * sin(theta));
    }

    std::vector<bool> converged(n, false);
    int iterations = 0;
    bool done = false;
    while (!done && iterations < cfg.max_iterations) {
        ++iterations;
        done = true;
        for (int k = 0; k < n; ++k) {
            if (converged[k])
                continue;
            const auto here = ws.local(z[k]);
            const R az = abs(z[k]);
            if (here.zero_value || here.value_ratio <= noise_factor) {
                converged[k] = true;
                continue;
            }
            C sum(R(0), R(0));
            for (int j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                const C diff = z[k] - z[j];
                if (diff != C(R(0), R(0)))
                    sum += C(R(1), R(0)) / diff;
            }
            // p / (p' - p sum) = N / (1 - N sum) with N = p / p'
            const C denom = C(R(1), R(0)) - here.newton * sum;
            if (denom == C(R(0), R(0)) || !isfinite_c(here.newton)) {
                // Nudge off an exact stationary point.
                z[k] += C(eps * (R(1) + az), eps * (R(1) + az));
                done = false;
                continue;
            }
            const C delta = here.newton / denom;
            z[k] -= delta;
            // Mixed test: a multiple root at 0 is approached linearly, so a
            // purely relative update never gets small there.
            const R az_new = abs(z[k]);
            if (abs(delta) <= tol * (az_new > R(1) ? az_new : R(1)))
                converged[k] = true;
            else
                done = false;
        }
    }

    if (!done) {
        RootSet best = finish(ws, z);
        sort_roots(best);
        throw SolverFailure("Aberth iteration did not converge in " + std::to_string(cfg.max_iterations)
                                + " iterations",
                            std::move(best), iterations);
    }

    for (int k = 0; k < n; ++k) {
        for (int step = 0; step < cfg.polish_steps; ++step) {
            const auto here = ws.local(z[k]);
            if (here.zero_value || !(here.slope_ratio > R(degenerate_derivative)))
                break;
            const C candidate = z[k] - here.newton;
            if (!(ws.local(candidate).log_abs_value < here.log_abs_value))
                break;
            z[k] = candidate;
        }
    }

    RootSet rs = finish(ws, z);
    sort_roots(rs);
    return rs;
}

}  // namespace

void SolverConfig::validate() const
{
    if (max_iterations < 1)
        throw std::invalid_argument("max_iterations must be at least 1");
    if (!(convergence_tol > 0.0))
        throw std::invalid_argument("convergence_tol must be positive");
    if (polish_steps < 0)
        throw std::invalid_argument("polish_steps must be non-negative");
    if (precision_digits < 1 || precision_digits > 100)
        throw std::invalid_argument("precision_digits must be in [1, 100]");
}

RootSet find_roots(const Polynomial& p, const SolverConfig& cfg)
{
    cfg.validate();
    if (cfg.precision_digits <= 16)
        return aberth<std::complex<double>, double>(p, cfg);
    if (cfg.precision_digits <= 18)
        return aberth<std::complex<long double>, long double>(p, cfg);
    if (cfg.precision_digits <= 50)
        return aberth<mp::cpp_complex_50, mp::cpp_bin_float_50>(p, cfg);
    return aberth<mp::cpp_complex_100, mp::cpp_bin_float_100>(p, cfg);
}

namespace {

// Principal argument, in (-pi, pi]. A rounding-level imaginary part counts as
// real, so -sqrt2 - 1e-17i sorts at pi rather than -pi.
double sort_angle(Complex z)
{
    constexpr double real_axis = 1e-12;
    if (std::abs(z.imag()) <= real_axis * std::abs(z))
        return z.real() >= 0.0 ? 0.0 : std::numbers::pi;
    return std::arg(z);
}

}  // namespace

void sort_roots(RootSet& rs)
{
    const std::size_t n = rs.roots.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(rs.roots[a]) < std::abs(rs.roots[b]);
    });
    // Moduli equal up to rounding form one group ordered by argument.
    constexpr double same_modulus = 1e-12;
    std::size_t start = 0;
    while (start < n) {
        const double lead = std::abs(rs.roots[order[start]]);
        std::size_t stop = start + 1;
        while (stop < n && std::abs(rs.roots[order[stop]]) - lead <= same_modulus * std::max(1.0, lead))
            ++stop;
        std::stable_sort(order.begin() + start, order.begin() + stop, [&](std::size_t a, std::size_t b) {
            return sort_angle(rs.roots[a]) < sort_angle(rs.roots[b]);
        });
        start = stop;
    }

    RootSet sorted;
    sorted.source = rs.source;
    sorted.roots.reserve(n);
    sorted.residual_bound.reserve(n);
    for (std::size_t i : order) {
        sorted.roots.push_back(rs.roots[i]);
        sorted.residual_bound.push_back(i < rs.residual_bound.size() ? rs.residual_bound[i] : 0.0);
    }
    rs = std::move(sorted);
}

double distinctness_scale(const RootSet& rs)
{
    double largest = 0.0;
    for (const auto& r : rs.roots)
        largest = std::max(largest, std::abs(r));
    return separability_threshold * std::max(1.0, largest);
}

SeparabilityCertificate certify_separable(const RootSet& rs)
{
    SeparabilityCertificate cert;
    cert.min_distance = std::numeric_limits<double>::infinity();
    const auto& r = rs.roots;
    const auto& bound = rs.residual_bound;
    auto err = [&](std::size_t i) { return i < bound.size() ? bound[i] : 0.0; };
    // Two roots only count as distinct if their error disks stay apart.
    double worst_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            const double d = std::abs(r[i] - r[j]);
            cert.min_distance = std::min(cert.min_distance, d);
            worst_gap = std::min(worst_gap, d - err(i) - err(j));
        }
    cert.separable = worst_gap > distinctness_scale(rs);
    return cert;
}

}  // namespace msep
