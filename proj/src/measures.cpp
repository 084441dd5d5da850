#include "mahlersep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mahlersep/rootfind.hpp"

namespace msep {

namespace {

// Above this degree products are accumulated as logarithms.
constexpr int log_space_degree = 50;

constexpr double equal_modulus_tol = 1e-9;
constexpr double real_root_tol = 1e-9;

using IntPoly = std::vector<mpz_class>;

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int deg(const IntPoly& p)
{
    return static_cast<int>(p.size()) - 1;
}

mpz_class pow(const mpz_class& base, int e)
{
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

mpz_class content(const IntPoly& p)
{
    mpz_class g = 0;
    for (const auto& c : p)
        g = gcd(g, c);
    return g;
}

void divide_exact(IntPoly& p, const mpz_class& d)
{
    for (auto& c : p)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// lc(b)^(deg a - deg b + 1) * a mod b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b)
{
    const mpz_class& lb = b.back();
    int e = deg(a) - deg(b) + 1;
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        const mpz_class la = a.back();
        for (auto& c : a)
            c *= lb;
        for (int i = 0; i <= deg(b); ++i)
            a[i + shift] -= la * b[i];
        trim(a);
        --e;
    }
    if (e > 0) {
        const mpz_class f = pow(lb, e);
        for (auto& c : a)
            c *= f;
    }
    return a;
}

}  // namespace

Complex LogComplex::value() const
{
    if (log_abs == -std::numeric_limits<double>::infinity())
        return {0.0, 0.0};
    // componentwise so that an overflowing modulus gives +-inf, not inf * 0
    const double c = std::cos(arg), s = std::sin(arg);
    return {c == 0.0 ? 0.0 : std::copysign(std::exp(log_abs + std::log(std::abs(c))), c),
            s == 0.0 ? 0.0 : std::copysign(std::exp(log_abs + std::log(std::abs(s))), s)};
}

std::optional<double> separation(const RootSet& rs)
{
    const double same = distinctness_scale(rs);
    std::optional<double> best;
    const auto& r = rs.roots;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            const double d = std::abs(r[i] - r[j]);
            if (d > same && (!best || d < *best))
                best = d;
        }
    return best;
}

std::optional<double> abs_separation(const RootSet& rs)
{
    std::vector<double> mod;
    mod.reserve(rs.size());
    for (const auto& r : rs.roots)
        mod.push_back(std::abs(r));
    std::optional<double> best;
    for (std::size_t i = 0; i < mod.size(); ++i)
        for (std::size_t j = i + 1; j < mod.size(); ++j) {
            const double gap = std::abs(mod[i] - mod[j]);
            if (gap > equal_modulus_tol * std::max(1.0, std::max(mod[i], mod[j])) && (!best || gap < *best))
                best = gap;
        }
    return best;
}

double log_mahler_measure(const RootSet& rs)
{
    double acc = 0.0;
    for (const auto& r : rs.roots)
        acc += std::log(std::max(1.0, std::abs(r)));
    return acc;
}

double mahler_measure(const RootSet& rs)
{
    if (static_cast<int>(rs.size()) > log_space_degree)
        return std::exp(log_mahler_measure(rs));
    double acc = 1.0;
    for (const auto& r : rs.roots)
        acc *= std::max(1.0, std::abs(r));
    return acc;
}

double mahler_cross_check(const Polynomial& p, int nodes)
{
    if (nodes < 1)
        throw std::invalid_argument("mahler_cross_check needs at least one node");
    const auto coeffs = p.coeffs();
    const Derivative d = derivative(p);
    const double step = 2.0 * std::numbers::pi / nodes;

    // A root on the circle makes log|p| singular at a node. For a root exactly
    // at node k, the other nodes contribute sum_{j != k} log|z_j - z_k| = log N,
    // so the node's value is replaced by log|p'(z_k)| - log N, which makes the
    // rule exact for that factor. Nodes within a quarter step (Newton distance)
    // get the same treatment.
    const double log_nodes = std::log(static_cast<double>(nodes));
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const Complex z = std::polar(1.0, k * step);
        const Complex value = horner(coeffs, z);
        const Complex slope = horner(d.coeffs, z);
        if (std::abs(value) <= 0.25 * step * std::abs(slope))
            sum += std::log(std::abs(slope)) - log_nodes;
        else
            sum += std::log(std::abs(value));
    }
    return std::exp(sum / nodes);
}

LogComplex log_discriminant_from_roots(const RootSet& rs)
{
    LogComplex out;
    const auto& r = rs.roots;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            const Complex diff = r[i] - r[j];
            if (diff == Complex(0.0, 0.0))
                return {-std::numeric_limits<double>::infinity(), 0.0};
            out.log_abs += 2.0 * std::log(std::abs(diff));
            out.arg = std::remainder(out.arg + 2.0 * std::arg(diff), 2.0 * std::numbers::pi);
        }
    return out;
}

Complex discriminant_from_roots(const RootSet& rs)
{
    if (static_cast<int>(rs.size()) > log_space_degree)
        return log_discriminant_from_roots(rs).value();
    Complex acc(1.0, 0.0);
    const auto& r = rs.roots;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            const Complex diff = r[i] - r[j];
            acc *= diff * diff;
        }
    return acc;
}

mpz_class resultant(IntPoly a, IntPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;

    int sign = 1;
    if (deg(a) < deg(b)) {
        std::swap(a, b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            sign = -sign;
    }
    if (deg(b) == 0)
        return sign * pow(b[0], deg(a));

    const mpz_class ca = content(a);
    const mpz_class cb = content(b);
    divide_exact(a, ca);
    divide_exact(b, cb);
    const mpz_class scale = pow(ca, deg(b)) * pow(cb, deg(a));

    mpz_class g = 1;
    mpz_class h = 1;
    while (true) {
        const int delta = deg(a) - deg(b);
        if (deg(a) % 2 == 1 && deg(b) % 2 == 1)
            sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        divide_exact(r, g * pow(h, delta));
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            mpz_class num = pow(g, delta);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), pow(h, delta - 1).get_mpz_t());
        }
        if (b.empty())
            return 0;
        if (deg(b) > 0)
            continue;
        const int da = deg(a);
        mpz_class num = pow(b[0], da);
        mpz_class last;
        mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), pow(h, da - 1).get_mpz_t());
        return sign * scale * last;
    }
}

mpz_class discriminant_exact(const Polynomial& p)
{
    if (!p.is_exact())
        throw std::invalid_argument("exact discriminant requires exact integer backing");
    const auto coeffs = p.exact_coeffs();
    const Derivative d = derivative(p);
    IntPoly f(coeffs.begin(), coeffs.end());
    const long n = p.degree();
    mpz_class res = resultant(std::move(f), d.exact);
    // Monic, so no division by the leading coefficient.
    return ((n * (n - 1) / 2) % 2 == 0) ? res : mpz_class(-res);
}

Signature signature_of(const RootSet& rs)
{
    const auto partner = conjugate_pairing(rs.roots, real_root_tol);
    if (partner.empty() && !rs.roots.empty())
        throw SignatureError("roots are not closed under conjugation within tolerance");
    Signature sig;
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] == i)
            ++sig.t;
        else if (i < partner[i])
            ++sig.s;
    }
    return sig;
}

MeasureReport measure(const RootSet& rs, const Polynomial* p)
{
    MeasureReport m;
    m.n = static_cast<int>(rs.size());
    m.sep = separation(rs);
    m.abs_sep = abs_separation(rs);
    m.log_mahler = log_mahler_measure(rs);
    m.mahler = mahler_measure(rs);
    if (p != nullptr && p->is_exact()) {
        m.exact_disc = discriminant_exact(*p);
        m.disc = Complex(to_double(*m.exact_disc), 0.0);
        m.log_abs_disc = log_abs(*m.exact_disc);
    } else {
        const LogComplex ld = log_discriminant_from_roots(rs);
        m.disc = discriminant_from_roots(rs);
        m.log_abs_disc = ld.log_abs;
    }
    if (p != nullptr)
        m.height = height(*p);
    const bool real_origin = p != nullptr ? p->has_real_coefficients() : is_conjugation_closed(rs.roots);
    if (real_origin)
        m.signature = signature_of(rs);
    return m;
}

}  // namespace msep
