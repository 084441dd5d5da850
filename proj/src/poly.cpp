#include "mahlersep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace msep {

namespace {

constexpr double max_exact_integer = 9007199254740992.0;  // 2^53

bool is_integral(Complex c)
{
    return c.imag() == 0.0 && std::isfinite(c.real()) && std::abs(c.real()) <= max_exact_integer
           && std::trunc(c.real()) == c.real();
}

bool is_gaussian_integer(Complex c, double limit)
{
    return std::trunc(c.real()) == c.real() && std::trunc(c.imag()) == c.imag()
           && std::abs(c.real()) <= limit && std::abs(c.imag()) <= limit;
}

void require_shape(std::size_t length)
{
    if (length < 2)
        throw std::invalid_argument("polynomial needs at least two coefficients (degree >= 1)");
}

struct GaussianInt {
    mpz_class re;
    mpz_class im;
};

}  // namespace

Polynomial Polynomial::from_integer_coefficients(std::span<const mpz_class> coeffs)
{
    require_shape(coeffs.size());
    const mpz_class& lead = coeffs.back();
    if (lead == 0)
        throw std::invalid_argument("leading coefficient is zero");

    Polynomial p;
    p.leading_scale_ = Complex(to_double(lead), 0.0);
    p.coeffs_.resize(coeffs.size());
    if (abs(lead) == 1) {
        p.exact_.reserve(coeffs.size());
        for (const auto& c : coeffs)
            p.exact_.push_back(c * lead);  // lead is its own inverse
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            p.coeffs_[i] = Complex(to_double(p.exact_[i]), 0.0);
    } else {
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            mpq_class q(coeffs[i], lead);
            q.canonicalize();
            p.coeffs_[i] = Complex(q.get_d(), 0.0);
        }
    }
    p.coeffs_.back() = Complex(1.0, 0.0);
    return p;
}

Polynomial Polynomial::from_coefficients(std::span<const Complex> coeffs)
{
    require_shape(coeffs.size());
    const Complex lead = coeffs.back();
    if (lead == Complex(0.0, 0.0))
        throw std::invalid_argument("leading coefficient is zero");
    for (const auto& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("coefficients must be finite");

    if (std::all_of(coeffs.begin(), coeffs.end(), is_integral)) {
        std::vector<mpz_class> ints;
        ints.reserve(coeffs.size());
        for (const auto& c : coeffs)
            ints.emplace_back(c.real());
        return from_integer_coefficients(ints);
    }

    Polynomial p;
    p.leading_scale_ = lead;
    p.coeffs_.reserve(coeffs.size());
    for (const auto& c : coeffs)
        p.coeffs_.push_back(c / lead);
    p.coeffs_.back() = Complex(1.0, 0.0);
    return p;
}

Polynomial Polynomial::from_coefficients(std::span<const double> coeffs)
{
    std::vector<Complex> cs(coeffs.begin(), coeffs.end());
    return from_coefficients(cs);
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots)
{
    if (roots.empty())
        throw std::invalid_argument("from_roots needs at least one root");

    const bool closed = is_conjugation_closed(roots);

    // Conjugation-closed Gaussian-integer roots give integer coefficients.
    constexpr double gaussian_limit = 1 << 20;
    if (closed && std::all_of(roots.begin(), roots.end(),
                              [](Complex r) { return is_gaussian_integer(r, gaussian_limit); })) {
        std::vector<GaussianInt> c(1);
        c[0].re = 1;
        c[0].im = 0;
        for (const auto& root : roots) {
            const mpz_class ar(root.real());
            const mpz_class ai(root.imag());
            std::vector<GaussianInt> next(c.size() + 1);
            for (auto& g : next) {
                g.re = 0;
                g.im = 0;
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1].re += c[i].re;
                next[i + 1].im += c[i].im;
                next[i].re -= ar * c[i].re - ai * c[i].im;
                next[i].im -= ar * c[i].im + ai * c[i].re;
            }
            c = std::move(next);
        }
        std::vector<mpz_class> ints;
        ints.reserve(c.size());
        for (const auto& g : c)
            ints.push_back(g.re);
        return from_integer_coefficients(ints);
    }

    std::vector<Complex> c{Complex(1.0, 0.0)};
    for (const auto& root : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= root * c[i];
        }
        c = std::move(next);
    }
    if (closed)
        for (auto& coeff : c)
            coeff = Complex(coeff.real(), 0.0);

    Polynomial p;
    p.coeffs_ = std::move(c);
    p.coeffs_.back() = Complex(1.0, 0.0);
    return p;
}

bool Polynomial::has_real_coefficients() const
{
    return is_exact()
           || std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c.imag() == 0.0; });
}

RootSet RootSet::exact(std::vector<Complex> roots)
{
    RootSet rs;
    rs.residual_bound.assign(roots.size(), 0.0);
    rs.roots = std::move(roots);
    rs.source = RootSource::exact_construction;
    return rs;
}

Complex horner(std::span<const Complex> coeffs, Complex z)
{
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Complex evaluate(const Polynomial& p, Complex z)
{
    if (p.is_exact() && is_gaussian_integer(z, max_exact_integer)) {
        const mpz_class zr(z.real());
        const mpz_class zi(z.imag());
        mpz_class re = 0;
        mpz_class im = 0;
        const auto exact = p.exact_coeffs();
        for (auto it = exact.rbegin(); it != exact.rend(); ++it) {
            mpz_class nr = re * zr - im * zi + *it;
            mpz_class ni = re * zi + im * zr;
            re = std::move(nr);
            im = std::move(ni);
        }
        return {to_double(re), to_double(im)};
    }
    return horner(p.coeffs(), z);
}

Complex evaluate(const Derivative& d, Complex z)
{
    return horner(d.coeffs, z);
}

mpq_class evaluate_exact(const Polynomial& p, const mpq_class& x)
{
    if (!p.is_exact())
        throw std::invalid_argument("exact evaluation requires exact integer backing");
    mpq_class acc = 0;
    const auto exact = p.exact_coeffs();
    for (auto it = exact.rbegin(); it != exact.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Derivative derivative(const Polynomial& p)
{
    Derivative d;
    const int n = p.degree();
    const auto c = p.coeffs();
    d.coeffs.reserve(n);
    for (int i = 1; i <= n; ++i)
        d.coeffs.push_back(static_cast<double>(i) * c[i]);
    if (p.is_exact()) {
        const auto e = p.exact_coeffs();
        d.exact.reserve(n);
        for (int i = 1; i <= n; ++i)
            d.exact.push_back(e[i] * i);
    }
    return d;
}

double height(const Polynomial& p)
{
    if (p.is_exact()) {
        mpz_class best = 0;
        for (const auto& c : p.exact_coeffs())
            if (abs(c) > best)
                best = abs(c);
        return to_double(best);
    }
    double best = 0.0;
    for (const auto& c : p.coeffs())
        best = std::max(best, std::abs(c));
    return best;
}

std::vector<std::size_t> conjugate_pairing(std::span<const Complex> roots, double tol)
{
    constexpr auto unmatched = std::numeric_limits<std::size_t>::max();
    const std::size_t n = roots.size();
    std::vector<std::size_t> partner(n, unmatched);
    auto scale = [&](std::size_t i) { return tol * std::max(1.0, std::abs(roots[i])); };

    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(roots[i].imag()) <= scale(i))
            partner[i] = i;

    for (std::size_t i = 0; i < n; ++i) {
        if (partner[i] != unmatched)
            continue;
        std::size_t best = unmatched;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || partner[j] != unmatched)
                continue;
            const double d = std::abs(roots[i] - std::conj(roots[j]));
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best == unmatched || best_dist > scale(i))
            return {};
        partner[i] = best;
        partner[best] = i;
    }
    return partner;
}

bool is_conjugation_closed(std::span<const Complex> roots, double tol)
{
    return roots.empty() || !conjugate_pairing(roots, tol).empty();
}

mpz_class parse_integer(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (!s.empty() && s.front() == '+')
        s.erase(s.begin());
    if (s.empty() || s == "-")
        throw std::invalid_argument("not an integer literal: '" + text + "'");
    const std::size_t digits_from = s.front() == '-' ? 1 : 0;
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer literal: '" + text + "'");
    return mpz_class(s, 10);
}

double to_double(const mpz_class& value)
{
    // mpz_get_d truncates (relative error below 2^-53) and is undefined past
    // the double range, so saturate first.
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > static_cast<std::size_t>(std::numeric_limits<double>::max_exponent))
        return value > 0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
    return value.get_d();
}

double log_abs(const mpz_class& value)
{
    if (value == 0)
        return -std::numeric_limits<double>::infinity();
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
    return std::log(std::abs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace msep
