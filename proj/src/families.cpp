#include "mahlersep/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

#include "mahlersep/measures.hpp"
#include "mahlersep/rootfind.hpp"

namespace msep {

namespace {

const double quartic_threshold = 1.0 / std::sqrt(2.0);

// Exact test of norm <= radius^2 via an error-free product.
bool within(long long norm, double radius)
{
    const double hi = radius * radius;
    const double lo = std::fma(radius, radius, -hi);
    const double nd = static_cast<double>(norm);
    if (nd != hi)
        return nd < hi;
    return lo >= 0.0;
}

// 0 for arguments in [0, pi), 1 for [pi, 2 pi).
int half_plane(const GaussianPoint& p)
{
    return (p.im > 0 || (p.im == 0 && p.re > 0)) ? 0 : 1;
}

bool canonical_less(const GaussianPoint& a, const GaussianPoint& b)
{
    if (a.norm() != b.norm())
        return a.norm() < b.norm();
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb)
        return ha < hb;
    return a.re * b.im - a.im * b.re > 0;
}

std::vector<Complex> scaled(const std::vector<GaussianPoint>& points, double t)
{
    std::vector<Complex> out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(t * p.value());
    return out;
}

void require_scale(double t, double minimum, const char* what)
{
    if (!(t >= minimum) || !std::isfinite(t))
        throw std::invalid_argument(std::string(what) + " must be finite and at least " + std::to_string(minimum));
}

}  // namespace

void FamilySpec::validate() const
{
    if (n < 2)
        throw std::invalid_argument("family degree must be at least 2");
    switch (kind) {
    case FamilyKind::quartic:
        if (n != 4)
            throw std::invalid_argument("quartic family has degree 4");
        require_scale(scale, quartic_threshold * (1.0 - 4 * std::numeric_limits<double>::epsilon()), "quartic t");
        break;
    case FamilyKind::cubic_extremal:
        if (n != 3)
            throw std::invalid_argument("cubic extremal polynomial has degree 3");
        break;
    case FamilyKind::arithmetic_progression:
        if (n < 4)
            throw std::invalid_argument("arithmetic progression family needs n >= 4");
        require_scale(scale, 1.0, "progression step r");
        break;
    case FamilyKind::gaussian:
    case FamilyKind::conjugate_closed:
        require_scale(scale, 1.0, "scale t");
        break;
    }
}

std::vector<GaussianPoint> gaussian_points(double radius)
{
    if (!(radius >= 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("lattice radius must be finite and non-negative");
    const auto bound = static_cast<long long>(std::floor(radius));
    std::vector<GaussianPoint> points;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b) {
            const GaussianPoint p{a, b};
            if (within(p.norm(), radius))
                points.push_back(p);
        }
    std::sort(points.begin(), points.end(), canonical_less);
    return points;
}

FamilyInstance gaussian_family(int n, double t)
{
    const FamilySpec spec{FamilyKind::gaussian, n, t};
    spec.validate();
    const double radius = std::sqrt(n / std::numbers::pi) + std::numbers::sqrt2;
    auto points = gaussian_points(radius);
    if (static_cast<int>(points.size()) < n)
        throw std::logic_error("fewer lattice points than the Gauss bound guarantees");
    points.resize(n);
    return {spec, RootSet::exact(scaled(points, t)), std::nullopt};
}

FamilyInstance conjugate_closed_family(int n, double t)
{
    const FamilySpec spec{FamilyKind::conjugate_closed, n, t};
    spec.validate();
    const double radius = std::sqrt((n + 1) / std::numbers::pi) + std::numbers::sqrt2;
    const auto candidates = gaussian_points(radius);

    std::set<std::pair<long long, long long>> taken{{0, 1}, {0, -1}};
    int remaining = n - 2;
    for (const auto& p : candidates) {
        if (remaining == 0)
            break;
        if (p.norm() == 0 || taken.count({p.re, p.im}))
            continue;
        if (p.im == 0) {
            taken.insert({p.re, p.im});
            --remaining;
        } else if (remaining >= 2) {
            taken.insert({p.re, p.im});
            taken.insert({p.re, -p.im});
            remaining -= 2;
        }
        // One slot left and p is nonreal: keep walking to the next real point.
    }
    if (remaining != 0)
        throw std::logic_error("cannot fill a conjugation-closed set within the lattice radius");

    std::vector<GaussianPoint> chosen;
    chosen.reserve(n);
    for (const auto& [re, im] : taken)
        chosen.push_back({re, im});
    std::sort(chosen.begin(), chosen.end(), canonical_less);
    return {spec, RootSet::exact(scaled(chosen, t)), std::nullopt};
}

FamilyInstance arithmetic_progression_family(int n, double r)
{
    const FamilySpec spec{FamilyKind::arithmetic_progression, n, r};
    spec.validate();
    const int m = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
    const int last = n % 2 == 1 ? m : m + 1;
    std::vector<Complex> roots;
    roots.reserve(n);
    for (int j = -m; j <= last; ++j)
        roots.emplace_back(j * r, 0.0);
    RootSet rs = RootSet::exact(std::move(roots));
    sort_roots(rs);
    return {spec, std::move(rs), std::nullopt};
}

FamilyInstance quartic_family(double t)
{
    const FamilySpec spec{FamilyKind::quartic, 4, t};
    spec.validate();
    RootSet rs = RootSet::exact({{t, t}, {-t, t}, {-t, -t}, {t, -t}});
    sort_roots(rs);
    return {spec, std::move(rs), std::nullopt};
}

FamilyInstance cubic_extremal()
{
    const FamilySpec spec{FamilyKind::cubic_extremal, 3, 1.0};
    const double h = std::sqrt(3.0) / 2.0;
    RootSet rs = RootSet::exact({{1.0, 0.0}, {-0.5, h}, {-0.5, -h}});
    sort_roots(rs);
    // x^3 - 1
    return {spec, std::move(rs), std::vector<mpz_class>{-1, 0, 0, 1}};
}

FamilyInstance build_family(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::gaussian:
        return gaussian_family(spec.n, spec.scale);
    case FamilyKind::conjugate_closed:
        return conjugate_closed_family(spec.n, spec.scale);
    case FamilyKind::arithmetic_progression:
        return arithmetic_progression_family(spec.n, spec.scale);
    case FamilyKind::quartic:
        spec.validate();
        return quartic_family(spec.scale);
    case FamilyKind::cubic_extremal:
        spec.validate();
        return cubic_extremal();
    }
    throw std::invalid_argument("unknown family kind");
}

SharpnessRecord sharpness_ratio(const FamilyInstance& family)
{
    SharpnessRecord rec;
    rec.family = family.spec;
    rec.n = static_cast<int>(family.roots.size());
    rec.sep = separation(family.roots).value();
    rec.log_mahler = log_mahler_measure(family.roots);
    rec.mahler = mahler_measure(family.roots);

    const double n = rec.n;
    const double lm = rec.log_mahler;
    switch (family.spec.kind) {
    case FamilyKind::gaussian:
        rec.ratio = rec.sep * 1.6 * std::sqrt(n) / std::exp(lm / (n - 1));
        break;
    case FamilyKind::conjugate_closed:
        rec.ratio = rec.sep * 1.7 * std::sqrt(n) / std::exp(lm / n);
        break;
    case FamilyKind::arithmetic_progression:
        rec.ratio = n * rec.sep / std::exp(lm / (n - 1));
        break;
    case FamilyKind::quartic:
        rec.ratio = rec.sep / (std::sqrt(2.0) * std::exp(lm / 4.0));
        break;
    case FamilyKind::cubic_extremal:
        rec.ratio = rec.sep / (std::sqrt(3.0) * std::exp(lm / 2.0));
        break;
    }
    return rec;
}

SharpnessRecord sharpness_ratio(const FamilySpec& spec)
{
    return sharpness_ratio(build_family(spec));
}

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::gaussian:
        return "gaussian";
    case FamilyKind::conjugate_closed:
        return "conjugate_closed";
    case FamilyKind::arithmetic_progression:
        return "arithmetic_progression";
    case FamilyKind::quartic:
        return "quartic";
    case FamilyKind::cubic_extremal:
        return "cubic_extremal";
    }
    return "unknown";
}

FamilyKind family_kind_from_string(const std::string& name)
{
    for (auto kind : {FamilyKind::gaussian, FamilyKind::conjugate_closed, FamilyKind::arithmetic_progression,
                      FamilyKind::quartic, FamilyKind::cubic_extremal})
        if (to_string(kind) == name)
            return kind;
    throw std::invalid_argument("unknown family kind '" + name + "'");
}

}  // namespace msep
