#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mahlersep/bounds.hpp"
#include "mahlersep/families.hpp"
#include "mahlersep/measures.hpp"
#include "mahlersep/rootfind.hpp"
#include "oracles.hpp"

using namespace msep;

namespace {

bool contains(const std::vector<Complex>& v, Complex z)
{
    for (const auto& w : v)
        if (std::abs(w - z) < 1e-12)
            return true;
    return false;
}

}  // namespace

TEST_CASE("lattice enumeration matches brute force")
{
    CHECK(gaussian_points(std::sqrt(2.0)).size() == 9);
    CHECK(gaussian_points(1.0).size() == 5);
    CHECK(gaussian_points(0.0).size() == 1);
    CHECK(gaussian_points(0.999).size() == 1);
    for (long long r = 0; r <= 30; ++r)
        CHECK(static_cast<long long>(gaussian_points(static_cast<double>(r)).size())
              == oracle::brute_gaussian_count(r * r));
    for (long long r2 = 0; r2 <= 400; ++r2) {
        const double radius = std::sqrt(static_cast<double>(r2));
        CHECK(static_cast<long long>(gaussian_points(radius).size()) == oracle::brute_gaussian_count(radius));
    }
    // 7.3 is not exact in binary64, so the two oracles differ only if a point sits on the circle
    CHECK(static_cast<long long>(gaussian_points(7.3).size()) == oracle::brute_gaussian_count(5329, 100));
}

TEST_CASE("lattice order is modulus then argument")
{
    const auto pts = gaussian_points(1.0);
    const std::vector<GaussianPoint> want{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(pts == want);
    const auto more = gaussian_points(3.0);
    for (std::size_t i = 1; i < more.size(); ++i) {
        CHECK(more[i - 1].norm() <= more[i].norm());
        if (more[i - 1].norm() == more[i].norm()) {
            auto arg = [](const GaussianPoint& p) {
                const double a = std::atan2(static_cast<double>(p.im), static_cast<double>(p.re));
                return a < 0 ? a + 2 * std::numbers::pi : a;
            };
            CHECK(arg(more[i - 1]) < arg(more[i]));
        }
    }
}

TEST_CASE("Gauss sandwich")
{
    for (double r : {1.5, 2.0, 5.0, 10.0, 20.0, 50.0}) {
        const double g = static_cast<double>(gaussian_points(r).size());
        CHECK(std::numbers::pi * std::pow(r - std::sqrt(2.0), 2) <= g);
        CHECK(g <= std::numbers::pi * std::pow(r + std::sqrt(2.0), 2));
    }
}

TEST_CASE("Gaussian family examples")
{
    const auto f2 = gaussian_family(2, 1);
    CHECK(f2.roots.roots == std::vector<Complex>{{0, 0}, {1, 0}});
    const auto r2 = sharpness_ratio(f2);
    CHECK(r2.sep == 1);
    CHECK(r2.mahler == 1);

    const auto f5 = gaussian_family(5, 1);
    CHECK(f5.roots.roots == std::vector<Complex>{{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}});

    const auto r5 = sharpness_ratio(FamilySpec{FamilyKind::gaussian, 5, 3});
    CHECK(r5.sep == 3);
    CHECK(r5.mahler == doctest::Approx(81));
    CHECK(r5.ratio == doctest::Approx(3 * 1.6 * std::sqrt(5.0) / 3));
    CHECK(r5.ratio >= 1);

    CHECK(sharpness_ratio(FamilySpec{FamilyKind::gaussian, 100, 1}).ratio >= 1);
    CHECK_THROWS_AS(gaussian_family(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_family(5, 0.5), std::invalid_argument);
}

TEST_CASE("conjugate-closed family examples")
{
    const auto f2 = conjugate_closed_family(2, 1);
    CHECK(contains(f2.roots.roots, {0, 1}));
    CHECK(contains(f2.roots.roots, {0, -1}));
    const auto r2 = sharpness_ratio(f2);
    CHECK(r2.sep == 2);
    CHECK(r2.mahler == 1);
    const auto p2 = f2.polynomial();
    REQUIRE(p2.is_exact());
    CHECK(p2.exact_coeffs()[0] == 1);
    CHECK(p2.exact_coeffs()[1] == 0);

    const auto f4 = conjugate_closed_family(4, 1);
    for (Complex z : {Complex(0, 1), Complex(0, -1), Complex(1, 0), Complex(-1, 0)})
        CHECK(contains(f4.roots.roots, z));
    CHECK(sharpness_ratio(f4).sep == doctest::Approx(std::sqrt(2.0)));

    const auto r4 = sharpness_ratio(FamilySpec{FamilyKind::conjugate_closed, 4, 2});
    CHECK(r4.mahler == doctest::Approx(16));
    CHECK(r4.sep == doctest::Approx(2 * std::sqrt(2.0)));
    CHECK(r4.ratio == doctest::Approx(2 * std::sqrt(2.0) * 1.7 * 2 / 2));
}

TEST_CASE("conjugate-closed family invariants")
{
    for (int n = 2; n <= 120; ++n) {
        CAPTURE(n);
        const auto f = conjugate_closed_family(n, 1);
        REQUIRE(f.roots.size() == static_cast<std::size_t>(n));
        CHECK(is_conjugation_closed(f.roots.roots, 0.0));
        CHECK_FALSE(contains(f.roots.roots, {0, 0}));
        // a nonreal root of minimal modulus
        double min_mod = 1e300;
        for (const auto& z : f.roots.roots)
            min_mod = std::min(min_mod, std::abs(z));
        CHECK(min_mod == 1.0);
        CHECK(applicable_exponent_case(f.roots) == ExponentCase::nonreal_min);
        const double radius = std::sqrt((n + 1) / std::numbers::pi) + std::sqrt(2.0);
        for (const auto& z : f.roots.roots)
            CHECK(std::abs(z) <= radius);
        CHECK(f.polynomial().has_real_coefficients());
    }
}

TEST_CASE("Gaussian family invariants")
{
    for (int n = 2; n <= 120; ++n) {
        const auto f = gaussian_family(n, 2);
        CHECK(f.roots.roots[0] == Complex(0, 0));
        CHECK(certify_separable(f.roots).separable);
        const double radius = 2 * (std::sqrt(n / std::numbers::pi) + std::sqrt(2.0));
        for (const auto& z : f.roots.roots)
            CHECK(std::abs(z) <= radius);
    }
}

TEST_CASE("arithmetic progression family examples")
{
    const auto f5 = arithmetic_progression_family(5, 1);
    CHECK(f5.roots.size() == 5);
    for (int j = -2; j <= 2; ++j)
        CHECK(contains(f5.roots.roots, {static_cast<double>(j), 0}));
    CHECK(sharpness_ratio(f5).mahler == 4);
    CHECK(sharpness_ratio(f5).sep == 1);

    const auto f4 = arithmetic_progression_family(4, 1);
    for (int j = -1; j <= 2; ++j)
        CHECK(contains(f4.roots.roots, {static_cast<double>(j), 0}));
    CHECK(sharpness_ratio(f4).mahler == 2);

    const auto r52 = sharpness_ratio(FamilySpec{FamilyKind::arithmetic_progression, 5, 2});
    CHECK(r52.sep == 2);
    CHECK(r52.mahler == 64);

    CHECK_THROWS_AS(arithmetic_progression_family(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(arithmetic_progression_family(5, 0.5), std::invalid_argument);
}

TEST_CASE("arithmetic progression ratio against a log-factorial oracle")
{
    const auto r = sharpness_ratio(FamilySpec{FamilyKind::arithmetic_progression, 201, 1});
    const double want = std::exp(std::log(201.0) - static_cast<double>(oracle::log_factorial(100)) / 100);
    CHECK(r.ratio == doctest::Approx(want).epsilon(1e-12));
    CHECK(r.ratio == doctest::Approx(5.2905).epsilon(1e-4));

    // independent of r
    for (double step : {1.0, 2.5, 7.0})
        CHECK(sharpness_ratio(FamilySpec{FamilyKind::arithmetic_progression, 21, step}).ratio
              == doctest::Approx(sharpness_ratio(FamilySpec{FamilyKind::arithmetic_progression, 21, 1}).ratio));
}

TEST_CASE("quartic family")
{
    for (double t : {1 / std::sqrt(2.0), 1.0, 3.0, 5.0}) {
        CAPTURE(t);
        const auto r = sharpness_ratio(quartic_family(t));
        CHECK(r.sep == doctest::Approx(2 * t));
        CHECK(r.mahler == doctest::Approx(4 * std::pow(t, 4)));
        CHECK(std::abs(r.ratio - 1) <= 1e-12);
    }
    const auto r5 = sharpness_ratio(quartic_family(5));
    CHECK(r5.sep == doctest::Approx(10));
    CHECK(r5.mahler == doctest::Approx(2500));
    CHECK_THROWS_AS(quartic_family(0.7), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilySpec{FamilyKind::quartic, 5, 1}), std::invalid_argument);
}

TEST_CASE("cubic extremal")
{
    const auto f = cubic_extremal();
    const auto r = sharpness_ratio(f);
    CHECK(r.sep == doctest::Approx(std::sqrt(3.0)));
    CHECK(r.mahler == doctest::Approx(1));
    CHECK(std::abs(r.ratio - 1) <= 1e-12);
    CHECK(signature_of(f.roots) == Signature{1, 1});
    const auto p = f.polynomial();
    REQUIRE(p.is_exact());
    CHECK(discriminant_exact(p) == -27);
}

TEST_CASE("every family instance passes check_all")
{
    for (int n = 2; n <= 60; n += 3)
        for (double t : {1.0, 4.0}) {
            CAPTURE(n);
            CAPTURE(t);
            CHECK(check_all(gaussian_family(n, t).roots).all_satisfied());
            CHECK(check_all(conjugate_closed_family(n, t).roots).all_satisfied());
            if (n >= 4)
                CHECK(check_all(arithmetic_progression_family(n, t).roots).all_satisfied());
        }
    for (double t : {0.75, 1.0, 2.0, 9.0}) {
        const auto q = quartic_family(t);
        const auto report = check_all(q.roots);
        CHECK(report.all_satisfied());
        // improved <= main(nonreal_min) <= trivial
        const double improved = report.find("improved_upper")->value;
        const double main = report.find("main_upper")->value;
        CHECK(report.find("main_upper")->detail == "nonreal_min");
        CHECK(improved <= main);
        CHECK(main <= report.find("trivial_upper")->value);
    }
    CHECK(check_all(cubic_extremal().roots).all_satisfied());
}

TEST_CASE("kind names round-trip")
{
    for (auto k : {FamilyKind::gaussian, FamilyKind::conjugate_closed, FamilyKind::arithmetic_progression,
                   FamilyKind::quartic, FamilyKind::cubic_extremal})
        CHECK(family_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(family_kind_from_string("hexagonal"), std::invalid_argument);
}
