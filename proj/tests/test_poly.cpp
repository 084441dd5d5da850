#include <doctest.h>

#include <cmath>
#include <random>

#include "mahlersep/poly.hpp"
#include "oracles.hpp"

using namespace msep;

namespace {

Polynomial ints(std::vector<mpz_class> c) { return Polynomial::from_integer_coefficients(c); }

}  // namespace

TEST_CASE("integer input keeps exact backing")
{
    const auto p = ints({-1, 0, 0, 1});
    CHECK(p.degree() == 3);
    CHECK(p.is_exact());
    CHECK(p.has_real_coefficients());

    const std::vector<double> d{-1.0, 0.0, 0.0, 1.0};
    CHECK(Polynomial::from_coefficients(d).is_exact());

    const std::vector<double> half{-1.0, 0.5, 1.0};
    CHECK_FALSE(Polynomial::from_coefficients(half).is_exact());
}

TEST_CASE("non-monic input is normalized")
{
    const std::vector<double> c{-6.0, 0.0, 3.0};  // 3x^2 - 6
    const auto p = Polynomial::from_coefficients(c);
    CHECK(p.coeffs()[2] == Complex(1.0, 0.0));
    CHECK(p.coeffs()[0].real() == doctest::Approx(-2.0));
    CHECK(p.leading_scale().real() == 3.0);

    const auto neg = ints({1, 0, -1});  // -x^2 + 1, leading -1 stays exact
    REQUIRE(neg.is_exact());
    CHECK(neg.exact_coeffs()[0] == -1);
    CHECK(neg.exact_coeffs()[2] == 1);
}

TEST_CASE("zero leading coefficient is rejected")
{
    CHECK_THROWS_AS(ints({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ints({}), std::invalid_argument);
}

TEST_CASE("evaluate examples")
{
    CHECK(std::abs(evaluate(ints({-1, 0, 0, 1}), {1.0, 0.0})) == 0.0);
    CHECK(evaluate(ints({1, 0, 1}), {2.0, 0.0}) == Complex(5.0, 0.0));
    // (1+i)^4 = -4
    CHECK(std::abs(evaluate(ints({4, 0, 0, 0, 1}), {1.0, 1.0})) == 0.0);
    CHECK(evaluate_exact(ints({4, 0, 0, 0, 1}), mpq_class(1, 2)) == mpq_class(65, 16));
}

TEST_CASE("evaluate_exact agrees with a rational Horner oracle")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_monic(rng, 2 + trial % 9, 20);
        const mpq_class x(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
        CHECK(evaluate_exact(ints(c), x) == oracle::horner_exact(c, x));
    }
}

TEST_CASE("derivative examples")
{
    const auto d = derivative(ints({-1, 0, 0, 1}));
    REQUIRE(d.degree() == 2);
    CHECK(d.exact[2] == 3);
    CHECK(d.exact[1] == 0);
    CHECK(d.exact[0] == 0);

    const auto d2 = derivative(ints({1, 2, 1}));
    CHECK(d2.coeffs == std::vector<Complex>{{2, 0}, {2, 0}});

    const auto d3 = derivative(ints({0, 1}));
    CHECK(d3.degree() == 0);
    CHECK(d3.coeffs[0] == Complex(1, 0));
}

TEST_CASE("height examples")
{
    CHECK(height(ints({-1, 0, 0, 1})) == 1.0);
    CHECK(height(ints({1, 2, 1})) == 2.0);
    CHECK(height(ints({4, 0, 0, 0, 1})) == 4.0);
}

TEST_CASE("from_roots expands x^4 + 4 exactly")
{
    const std::vector<Complex> r{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    const auto p = Polynomial::from_roots(r);
    REQUIRE(p.is_exact());
    const std::vector<mpz_class> want{4, 0, 0, 0, 1};
    CHECK(std::vector<mpz_class>(p.exact_coeffs().begin(), p.exact_coeffs().end()) == want);
}

TEST_CASE("from_roots of a conjugation-closed set has zero imaginary parts")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Complex> r;
        const int pairs = 1 + trial % 8;
        for (int k = 0; k < pairs; ++k) {
            const Complex z(u(rng), u(rng));
            r.push_back(z);
            r.push_back(std::conj(z));
        }
        if (trial % 2)
            r.emplace_back(u(rng), 0.0);
        const auto p = Polynomial::from_roots(r);
        for (const auto& c : p.coeffs())
            CHECK(c.imag() == 0.0);
        CHECK(p.has_real_coefficients());
    }
}

TEST_CASE("from_roots matches a long double expansion and vanishes at its roots")
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 30; ++n) {
        std::vector<Complex> r;
        std::vector<oracle::Cld> rl;
        for (int k = 0; k < n; ++k) {
            Complex z(10 * u(rng), 10 * u(rng));
            while (std::abs(z) > 10)
                z *= 0.5;
            r.push_back(z);
            rl.emplace_back(z.real(), z.imag());
        }
        const auto p = Polynomial::from_roots(r);
        const auto ref = oracle::expand(rl);
        double rmax = 1.0;
        for (const auto& z : r)
            rmax = std::max(rmax, std::abs(z));
        const double scale = std::pow(rmax, n);
        for (int i = 0; i <= n; ++i)
            CHECK(std::abs(p.coeffs()[i] - Complex(ref[i])) <= 1e-12 * scale);
        for (const auto& z : r)
            CHECK(std::abs(evaluate(p, z)) <= 1e-10 * scale);
    }
}

TEST_CASE("conjugate pairing")
{
    const std::vector<Complex> closed{{1, 2}, {3, 0}, {1, -2}};
    CHECK(is_conjugation_closed(closed));
    const auto pair = conjugate_pairing(closed);
    CHECK(pair[0] == 2);
    CHECK(pair[1] == 1);
    CHECK(pair[2] == 0);

    const std::vector<Complex> open{{1, 2}, {1, -2.1}};
    CHECK_FALSE(is_conjugation_closed(open));
    const std::vector<Complex> noisy{{1, 2}, {1, -2 - 1e-12}};
    CHECK(is_conjugation_closed(noisy));
}

TEST_CASE("integer parsing and conversions")
{
    CHECK(parse_integer("123456789012345678901234567890") == mpz_class("123456789012345678901234567890"));
    CHECK(parse_integer(" -17 ") == -17);
    CHECK_THROWS_AS(parse_integer("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);

    CHECK(to_double(mpz_class(-42)) == -42.0);
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
    CHECK(std::isinf(to_double(huge)));
    CHECK(log_abs(huge) == doctest::Approx(400 * std::log(10.0)));
    CHECK(log_abs(mpz_class(-1)) == 0.0);
}
