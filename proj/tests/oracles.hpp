// Independent reference computations used only by the tests. Nothing here
// calls into the library's numeric code.
#ifndef MAHLERSEP_TESTS_ORACLES_HPP
#define MAHLERSEP_TESTS_ORACLES_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Cld = std::complex<long double>;

// Fraction-free Gaussian elimination. Destroys `m`.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m);

// Sylvester matrix of a (deg m) and b (deg n), coefficients constant-first.
std::vector<std::vector<mpz_class>> sylvester(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b);

// (-1)^(n(n-1)/2) det Syl(f, f') for monic integer f.
mpz_class sylvester_discriminant(const std::vector<mpz_class>& f);

// prod_{i<j} (r_i - r_j)^2 in long double.
Cld root_product_discriminant(const std::vector<Cld>& roots);

// Count of a+bi with a^2+b^2 <= r2 by scanning the bounding box.
long long brute_gaussian_count(long long r2_num, long long r2_den = 1);
// Same, against the exact square of a binary64 radius.
long long brute_gaussian_count(double radius);

double bisect(const std::function<double(double)>& f, double lo, double hi, int iterations = 200);

// Expand prod (x - r) with long double complex arithmetic.
std::vector<Cld> expand(const std::vector<Cld>& roots);

// Horner on integer coefficients at a rational point, exact.
mpq_class horner_exact(const std::vector<mpz_class>& c, const mpq_class& x);

// log(k!) by direct summation in long double.
long double log_factorial(int k);

inline const std::vector<mpz_class>& lehmer()
{
    static const std::vector<mpz_class> c{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    return c;
}

// Random monic integer polynomial with coefficients in [-h, h].
std::vector<mpz_class> random_monic(std::mt19937_64& rng, int n, int h);

}  // namespace oracle

#endif
