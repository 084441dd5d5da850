#ifndef MAHLERSEP_MEASURES_HPP
#define MAHLERSEP_MEASURES_HPP

#include <optional>
#include <stdexcept>

#include "mahlersep/poly.hpp"

namespace msep {

/// t real roots and s complex-conjugate pairs; t + 2s is the degree.
struct Signature {
    int t = 0;
    int s = 0;

    int degree() const { return t + 2 * s; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Root pairing failed: the roots are not conjugation-closed within tolerance.
class SignatureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Logarithmic form of a complex number, for products that overflow binary64.
struct LogComplex {
    double log_abs = 0.0;  // -inf for zero
    double arg = 0.0;

    Complex value() const;
};

struct MeasureReport {
    int n = 0;
    std::optional<double> sep;
    std::optional<double> abs_sep;
    double mahler = 1.0;
    double log_mahler = 0.0;
    Complex disc;
    double log_abs_disc = 0.0;
    std::optional<mpz_class> exact_disc;
    std::optional<double> height;  // only when coefficients are known
    std::optional<Signature> signature;
};

/// Minimum distance between distinct roots; nullopt if all roots coincide.
std::optional<double> separation(const RootSet& rs);

/// Minimum positive gap between root moduli; nullopt if all moduli agree.
std::optional<double> abs_separation(const RootSet& rs);

/// Product of max(1, |root|). Accumulated in log space above degree 50.
double mahler_measure(const RootSet& rs);
double log_mahler_measure(const RootSet& rs);

/// Independent Mahler measure via the mean of log|p| on the unit circle
/// (Jensen's formula), trapezoid rule. A root on the unit circle between nodes
/// biases the mean of logs by at most log(2)/nodes, hence the node count.
double mahler_cross_check(const Polynomial& p, int nodes = 16384);

/// Product of squared root differences.
Complex discriminant_from_roots(const RootSet& rs);
LogComplex log_discriminant_from_roots(const RootSet& rs);

/// (-1)^(n(n-1)/2) Res(p, p') by subresultant pseudo-remainder sequence.
/// Requires exact integer backing.
mpz_class discriminant_exact(const Polynomial& p);

/// Resultant of two integer polynomials (constant term first), subresultant PRS.
mpz_class resultant(std::vector<mpz_class> a, std::vector<mpz_class> b);

/// Throws SignatureError if nonreal roots cannot be paired by conjugation.
Signature signature_of(const RootSet& rs);

/// Everything above in one pass. `p` supplies the height, the exact
/// discriminant (exact backing), and whether a signature is meaningful.
MeasureReport measure(const RootSet& rs, const Polynomial* p = nullptr);

}  // namespace msep

#endif  // MAHLERSEP_MEASURES_HPP
