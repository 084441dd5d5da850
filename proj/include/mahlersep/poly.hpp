#ifndef MAHLERSEP_POLY_HPP
#define MAHLERSEP_POLY_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace msep {

using Complex = std::complex<double>;

enum class Backing { exact_integer, floating_complex };

enum class RootSource { computed, exact_construction };

/// Monic univariate polynomial, coefficients stored constant term first.
///
/// Every polynomial carries a binary64 complex coefficient vector. Polynomials
/// built from integer input whose leading coefficient is +-1 additionally keep
/// the exact integer coefficients (after dividing by the leading one), which is
/// what the exact discriminant and exact evaluation use.
class Polynomial {
public:
    /// Normalizes by the leading coefficient. Integer-valued real inputs with a
    /// leading coefficient of +-1 produce exact backing.
    static Polynomial from_coefficients(std::span<const Complex> coeffs);
    static Polynomial from_coefficients(std::span<const double> coeffs);
    static Polynomial from_integer_coefficients(std::span<const mpz_class> coeffs);

    /// Vieta expansion by repeated multiplication with (x - root).
    static Polynomial from_roots(std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Backing backing() const { return exact_.empty() ? Backing::floating_complex : Backing::exact_integer; }
    bool is_exact() const { return !exact_.empty(); }

    std::span<const Complex> coeffs() const { return coeffs_; }
    /// Empty unless the backing is exact.
    std::span<const mpz_class> exact_coeffs() const { return exact_; }

    /// Leading coefficient of the input before monic normalization.
    Complex leading_scale() const { return leading_scale_; }

    bool has_real_coefficients() const;

private:
    Polynomial() = default;

    std::vector<Complex> coeffs_;
    std::vector<mpz_class> exact_;
    Complex leading_scale_{1.0, 0.0};
};

/// Formal derivative. Not monic: the leading coefficient is the degree.
struct Derivative {
    std::vector<Complex> coeffs;
    std::vector<mpz_class> exact;  // empty for floating backing

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residual_bound;
    RootSource source = RootSource::computed;

    std::size_t size() const { return roots.size(); }

    /// Roots known in closed form; every residual bound is zero.
    static RootSet exact(std::vector<Complex> roots);
};

Complex horner(std::span<const Complex> coeffs, Complex z);

/// Exact Gaussian-integer Horner when the backing is exact and z has integer
/// components, binary64 Horner otherwise.
Complex evaluate(const Polynomial& p, Complex z);
Complex evaluate(const Derivative& d, Complex z);

/// Exact rational evaluation. Requires exact backing.
mpq_class evaluate_exact(const Polynomial& p, const mpq_class& x);

Derivative derivative(const Polynomial& p);

/// Maximum modulus of the (monic) coefficients.
double height(const Polynomial& p);

/// Tolerance used to decide whether a multiset is closed under conjugation.
inline constexpr double conjugation_tolerance = 1e-9;

/// Pairs every root with a partner whose conjugate lies within
/// tol * max(1, |root|). Real roots may pair with themselves. Returns the
/// partner index of each root, or an empty vector if no pairing exists.
std::vector<std::size_t> conjugate_pairing(std::span<const Complex> roots,
                                           double tol = conjugation_tolerance);

bool is_conjugation_closed(std::span<const Complex> roots, double tol = conjugation_tolerance);

/// Parses a decimal integer literal, used for JSON string coefficients.
mpz_class parse_integer(const std::string& text);

double to_double(const mpz_class& value);

/// Natural logarithm of |value| without overflow; -inf for zero.
double log_abs(const mpz_class& value);

}  // namespace msep

#endif  // MAHLERSEP_POLY_HPP
