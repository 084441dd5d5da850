#ifndef MAHLERSEP_BOUNDS_HPP
#define MAHLERSEP_BOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mahlersep/measures.hpp"
#include "mahlersep/poly.hpp"

namespace msep {

/// Relative slack for every floating comparison against a bound.
inline constexpr double bound_slack = 1e-9;

class NonSeparableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Side { lower, upper };

enum class ExponentCase { general, nonreal_min };

struct BoundEntry {
    std::string bound_id;
    Side side = Side::upper;
    double value = 0.0;
    bool applicable = true;
    bool satisfied = true;
    double margin = 0.0;  // value - measured (upper) or measured - value (lower)
    std::string detail;   // which case of the bound was used, if any
};

struct BoundReport {
    int n = 0;
    MeasureReport measured;
    std::vector<BoundEntry> entries;

    bool all_satisfied() const;
    const BoundEntry* find(const std::string& bound_id) const;
};

struct LehmerWindow {
    int n = 0;
    double mu = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

struct PackingCheck {
    double radius = 0.0;
    int count = 0;         // roots with |root| < radius
    int count_closed = 0;  // roots with |root| <= radius
    double bound = 0.0;    // (radius / r + 1)^2 with r = sep / 2
    bool ok = false;
};

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double log_lhs = 0.0;
    double log_rhs = 0.0;
    bool ok = false;
};

/// Mahler's lower bound sqrt(3|D|) / (n^((n+2)/2) M^(n-1)); the integer case
/// uses |D| = 1. Returns nullopt when |D| = 0.
std::optional<double> mahler_lower_bound(int n, double mahler, double abs_disc, bool integer_case);
/// Same, taking log|D| so that huge discriminants do not overflow.
std::optional<double> mahler_lower_bound_log(int n, double log_mahler, double log_abs_disc, bool integer_case);

double trivial_upper(double mahler);

/// n^(1/(n-1)) M^(2/n), from Mahler's discriminant inequality.
double discriminant_upper(int n, double mahler);

/// min(2, 34/sqrt(n)) M^(1/(n-1)), or M^(1/n) for the nonreal-minimum case.
double main_upper(int n, double mahler, ExponentCase exponent_case);

/// nonreal_min iff some root of minimal modulus is not real.
ExponentCase applicable_exponent_case(const RootSet& rs);

/// Signature-specific constants: (1,1) -> sqrt(3) M^(1/2), (0,2) -> sqrt(2) M^(1/4),
/// (t,0) -> 6.33/n M^(1/(n-1)) for n >= 4 and main_upper for n in {2,3}.
/// nullopt for any other signature.
std::optional<double> improved_upper(Signature sig, int n, double mahler);

LehmerWindow lehmer_window(int n, double mu);

/// Disc-packing count N(R) < (R/r + 1)^2 with r = sep/2.
PackingCheck packing_check(const RootSet& rs, double radius);

/// C(n, floor(n/2)) <= 2^(n+1) / sqrt(pi (2n+1)), exact left side.
InequalityCheck central_binomial_check(int n);
/// C(2l, l) <= 4^l / sqrt(pi (l + 1/4)), exact left side.
InequalityCheck central_binomial_even_check(int l);
/// Gamma(m + 1/2) > m! / sqrt(m + 1/2).
InequalityCheck wendel_check(int m);
/// n! > sqrt(2 pi n) (n/e)^n e^(1/(12n+1)).
InequalityCheck robbins_check(int n);

/// Every bound applicable to the roots. `p` (optional) supplies exact
/// discriminants and decides whether the signature-based bounds apply.
BoundReport check_all(const RootSet& rs, const Polynomial* p = nullptr);

std::string to_string(Side side);
std::string to_string(ExponentCase c);

}  // namespace msep

#endif  // MAHLERSEP_BOUNDS_HPP
