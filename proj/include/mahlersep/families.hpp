#ifndef MAHLERSEP_FAMILIES_HPP
#define MAHLERSEP_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mahlersep/poly.hpp"

namespace msep {

enum class FamilyKind { gaussian, conjugate_closed, arithmetic_progression, quartic, cubic_extremal };

struct FamilySpec {
    FamilyKind kind = FamilyKind::gaussian;
    int n = 2;
    double scale = 1.0;  // t, or r for the arithmetic progression

    void validate() const;
};

/// A family member, emitted as exact roots. The coefficient form is built on
/// request; members with known integer coefficients carry them.
struct FamilyInstance {
    FamilySpec spec;
    RootSet roots;
    std::optional<std::vector<mpz_class>> integer_coeffs;

    Polynomial polynomial() const
    {
        if (integer_coeffs)
            return Polynomial::from_integer_coefficients(*integer_coeffs);
        return Polynomial::from_roots(roots.roots);
    }
};

struct SharpnessRecord {
    int n = 0;
    double sep = 0.0;
    double mahler = 0.0;  // may overflow to inf; log_mahler is always finite
    double log_mahler = 0.0;
    double ratio = 0.0;
    FamilySpec family;
};

struct GaussianPoint {
    long long re = 0;
    long long im = 0;

    long long norm() const { return re * re + im * im; }
    Complex value() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    friend bool operator==(const GaussianPoint&, const GaussianPoint&) = default;
};

/// Every a + bi with a^2 + b^2 <= radius^2 (exact comparison), ordered by
/// norm and then by argument in [0, 2 pi).
std::vector<GaussianPoint> gaussian_points(double radius);

/// First n lattice points within sqrt(n/pi) + sqrt(2), scaled by t.
FamilyInstance gaussian_family(int n, double t);

/// n nonzero lattice points within sqrt((n+1)/pi) + sqrt(2), closed under
/// conjugation with a nonreal point of minimal modulus, scaled by t.
FamilyInstance conjugate_closed_family(int n, double t);

/// Roots j*r for j = -m..m (n = 2m+1) or j = -m..m+1 (n = 2m+2); n >= 4.
FamilyInstance arithmetic_progression_family(int n, double r);

/// Roots t(+-1 +- i), t >= 1/sqrt(2).
FamilyInstance quartic_family(double t);

/// x^3 - 1.
FamilyInstance cubic_extremal();

FamilyInstance build_family(const FamilySpec& spec);

SharpnessRecord sharpness_ratio(const FamilySpec& spec);
SharpnessRecord sharpness_ratio(const FamilyInstance& family);

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

}  // namespace msep

#endif  // MAHLERSEP_FAMILIES_HPP
