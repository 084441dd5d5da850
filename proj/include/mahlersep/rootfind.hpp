#ifndef MAHLERSEP_ROOTFIND_HPP
#define MAHLERSEP_ROOTFIND_HPP

#include <stdexcept>
#include <string>

#include "mahlersep/poly.hpp"

namespace msep {

struct SolverConfig {
    int max_iterations = 200;
    double convergence_tol = 1e-13;  // relative per-root update
    int polish_steps = 3;            // Newton steps after convergence
    /// Significant decimal digits carried during the iteration. Values up to
    /// 16 use binary64; larger values switch to a software extended-precision
    /// path (at most 100 digits).
    int precision_digits = 16;

    void validate() const;
};

/// Thrown when the iteration does not converge; carries the best iterate.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, RootSet best, int iterations)
        : std::runtime_error(what), best_(std::move(best)), iterations_(iterations)
    {
    }

    const RootSet& best() const { return best_; }
    int iterations() const { return iterations_; }

private:
    RootSet best_;
    int iterations_;
};

/// All complex roots by Aberth-Ehrlich iteration plus Newton polishing.
/// Roots come back sorted by (modulus, principal argument).
RootSet find_roots(const Polynomial& p, const SolverConfig& cfg = {});

struct SeparabilityCertificate {
    bool separable = false;
    double min_distance = 0.0;  // +inf for a single root
};

/// Relative distinctness threshold shared by every root-distinctness test.
inline constexpr double separability_threshold = 1e-8;

/// Separable iff every pair of roots, shrunk by their residual bounds, is
/// farther apart than separability_threshold * max(1, max|root|).
SeparabilityCertificate certify_separable(const RootSet& rs);

/// The absolute distance below which two roots of `rs` count as equal.
double distinctness_scale(const RootSet& rs);

/// Strict (modulus, principal argument) ordering used for every root listing.
void sort_roots(RootSet& rs);

}  // namespace msep

#endif  // MAHLERSEP_ROOTFIND_HPP
