#ifndef MAHLERSEP_SWEEP_HPP
#define MAHLERSEP_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahlersep/bounds.hpp"
#include "mahlersep/rootfind.hpp"

namespace msep {

enum class EnsembleKind { int_coeff, disk_roots, real_roots };

/// Randomized ensemble. One cell per degree in [degree_min, degree_max].
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::int_coeff;
    int degree_min = 2;
    int degree_max = 12;
    int height = 10;      // int_coeff: coefficients uniform in [-height, height], monic
    double radius = 5.0;  // disk_roots / real_roots
    int count = 1000;     // samples per cell
    std::uint64_t seed = 42;
    SolverConfig solver;

    void validate() const;
};

struct SweepRow {
    int cell = 0;
    int index = 0;
    BoundReport report;
    double ratio = 0.0;  // sep sqrt(n) / M^(1/(n-1))
};

struct DegreeSummary {
    int n = 0;
    int rows = 0;
    double max_ratio = 0.0;
    double ratio_cap = 0.0;  // min(2, 34/sqrt(n)) sqrt(n)
};

struct SweepSummary {
    int samples = 0;
    int rows = 0;
    int rejected = 0;         // not separable
    int solver_failures = 0;
    int violations = 0;       // rows with any failing applicable bound
    int packing_failures = 0;
    std::map<int, DegreeSummary> per_degree;
};

struct SweepResult {
    EnsembleSpec spec;
    std::vector<SweepRow> rows;  // ordered by (cell, index)
    SweepSummary summary;
};

/// Sample `index` of `cell` depends only on (seed, cell, index), so the output
/// does not depend on `workers`.
SweepResult run_sweep(const EnsembleSpec& spec, int workers = 1);

/// Worker count: `requested` (hardware concurrency when <= 0), capped by the
/// MAHLER_SEP_THREADS environment variable.
int resolve_workers(int requested);

/// Bound columns of the CSV, in order.
const std::vector<std::string>& sweep_bound_ids();

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const SweepRow& row);
void write_csv(std::ostream& out, const SweepResult& result);

nlohmann::json summary_json(const SweepResult& result);

std::string to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string& name);

}  // namespace msep

#endif  // MAHLERSEP_SWEEP_HPP
