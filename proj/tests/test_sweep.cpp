#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "mahlersep/sweep.hpp"

using namespace msep;

namespace {

std::string csv_of(const EnsembleSpec& spec, int workers)
{
    std::ostringstream os;
    write_csv(os, run_sweep(spec, workers));
    return os.str();
}

}  // namespace

TEST_CASE("ensemble spec validation")
{
    EnsembleSpec s;
    s.degree_min = 1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.degree_max = 1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.count = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.height = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.kind = EnsembleKind::disk_roots;
    s.radius = -1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("csv is independent of worker count")
{
    for (auto kind : {EnsembleKind::int_coeff, EnsembleKind::disk_roots, EnsembleKind::real_roots}) {
        EnsembleSpec s;
        s.kind = kind;
        s.degree_min = 2;
        s.degree_max = 9;
        s.count = 40;
        s.seed = 7;
        const std::string one = csv_of(s, 1);
        CHECK(one == csv_of(s, 3));
        CHECK(one == csv_of(s, 8));
    }
}

TEST_CASE("different seeds give different samples")
{
    EnsembleSpec s;
    s.degree_min = s.degree_max = 6;
    s.count = 20;
    const std::string a = csv_of(s, 1);
    s.seed = 43;
    CHECK(a != csv_of(s, 1));
}

TEST_CASE("csv layout")
{
    EnsembleSpec s;
    s.degree_min = 3;
    s.degree_max = 4;
    s.count = 5;
    const auto result = run_sweep(s, 2);
    std::ostringstream os;
    write_csv(os, result);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# mahler-sep sweep v1");
    std::getline(in, line);
    const auto columns = std::count(line.begin(), line.end(), ',') + 1;
    CHECK(columns == 9 + 3 * static_cast<long>(sweep_bound_ids().size()) + 2);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') + 1 == columns);
    }
    CHECK(rows == result.summary.rows);
    CHECK(result.summary.rows + result.summary.rejected + result.summary.solver_failures == 10);
    // rows are ordered by (cell, index)
    for (std::size_t i = 1; i < result.rows.size(); ++i)
        CHECK(std::pair(result.rows[i - 1].cell, result.rows[i - 1].index)
              < std::pair(result.rows[i].cell, result.rows[i].index));
}

TEST_CASE("small ensembles have no violations")
{
    EnsembleSpec s;
    s.count = 100;
    auto r = run_sweep(s, 2);
    CHECK(r.summary.violations == 0);
    CHECK(r.summary.packing_failures == 0);
    CHECK(r.summary.solver_failures == 0);
    for (const auto& [n, d] : r.summary.per_degree)
        CHECK(d.max_ratio <= d.ratio_cap * (1 + 1e-9));

    s.kind = EnsembleKind::disk_roots;
    s.degree_min = s.degree_max = 20;
    s.count = 100;
    r = run_sweep(s, 2);
    CHECK(r.summary.violations == 0);
    CHECK(r.summary.packing_failures == 0);

    s.kind = EnsembleKind::real_roots;
    s.degree_min = 4;
    s.degree_max = 12;
    s.count = 50;
    r = run_sweep(s, 2);
    CHECK(r.summary.violations == 0);
    for (const auto& row : r.rows) {
        const BoundEntry* e = row.report.find("improved_upper");
        REQUIRE(e != nullptr);
        CHECK(e->applicable);
        CHECK(e->satisfied);
    }
}

TEST_CASE("worker count resolution")
{
    CHECK(resolve_workers(3) >= 1);
    ::setenv("MAHLER_SEP_THREADS", "2", 1);
    CHECK(resolve_workers(8) == 2);
    CHECK(resolve_workers(1) == 1);
    ::setenv("MAHLER_SEP_THREADS", "junk", 1);
    CHECK(resolve_workers(5) == 5);
    ::unsetenv("MAHLER_SEP_THREADS");
}

TEST_CASE("summary JSON")
{
    EnsembleSpec s;
    s.degree_min = s.degree_max = 5;
    s.count = 10;
    const auto j = summary_json(run_sweep(s));
    CHECK(j["spec"]["kind"] == "int_coeff");
    CHECK(j["samples"] == 10);
    CHECK(j["per_degree"].size() == 1);
    CHECK(j["per_degree"][0]["n"] == 5);
    CHECK(ensemble_kind_from_string("real_roots") == EnsembleKind::real_roots);
    CHECK_THROWS_AS(ensemble_kind_from_string("nope"), std::invalid_argument);
}
