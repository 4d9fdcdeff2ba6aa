#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "graphhash/bench.hpp"
#include "graphhash/error.hpp"

using namespace graphhash;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

TEST_CASE("default config mirrors the five table rows") {
    const BenchConfig c;
    CHECK(c.rows == std::vector<BenchRow>{{5, 5}, {5, 10}, {10, 10}, {10, 20}, {15, 15}});
}

TEST_CASE("small bench run") {
    BenchConfig c;
    c.rows = {{5, 5}, {8, 12}};
    c.trials_per_row = 6;
    c.seed = 3;
    const BenchReport r = run_bench(c);
    CHECK(r.trials.size() == 2 * 6 * 2);
    CHECK(r.all_isomorphic());
    for (std::size_t row = 0; row < 2; ++row) {
        CHECK(*r.mean_combinations(row, BenchMethod::hashed) <= *r.mean_combinations(row, BenchMethod::brute));
    }

    SUBCASE("deterministic") {
        const BenchReport again = run_bench(c);
        for (std::size_t i = 0; i < r.trials.size(); ++i) CHECK(r.trials[i].combinations == again.trials[i].combinations);
    }

    SUBCASE("csv means match the table") {
        std::ostringstream csv, table;
        write_bench_csv(csv, r);
        print_bench_table(table, r);

        std::istringstream in(csv.str());
        std::string line;
        std::getline(in, line);
        CHECK(line == "n_vertices,n_edges,method,trial,combinations,isomorphic");
        std::map<std::pair<std::string, std::string>, std::pair<double, int>> sums;
        while (std::getline(in, line)) {
            const auto f = split(line, ',');
            REQUIRE(f.size() == 6);
            CHECK(f[5] == "true");
            auto& [sum, count] = sums[{f[0] + "x" + f[1], f[2]}];
            sum += std::stod(f[4]);
            ++count;
        }

        std::istringstream tin(table.str());
        std::getline(tin, line);
        CHECK(line == "Vertices x edges\tBrute force\tHashed");
        int rows = 0;
        while (std::getline(tin, line)) {
            const auto f = split(line, '\t');
            REQUIRE(f.size() == 3);
            const auto& brute = sums.at({f[0], "brute"});
            const auto& hashed = sums.at({f[0], "hashed"});
            CHECK(std::abs(std::stod(f[1]) - brute.first / brute.second) <= 0.05 + 1e-9);
            CHECK(std::abs(std::stod(f[2]) - hashed.first / hashed.second) <= 0.05 + 1e-9);
            ++rows;
        }
        CHECK(rows == 2);
    }
}

TEST_CASE("method subset") {
    BenchConfig c;
    c.rows = {{4, 4}};
    c.trials_per_row = 2;
    c.methods = {BenchMethod::hashed};
    const BenchReport r = run_bench(c);
    CHECK(r.trials.size() == 2);
    CHECK_FALSE(r.mean_combinations(0, BenchMethod::brute));
    std::ostringstream table;
    print_bench_table(table, r);
    CHECK(table.str().rfind("Vertices x edges\tHashed\n", 0) == 0);
}

TEST_CASE("zero trials rejected") {
    BenchConfig c;
    c.trials_per_row = 0;
    CHECK_THROWS_AS(run_bench(c), InvalidArgument);
}
