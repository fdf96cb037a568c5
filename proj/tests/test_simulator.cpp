#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "carries/carries_matrix.hpp"
#include "carries/error.hpp"
#include "carries/serialize.hpp"
#include "carries/simulator.hpp"
#include "oracles.hpp"

using namespace carries;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

}  // namespace

TEST_CASE("single carry step") {
    const std::vector<int> zeros{0, 0};
    CHECK(next_carry(0, zeros, 2) == 0);
    const std::vector<int> ones{1, 1, 1};
    CHECK(next_carry(0, ones, 2) == 1);
    const std::vector<int> nines{9, 9};
    CHECK(next_carry(1, nines, 10) == 1);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(simulate({1, 2, 10, 0}), DomainError);
    CHECK_THROWS_AS(simulate({2, 1, 10, 0}), DomainError);
    CHECK_THROWS_AS(simulate({2, 2, 0, 0}), DomainError);
}

TEST_CASE("simulation is deterministic and in range") {
    const SimulationConfig config{3, 4, 5000, 99};
    const auto a = simulate(config);
    const auto b = simulate(config);
    CHECK(a == b);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a.carries.size() == 5001);
    CHECK(a.carries.front() == 0);
    CHECK(std::all_of(a.carries.begin(), a.carries.end(), [](int c) { return c >= 0 && c < 4; }));
    CHECK(simulate({3, 4, 5000, 100}) != a);

    for (std::uint64_t seed : {0ULL, 1ULL, ~0ULL, 0x8000000000000000ULL}) {
        for (long base : {2L, 7L, 1000003L}) {
            const auto s = simulate({base, 6, 2000, seed});
            CHECK(std::all_of(s.carries.begin(), s.carries.end(), [](int c) { return c >= 0 && c < 6; }));
        }
    }
}

TEST_CASE("parallel runs match sequential ones") {
    std::vector<SimulationConfig> configs;
    for (std::uint64_t s = 0; s < 8; ++s) configs.push_back({2, 3, 1000, s});
    const auto parallel = simulate_many(configs, 4);
    REQUIRE(parallel.size() == configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) CHECK(parallel[i] == simulate(configs[i]));
    CHECK(simulate_many({}, 4).empty());
}

TEST_CASE("empirical transition counts") {
    const std::vector<int> still{0, 0, 0, 0};
    const auto e = empirical_transition(still, 2);
    CHECK(e.matrix == RatMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(e.unvisited_rows == std::vector<std::size_t>{1});

    const std::vector<int> alternating{0, 1, 0, 1, 0};
    const auto alt = empirical_transition(alternating, 2);
    CHECK(alt.matrix == RatMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(alt.unvisited_rows.empty());

    const std::vector<int> single{0};
    CHECK_THROWS_AS(empirical_transition(single, 2), DomainError);
    const std::vector<int> out_of_range{0, 2};
    CHECK_THROWS_AS(empirical_transition(out_of_range, 2), DomainError);
}

TEST_CASE("occupation counts") {
    const std::vector<int> seq{0, 1, 1, 0};
    CHECK(occupation_distribution(seq, 2) == std::vector<Rational>{q(1, 3), q(2, 3)});
    const std::vector<int> only_start{0};
    CHECK(occupation_distribution(only_start, 3) == std::vector<Rational>(3));
    CHECK_THROWS_AS(occupation_distribution(std::vector<int>{}, 2), DomainError);
}

TEST_CASE("forty binary columns carry about half the time") {
    const auto s = simulate({2, 2, 40, 2023});
    const auto occ = occupation_distribution(s);
    CHECK(std::abs(occ[1].to_double() - 0.5) < 0.25);
}

TEST_CASE("empirical transition approaches K_2") {
    const auto s = simulate({2, 2, 100000, 1});
    const auto e = empirical_transition(s);
    const auto k = carries_matrix_holte(2, 2).matrix;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs((e.matrix(i, j) - k(i, j)).to_double()) < 0.02);
}
