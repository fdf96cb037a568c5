#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "carries/matrix.hpp"

namespace carries {

/// Parameters of one simulated run of column-by-column addition.
struct SimulationConfig {
    long base = 2;
    int addends = 2;
    std::size_t columns = 1;
    std::uint64_t seed = 0;

    /// Throws DomainError unless base >= 2, addends >= 2, columns >= 1.
    void validate() const;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// kappa_0 = 0, kappa_1, ..., kappa_columns.
struct CarrySequence {
    SimulationConfig config;
    std::vector<int> carries;

    friend bool operator==(const CarrySequence&, const CarrySequence&) = default;
};

/// floor((carry + sum of digits) / base).
int next_carry(int carry, std::span<const int> digits, long base);

// Digits come from std::mt19937_64 seeded with config.seed. Each digit is
// drawn by rejection: raw 64-bit outputs at or above the largest multiple of
// `base` are discarded, the rest are reduced mod base. The generator's output
// sequence is fixed by the C++ standard, so sequences are reproducible across
// platforms.
CarrySequence simulate(const SimulationConfig& config);

/// Runs independent configurations on up to `jobs` threads; results keep input order.
std::vector<CarrySequence> simulate_many(std::span<const SimulationConfig> configs, unsigned jobs);

struct EmpiricalTransition {
    RatMatrix matrix;
    /// Rows whose state never occurs as a transition source; emitted as all zero.
    std::vector<std::size_t> unvisited_rows;
};

/// count(i -> j) / count(i) over consecutive pairs.
/// Throws DomainError for fewer than 2 entries or a carry outside 0..addends-1.
EmpiricalTransition empirical_transition(std::span<const int> carries, int addends);
EmpiricalTransition empirical_transition(const CarrySequence& seq);

/// Fraction of kappa_1..kappa_C spent at each carry. A sequence holding only
/// kappa_0 yields the zero vector.
std::vector<Rational> occupation_distribution(std::span<const int> carries, int addends);
std::vector<Rational> occupation_distribution(const CarrySequence& seq);

}  // namespace carries
